#pragma once

#include <optional>
#include <vector>

#include "charvar/mat2.hpp"
#include "charvar/words.hpp"

namespace charvar {

enum class Flavor { PSL2, SL2 };

/// Generator images of a presented group in PSL(2,C) or SL(2,C).
///
/// Construction checks arity, finiteness and the determinant invariant only;
/// whether the relators are satisfied is reported by validate(). The stored
/// matrices double as a tentative SL2 lift for the PSL2 flavor.
class Representation {
public:
    Representation(Presentation presentation, std::vector<Mat2> images, Flavor flavor = Flavor::PSL2);

    const Presentation& presentation() const { return presentation_; }
    const std::vector<Mat2>& images() const { return images_; }
    const Mat2& image(int gen) const { return images_[static_cast<std::size_t>(gen)]; }
    Flavor flavor() const { return flavor_; }
    int rank() const { return presentation_.rank; }

    Representation with_flavor(Flavor f) const { return {presentation_, images_, f}; }

private:
    Presentation presentation_;
    std::vector<Mat2> images_;
    Flavor flavor_;
};

enum class RelatorSign { Plus, Minus, Fail };

/// Product of the stored representatives along the word (Id for the empty word).
Mat2 evaluate_lift(const Representation& rho, const Word& w);
inline PSL2Elt evaluate(const Representation& rho, const Word& w) { return PSL2Elt(evaluate_lift(rho, w)); }

/// Sign s with r_j -> s * Id, per relator. SL2 flavor turns Minus into Fail.
std::vector<RelatorSign> validate(const Representation& rho, double tol = tolerances().eq);
bool is_valid(const Representation& rho, double tol = tolerances().eq);
/// Throws InvalidRepresentation naming the first failing relator.
void require_valid(const Representation& rho);

/// Conjugate M rho M^-1.
Representation conjugate(const Representation& rho, const Mat2& m);

/// tr^2(rho(w)).
Complex tau(const Representation& rho, const Word& w);

struct CharacterVector {
    std::vector<Word> words;
    std::vector<Complex> values;
};

/// Square-free ascending positive words of length <= min(depth, rank),
/// followed by the commutators [g_i, g_j], i < j.
std::vector<Word> coordinate_family(int rank, int depth);
CharacterVector character_coords(const Representation& rho, int depth);

/// M with M rho1(g_i) M^-1 = rho2(g_i) in PSL2 for all i, searching over all
/// sign choices of the lifted linear system. Both inputs must be irreducible.
std::optional<PSL2Elt> find_conjugator(const Representation& r1, const Representation& r2);

/// max_i min_sign |M r1(g_i) M^-1 -/+ r2(g_i)|
double conjugation_residual(const Mat2& m, const Representation& r1, const Representation& r2);

}  // namespace charvar
