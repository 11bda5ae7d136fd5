#pragma once

#include <array>
#include <vector>

#include "charvar/mat2.hpp"
#include "charvar/rep.hpp"
#include "charvar/words.hpp"

namespace charvar {

/// Parameters of the non-lifting representations of the once-punctured torus
/// bundle with monodromy [[1, m2], [m1, 1 + m1 m2]].
class FamilyParams {
public:
    /// Throws std::invalid_argument unless m1, m2 are positive even and
    /// p1, p2 are odd with 1 <= p_i <= m_i / 2.
    FamilyParams(int m1, int m2, int p1, int p2, Complex z = 0.0);

    int m1() const { return m1_; }
    int m2() const { return m2_; }
    int p1() const { return p1_; }
    int p2() const { return p2_; }
    Complex z() const { return z_; }

    /// All odd p with 1 <= p <= m/2.
    static std::vector<int> admissible(int m);

private:
    int m1_, m2_, p1_, p2_;
    Complex z_;
};

/// <alpha, beta, mu | mu alpha mu^-1 beta^-m2 alpha^-1, mu beta mu^-1 (alpha beta^m2)^-m1 beta^-1>
Presentation family_presentation(int m1, int m2);

/// Exponent sums of the monodromy images f(alpha), f(beta) in the
/// (alpha, beta) basis, one row per image.
std::array<std::array<int, 2>, 2> monodromy_abelianization(int m1, int m2);

/// alpha -> [[a, 1], [0, 1/a]], beta -> [[b, 0], [c, 1/b]], mu -> Id with
/// a = exp(i pi p1/m1), b = exp(i pi p2/m2) and c fixed by tr(AB) = z.
Representation build_family_rep(const FamilyParams& params);

struct FamilyReport {
    bool powers_ok = false;
    bool relations_ok = false;
    bool liftable = true;
    double power_residual = 0.0;  ///< max(|A^m1 + Id|, |B^m2 + Id|)
    double relator_residual = 0.0;
    Complex tau_alpha, tau_beta, tau_alpha_beta;
};

FamilyReport verify_family(const FamilyParams& params);

struct CensusRow {
    int p1 = 0;
    int p2 = 0;
    Complex tau_alpha, tau_beta;
    bool liftable = true;
    /// (tau_alpha, tau_beta) agreed across all z samples.
    bool constant_in_z = false;
};

struct Census {
    int m1 = 0;
    int m2 = 0;
    std::vector<CensusRow> rows;
    /// Number of distinct (tau_alpha, tau_beta) vectors at separation 1e-6.
    int distinct_count = 0;
    double min_separation = 0.0;
};

Census component_census(int m1, int m2, const std::vector<Complex>& z_samples);

}  // namespace charvar
