#pragma once

#include <optional>
#include <string_view>

#include "charvar/rep.hpp"

namespace charvar {

enum class StabilizerType { FullGroup, DiagonalTorus, OrderTwo, Klein4, Trivial };
enum class SingularVerdict { Smooth, Singular, NotApplicable };

std::string_view to_string(StabilizerType t);
std::string_view to_string(SingularVerdict v);

struct ClassificationReport {
    bool reducible = false;
    bool ad_reducible = false;
    bool is_trivial_character = false;
    bool klein4_image = false;
    StabilizerType stabilizer_type = StabilizerType::Trivial;
    SingularVerdict singular_verdict = SingularVerdict::NotApplicable;
};

/// Burnside test: the algebra spanned by the images is all of M2(C) iff irreducible.
bool is_reducible(const Representation& rho);
/// Same test for the adjoint images inside M3(C).
bool is_ad_reducible(const Representation& rho);

/// Oracle: looks for a common eigenline among the eigenlines of one
/// non-central image.
bool is_reducible_fixed_point(const Representation& rho);
/// Oracle: reducible, or all images preserve one pair of distinct points of
/// P^1 (image inside the normalizer of a torus).
bool is_ad_reducible_fixed_pair(const Representation& rho);
/// Necessary condition for Ad-reducibility: every double commutator
/// [[g_i,g_j],[g_k,g_l]] of generators maps to +/-Id.
bool double_commutators_central(const Representation& rho);

/// All images are +/-Id.
bool is_central(const Representation& rho);
/// Image is Klein's four-group.
bool has_klein4_image(const Representation& rho);

/// Order of x in PSL(2,C), or nullopt when infinite (parabolic, loxodromic,
/// or elliptic of order above `max_order`).
std::optional<int> psl2_order(const Mat2& x, int max_order = 64);

StabilizerType stabilizer_type(const Representation& rho);
SingularVerdict singular_verdict(const Representation& rho);

ClassificationReport classify(const Representation& rho);

}  // namespace charvar
