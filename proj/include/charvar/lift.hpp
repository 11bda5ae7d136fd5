#pragma once

#include <optional>
#include <vector>

#include "charvar/rep.hpp"
#include "charvar/words.hpp"

namespace charvar {

/// Lifting obstruction of a PSL2 representation, written as the linear
/// system  system * x = rhs  over Z/2 (x = which generator lifts to negate).
struct LiftReport {
    bool liftable = false;
    std::vector<int> relator_signs;  ///< +1 / -1 per relator for the stored lift
    F2Matrix system;                 ///< relator exponent sums mod 2
    F2Vector rhs;                    ///< 1 where the stored lift sends the relator to -Id
    std::optional<F2Vector> solution;
    std::vector<F2Vector> h1_basis;  ///< basis of H^1(G; Z/2) = ker(system)
    /// 2^dim H^1(G; Z/2) when liftable, else 0.
    unsigned long long lift_class_count = 0;
    /// The corrected lift (SL2 flavor) when liftable.
    std::optional<Representation> lift;
};

/// Flips the sign of image i wherever flips[i] == 1.
Representation apply_sign_flips(const Representation& rho, const F2Vector& flips, Flavor flavor);

/// Throws InvalidRepresentation when some relator is not +/-Id.
LiftReport lift_obstruction(const Representation& rho);

/// One SL2 lift per element of the solution coset. Refuses (PreconditionError)
/// unliftable input or more than 2^12 lifts.
std::vector<Representation> enumerate_lifts(const Representation& rho);

/// Exhaustive search over all 2^rank sign assignments (rank <= 12).
bool brute_force_lift_check(const Representation& rho);

}  // namespace charvar
