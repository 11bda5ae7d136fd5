#include "charvar/family.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "charvar/lift.hpp"

namespace charvar {

namespace {

constexpr double kSeparation = 1e-6;

void check_m(int m, const char* name) {
    if (m <= 0 || m % 2 != 0) throw std::invalid_argument(std::string(name) + " must be a positive even integer");
}

Word alpha() { return Word::generator(0); }
Word beta() { return Word::generator(1); }
Word mu() { return Word::generator(2); }

// Images of alpha and beta under the monodromy automorphism.
Word f_alpha(int m2) { return alpha() * beta().power(m2); }
Word f_beta(int m1, int m2) { return beta() * f_alpha(m2).power(m1); }

}  // namespace

FamilyParams::FamilyParams(int m1, int m2, int p1, int p2, Complex z) : m1_(m1), m2_(m2), p1_(p1), p2_(p2), z_(z) {
    check_m(m1, "m1");
    check_m(m2, "m2");
    for (auto [p, m] : {std::pair{p1, m1}, std::pair{p2, m2}})
        if (p % 2 == 0 || p < 1 || 2 * p > m)
            throw std::invalid_argument("p = " + std::to_string(p) + " must be odd with 1 <= p <= " +
                                        std::to_string(m / 2));
}

std::vector<int> FamilyParams::admissible(int m) {
    check_m(m, "m");
    std::vector<int> ps;
    for (int p = 1; 2 * p <= m; p += 2) ps.push_back(p);
    return ps;
}

Presentation family_presentation(int m1, int m2) {
    check_m(m1, "m1");
    check_m(m2, "m2");
    Presentation p;
    p.rank = 3;
    p.names = {"alpha", "beta", "mu"};
    // mu x mu^-1 = f(x)  becomes the relator  mu x mu^-1 f(x)^-1
    p.relators.push_back(mu() * alpha() * mu().inverse() * f_alpha(m2).inverse());
    p.relators.push_back(mu() * beta() * mu().inverse() * f_beta(m1, m2).inverse());
    return p;
}

std::array<std::array<int, 2>, 2> monodromy_abelianization(int m1, int m2) {
    const Word fa = f_alpha(m2), fb = f_beta(m1, m2);
    return {{{fa.exponent_sum(0), fa.exponent_sum(1)}, {fb.exponent_sum(0), fb.exponent_sum(1)}}};
}

Representation build_family_rep(const FamilyParams& params) {
    using std::numbers::pi;
    const Complex i(0.0, 1.0);
    const Complex a = std::exp(i * pi * static_cast<double>(params.p1()) / static_cast<double>(params.m1()));
    const Complex b = std::exp(i * pi * static_cast<double>(params.p2()) / static_cast<double>(params.m2()));
    // tr(AB) = ab + c + 1/(ab)
    const Complex c = params.z() - a * b - 1.0 / (a * b);
    const Mat2 A{a, 1.0, 0.0, 1.0 / a};
    const Mat2 B{b, 0.0, c, 1.0 / b};
    return {family_presentation(params.m1(), params.m2()), {A, B, Mat2::identity()}, Flavor::PSL2};
}

FamilyReport verify_family(const FamilyParams& params) {
    const Representation rho = build_family_rep(params);
    FamilyReport r;
    const Mat2 minus_id = -Mat2::identity();
    r.power_residual = std::max((power(rho.image(0), params.m1()) - minus_id).norm_inf(),
                                (power(rho.image(1), params.m2()) - minus_id).norm_inf());
    r.powers_ok = r.power_residual <= 1e-8;
    r.relations_ok = is_valid(rho, 1e-8);
    for (const auto& rel : rho.presentation().relators) {
        const Mat2 v = evaluate_lift(rho, rel);
        r.relator_residual = std::max(r.relator_residual,
                                      std::min((v - Mat2::identity()).norm_inf(), (v + Mat2::identity()).norm_inf()));
    }
    r.liftable = r.relations_ok ? lift_obstruction(rho).liftable : false;
    r.tau_alpha = tau(rho, alpha());
    r.tau_beta = tau(rho, beta());
    r.tau_alpha_beta = tau(rho, alpha() * beta());
    return r;
}

Census component_census(int m1, int m2, const std::vector<Complex>& z_samples) {
    if (z_samples.empty()) throw std::invalid_argument("component_census: need at least one z sample");
    Census census;
    census.m1 = m1;
    census.m2 = m2;
    for (int p1 : FamilyParams::admissible(m1)) {
        for (int p2 : FamilyParams::admissible(m2)) {
            CensusRow row;
            row.p1 = p1;
            row.p2 = p2;
            row.constant_in_z = true;
            row.liftable = false;
            for (std::size_t k = 0; k < z_samples.size(); ++k) {
                const auto rep = verify_family(FamilyParams(m1, m2, p1, p2, z_samples[k]));
                if (k == 0) {
                    row.tau_alpha = rep.tau_alpha;
                    row.tau_beta = rep.tau_beta;
                } else if (std::abs(rep.tau_alpha - row.tau_alpha) > kSeparation ||
                           std::abs(rep.tau_beta - row.tau_beta) > kSeparation) {
                    row.constant_in_z = false;
                }
                row.liftable = row.liftable || rep.liftable;
            }
            census.rows.push_back(row);
        }
    }

    // Greedy clustering of the (tau_alpha, tau_beta) vectors.
    std::vector<std::pair<Complex, Complex>> reps;
    census.min_separation = std::numeric_limits<double>::infinity();
    for (const auto& row : census.rows) {
        bool seen = false;
        for (const auto& [ta, tb] : reps) {
            const double d = std::max(std::abs(ta - row.tau_alpha), std::abs(tb - row.tau_beta));
            if (d <= kSeparation) seen = true;
        }
        for (const auto& other : census.rows) {
            if (&other == &row) continue;
            const double d =
                std::max(std::abs(other.tau_alpha - row.tau_alpha), std::abs(other.tau_beta - row.tau_beta));
            census.min_separation = std::min(census.min_separation, d);
        }
        if (!seen) reps.emplace_back(row.tau_alpha, row.tau_beta);
    }
    census.distinct_count = static_cast<int>(reps.size());
    return census;
}

}  // namespace charvar
