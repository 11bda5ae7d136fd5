#include "charvar/classify.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "charvar/linalg.hpp"

namespace charvar {

namespace {

using Vec2 = std::array<Complex, 2>;

constexpr double kLineTol = 1e-7;

bool is_central_elt(const Mat2& x) { return psl2_equal(x, Mat2::identity(), 1e-8); }

Vec2 apply(const Mat2& m, const Vec2& v) { return {m.a * v[0] + m.b * v[1], m.c * v[0] + m.d * v[1]}; }

double norm(const Vec2& v) { return std::hypot(std::abs(v[0]), std::abs(v[1])); }

bool parallel(const Vec2& u, const Vec2& v) {
    return std::abs(u[0] * v[1] - u[1] * v[0]) <= kLineTol * norm(u) * norm(v);
}

// Eigenlines of a non-central matrix: two for distinct eigenvalues, one when parabolic.
std::vector<Vec2> eigenlines(const Mat2& m) {
    const Complex t = m.trace();
    const Complex disc = std::sqrt(t * t - 4.0 * m.det());
    std::vector<Vec2> lines;
    for (const Complex lambda : {(t + disc) / 2.0, (t - disc) / 2.0}) {
        // Null vector of M - lambda I from its larger row.
        const Vec2 r1{m.a - lambda, m.b};
        const Vec2 r2{m.c, m.d - lambda};
        const Vec2& r = norm(r1) >= norm(r2) ? r1 : r2;
        if (norm(r) == 0.0) continue;
        Vec2 v{r[1], -r[0]};
        const double n = norm(v);
        v = {v[0] / n, v[1] / n};
        if (lines.empty() || !parallel(lines.front(), v)) lines.push_back(v);
    }
    return lines;
}

bool line_invariant(const Representation& rho, const Vec2& v) {
    for (const auto& g : rho.images())
        if (!parallel(apply(g, v), v)) return false;
    return true;
}

bool pair_invariant(const Representation& rho, const Vec2& p, const Vec2& q) {
    for (const auto& g : rho.images()) {
        const Vec2 gp = apply(g, p), gq = apply(g, q);
        const bool fixes = parallel(gp, p) && parallel(gq, q);
        const bool swaps = parallel(gp, q) && parallel(gq, p);
        if (!fixes && !swaps) return false;
    }
    return true;
}

std::vector<linalg::MatrixXc> adjoint_images(const Representation& rho) {
    std::vector<linalg::MatrixXc> out;
    for (const auto& g : rho.images()) out.push_back(linalg::to_eigen(adjoint_so3(g)));
    return out;
}

}  // namespace

std::string_view to_string(StabilizerType t) {
    switch (t) {
        case StabilizerType::FullGroup: return "FullGroup";
        case StabilizerType::DiagonalTorus: return "DiagonalTorus";
        case StabilizerType::OrderTwo: return "OrderTwo";
        case StabilizerType::Klein4: return "Klein4";
        case StabilizerType::Trivial: return "Trivial";
    }
    return "?";
}

std::string_view to_string(SingularVerdict v) {
    switch (v) {
        case SingularVerdict::Smooth: return "Smooth";
        case SingularVerdict::Singular: return "Singular";
        case SingularVerdict::NotApplicable: return "NotApplicable";
    }
    return "?";
}

bool is_reducible(const Representation& rho) {
    std::vector<linalg::MatrixXc> gens;
    for (const auto& g : rho.images()) gens.push_back(linalg::to_eigen(g));
    return linalg::span_closure_dimension(gens) < 4;
}

bool is_ad_reducible(const Representation& rho) { return linalg::span_closure_dimension(adjoint_images(rho)) < 9; }

bool is_central(const Representation& rho) {
    for (const auto& g : rho.images())
        if (!is_central_elt(g)) return false;
    return true;
}

bool is_reducible_fixed_point(const Representation& rho) {
    const Mat2* pivot = nullptr;
    double spread = 0.0;
    for (const auto& g : rho.images()) {
        const double d = std::min((g - Mat2::identity()).norm_inf(), (g + Mat2::identity()).norm_inf());
        if (!is_central_elt(g) && d > spread) {
            spread = d;
            pivot = &g;
        }
    }
    if (pivot == nullptr) return true;
    for (const auto& v : eigenlines(*pivot))
        if (line_invariant(rho, v)) return true;
    return false;
}

bool is_ad_reducible_fixed_pair(const Representation& rho) {
    if (is_reducible_fixed_point(rho)) return true;
    std::vector<Mat2> candidates = rho.images();
    const auto& g = rho.images();
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j) candidates.push_back(g[i] * g[j]);
    for (const auto& m : candidates) {
        if (is_central_elt(m)) continue;
        const auto lines = eigenlines(m);
        if (lines.size() == 2 && pair_invariant(rho, lines[0], lines[1])) return true;
    }
    return false;
}

bool double_commutators_central(const Representation& rho) {
    const int s = rho.rank();
    std::vector<Word> comms;
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j) comms.push_back(commutator(Word::generator(i), Word::generator(j)));
    for (std::size_t p = 0; p < comms.size(); ++p)
        for (std::size_t q = p + 1; q < comms.size(); ++q)
            if (!psl2_equal(evaluate_lift(rho, commutator(comms[p], comms[q])), Mat2::identity(), 1e-7))
                return false;
    return true;
}

bool has_klein4_image(const Representation& rho) {
    std::vector<Mat2> involutions;
    for (const auto& g : rho.images()) {
        if (is_central_elt(g)) continue;
        if (std::abs(g.trace()) > 1e-8 * std::max(1.0, g.norm_inf())) return false;
        involutions.push_back(g);
    }
    bool two_distinct = false;
    for (std::size_t i = 0; i < involutions.size(); ++i)
        for (std::size_t j = i + 1; j < involutions.size(); ++j) {
            const Mat2& x = involutions[i];
            const Mat2& y = involutions[j];
            if (!psl2_equal(x * y, y * x, 1e-8)) return false;
            if (!psl2_equal(x, y, 1e-8)) two_distinct = true;
        }
    return two_distinct;
}

std::optional<int> psl2_order(const Mat2& x, int max_order) {
    if (is_central_elt(x)) return 1;
    const Complex t = x.trace();
    const Complex disc = t * t - 4.0;
    if (std::abs(disc) <= 1e-10 * std::max(1.0, std::abs(t * t))) return std::nullopt;  // parabolic
    const Complex lambda = (t + std::sqrt(disc)) / 2.0;
    if (std::abs(std::abs(lambda) - 1.0) > 1e-9) return std::nullopt;  // loxodromic
    // lambda^k = +/-1  <=>  k * arg(lambda) is a multiple of pi.
    const double turns = std::arg(lambda) / std::numbers::pi;
    for (int k = 1; k <= max_order; ++k) {
        const double v = k * turns;
        if (std::abs(v - std::round(v)) <= 1e-9 * k) return k;
    }
    return std::nullopt;
}

StabilizerType stabilizer_type(const Representation& rho) {
    if (is_central(rho)) return StabilizerType::FullGroup;
    if (!is_ad_reducible(rho)) return StabilizerType::Trivial;
    if (is_reducible(rho)) return StabilizerType::DiagonalTorus;
    return has_klein4_image(rho) ? StabilizerType::Klein4 : StabilizerType::OrderTwo;
}

SingularVerdict singular_verdict(const Representation& rho) {
    if (!rho.presentation().is_free()) return SingularVerdict::NotApplicable;
    const int n = rho.rank();
    if (n <= 1) return SingularVerdict::Smooth;
    const bool ad_red = is_ad_reducible(rho);
    if (n == 2) return ad_red && !is_reducible(rho) ? SingularVerdict::Singular : SingularVerdict::Smooth;
    return ad_red ? SingularVerdict::Singular : SingularVerdict::Smooth;
}

ClassificationReport classify(const Representation& rho) {
    ClassificationReport r;
    r.reducible = is_reducible(rho);
    r.ad_reducible = is_ad_reducible(rho);
    r.is_trivial_character = is_central(rho);
    r.klein4_image = has_klein4_image(rho);
    r.stabilizer_type = stabilizer_type(rho);
    r.singular_verdict = singular_verdict(rho);
    return r;
}

}  // namespace charvar
