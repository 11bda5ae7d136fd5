// Acceptance suite: one [PASS]/[FAIL] line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "charvar/classify.hpp"
#include "charvar/cohomology.hpp"
#include "charvar/family.hpp"
#include "charvar/lift.hpp"
#include "charvar/sampling.hpp"
#include "charvar/tracepoly.hpp"
#include "support.hpp"

using namespace charvar;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Collects the first few failure descriptions of a criterion.
class Tally {
public:
    void expect(bool ok, const std::string& what) {
        ++checks_;
        if (ok) return;
        ++failures_;
        if (failures_ <= 3) notes_ << (failures_ > 1 ? "; " : "") << what;
    }
    Outcome outcome(const std::string& summary) const {
        std::ostringstream s;
        s << summary << " (" << checks_ - failures_ << "/" << checks_ << " checks)";
        if (failures_) s << " first failures: " << notes_.str();
        return {failures_ == 0, s.str()};
    }

private:
    long checks_ = 0;
    long failures_ = 0;
    std::ostringstream notes_;
};

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

double rel(Complex got, Complex want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

Word gen(int i, int e = 1) { return Word::generator(i, e); }

Outcome symbolic_identities() {
    Tally t;
    t.expect(verify_eq3(), "eq3 sides differ");
    t.expect(verify_eq4(), "eq4 sides differ");
    const auto x = TracePoly::variable(TraceVar(gen(0)));
    const auto y = TracePoly::variable(TraceVar(gen(1)));
    const auto z = TracePoly::variable(TraceVar(gen(0) * gen(1)));
    const auto comm = reduce_trace(commutator(gen(0), gen(1)), 2);
    t.expect(comm == x * x + y * y + z * z - x * y * z - TracePoly(2), "tr[a,b] = " + comm.to_string(Presentation::default_names(2)));
    return t.outcome("exact rational identities for sigma_{a,b,ab}, sigma_[a,b] and tr[a,b]");
}

Outcome trace_oracle() {
    Tally t;
    Sampler s(20241);
    double worst = 0.0;
    for (int k = 0; k < 500; ++k) {
        const int rank = s.uniform_int(1, 3);
        const Word w = s.random_word(rank, s.uniform_int(1, 12));
        const TracePoly p = reduce_trace(w, rank);
        for (int j = 0; j < 20; ++j) {
            std::vector<Mat2> images;
            for (int i = 0; i < rank; ++i) images.push_back(s.random_sl2());
            const Representation rho(Presentation::free(rank), images);
            const double e = rel(p.evaluate_at(images), evaluate_lift(rho, w).trace());
            worst = std::max(worst, e);
            t.expect(e <= 1e-8, format_word(w, rho.presentation().names) + " err " + num(e));
        }
    }
    return t.outcome("500 words x 20 substitutions, max relative error " + num(worst));
}

Outcome numeric_sweeps() {
    Tally t;
    Sampler s(777);
    double worst_ad = 0.0, worst_fund = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const Mat2 a = s.random_sl2_bounded(2.0);
        const Complex tr = a.trace();
        const Complex ad = adjoint_so3(a).trace();
        const double e1 = std::max(std::abs(ad - (tr * tr - 1.0)), std::abs(ad - ((a * a).trace() + 1.0)));
        worst_ad = std::max(worst_ad, e1);
        t.expect(e1 <= 1e-8, "adjoint trace residual " + num(e1));
    }
    for (int k = 0; k < 1000; ++k) {
        const double e2 = verify_fundamental_identity(s.random_sl2_bounded(2.0), s.random_sl2_bounded(2.0));
        worst_fund = std::max(worst_fund, e2);
        t.expect(e2 <= 1e-8, "fundamental identity residual " + num(e2));
    }
    return t.outcome("1000 samples each; max residuals " + num(worst_ad) + ", " + num(worst_fund));
}

Outcome xf2_model() {
    Tally t;
    Sampler s(4040);
    double worst_rel = 0.0, worst_j = 0.0;
    const Word abinv = gen(0) * gen(1, -1);
    for (int k = 0; k < 200; ++k) {
        const Representation rho(Presentation::free(2), {s.random_sl2(), s.random_sl2()});
        const auto c = xf2_coords(rho);
        const double r = c.relation_residual();
        worst_rel = std::max(worst_rel, r);
        t.expect(r <= 1e-9, "W^2 - XYZ residual " + num(r));
        const Complex want = tau(rho, abinv);
        const double ej = rel(j_coords_from_xf2(c)[3], want);
        worst_j = std::max(worst_j, ej);
        t.expect(ej <= 1e-8, "J_ab^-1 error " + num(ej));
    }
    return t.outcome("200 samples; max scaled |W^2-XYZ| " + num(worst_rel) + ", max J_ab^-1 error " + num(worst_j));
}

Outcome cohomology_dims() {
    Tally t;
    Sampler s(5150);
    for (int n = 2; n <= 5; ++n) {
        const std::string tag = "n=" + std::to_string(n) + " ";
        for (int k = 0; k < 50; ++k) {
            const auto irr = h1_dim(s.random_irreducible(n));
            t.expect(irr.dim_h1 == 3 * n - 3, tag + "irreducible h1=" + std::to_string(irr.dim_h1));

            const auto d = h1_dim(s.random_diagonal(n));
            t.expect(d.dim_h1 == 3 * n - 2, tag + "diagonal h1=" + std::to_string(d.dim_h1));
            t.expect(d.block_dims && d.block_dims->h0.h1 == n && d.block_dims->hpm.h1 == 2 * n - 2,
                     tag + "diagonal blocks");

            const auto h = h1_dim(s.random_dihedral(n));
            t.expect(h.dim_h1 == 3 * n - 3, tag + "dihedral h1=" + std::to_string(h.dim_h1));
            t.expect(h.block_dims && h.block_dims->h0.h1 == n - 1 && h.block_dims->hpm.h1 == 2 * n - 2,
                     tag + "dihedral blocks");
        }
    }
    return t.outcome("irreducible 3n-3, diagonal 3n-2 (n, 2n-2), dihedral 3n-3 (n-1, 2n-2) for n=2..5");
}

Outcome lifting() {
    Tally t;
    Sampler s(6060);
    int liftable = 0;
    for (int k = 0; k < 50; ++k) {
        const auto rho = s.random_finite_presentation_rep(4, 3);
        const bool solver = lift_obstruction(rho).liftable;
        liftable += solver;
        t.expect(solver == brute_force_lift_check(rho), "sample " + std::to_string(k) + ": " +
                                                            format_presentation(rho.presentation()));
    }
    const auto klein = test_support::load("klein_z2.json");
    t.expect(!lift_obstruction(klein).liftable, "Klein pair on Z^2 reported liftable");
    t.expect(!brute_force_lift_check(klein), "brute force lifts the Klein pair");
    for (const char* f : {"generic_f2.json", "generic_f3.json", "diagonal_f2.json", "diagonal_f3.json",
                          "dihedral_f2.json", "dihedral_f3.json", "parabolic_f2.json", "upper_triangular_f2.json",
                          "central_f2.json"}) {
        const auto rho = test_support::load(f);
        t.expect(lift_obstruction(rho).liftable && brute_force_lift_check(rho), std::string(f) + " not liftable");
    }
    return t.outcome("solver = brute force on 50 presentations (" + std::to_string(liftable) +
                     " liftable); Klein pair obstructed; free fixtures lift");
}

Outcome family() {
    Tally t;
    const std::vector<Complex> zs{0.0, Complex(1.0, 1.0), 5.0};
    const int expected[] = {1, 4, 9};
    int idx = 0;
    std::string counts;
    for (int m : {2, 6, 10}) {
        const std::string tag = "m=" + std::to_string(m) + " ";
        for (int p1 : FamilyParams::admissible(m))
            for (int p2 : FamilyParams::admissible(m))
                for (Complex z : zs) {
                    const auto r = verify_family(FamilyParams(m, m, p1, p2, z));
                    t.expect(r.relator_residual <= 1e-8, tag + "relator residual " + num(r.relator_residual));
                    t.expect(r.power_residual <= 1e-8, tag + "power residual " + num(r.power_residual));
                    t.expect(!r.liftable, tag + "liftable member");
                }
        const auto census = component_census(m, m, zs);
        counts += (counts.empty() ? "" : ", ") + std::to_string(census.distinct_count);
        t.expect(census.distinct_count == expected[idx], tag + "components " + std::to_string(census.distinct_count));
        if (census.rows.size() > 1)
            t.expect(census.min_separation > 1e-6, tag + "separation " + num(census.min_separation));
        ++idx;
    }
    return t.outcome("components for m = 2, 6, 10: " + counts + "; none liftable");
}

Outcome classification() {
    Tally t;
    Sampler s(8080);
    std::vector<Representation> pool;
    for (int k = 0; k < 500; ++k) {
        const int n = s.uniform_int(1, 4);
        switch (k % 5) {
            case 0: {
                std::vector<Mat2> images;
                for (int i = 0; i < n; ++i) images.push_back(s.random_sl2());
                pool.emplace_back(Presentation::free(n), images);
                break;
            }
            case 1:
                pool.push_back(s.random_conjugate(s.random_diagonal(n)));
                break;
            case 2:
                pool.push_back(s.random_conjugate(s.random_dihedral(std::max(n, 2))));
                break;
            case 3: {
                // upper triangular: reducible, generally not diagonalizable together
                std::vector<Mat2> images;
                for (int i = 0; i < n; ++i) {
                    const Complex u = std::exp(0.5 * s.complex_gaussian());
                    images.push_back({u, s.complex_gaussian(), 0.0, 1.0 / u});
                }
                pool.push_back(s.random_conjugate(Representation(Presentation::free(n), images)));
                break;
            }
            default:
                pool.push_back(s.random_finite_presentation_rep(4, 3));
        }
    }
    for (const char* f : {"diagonal_f2.json", "diagonal_f3.json", "dihedral_f2.json", "dihedral_f3.json",
                          "klein_z2.json", "parabolic_f2.json", "upper_triangular_f2.json", "central_f2.json",
                          "dihedral_d3.json", "diagonal_z2.json"})
        pool.push_back(test_support::load(f));
    pool.push_back(s.random_conjugate(test_support::load("klein_z2.json")));

    int reducible = 0, ad_only = 0;
    for (std::size_t k = 0; k < pool.size(); ++k) {
        const auto& rho = pool[k];
        const auto r = classify(rho);
        const std::string tag = "rep " + std::to_string(k);
        t.expect(r.reducible == is_reducible_fixed_point(rho), tag + " reducibility disagrees with eigenline oracle");
        t.expect(r.ad_reducible == is_ad_reducible_fixed_pair(rho), tag + " Ad-reducibility disagrees with pair oracle");
        if (r.ad_reducible) t.expect(double_commutators_central(rho), tag + " double commutators not +/-Id");
        t.expect(!r.reducible || r.ad_reducible, tag + " reducible but not Ad-reducible");
        reducible += r.reducible;
        ad_only += r.ad_reducible && !r.reducible;
    }
    return t.outcome(std::to_string(pool.size()) + " representations (" + std::to_string(reducible) + " reducible, " +
                     std::to_string(ad_only) + " irreducible Ad-reducible)");
}

Outcome conjugators() {
    Tally t;
    Sampler s(9090);
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        const auto rho = s.random_irreducible(2 + k % 2);
        const auto sigma = s.random_conjugate(rho);
        const auto m = find_conjugator(rho, sigma);
        t.expect(m.has_value(), "conjugator not found for sample " + std::to_string(k));
        if (m) {
            const double r = conjugation_residual(m->rep(), rho, sigma);
            worst = std::max(worst, r);
            t.expect(r <= 1e-7, "residual " + num(r));
        }
        // change one generator: the characters differ, so no conjugator can exist
        std::vector<Mat2> images = sigma.images();
        images[1] = images[1] * s.random_sl2(1e3);
        const Representation other(sigma.presentation(), images);
        if (is_reducible(other)) continue;
        t.expect(!find_conjugator(rho, other), "spurious conjugator for modified sample " + std::to_string(k));
    }
    return t.outcome("100 conjugated pairs recovered, max residual " + num(worst) + "; modified pairs rejected");
}

Outcome singular_locus() {
    Tally t;
    auto expect = [&](const Representation& rho, SingularVerdict want, const std::string& name) {
        const auto got = singular_verdict(rho);
        t.expect(got == want, name + " gave " + std::string(to_string(got)));
    };
    expect(test_support::load("dihedral_f2.json"), SingularVerdict::Singular, "F2 dihedral");
    expect(test_support::load("diagonal_f2.json"), SingularVerdict::Smooth, "F2 diagonal");
    expect(test_support::load("diagonal_f3.json"), SingularVerdict::Singular, "F3 diagonal");
    expect(test_support::load("generic_f2.json"), SingularVerdict::Smooth, "F2 generic");
    expect(test_support::load("generic_f3.json"), SingularVerdict::Smooth, "F3 generic");
    Sampler s(1010);
    for (int n = 4; n <= 6; ++n) expect(s.random_irreducible(n), SingularVerdict::Smooth, "F" + std::to_string(n) + " generic");
    return t.outcome("F2 dihedral Singular, F2 diagonal Smooth, F3 diagonal Singular, Fn generic Smooth");
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"symbolic identities", symbolic_identities},
        {"trace oracle", trace_oracle},
        {"adjoint and fundamental trace sweeps", numeric_sweeps},
        {"X(F2) model", xf2_model},
        {"cohomology dimensions", cohomology_dims},
        {"lifting obstruction", lifting},
        {"non-lifting torus bundle family", family},
        {"classification oracles", classification},
        {"conjugator recovery", conjugators},
        {"singular locus", singular_locus},
    };
    int failed = 0, index = 0;
    for (const auto& [name, check] : criteria) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] %2d %s: %s [%.2fs]\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str(), secs);
        failed += !o.pass;
    }
    std::printf("%d/10 criteria passed\n", 10 - failed);
    return failed == 0 ? 0 : 1;
}
