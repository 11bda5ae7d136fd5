#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "charvar/cohomology.hpp"
#include "charvar/errors.hpp"
#include "charvar/sampling.hpp"
#include "support.hpp"

using namespace charvar;

TEST_CASE("free group dimensions by class") {
    Sampler s(12);
    for (int n = 2; n <= 5; ++n) {
        CAPTURE(n);
        for (int k = 0; k < 5; ++k) {
            const auto irr = h1_dim(s.random_irreducible(n));
            CHECK(irr.dim_z1 == 3 * n);
            CHECK(irr.dim_b1 == 3);
            CHECK(irr.dim_h1 == 3 * n - 3);

            const auto diag = h1_dim(s.random_diagonal(n));
            CHECK(diag.dim_h1 == 3 * n - 2);
            REQUIRE(diag.block_dims);
            CHECK(diag.block_dims->h0 == CohomologyDims{n, 0, n});
            CHECK(diag.block_dims->hpm == CohomologyDims{2 * n, 2, 2 * n - 2});

            const auto dih = h1_dim(s.random_dihedral(n));
            CHECK(dih.dim_h1 == 3 * n - 3);
            REQUIRE(dih.block_dims);
            CHECK(dih.block_dims->h0.h1 == n - 1);
            CHECK(dih.block_dims->hpm.h1 == 2 * n - 2);
        }
    }
}

TEST_CASE("conjugated samples keep their dimensions") {
    Sampler s(13);
    const auto d = s.random_conjugate(s.random_diagonal(3));
    const auto r = h1_dim(d);
    CHECK(r.dim_h1 == 7);
    // block decomposition is basis dependent and is not reported here
    CHECK_FALSE(r.block_dims);
}

TEST_CASE("trivial and central representations") {
    const auto r = h1_dim(test_support::load("central_f2.json"));
    CHECK(r.dim_z1 == 6);
    CHECK(r.dim_b1 == 0);
    CHECK(r.dim_h1 == 6);
}

TEST_CASE("abelian presentation") {
    const auto rho = test_support::load("diagonal_z2.json");
    const auto r = h1_dim(rho);
    // h0 carries trivial coefficients (H^1(Z^2) = C^2); h+ and h- carry
    // nontrivial characters with vanishing cohomology.
    CHECK(r.dim_z1 == 4);
    CHECK(r.dim_b1 == 2);
    CHECK(r.dim_h1 == 2);
    REQUIRE(r.block_dims);
    CHECK(r.block_dims->h0 == CohomologyDims{2, 0, 2});
    CHECK(r.block_dims->hpm == CohomologyDims{2, 2, 0});

    const auto k = h1_dim(test_support::load("klein_z2.json"));
    // Klein image: every h-line is acted on by a nontrivial sign character.
    CHECK(k.dim_h1 == 0);
    CHECK(k.dim_b1 == 3);
}

TEST_CASE("coboundaries are cocycles") {
    Sampler s(14);
    for (const auto& rho : {test_support::load("diagonal_z2.json"), test_support::load("klein_z2.json"),
                            test_support::load("dihedral_d3.json"), test_support::load("finite_presentation.json"),
                            s.random_finite_presentation_rep(3, 3)}) {
        const auto constraints = cocycle_constraints(rho);
        const auto b = coboundary_space(rho);
        if (b.cols() > 0 && constraints.rows() > 0)
            CHECK((constraints * b).norm() <= 1e-8 * std::max(1.0, constraints.norm()));
        const auto r = h1_dim(rho);
        CHECK(r.dim_b1 <= r.dim_z1);
        CHECK(r.dim_h1 == r.dim_z1 - r.dim_b1);
    }
}

TEST_CASE("cocycles are first-order deformations") {
    const auto rho = test_support::load("diagonal_z2.json");
    const auto space = cocycle_space(rho);
    REQUIRE(space.basis.cols() == 4);
    const double t = 1e-4;

    for (int j = 0; j < space.basis.cols(); ++j) {
        const double res = relator_residual(perturb(rho, space.basis.col(j), t));
        CHECK(res <= 50 * t * t);
    }

    // A direction outside Z^1 moves the relator at first order.
    const auto null = linalg::null_space(space.basis.adjoint());
    REQUIRE(null.basis.cols() == 2);
    for (int j = 0; j < null.basis.cols(); ++j) {
        const double res = relator_residual(perturb(rho, null.basis.col(j), t));
        CHECK(res >= 0.01 * t);
    }
}

TEST_CASE("tangent dimensions") {
    const auto t = tangent_dims(test_support::load("generic_f3.json"));
    CHECK(t.dim_r == 9);
    CHECK(t.dim_x_expected == 6);
    CHECK(t.dim_h1 == 6);
    CHECK(t.applicable);
    CHECK_FALSE(tangent_dims(test_support::load("diagonal_f2.json")).applicable);
    CHECK_THROWS_AS(tangent_dims(test_support::load("klein_z2.json")), PreconditionError);
}

TEST_CASE("CSV rows") {
    CHECK(cohomology_csv_header() == "rank,class,dim_z1,dim_b1,dim_h1,h0_block,hpm_block");
    CocycleReport r;
    r.dim_z1 = 6;
    r.dim_b1 = 2;
    r.dim_h1 = 4;
    CHECK(cohomology_csv_row(2, "diagonal", r) == "2,diagonal,6,2,4,,");
    r.block_dims = BlockDims{{2, 0, 2}, {4, 2, 2}};
    CHECK(cohomology_csv_row(2, "diagonal", r) == "2,diagonal,6,2,4,2,2");
}

TEST_CASE("truncated exponential") {
    const Mat2 x = sl2_from_coords({0.3, Complex(0, 1), -2.0});
    const Mat2 e = exp_truncated(x, 1e-3);
    CHECK(std::abs(e.det() - 1.0) < 1e-8);
}
