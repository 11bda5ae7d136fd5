#pragma once

#include <optional>
#include <string>
#include <vector>

#include "charvar/linalg.hpp"
#include "charvar/rep.hpp"

namespace charvar {

struct CohomologyDims {
    int z1 = 0;
    int b1 = 0;
    int h1 = 0;
    friend bool operator==(const CohomologyDims&, const CohomologyDims&) = default;
};

/// Dimensions on the h0 block and the h+ (+) h- block, available when every
/// image is diagonal or anti-diagonal.
struct BlockDims {
    CohomologyDims h0;
    CohomologyDims hpm;
};

struct CocycleReport {
    int dim_z1 = 0;
    int dim_b1 = 0;
    int dim_h1 = 0;
    std::vector<double> singular_values;             ///< of the cocycle constraint system
    std::vector<double> coboundary_singular_values;  ///< of a -> (Ad g_i a - a)_i
    std::optional<BlockDims> block_dims;
};

/// Linear constraints theta(r_j) = 0 on the unknowns theta(g_i) in C^3
/// (coordinates in h0, h+, h-), one 3-row block per relator. When `coords`
/// selects a sub-block, Ad is restricted to those basis vectors.
linalg::MatrixXc cocycle_constraints(const Representation& rho, const std::vector<int>& coords = {0, 1, 2});
/// a -> (Ad_{rho(g_i)} a - a)_i as a (|coords| s) x |coords| matrix.
linalg::MatrixXc coboundary_map(const Representation& rho, const std::vector<int>& coords = {0, 1, 2});

struct CocycleSpace {
    linalg::MatrixXc basis;  ///< 3s x dim_z1, orthonormal columns
    CocycleReport report;
};

CocycleSpace cocycle_space(const Representation& rho);
/// Column basis of B^1 inside C^{3s}.
linalg::MatrixXc coboundary_space(const Representation& rho);
CocycleReport h1_dim(const Representation& rho);

/// Every image diagonal or anti-diagonal (so Ad preserves h0 (+) (h+ (+) h-)).
bool preserves_h0_splitting(const Representation& rho);

struct TangentDims {
    int dim_r = 0;
    int dim_x_expected = 0;
    int dim_h1 = 0;
    /// False when the representation is not irreducible; dims are still filled.
    bool applicable = false;
};

/// Zariski tangent dimensions at a representation of a free group.
/// Throws PreconditionError for presentations with relators.
TangentDims tangent_dims(const Representation& rho);

/// I + t X + t^2 X^2 / 2
Mat2 exp_truncated(const Mat2& x, double t);
/// g_i -> exp(t theta_i) rho(g_i), theta stacked as 3s coordinates.
Representation perturb(const Representation& rho, const linalg::VectorXc& theta, double t);
/// max over relators of min(|rho(r) - Id|, |rho(r) + Id|).
double relator_residual(const Representation& rho);

/// One CSV row: rank,class,dim_z1,dim_b1,dim_h1,h0_block,hpm_block (blocks are
/// H^1 dims, empty when unavailable).
std::string cohomology_csv_header();
std::string cohomology_csv_row(int rank, const std::string& cls, const CocycleReport& r);

}  // namespace charvar
