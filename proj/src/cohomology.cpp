#include "charvar/cohomology.hpp"

#include <algorithm>

#include "charvar/classify.hpp"
#include "charvar/errors.hpp"

namespace charvar {

namespace {

// Ad has entries of order one; anything this small is rounding noise.
constexpr double kCoboundaryFloor = 1e-10;

linalg::MatrixXc restricted_adjoint(const Mat2& g, const std::vector<int>& coords) {
    const Mat3 ad = adjoint_so3(g);
    const auto d = static_cast<Eigen::Index>(coords.size());
    linalg::MatrixXc m(d, d);
    for (Eigen::Index r = 0; r < d; ++r)
        for (Eigen::Index c = 0; c < d; ++c)
            m(r, c) = ad(coords[static_cast<std::size_t>(r)], coords[static_cast<std::size_t>(c)]);
    return m;
}

CohomologyDims dims_on(const Representation& rho, const std::vector<int>& coords) {
    const auto d = static_cast<int>(coords.size());
    const int s = rho.rank();
    CohomologyDims out;
    const auto constraints = cocycle_constraints(rho, coords);
    out.z1 = constraints.rows() == 0 ? d * s : static_cast<int>(linalg::null_space(constraints).basis.cols());
    out.b1 = linalg::numeric_rank(coboundary_map(rho, coords), tolerances().rank, kCoboundaryFloor);
    out.h1 = out.z1 - out.b1;
    return out;
}

bool is_diagonal(const Mat2& g) { return std::max(std::abs(g.b), std::abs(g.c)) <= 1e-9 * g.norm_inf(); }
bool is_antidiagonal(const Mat2& g) { return std::max(std::abs(g.a), std::abs(g.d)) <= 1e-9 * g.norm_inf(); }

}  // namespace

linalg::MatrixXc cocycle_constraints(const Representation& rho, const std::vector<int>& coords) {
    const auto d = static_cast<Eigen::Index>(coords.size());
    const auto s = static_cast<Eigen::Index>(rho.rank());
    const auto& relators = rho.presentation().relators;
    linalg::MatrixXc sys = linalg::MatrixXc::Zero(d * static_cast<Eigen::Index>(relators.size()), d * s);
    for (std::size_t j = 0; j < relators.size(); ++j) {
        // theta(uv) = theta(u) + Ad_u theta(v),  theta(g^-1) = -Ad_g^-1 theta(g)
        Mat2 prefix = Mat2::identity();
        for (const auto& l : relators[j].letters()) {
            const Mat2& g = rho.image(l.gen);
            linalg::MatrixXc block = restricted_adjoint(prefix, coords);
            if (l.exp < 0) block = -block * restricted_adjoint(g.inverse(), coords);
            sys.block(d * static_cast<Eigen::Index>(j), d * l.gen, d, d) += block;
            prefix = prefix * (l.exp > 0 ? g : g.inverse());
        }
    }
    return sys;
}

linalg::MatrixXc coboundary_map(const Representation& rho, const std::vector<int>& coords) {
    const auto d = static_cast<Eigen::Index>(coords.size());
    const auto s = static_cast<Eigen::Index>(rho.rank());
    linalg::MatrixXc m(d * s, d);
    for (Eigen::Index i = 0; i < s; ++i)
        m.block(d * i, 0, d, d) =
            restricted_adjoint(rho.image(static_cast<int>(i)), coords) - linalg::MatrixXc::Identity(d, d);
    return m;
}

bool preserves_h0_splitting(const Representation& rho) {
    return std::all_of(rho.images().begin(), rho.images().end(),
                       [](const Mat2& g) { return is_diagonal(g) || is_antidiagonal(g); });
}

CocycleSpace cocycle_space(const Representation& rho) {
    CocycleSpace out;
    const auto s = static_cast<Eigen::Index>(rho.rank());
    const auto constraints = cocycle_constraints(rho);
    if (constraints.rows() == 0) {
        out.basis = linalg::MatrixXc::Identity(3 * s, 3 * s);
    } else {
        auto ns = linalg::null_space(constraints);
        out.basis = std::move(ns.basis);
        out.report.singular_values = std::move(ns.singular_values);
    }
    const auto cob = coboundary_map(rho);
    out.report.coboundary_singular_values = linalg::singular_values(cob);
    out.report.dim_z1 = static_cast<int>(out.basis.cols());
    out.report.dim_b1 = linalg::numeric_rank(cob, tolerances().rank, kCoboundaryFloor);
    out.report.dim_h1 = out.report.dim_z1 - out.report.dim_b1;
    if (preserves_h0_splitting(rho)) out.report.block_dims = BlockDims{dims_on(rho, {0}), dims_on(rho, {1, 2})};
    return out;
}

linalg::MatrixXc coboundary_space(const Representation& rho) {
    const auto cob = coboundary_map(rho);
    Eigen::JacobiSVD<linalg::MatrixXc> svd(cob, Eigen::ComputeThinU);
    return svd.matrixU().leftCols(linalg::numeric_rank(cob, tolerances().rank, kCoboundaryFloor));
}

CocycleReport h1_dim(const Representation& rho) { return cocycle_space(rho).report; }

TangentDims tangent_dims(const Representation& rho) {
    if (!rho.presentation().is_free())
        throw PreconditionError("tangent_dims: only free presentations are supported");
    const auto report = h1_dim(rho);
    TangentDims t;
    t.dim_r = report.dim_z1;
    t.dim_x_expected = t.dim_r - 3;
    t.dim_h1 = report.dim_h1;
    t.applicable = !is_reducible(rho);
    return t;
}

Mat2 exp_truncated(const Mat2& x, double t) {
    const Mat2 tx = Complex(t) * x;
    return Mat2::identity() + tx + Complex(0.5) * (tx * tx);
}

Representation perturb(const Representation& rho, const linalg::VectorXc& theta, double t) {
    std::vector<Mat2> images;
    for (int i = 0; i < rho.rank(); ++i) {
        const Mat2 x = sl2_from_coords({theta(3 * i), theta(3 * i + 1), theta(3 * i + 2)});
        images.push_back(exp_truncated(x, t) * rho.image(i));
    }
    return {rho.presentation(), std::move(images), rho.flavor()};
}

double relator_residual(const Representation& rho) {
    double worst = 0.0;
    for (const auto& r : rho.presentation().relators) {
        const Mat2 v = evaluate_lift(rho, r);
        worst = std::max(worst, std::min((v - Mat2::identity()).norm_inf(), (v + Mat2::identity()).norm_inf()));
    }
    return worst;
}

std::string cohomology_csv_header() { return "rank,class,dim_z1,dim_b1,dim_h1,h0_block,hpm_block"; }

std::string cohomology_csv_row(int rank, const std::string& cls, const CocycleReport& r) {
    std::string row = std::to_string(rank) + "," + cls + "," + std::to_string(r.dim_z1) + "," +
                      std::to_string(r.dim_b1) + "," + std::to_string(r.dim_h1) + ",";
    if (r.block_dims) row += std::to_string(r.block_dims->h0.h1) + "," + std::to_string(r.block_dims->hpm.h1);
    else row += ",";
    return row;
}

}  // namespace charvar
