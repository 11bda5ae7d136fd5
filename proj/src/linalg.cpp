#include "charvar/linalg.hpp"

#include <algorithm>
#include <deque>

namespace charvar::linalg {

std::vector<double> singular_values(const MatrixXc& m) {
    if (m.size() == 0) return {};
    Eigen::JacobiSVD<MatrixXc> svd(m);
    const auto& s = svd.singularValues();
    return {s.data(), s.data() + s.size()};
}

int numeric_rank(const MatrixXc& m, double rel_tol, double abs_floor) {
    const auto s = singular_values(m);
    if (s.empty() || s.front() == 0.0) return 0;
    const double cut = std::max(rel_tol * s.front(), abs_floor);
    int r = 0;
    for (double v : s)
        if (v > cut) ++r;
    return r;
}

NullSpace null_space(const MatrixXc& m, double rel_tol) {
    const auto cols = m.cols();
    if (m.rows() == 0) return {MatrixXc::Identity(cols, cols), {}};
    Eigen::JacobiSVD<MatrixXc> svd(m, Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    const double top = s.size() > 0 ? s(0) : 0.0;
    Eigen::Index rank = 0;
    if (top > 0.0)
        for (Eigen::Index i = 0; i < s.size(); ++i)
            if (s(i) > rel_tol * top) ++rank;
    NullSpace ns;
    ns.basis = svd.matrixV().rightCols(cols - rank);
    ns.singular_values.assign(s.data(), s.data() + s.size());
    return ns;
}

int span_closure_dimension(const std::vector<MatrixXc>& generators, double rel_tol) {
    if (generators.empty()) return 1;
    const auto n = generators.front().rows();
    const auto full = n * n;

    // Orthonormal basis of the span so far, as columns of flattened matrices.
    std::vector<VectorXc> basis;
    std::deque<MatrixXc> pending;
    auto try_add = [&](const MatrixXc& candidate) {
        VectorXc v = Eigen::Map<const VectorXc>(candidate.data(), full);
        const double scale = v.norm();
        if (scale == 0.0) return;
        v /= scale;
        // Two Gram-Schmidt passes keep the residual honest.
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& q : basis) v -= q * q.dot(v);
        if (v.norm() <= rel_tol) return;
        basis.push_back(v.normalized());
        pending.push_back(candidate / scale);
    };

    try_add(MatrixXc::Identity(n, n));
    while (!pending.empty() && static_cast<Eigen::Index>(basis.size()) < full) {
        const MatrixXc m = pending.front();
        pending.pop_front();
        for (const auto& g : generators) try_add(g * m);
    }
    // Final verdict from singular values of the accepted elements.
    MatrixXc stacked(full, static_cast<Eigen::Index>(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i) stacked.col(static_cast<Eigen::Index>(i)) = basis[i];
    return numeric_rank(stacked, rel_tol);
}

MatrixXc to_eigen(const Mat2& x) {
    MatrixXc m(2, 2);
    m << x.a, x.b, x.c, x.d;
    return m;
}

MatrixXc to_eigen(const Mat3& x) {
    MatrixXc m(3, 3);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) m(r, c) = x(r, c);
    return m;
}

}  // namespace charvar::linalg
