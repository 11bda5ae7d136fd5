#pragma once

#include <vector>

#include <Eigen/Dense>

#include "charvar/mat2.hpp"

namespace charvar::linalg {

using MatrixXc = Eigen::MatrixXcd;
using VectorXc = Eigen::VectorXcd;

/// Singular values of `m` in decreasing order.
std::vector<double> singular_values(const MatrixXc& m);

/// Number of singular values above max(rel_tol * sigma_max, abs_floor).
int numeric_rank(const MatrixXc& m, double rel_tol = tolerances().rank, double abs_floor = 0.0);

struct NullSpace {
    MatrixXc basis;  ///< orthonormal columns
    std::vector<double> singular_values;
};

/// Right null space by singular-value thresholding at rel_tol * sigma_max.
NullSpace null_space(const MatrixXc& m, double rel_tol = tolerances().rank);

/// Dimension of the smallest subspace of the matrix algebra containing the
/// identity and closed under left multiplication by each of `generators`.
/// All matrices must be square of the same size.
int span_closure_dimension(const std::vector<MatrixXc>& generators, double rel_tol = tolerances().rank);

MatrixXc to_eigen(const Mat2& x);
MatrixXc to_eigen(const Mat3& x);

}  // namespace charvar::linalg
