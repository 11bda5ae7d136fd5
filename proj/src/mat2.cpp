#include "charvar/mat2.hpp"

#include <algorithm>
#include <cmath>

namespace charvar {

Tolerances& tolerances() {
    static Tolerances t;
    return t;
}

double Mat2::norm_inf() const { return std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)}); }

bool Mat2::is_finite() const {
    for (const Complex& z : {a, b, c, d})
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

Mat2 power(const Mat2& x, int n) {
    Mat2 base = n < 0 ? x.inverse() : x;
    Mat2 out = Mat2::identity();
    for (unsigned k = static_cast<unsigned>(std::abs(n)); k != 0; k >>= 1) {
        if (k & 1u) out = out * base;
        base = base * base;
    }
    return out;
}

bool has_unit_det(const Mat2& x, double tol) { return x.is_finite() && std::abs(x.det() - 1.0) <= tol; }

bool psl2_equal(const Mat2& x, const Mat2& y, double tol) {
    const double diff = std::min((x - y).norm_inf(), (x + y).norm_inf());
    return diff <= tol * std::max(1.0, x.norm_inf());
}

bool psl2_equal(const PSL2Elt& x, const PSL2Elt& y, double tol) { return psl2_equal(x.rep(), y.rep(), tol); }

Mat3 Mat3::identity() {
    Mat3 i;
    for (int k = 0; k < 3; ++k) i(k, k) = 1.0;
    return i;
}

Complex Mat3::det() const {
    const auto& x = m;
    return x[0][0] * (x[1][1] * x[2][2] - x[1][2] * x[2][1]) - x[0][1] * (x[1][0] * x[2][2] - x[1][2] * x[2][0]) +
           x[0][2] * (x[1][0] * x[2][1] - x[1][1] * x[2][0]);
}

Mat3 Mat3::transpose() const {
    Mat3 t;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) t(r, c) = (*this)(c, r);
    return t;
}

double Mat3::norm_inf() const {
    double n = 0.0;
    for (const auto& row : m)
        for (const auto& z : row) n = std::max(n, std::abs(z));
    return n;
}

Mat3 operator*(const Mat3& x, const Mat3& y) {
    Mat3 z;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            for (int k = 0; k < 3; ++k) z(r, c) += x(r, k) * y(k, c);
    return z;
}

Mat3 operator-(const Mat3& x, const Mat3& y) {
    Mat3 z;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) z(r, c) = x(r, c) - y(r, c);
    return z;
}

Mat2 sl2_from_coords(const std::array<Complex, 3>& v) { return {v[0], v[1], v[2], -v[0]}; }

std::array<Complex, 3> sl2_coords(const Mat2& x) { return {0.5 * (x.a - x.d), x.b, x.c}; }

Mat3 adjoint_so3(const Mat2& x) {
    const Mat2 xinv = x.inverse();
    Mat3 ad;
    for (int j = 0; j < 3; ++j) {
        std::array<Complex, 3> e{};
        e[static_cast<std::size_t>(j)] = 1.0;
        const auto col = sl2_coords(x * sl2_from_coords(e) * xinv);
        for (int i = 0; i < 3; ++i) ad(i, j) = col[static_cast<std::size_t>(i)];
    }
    return ad;
}

Mat3 killing_gram() {
    // tr(h0 h0) = 2, tr(h+ h-) = 1, all other pairings vanish.
    Mat3 k;
    k(0, 0) = 8.0;
    k(1, 2) = 4.0;
    k(2, 1) = 4.0;
    return k;
}

double verify_fundamental_identity(const Mat2& a, const Mat2& b) {
    return std::abs((a * b).trace() + (a.inverse() * b).trace() - a.trace() * b.trace());
}

}  // namespace charvar
