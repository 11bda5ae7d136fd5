#pragma once

#include <array>
#include <complex>

namespace charvar {

using Complex = std::complex<double>;

/// Process-wide numeric tolerances. Set once at startup (the CLI does this
/// from --tol); read everywhere else.
struct Tolerances {
    double det = 1e-9;   ///< |det - 1| accepted for SL2 elements
    double eq = 1e-9;    ///< relative entrywise tolerance for PSL2 equality
    double rank = 1e-8;  ///< singular values below rank * sigma_max count as zero
};

Tolerances& tolerances();

/// Complex 2x2 matrix [[a, b], [c, d]].
struct Mat2 {
    Complex a{1.0}, b{0.0}, c{0.0}, d{1.0};

    static Mat2 identity() { return {}; }
    static Mat2 diag(Complex x, Complex y) { return {x, 0.0, 0.0, y}; }

    Complex trace() const { return a + d; }
    Complex det() const { return a * d - b * c; }
    /// Adjugate; this is the inverse whenever det == 1.
    Mat2 inverse() const { return {d, -b, -c, a}; }
    /// Largest entry modulus.
    double norm_inf() const;
    bool is_finite() const;

    Mat2 operator-() const { return {-a, -b, -c, -d}; }
    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend Mat2 operator+(const Mat2& x, const Mat2& y) { return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d}; }
    friend Mat2 operator-(const Mat2& x, const Mat2& y) { return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d}; }
    friend Mat2 operator*(Complex s, const Mat2& x) { return {s * x.a, s * x.b, s * x.c, s * x.d}; }
    friend bool operator==(const Mat2&, const Mat2&) = default;
};

Mat2 power(const Mat2& x, int n);
bool has_unit_det(const Mat2& x, double tol = tolerances().det);

/// Element of PSL(2,C), stored through one sign representative.
class PSL2Elt {
public:
    PSL2Elt() = default;
    explicit PSL2Elt(const Mat2& rep) : rep_(rep) {}

    const Mat2& rep() const { return rep_; }
    PSL2Elt inverse() const { return PSL2Elt(rep_.inverse()); }
    /// Square of the trace; independent of the representative.
    Complex trace_squared() const { return rep_.trace() * rep_.trace(); }

    friend PSL2Elt operator*(const PSL2Elt& x, const PSL2Elt& y) { return PSL2Elt(x.rep_ * y.rep_); }

private:
    Mat2 rep_;
};

/// min(|X - Y|, |X + Y|) <= tol * max(1, |X|) in the max-entry norm.
bool psl2_equal(const PSL2Elt& x, const PSL2Elt& y, double tol = tolerances().eq);
bool psl2_equal(const Mat2& x, const Mat2& y, double tol = tolerances().eq);

/// Complex 3x3 matrix, row-major.
struct Mat3 {
    std::array<std::array<Complex, 3>, 3> m{};

    static Mat3 identity();
    Complex& operator()(int r, int c) { return m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }
    const Complex& operator()(int r, int c) const { return m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }

    Complex trace() const { return m[0][0] + m[1][1] + m[2][2]; }
    Complex det() const;
    Mat3 transpose() const;
    double norm_inf() const;

    friend Mat3 operator*(const Mat3& x, const Mat3& y);
    friend Mat3 operator-(const Mat3& x, const Mat3& y);
};

/// Traceless matrix p*h0 + q*h+ + r*h- from coordinates (p, q, r), with
/// h0 = diag(1,-1), h+ = E12, h- = E21.
Mat2 sl2_from_coords(const std::array<Complex, 3>& v);
std::array<Complex, 3> sl2_coords(const Mat2& x);

/// Matrix of v -> X v X^-1 on sl2 in the ordered basis (h0, h+, h-).
Mat3 adjoint_so3(const Mat2& x);
inline Mat3 adjoint_so3(const PSL2Elt& x) { return adjoint_so3(x.rep()); }

/// Gram matrix of the Killing form B(X,Y) = 4 tr(XY) in the basis (h0, h+, h-).
Mat3 killing_gram();

/// |tr(AB) + tr(A^-1 B) - tr(A) tr(B)|
double verify_fundamental_identity(const Mat2& a, const Mat2& b);

}  // namespace charvar
