#pragma once

#include <array>
#include <functional>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "charvar/mat2.hpp"
#include "charvar/rep.hpp"
#include "charvar/words.hpp"

namespace charvar {

/// Trace coordinate t[w] of a square-free positive word w, up to cyclic
/// rotation and inversion. The stored word is the lexicographically least
/// rotation (letter order a < a^-1 < b < ...).
class TraceVar {
public:
    /// Throws std::invalid_argument unless `w` is positive and square-free.
    explicit TraceVar(const Word& w);

    const Word& word() const { return word_; }
    /// `t[ab]`; generator names are concatenated when all are single letters.
    std::string name(std::span<const std::string> names) const;

    friend bool operator==(const TraceVar&, const TraceVar&) = default;
    /// Shorter words first, then lexicographic.
    friend std::strong_ordering operator<=>(const TraceVar& x, const TraceVar& y);

private:
    Word word_;
};

/// Sorted (variable, exponent) pairs with positive exponents; empty is the constant monomial.
using Monomial = std::vector<std::pair<TraceVar, int>>;

/// Sparse polynomial with exact rational coefficients in trace coordinates.
class TracePoly {
public:
    using Terms = std::map<Monomial, mpq_class>;

    TracePoly() = default;
    TracePoly(long constant);  // NOLINT: integers promote to constants
    explicit TracePoly(const mpq_class& constant);
    static TracePoly variable(const TraceVar& v);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Coefficient of `m` (zero when absent).
    mpq_class coefficient(const Monomial& m) const;
    /// Adds `c` to the coefficient of `m`, dropping the term if it cancels.
    void add_term(const Monomial& m, const mpq_class& c);
    std::set<TraceVar> variables() const;
    int degree() const;

    Complex evaluate(const std::function<Complex(const TraceVar&)>& value) const;
    /// Substitutes t[w] = tr(product of `images` along w).
    Complex evaluate_at(std::span<const Mat2> images) const;

    /// Terms ordered by leading (largest) variable, higher powers of it
    /// first; the constant term last. Coefficients print as p/q.
    std::string to_string(std::span<const std::string> names) const;

    TracePoly& operator+=(const TracePoly& o);
    TracePoly& operator-=(const TracePoly& o);
    TracePoly& operator*=(const mpq_class& s);
    friend TracePoly operator+(TracePoly x, const TracePoly& y) { return x += y; }
    friend TracePoly operator-(TracePoly x, const TracePoly& y) { return x -= y; }
    friend TracePoly operator*(const TracePoly& x, const TracePoly& y);
    friend TracePoly operator*(TracePoly x, const mpq_class& s) { return x *= s; }
    friend TracePoly operator*(const mpq_class& s, TracePoly x) { return x *= s; }
    friend bool operator==(const TracePoly&, const TracePoly&) = default;

private:
    Terms terms_;
};

/// Canonical representative of the conjugacy-and-inversion class of `w`:
/// cyclically reduced, least rotation of w or w^-1.
Word canonical_trace_word(const Word& w);

/// Rewrites tr(w) into square-free trace coordinates via
///   tr(a^-1 u) = tr(a) tr(u) - tr(a u)           (inverse elimination)
///   tr(a u a v) = tr(a u) tr(a v) - tr(u^-1 v)   (repeated-letter splitting)
/// with results memoized per canonical word class. Not thread-safe; use one
/// reducer per thread.
class TraceReducer {
public:
    const TracePoly& reduce(const Word& w);
    std::size_t memo_size() const { return memo_.size(); }

private:
    TracePoly reduce_canonical(const Word& w);
    std::map<Word, TracePoly> memo_;
};

/// tr(w) in the free group of the given rank (thread-local memo).
TracePoly reduce_trace(const Word& w, int rank);
/// tr^2(w).
TracePoly tau_poly(const Word& w, int rank);
/// Product of the traces of `ws`; the product of the words must be a product
/// of squares (PreconditionError otherwise).
TracePoly sigma_poly(std::span<const Word> ws, int rank);

struct IdentitySides {
    TracePoly lhs;
    TracePoly rhs;
};

/// sigma_{a,b,ab} against 1/2 (tau_a tau_b + tau_ab - tau_{ab^-1}).
IdentitySides eq3_sides();
/// sigma_{[a,b]} against tau_a + tau_b + 1/2 tau_ab + 1/2 tau_{ab^-1} - 1/2 tau_a tau_b - 2.
IdentitySides eq4_sides();
bool verify_eq3();
bool verify_eq4();

/// Invariant coordinates (X, Y, Z, W) = (tr^2 a, tr^2 b, tr^2 ab, tr a tr b tr ab) on X(F2).
struct XF2Coords {
    Complex x, y, z, w;
    /// |W^2 - XYZ| / max(1, |W|^2, |XYZ|)
    double relation_residual() const;
};

XF2Coords xf2_coords(const Representation& rho);

/// (J_a, J_b, J_ab, J_{ab^-1}) = (X, Y, Z, XY + Z - 2W).
std::array<Complex, 4> j_coords_from_xf2(const XF2Coords& c);

/// Action of eps in H^1(F2; Z/2) on (tr a, tr b, tr ab): sign flips by eps(a), eps(b), eps(a)eps(b).
std::array<Complex, 3> h1_action_on_sl2_coords(const F2Vector& eps, const std::array<Complex, 3>& coords);

}  // namespace charvar
