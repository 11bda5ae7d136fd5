#include "charvar/tracepoly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "charvar/errors.hpp"

namespace charvar {

namespace {

// Least rotation of `ls` under the letter order.
std::vector<Letter> least_rotation(const std::vector<Letter>& ls) {
    std::vector<Letter> best = ls;
    std::vector<Letter> rot = ls;
    for (std::size_t k = 1; k < ls.size(); ++k) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (rot < best) best = rot;
    }
    return best;
}

bool is_positive(const Word& w) {
    return std::all_of(w.letters().begin(), w.letters().end(), [](const Letter& l) { return l.exp > 0; });
}

bool is_square_free(const Word& w) {
    std::vector<int> seen;
    for (const auto& l : w.letters()) {
        if (std::find(seen.begin(), seen.end(), l.gen) != seen.end()) return false;
        seen.push_back(l.gen);
    }
    return true;
}

Word rotated(const Word& w, std::size_t start) {
    std::vector<Letter> ls = w.letters();
    std::rotate(ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(start), ls.end());
    return Word(std::move(ls));
}

Word slice(const Word& w, std::size_t from, std::size_t to) {
    return Word(std::vector<Letter>(w.letters().begin() + static_cast<std::ptrdiff_t>(from),
                                    w.letters().begin() + static_cast<std::ptrdiff_t>(to)));
}

std::size_t count_inverse_letters(const Word& w) {
    return static_cast<std::size_t>(
        std::count_if(w.letters().begin(), w.letters().end(), [](const Letter& l) { return l.exp < 0; }));
}

std::string spell(const Word& w, std::span<const std::string> names) {
    const bool short_names =
        std::all_of(names.begin(), names.end(), [](const std::string& n) { return n.size() == 1; });
    std::string out;
    for (const auto& l : w.letters()) {
        if (!short_names && !out.empty()) out += '*';
        const auto g = static_cast<std::size_t>(l.gen);
        out += g < names.size() ? names[g] : "g" + std::to_string(g);
    }
    return out;
}

Monomial multiply_monomials(const Monomial& x, const Monomial& y) {
    Monomial out;
    auto i = x.begin();
    auto j = y.begin();
    while (i != x.end() || j != y.end()) {
        if (j == y.end() || (i != x.end() && i->first < j->first)) {
            out.push_back(*i++);
        } else if (i == x.end() || j->first < i->first) {
            out.push_back(*j++);
        } else {
            out.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    return out;
}

// Display order: by largest variable, then its exponent (descending), then
// the remaining variables likewise; constant term last.
bool display_before(const Monomial& x, const Monomial& y) {
    if (x.empty() || y.empty()) return !x.empty() && y.empty();
    auto i = x.rbegin();
    auto j = y.rbegin();
    for (; i != x.rend() && j != y.rend(); ++i, ++j) {
        if (i->first != j->first) return i->first < j->first;
        if (i->second != j->second) return i->second > j->second;
    }
    return i == x.rend() && j != y.rend();
}

}  // namespace

// ---------------------------------------------------------------------------
// TraceVar

TraceVar::TraceVar(const Word& w) {
    if (w.empty() || !is_positive(w) || !is_square_free(w))
        throw std::invalid_argument("trace variables need a non-empty positive square-free word");
    word_ = Word(least_rotation(w.letters()));
}

std::string TraceVar::name(std::span<const std::string> names) const { return "t[" + spell(word_, names) + "]"; }

std::strong_ordering operator<=>(const TraceVar& x, const TraceVar& y) {
    if (auto c = x.word_.size() <=> y.word_.size(); c != 0) return c;
    return x.word_ <=> y.word_;
}

// ---------------------------------------------------------------------------
// TracePoly

TracePoly::TracePoly(long constant) : TracePoly(mpq_class(constant)) {}

TracePoly::TracePoly(const mpq_class& constant) {
    if (constant != 0) terms_.emplace(Monomial{}, constant);
}

TracePoly TracePoly::variable(const TraceVar& v) {
    TracePoly p;
    p.terms_.emplace(Monomial{{v, 1}}, mpq_class(1));
    return p;
}

mpq_class TracePoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

void TracePoly::add_term(const Monomial& m, const mpq_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

std::set<TraceVar> TracePoly::variables() const {
    std::set<TraceVar> vars;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m) vars.insert(v);
    return vars;
}

int TracePoly::degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) {
        int md = 0;
        for (const auto& [v, e] : m) md += e;
        d = std::max(d, md);
    }
    return d;
}

Complex TracePoly::evaluate(const std::function<Complex(const TraceVar&)>& value) const {
    std::map<TraceVar, Complex> cache;
    Complex sum = 0.0;
    for (const auto& [m, c] : terms_) {
        Complex term = c.get_d();
        for (const auto& [v, e] : m) {
            auto it = cache.find(v);
            if (it == cache.end()) it = cache.emplace(v, value(v)).first;
            term *= std::pow(it->second, e);
        }
        sum += term;
    }
    return sum;
}

Complex TracePoly::evaluate_at(std::span<const Mat2> images) const {
    return evaluate([&](const TraceVar& v) {
        Mat2 m = Mat2::identity();
        for (const auto& l : v.word().letters()) m = m * images[static_cast<std::size_t>(l.gen)];
        return m.trace();
    });
}

std::string TracePoly::to_string(std::span<const std::string> names) const {
    if (terms_.empty()) return "0";
    std::vector<const Terms::value_type*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](auto* x, auto* y) { return display_before(x->first, y->first); });

    std::string out;
    for (const auto* t : order) {
        const auto& [m, c] = *t;
        const bool negative = c < 0;
        const mpq_class mag = abs(c);
        out += out.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
        std::string body;
        for (const auto& [v, e] : m) {
            if (!body.empty()) body += '*';
            body += v.name(names);
            if (e != 1) body += "^" + std::to_string(e);
        }
        if (body.empty())
            out += mag.get_str();
        else if (mag == 1)
            out += body;
        else
            out += mag.get_str() + "*" + body;
    }
    return out;
}

TracePoly& TracePoly::operator+=(const TracePoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

TracePoly& TracePoly::operator-=(const TracePoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

TracePoly& TracePoly::operator*=(const mpq_class& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

TracePoly operator*(const TracePoly& x, const TracePoly& y) {
    TracePoly out;
    for (const auto& [mx, cx] : x.terms_)
        for (const auto& [my, cy] : y.terms_) out.add_term(multiply_monomials(mx, my), cx * cy);
    return out;
}

// ---------------------------------------------------------------------------
// Reduction

Word canonical_trace_word(const Word& w) {
    const Word core = cyclic_reduction(w);
    if (core.empty()) return core;
    auto fwd = least_rotation(core.letters());
    auto bwd = least_rotation(core.inverse().letters());
    return Word(std::min(fwd, bwd));
}

const TracePoly& TraceReducer::reduce(const Word& w) {
    const Word key = canonical_trace_word(w);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    TracePoly p = reduce_canonical(key);
    return memo_.emplace(key, std::move(p)).first->second;
}

TracePoly TraceReducer::reduce_canonical(const Word& canon) {
    if (canon.empty()) return TracePoly(2);

    // Orient so that at most half the letters are inverses.
    const std::size_t len = canon.size();
    const Word w = 2 * count_inverse_letters(canon) <= len ? canon : canon.inverse();

    const auto& ls = w.letters();
    const auto neg = std::find_if(ls.begin(), ls.end(), [](const Letter& l) { return l.exp < 0; });
    if (neg != ls.end()) {
        // w ~ a^-1 u:  tr(a^-1 u) = tr(a) tr(u) - tr(a u)
        const Word v = rotated(w, static_cast<std::size_t>(neg - ls.begin()));
        const Word a = Word::generator(v[0].gen);
        const Word u = slice(v, 1, v.size());
        TracePoly tr_a = reduce(a);
        TracePoly tr_u = reduce(u);
        TracePoly tr_au = reduce(a * u);
        return tr_a * tr_u - tr_au;
    }

    if (is_square_free(w)) return TracePoly::variable(TraceVar(w));

    // w ~ a u a v:  tr(a u a v) = tr(a u) tr(a v) - tr(u^-1 v), taking the
    // first letter that recurs and its next occurrence.
    for (std::size_t i = 0; i < len; ++i) {
        for (std::size_t j = i + 1; j < len; ++j) {
            if (ls[j].gen != ls[i].gen) continue;
            const Word v = rotated(w, i);
            const std::size_t gap = j - i;
            const Word a = Word::generator(v[0].gen);
            const Word u = slice(v, 1, gap);
            const Word rest = slice(v, gap + 1, len);
            TracePoly tr_au = reduce(a * u);
            TracePoly tr_av = reduce(a * rest);
            TracePoly tr_uv = reduce(u.inverse() * rest);
            return tr_au * tr_av - tr_uv;
        }
    }
    throw std::logic_error("reduce_trace: no rewrite applies");  // unreachable
}

namespace {

TraceReducer& thread_reducer() {
    thread_local TraceReducer reducer;
    return reducer;
}

void check_rank(const Word& w, int rank) {
    if (w.min_rank() > rank)
        throw PreconditionError("word uses generator " + std::to_string(w.min_rank() - 1) +
                                " outside the free group of rank " + std::to_string(rank));
}

}  // namespace

TracePoly reduce_trace(const Word& w, int rank) {
    check_rank(w, rank);
    return thread_reducer().reduce(w);
}

TracePoly tau_poly(const Word& w, int rank) {
    const TracePoly t = reduce_trace(w, rank);
    return t * t;
}

TracePoly sigma_poly(std::span<const Word> ws, int rank) {
    Word product;
    for (const auto& w : ws) {
        check_rank(w, rank);
        product = product * w;
    }
    if (!in_gamma_squared(product, Presentation::free(rank)))
        throw PreconditionError("sigma: product of the words is not a product of squares; the trace product is "
                                "only defined up to sign");
    TracePoly out(1);
    for (const auto& w : ws) out = out * reduce_trace(w, rank);
    return out;
}

// ---------------------------------------------------------------------------
// Identities on F2

namespace {

const Word kA = Word::generator(0);
const Word kB = Word::generator(1);

}  // namespace

IdentitySides eq3_sides() {
    const Word ab = kA * kB;
    const std::vector<Word> triple{kA, kB, ab};
    const mpq_class half(1, 2);
    IdentitySides s;
    s.lhs = sigma_poly(triple, 2);
    s.rhs = half * (tau_poly(kA, 2) * tau_poly(kB, 2) + tau_poly(ab, 2) - tau_poly(kA * kB.inverse(), 2));
    return s;
}

IdentitySides eq4_sides() {
    const std::vector<Word> comm{commutator(kA, kB)};
    const mpq_class half(1, 2);
    const TracePoly ta = tau_poly(kA, 2), tb = tau_poly(kB, 2);
    IdentitySides s;
    s.lhs = sigma_poly(comm, 2);
    s.rhs = ta + tb + half * tau_poly(kA * kB, 2) + half * tau_poly(kA * kB.inverse(), 2) - half * (ta * tb) -
            TracePoly(2);
    return s;
}

bool verify_eq3() {
    const auto s = eq3_sides();
    return s.lhs == s.rhs;
}

bool verify_eq4() {
    const auto s = eq4_sides();
    return s.lhs == s.rhs;
}

double XF2Coords::relation_residual() const {
    const Complex xyz = x * y * z;
    const double scale = std::max({1.0, std::norm(w), std::abs(xyz)});
    return std::abs(w * w - xyz) / scale;
}

XF2Coords xf2_coords(const Representation& rho) {
    const auto& p = rho.presentation();
    if (p.rank != 2 || !p.is_free()) throw PreconditionError("xf2_coords: needs a representation of the free group F2");
    // Any SL2 lift works since a * b * ab is a product of squares; use the stored one.
    const Mat2& a = rho.image(0);
    const Mat2& b = rho.image(1);
    const Complex ta = a.trace(), tb = b.trace(), tab = (a * b).trace();
    return {ta * ta, tb * tb, tab * tab, ta * tb * tab};
}

std::array<Complex, 4> j_coords_from_xf2(const XF2Coords& c) { return {c.x, c.y, c.z, c.x * c.y + c.z - 2.0 * c.w}; }

std::array<Complex, 3> h1_action_on_sl2_coords(const F2Vector& eps, const std::array<Complex, 3>& coords) {
    if (eps.size() != 2) throw PreconditionError("h1_action: eps must have length 2");
    const double sa = eps[0] & 1 ? -1.0 : 1.0;
    const double sb = eps[1] & 1 ? -1.0 : 1.0;
    return {sa * coords[0], sb * coords[1], sa * sb * coords[2]};
}

}  // namespace charvar
