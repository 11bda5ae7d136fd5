#include "charvar/words.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "charvar/errors.hpp"

namespace charvar {

namespace {

void push_reduced(std::vector<Letter>& out, const Letter& l) {
    if (!out.empty() && out.back().cancels(l))
        out.pop_back();
    else
        out.push_back(l);
}

}  // namespace

Word::Word(std::vector<Letter> letters) {
    letters_.reserve(letters.size());
    for (const auto& l : letters) push_reduced(letters_, l);
}

Word Word::generator(int gen, int exp) {
    Word w;
    const Letter l{gen, exp < 0 ? -1 : 1};
    for (int k = 0; k < std::abs(exp); ++k) w.letters_.push_back(l);
    return w;
}

Word Word::inverse() const {
    Word w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(it->inverse());
    return w;
}

Word Word::power(int n) const {
    const Word base = n < 0 ? inverse() : *this;
    Word out;
    for (int k = 0; k < std::abs(n); ++k) out = out * base;
    return out;
}

int Word::min_rank() const {
    int r = 0;
    for (const auto& l : letters_) r = std::max(r, l.gen + 1);
    return r;
}

int Word::exponent_sum(int gen) const {
    int s = 0;
    for (const auto& l : letters_)
        if (l.gen == gen) s += l.exp;
    return s;
}

Word operator*(const Word& u, const Word& v) {
    Word w = u;
    for (const auto& l : v.letters_) push_reduced(w.letters_, l);
    return w;
}

Word concat(const Word& u, const Word& v) { return u * v; }

Word commutator(const Word& u, const Word& v) { return u * v * u.inverse() * v.inverse(); }

Word cyclic_reduction(const Word& w) {
    const auto& ls = w.letters();
    std::size_t lo = 0, hi = ls.size();
    while (hi - lo >= 2 && ls[lo].cancels(ls[hi - 1])) {
        ++lo;
        --hi;
    }
    return Word(std::vector<Letter>(ls.begin() + static_cast<std::ptrdiff_t>(lo),
                                    ls.begin() + static_cast<std::ptrdiff_t>(hi)));
}

std::vector<std::string> Presentation::default_names(int rank) {
    std::vector<std::string> names;
    for (int i = 0; i < rank; ++i) {
        if (i < 26)
            names.emplace_back(1, static_cast<char>('a' + i));
        else
            names.push_back("g" + std::to_string(i));
    }
    return names;
}

Presentation Presentation::free(int rank) { return {rank, default_names(rank), {}}; }

// ---------------------------------------------------------------------------
// Word parser

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class WordParser {
public:
    WordParser(std::string_view text, std::span<const std::string> names) : text_(text), names_(names) {}

    Word parse() {
        Word w = parse_word(false);
        skip_space();
        if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return w;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("word \"" + std::string(text_) + "\" at offset " + std::to_string(pos_) + ": " + msg);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at_term_start() {
        skip_space();
        if (pos_ >= text_.size()) return false;
        const char c = text_[pos_];
        return is_ident_start(c) || c == '(' || c == '[' || c == '1';
    }

    Word parse_word(bool nested) {
        Word w;
        bool expect_term = false;
        while (true) {
            if (!at_term_start()) {
                if (expect_term) fail("expected a term after '*'");
                break;
            }
            w = w * parse_term();
            skip_space();
            expect_term = false;
            if (pos_ < text_.size() && text_[pos_] == '*') {
                ++pos_;
                expect_term = true;
            }
            if (nested && pos_ < text_.size() && (text_[pos_] == ')' || text_[pos_] == ',' || text_[pos_] == ']'))
                break;
        }
        return w;
    }

    Word parse_term() {
        Word atom = parse_atom();
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == '^') {
            ++pos_;
            skip_space();
            atom = atom.power(parse_exponent());
        }
        return atom;
    }

    int parse_exponent() {
        const std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        const std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == digits) fail("malformed exponent");
        if (pos_ - digits > 6) fail("exponent out of range");
        return std::stoi(std::string(text_.substr(start, pos_ - start)));
    }

    void expect(char c) {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    Word parse_atom() {
        skip_space();
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Word w = parse_word(true);
            expect(')');
            return w;
        }
        if (c == '[') {
            ++pos_;
            Word u = parse_word(true);
            expect(',');
            Word v = parse_word(true);
            expect(']');
            return commutator(u, v);
        }
        if (c == '1') {
            ++pos_;
            if (pos_ < text_.size() && is_ident_char(text_[pos_])) fail("malformed identity token");
            return {};
        }
        const std::size_t start = pos_;
        while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
        const std::string ident(text_.substr(start, pos_ - start));
        if (auto idx = lookup(ident)) return Word::generator(*idx);
        // A run of single-letter generator names written without separators.
        Word w;
        for (char ch : ident) {
            auto idx = lookup(std::string(1, ch));
            if (!idx) {
                pos_ = start;
                fail("unknown generator '" + ident + "'");
            }
            w = w * Word::generator(*idx);
        }
        return w;
    }

    std::optional<int> lookup(const std::string& name) const {
        auto it = std::find(names_.begin(), names_.end(), name);
        if (it == names_.end()) return std::nullopt;
        return static_cast<int>(it - names_.begin());
    }

    std::string_view text_;
    std::span<const std::string> names_;
    std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text, std::span<const std::string> names) {
    return WordParser(text, names).parse();
}

std::string format_word(const Word& w, std::span<const std::string> names) {
    if (w.empty()) return "1";
    std::string out;
    const auto& ls = w.letters();
    for (std::size_t i = 0; i < ls.size();) {
        std::size_t j = i;
        while (j < ls.size() && ls[j] == ls[i]) ++j;
        const int run = static_cast<int>(j - i) * ls[i].exp;
        if (!out.empty()) out += '*';
        const auto gen = static_cast<std::size_t>(ls[i].gen);
        out += gen < names.size() ? names[gen] : "g" + std::to_string(gen);
        if (run != 1) out += "^" + std::to_string(run);
        i = j;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Presentation text format

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
    Presentation p;
    bool have_gens = false;
    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        const auto colon = line.find(':');
        if (colon == std::string_view::npos)
            throw ParseError("presentation line " + std::to_string(lineno) + ": missing ':'");
        const std::string_view key = trim(line.substr(0, colon));
        const std::string_view body = trim(line.substr(colon + 1));
        if (key == "gens") {
            if (have_gens) throw ParseError("presentation: duplicate gens line");
            std::istringstream ns{std::string(body)};
            std::string name;
            while (ns >> name) {
                if (!is_ident_start(name.front()) ||
                    !std::all_of(name.begin(), name.end(), [](char c) { return is_ident_char(c); }))
                    throw ParseError("presentation: invalid generator name '" + name + "'");
                if (std::find(p.names.begin(), p.names.end(), name) != p.names.end())
                    throw ParseError("presentation: duplicate generator name '" + name + "'");
                p.names.push_back(name);
            }
            if (p.names.empty()) throw ParseError("presentation: no generators");
            p.rank = static_cast<int>(p.names.size());
            have_gens = true;
        } else if (key == "rel") {
            if (!have_gens) throw ParseError("presentation: rel before gens");
            Word r = parse_word(body, p.names);
            if (r.empty()) throw ParseError("presentation line " + std::to_string(lineno) + ": empty relator");
            p.relators.push_back(std::move(r));
        } else {
            throw ParseError("presentation line " + std::to_string(lineno) + ": unknown key '" + std::string(key) + "'");
        }
    }
    if (!have_gens) throw ParseError("presentation: missing gens line");
    return p;
}

std::string format_presentation(const Presentation& p) {
    std::string out = "gens:";
    for (const auto& n : p.names) out += " " + n;
    out += "\n";
    for (const auto& r : p.relators) out += "rel: " + format_word(r, p.names) + "\n";
    return out;
}

// ---------------------------------------------------------------------------
// Linear algebra over Z/2

F2Matrix::F2Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

F2Vector F2Matrix::row(std::size_t r) const {
    return F2Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                    data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

F2Vector F2Matrix::multiply(const F2Vector& x) const {
    F2Vector y(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) y[r] ^= static_cast<std::uint8_t>((*this)(r, c) & x[c]);
    return y;
}

namespace {

// Row-reduces `m` (with an optional augmented column) in place; returns pivot columns.
std::vector<std::size_t> row_reduce(std::vector<F2Vector>& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && !m[p][c]) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (i != r && m[i][c])
                for (std::size_t k = 0; k < m[i].size(); ++k) m[i][k] ^= m[r][k];
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t F2Matrix::rank() const {
    std::vector<F2Vector> m;
    for (std::size_t r = 0; r < rows_; ++r) m.push_back(row(r));
    return row_reduce(m, cols_).size();
}

std::optional<F2Vector> F2Matrix::solve(const F2Vector& rhs) const {
    std::vector<F2Vector> m;
    for (std::size_t r = 0; r < rows_; ++r) {
        auto v = row(r);
        v.push_back(rhs[r] & 1);
        m.push_back(std::move(v));
    }
    const auto pivots = row_reduce(m, cols_);
    for (std::size_t r = pivots.size(); r < m.size(); ++r)
        if (m[r][cols_]) return std::nullopt;
    F2Vector x(cols_, 0);
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = m[i][cols_];
    return x;
}

std::vector<F2Vector> F2Matrix::null_space() const {
    std::vector<F2Vector> m;
    for (std::size_t r = 0; r < rows_; ++r) m.push_back(row(r));
    const auto pivots = row_reduce(m, cols_);
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<F2Vector> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        F2Vector x(cols_, 0);
        x[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = m[i][f];
        basis.push_back(std::move(x));
    }
    return basis;
}

F2Vector exponent_vector_mod2(const Word& w, const Presentation& p) {
    F2Vector v(static_cast<std::size_t>(p.rank), 0);
    for (const auto& l : w.letters()) v[static_cast<std::size_t>(l.gen)] ^= 1;
    return v;
}

F2Matrix relator_matrix_mod2(const Presentation& p) {
    F2Matrix m(p.relators.size(), static_cast<std::size_t>(p.rank));
    for (std::size_t j = 0; j < p.relators.size(); ++j) {
        const auto v = exponent_vector_mod2(p.relators[j], p);
        for (std::size_t i = 0; i < v.size(); ++i) m(j, i) = v[i];
    }
    return m;
}

bool in_gamma_squared(const Word& w, const Presentation& p) {
    // w lies in the span of the relator rows iff the transposed system R^T y = v is solvable.
    const auto rel = relator_matrix_mod2(p);
    F2Matrix transposed(rel.cols(), rel.rows());
    for (std::size_t r = 0; r < rel.rows(); ++r)
        for (std::size_t c = 0; c < rel.cols(); ++c) transposed(c, r) = rel(r, c);
    return transposed.solve(exponent_vector_mod2(w, p)).has_value();
}

}  // namespace charvar
