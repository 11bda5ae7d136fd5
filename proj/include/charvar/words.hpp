#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace charvar {

/// One letter of a free-group word: generator index (0-based) and exponent +1/-1.
struct Letter {
    int gen = 0;
    int exp = 1;

    Letter inverse() const { return {gen, -exp}; }
    bool cancels(const Letter& other) const { return gen == other.gen && exp == -other.exp; }

    friend bool operator==(const Letter&, const Letter&) = default;
    /// Order a < a^-1 < b < b^-1 < ...
    friend std::strong_ordering operator<=>(const Letter& x, const Letter& y) {
        if (auto c = x.gen <=> y.gen; c != 0) return c;
        return (x.exp < 0) <=> (y.exp < 0);
    }
};

/// Freely reduced word in a free group, stored letter by letter.
class Word {
public:
    Word() = default;
    /// Freely reduces the given letters.
    explicit Word(std::vector<Letter> letters);

    static Word generator(int gen, int exp = 1);

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    const Letter& operator[](std::size_t i) const { return letters_[i]; }

    Word inverse() const;
    Word power(int n) const;
    /// Largest generator index used plus one (0 for the empty word).
    int min_rank() const;
    /// Total exponent of generator `gen`.
    int exponent_sum(int gen) const;

    friend Word operator*(const Word& u, const Word& v);
    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word& u, const Word& v) { return u.letters_ <=> v.letters_; }

private:
    std::vector<Letter> letters_;
};

Word concat(const Word& u, const Word& v);
Word commutator(const Word& u, const Word& v);

/// Cyclically reduced core: strips x ... x^-1 pairs from both ends.
Word cyclic_reduction(const Word& w);

/// Finite presentation <g_1..g_s | r_1..r_k>.
struct Presentation {
    int rank = 0;
    std::vector<std::string> names;
    std::vector<Word> relators;

    bool is_free() const { return relators.empty(); }

    /// Free group with default generator names a, b, c, ...
    static Presentation free(int rank);
    static std::vector<std::string> default_names(int rank);

    friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// Parses `term+` with `term := name ('^' int)? | '(' word ')' ('^' int)? | '[' word ',' word ']'`.
/// Terms are separated by `*` or whitespace. A run of single-letter generator
/// names may be written without separators ("ab" for a*b). "1" and the empty
/// string denote the identity.
Word parse_word(std::string_view text, std::span<const std::string> names);
std::string format_word(const Word& w, std::span<const std::string> names);

/// Parses the `gens: ...` / `rel: ...` text format.
Presentation parse_presentation(std::string_view text);
std::string format_presentation(const Presentation& p);

/// Dense vector over the two-element field.
using F2Vector = std::vector<std::uint8_t>;

/// Dense matrix over the two-element field, row-major.
class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint8_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::uint8_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    F2Vector row(std::size_t r) const;

    F2Vector multiply(const F2Vector& x) const;
    std::size_t rank() const;
    /// Some x with A x = rhs, or nullopt when the system is inconsistent.
    std::optional<F2Vector> solve(const F2Vector& rhs) const;
    /// Basis of { x : A x = 0 }.
    std::vector<F2Vector> null_space() const;

    friend bool operator==(const F2Matrix&, const F2Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::uint8_t> data_;
};

F2Vector exponent_vector_mod2(const Word& w, const Presentation& p);
/// Rows are relators, columns generators.
F2Matrix relator_matrix_mod2(const Presentation& p);
/// True iff w maps to zero in H_1(G; Z/2), i.e. lies in the subgroup generated by squares.
bool in_gamma_squared(const Word& w, const Presentation& p);

}  // namespace charvar
