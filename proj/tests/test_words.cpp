#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "charvar/errors.hpp"
#include "charvar/words.hpp"

using namespace charvar;

namespace {

const std::vector<std::string> kNames{"a", "b", "c"};

Word w(const std::string& s) { return parse_word(s, kNames); }

// Stack-free reference: repeatedly delete the first cancelling pair.
std::vector<Letter> naive_reduce(std::vector<Letter> v) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < v.size(); ++i) {
            if (v[i].cancels(v[i + 1])) {
                v.erase(v.begin() + static_cast<long>(i), v.begin() + static_cast<long>(i) + 2);
                changed = true;
                break;
            }
        }
    }
    return v;
}

std::vector<Letter> random_letters(std::mt19937_64& rng, int rank, int len) {
    std::uniform_int_distribution<int> gen(0, rank - 1), sign(0, 1);
    std::vector<Letter> out;
    for (int i = 0; i < len; ++i) out.push_back({gen(rng), sign(rng) ? 1 : -1});
    return out;
}

}  // namespace

TEST_CASE("free reduction") {
    CHECK(Word({{0, 1}, {0, -1}}).empty());
    CHECK(Word({{0, 1}, {1, 1}, {1, -1}, {0, -1}, {2, 1}}) == Word::generator(2));
    CHECK(Word({{0, 1}, {0, 1}}).size() == 2);
    CHECK(w("a*b*b^-1*a^-1").empty());
}

TEST_CASE("free reduction agrees with naive deletion") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 2000; ++t) {
        auto letters = random_letters(rng, 3, static_cast<int>(rng() % 20));
        CHECK(Word(letters).letters() == naive_reduce(letters));
    }
}

TEST_CASE("group laws on words") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 300; ++t) {
        Word u(random_letters(rng, 3, 8)), v(random_letters(rng, 3, 8)), x(random_letters(rng, 3, 8));
        CHECK((u * v) * x == u * (v * x));
        CHECK((u * u.inverse()).empty());
        CHECK((u * v).inverse() == v.inverse() * u.inverse());
        CHECK(u.power(3) == u * u * u);
        CHECK(u.power(-2) == u.inverse() * u.inverse());
        CHECK(u.power(0).empty());
    }
}

TEST_CASE("parse and format") {
    CHECK(format_word(w("a*b*b*b"), kNames) == "a*b^3");
    CHECK(format_word(w("a^-1"), kNames) == "a^-1");
    CHECK(format_word(Word(), kNames) == "1");
    CHECK(w("1").empty());
    CHECK(w("").empty());
    CHECK(w("ab") == w("a*b"));
    CHECK(w("a b") == w("a*b"));
    CHECK(w("(ab)^2") == w("a*b*a*b"));
    CHECK(w("(ab)^-1") == w("b^-1*a^-1"));
    CHECK(w("[a,b]") == commutator(Word::generator(0), Word::generator(1)));
    CHECK(w("[a,b]") == w("a*b*a^-1*b^-1"));
    CHECK(w("a^0*b").size() == 1);

    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; ++t) {
        Word u(random_letters(rng, 3, 12));
        CHECK(w(format_word(u, kNames)) == u);
    }
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(w("d"), ParseError);
    CHECK_THROWS_AS(w("a^"), ParseError);
    CHECK_THROWS_AS(w("(a"), ParseError);
    CHECK_THROWS_AS(w("[a b]"), ParseError);
    CHECK_THROWS_AS(w("a*"), ParseError);
    CHECK_THROWS_AS(w("a^x"), ParseError);
}

TEST_CASE("multi-letter generator names") {
    const std::vector<std::string> names{"alpha", "beta", "mu"};
    const Word u = parse_word("mu*alpha*mu^-1", names);
    REQUIRE(u.size() == 3);
    CHECK(u[0] == Letter{2, 1});
    CHECK(format_word(u, names) == "mu*alpha*mu^-1");
}

TEST_CASE("letter order and helpers") {
    CHECK(Letter{0, 1} < Letter{0, -1});
    CHECK(Letter{0, -1} < Letter{1, 1});
    CHECK(w("a*b^-2*c").exponent_sum(1) == -2);
    CHECK(w("a*c").min_rank() == 3);
    CHECK(Word().min_rank() == 0);
    CHECK(cyclic_reduction(w("a*b*c*a^-1")) == w("b*c"));
    CHECK(cyclic_reduction(w("a*b*a^-1*b^-1")) == w("a*b*a^-1*b^-1"));
}

TEST_CASE("presentation text format") {
    const auto p = parse_presentation("# torus\ngens: x y\nrel: [x,y]\n");
    CHECK(p.rank == 2);
    CHECK(p.names == std::vector<std::string>{"x", "y"});
    REQUIRE(p.relators.size() == 1);
    CHECK(parse_presentation(format_presentation(p)) == p);
    CHECK(Presentation::free(3).names == std::vector<std::string>{"a", "b", "c"});
    CHECK(Presentation::free(2).is_free());

    CHECK_THROWS_AS(parse_presentation("rel: x\ngens: x"), ParseError);
    CHECK_THROWS_AS(parse_presentation("gens: x x"), ParseError);
    CHECK_THROWS_AS(parse_presentation("gens: x\nrel: x*x^-1"), ParseError);
    CHECK_THROWS_AS(parse_presentation("gens: x\nrel: y"), ParseError);
    CHECK_THROWS_AS(parse_presentation("rel x"), ParseError);
    CHECK_THROWS_AS(parse_presentation(""), ParseError);
}

TEST_CASE("F2 linear algebra") {
    F2Matrix m(3, 3);
    m(0, 0) = m(0, 1) = 1;
    m(1, 1) = m(1, 2) = 1;
    m(2, 0) = m(2, 2) = 1;  // row 2 = row 0 + row 1
    CHECK(m.rank() == 2);
    CHECK(m.null_space().size() == 1);
    CHECK(m.multiply(m.null_space()[0]) == F2Vector{0, 0, 0});
    auto x = m.solve({1, 1, 0});
    REQUIRE(x);
    CHECK(m.multiply(*x) == F2Vector{1, 1, 0});
    CHECK_FALSE(m.solve({1, 0, 0}));

    std::mt19937_64 rng(9);
    for (int t = 0; t < 200; ++t) {
        const std::size_t r = rng() % 5 + 1, c = rng() % 5 + 1;
        F2Matrix a(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) a(i, j) = rng() & 1;
        const auto ker = a.null_space();
        CHECK(a.rank() + ker.size() == c);
        for (const auto& v : ker) CHECK(a.multiply(v) == F2Vector(r, 0));
    }
}

TEST_CASE("membership in the subgroup generated by squares") {
    const auto f2 = Presentation::free(2);
    CHECK(in_gamma_squared(w("a*a"), f2));
    CHECK(in_gamma_squared(w("[a,b]"), f2));
    CHECK(in_gamma_squared(w("a*b*a*b"), f2));
    CHECK_FALSE(in_gamma_squared(w("a*b"), f2));
    CHECK_FALSE(in_gamma_squared(w("a"), f2));

    // In <x | x^3> the generator is a cube, hence x = (x^2)^2 is a square.
    const auto z3 = parse_presentation("gens: x\nrel: x^3");
    CHECK(in_gamma_squared(Word::generator(0), z3));
    const auto z4 = parse_presentation("gens: x\nrel: x^4");
    CHECK_FALSE(in_gamma_squared(Word::generator(0), z4));

    CHECK(relator_matrix_mod2(parse_presentation("gens: x y\nrel: x^2*y\nrel: [x,y]")).row(0) == F2Vector{0, 1});
}

TEST_CASE("squares subgroup is closed under products") {
    std::mt19937_64 rng(21);
    const auto p = parse_presentation("gens: a b c\nrel: a*b^2*c\n");
    for (int t = 0; t < 300; ++t) {
        Word u(random_letters(rng, 3, 7)), v(random_letters(rng, 3, 7));
        const bool gu = in_gamma_squared(u, p), gv = in_gamma_squared(v, p);
        if (gu && gv) CHECK(in_gamma_squared(u * v, p));
        if (gu != gv) CHECK_FALSE(in_gamma_squared(u * v, p));
        CHECK(in_gamma_squared(u * v * u.inverse() * v.inverse(), p));
        CHECK(in_gamma_squared(u * u, p));
    }
}
