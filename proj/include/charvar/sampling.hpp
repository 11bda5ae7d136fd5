#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "charvar/mat2.hpp"
#include "charvar/rep.hpp"
#include "charvar/words.hpp"

namespace charvar {

/// Seeded source of random matrices, words and representations. Every
/// random choice in the toolkit goes through one of these.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    double gaussian() { return normal_(rng_); }
    Complex complex_gaussian() { return {gaussian(), gaussian()}; }
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    /// Unit-modulus complex number with a uniform argument.
    Complex unit_complex();

    /// Gaussian entries, first column rescaled so det = 1; rejects condition
    /// number above `max_cond`.
    Mat2 random_sl2(double max_cond = 1e6);
    /// random_sl2 restricted to entries of modulus <= max_entry.
    Mat2 random_sl2_bounded(double max_entry);

    /// Freely reduced word of exactly `length` letters over `rank` generators.
    Word random_word(int rank, int length);

    /// Gaussian images for F_n, resampled until irreducible and Ad-irreducible.
    /// Needs rank >= 2 (PreconditionError).
    Representation random_irreducible(int rank);
    /// Diagonal images diag(u, 1/u), at least one far from +/-Id.
    Representation random_diagonal(int rank);
    /// Diagonal and anti-diagonal images, irreducible but Ad-reducible (rank >= 2).
    Representation random_dihedral(int rank);
    /// M rho M^-1 for a random M.
    Representation random_conjugate(const Representation& rho);

    /// Images drawn from a finite binary dihedral group conjugated by a random
    /// matrix, and relators chosen among random words that map to +/-Id; so
    /// the result is always a valid PSL2 representation.
    Representation random_finite_presentation_rep(int max_rank, int max_relators);

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

/// Klein four-group pair x -> diag(i, -i), y -> [[0, 1], [-1, 0]].
std::vector<Mat2> klein_pair();

}  // namespace charvar
