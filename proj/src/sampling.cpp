#include "charvar/sampling.hpp"

#include <cmath>
#include <numbers>

#include "charvar/classify.hpp"
#include "charvar/errors.hpp"

namespace charvar {

Complex Sampler::unit_complex() { return std::polar(1.0, uniform(-std::numbers::pi, std::numbers::pi)); }

Mat2 Sampler::random_sl2(double max_cond) {
    while (true) {
        Mat2 m{complex_gaussian(), complex_gaussian(), complex_gaussian(), complex_gaussian()};
        const Complex det = m.det();
        if (std::abs(det) < 1e-12) continue;
        m.a /= det;
        m.c /= det;
        // For det = 1 the singular values satisfy s1 s2 = 1, so cond = s1^2 and
        // s1^2 + s2^2 = |M|_F^2.
        const double f2 = std::norm(m.a) + std::norm(m.b) + std::norm(m.c) + std::norm(m.d);
        const double s1sq = 0.5 * (f2 + std::sqrt(std::max(0.0, f2 * f2 - 4.0)));
        if (s1sq <= max_cond) return m;
    }
}

Mat2 Sampler::random_sl2_bounded(double max_entry) {
    while (true) {
        const Mat2 m = random_sl2();
        if (m.norm_inf() <= max_entry) return m;
    }
}

Word Sampler::random_word(int rank, int length) {
    std::vector<Letter> letters;
    while (static_cast<int>(letters.size()) < length) {
        const Letter l{uniform_int(0, rank - 1), uniform_int(0, 1) == 0 ? 1 : -1};
        if (!letters.empty() && letters.back().cancels(l)) continue;
        letters.push_back(l);
    }
    return Word(std::move(letters));
}

Representation Sampler::random_irreducible(int rank) {
    if (rank < 2) throw PreconditionError("random_irreducible: a cyclic image is always reducible; need rank >= 2");
    while (true) {
        std::vector<Mat2> images;
        for (int i = 0; i < rank; ++i) images.push_back(random_sl2());
        Representation rho(Presentation::free(rank), std::move(images));
        if (!is_reducible(rho) && !is_ad_reducible(rho)) return rho;
    }
}

Representation Sampler::random_diagonal(int rank) {
    std::vector<Mat2> images;
    for (int i = 0; i < rank; ++i) {
        Complex u;
        do {
            u = std::exp(0.7 * complex_gaussian());
        } while (i == 0 && std::abs(u * u - 1.0) < 0.1);
        images.push_back(Mat2::diag(u, 1.0 / u));
    }
    return {Presentation::free(rank), std::move(images)};
}

Representation Sampler::random_dihedral(int rank) {
    if (rank < 2) throw PreconditionError("random_dihedral: need rank >= 2");
    while (true) {
        std::vector<Mat2> images;
        for (int i = 0; i < rank; ++i) {
            const bool anti = i == 0 || (i > 1 && uniform_int(0, 1) == 1);
            const Complex u = std::exp(0.7 * complex_gaussian());
            images.push_back(anti ? Mat2{0.0, u, -1.0 / u, 0.0} : Mat2::diag(u, 1.0 / u));
        }
        Representation rho(Presentation::free(rank), std::move(images));
        if (!is_reducible(rho) && is_ad_reducible(rho) && !has_klein4_image(rho)) return rho;
    }
}

Representation Sampler::random_conjugate(const Representation& rho) { return conjugate(rho, random_sl2(1e3)); }

Representation Sampler::random_finite_presentation_rep(int max_rank, int max_relators) {
    using std::numbers::pi;
    const int rank = uniform_int(1, max_rank);
    const int m = uniform_int(2, 6);
    const Complex zeta = std::polar(1.0, pi / m);
    // Binary dihedral group of order 4m: diag(z^k, z^-k) and [[0, z^k], [-z^-k, 0]].
    auto element = [&](int k, bool anti) {
        const Complex zk = std::pow(zeta, k);
        return anti ? Mat2{0.0, zk, -1.0 / zk, 0.0} : Mat2::diag(zk, 1.0 / zk);
    };
    const bool cyclic_only = uniform_int(0, 3) == 0;
    std::vector<Mat2> images;
    for (int i = 0; i < rank; ++i)
        images.push_back(element(uniform_int(0, 2 * m - 1), !cyclic_only && uniform_int(0, 1) == 1));

    Presentation pres = Presentation::free(rank);
    const int want = uniform_int(0, max_relators);
    const Representation free_rep(pres, images);
    for (int attempt = 0; attempt < 500 && static_cast<int>(pres.relators.size()) < want; ++attempt) {
        const Word w = random_word(rank, uniform_int(1, 8));
        if (psl2_equal(evaluate_lift(free_rep, w), Mat2::identity(), 1e-10)) pres.relators.push_back(w);
    }
    const Mat2 conj = random_sl2(1e2);
    const Mat2 conj_inv = conj.inverse();
    for (auto& g : images) {
        g = conj * g * conj_inv;
        if (uniform_int(0, 1) == 1) g = -g;
    }
    return {std::move(pres), std::move(images)};
}

std::vector<Mat2> klein_pair() {
    const Complex i(0.0, 1.0);
    return {Mat2::diag(i, -i), Mat2{0.0, 1.0, -1.0, 0.0}};
}

}  // namespace charvar
