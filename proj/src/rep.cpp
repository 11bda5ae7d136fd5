#include "charvar/rep.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "charvar/classify.hpp"
#include "charvar/errors.hpp"
#include "charvar/linalg.hpp"

namespace charvar {

Representation::Representation(Presentation presentation, std::vector<Mat2> images, Flavor flavor)
    : presentation_(std::move(presentation)), images_(std::move(images)), flavor_(flavor) {
    if (static_cast<int>(images_.size()) != presentation_.rank)
        throw InvalidRepresentation("expected " + std::to_string(presentation_.rank) + " generator images, got " +
                                    std::to_string(images_.size()));
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (!images_[i].is_finite()) throw InvalidRepresentation("non-finite entry in image " + std::to_string(i));
        if (!has_unit_det(images_[i]))
            throw InvalidRepresentation("image " + std::to_string(i) + " does not have determinant 1");
    }
}

Mat2 evaluate_lift(const Representation& rho, const Word& w) {
    Mat2 out = Mat2::identity();
    for (const auto& l : w.letters()) {
        const Mat2& g = rho.image(l.gen);
        out = out * (l.exp > 0 ? g : g.inverse());
    }
    return out;
}

std::vector<RelatorSign> validate(const Representation& rho, double tol) {
    std::vector<RelatorSign> signs;
    const Mat2 id = Mat2::identity();
    for (const auto& r : rho.presentation().relators) {
        const Mat2 v = evaluate_lift(rho, r);
        const double scale = std::max(1.0, v.norm_inf());
        if ((v - id).norm_inf() <= tol * scale)
            signs.push_back(RelatorSign::Plus);
        else if ((v + id).norm_inf() <= tol * scale && rho.flavor() == Flavor::PSL2)
            signs.push_back(RelatorSign::Minus);
        else
            signs.push_back(RelatorSign::Fail);
    }
    return signs;
}

bool is_valid(const Representation& rho, double tol) {
    const auto s = validate(rho, tol);
    return std::none_of(s.begin(), s.end(), [](RelatorSign x) { return x == RelatorSign::Fail; });
}

void require_valid(const Representation& rho) {
    const auto s = validate(rho);
    for (std::size_t j = 0; j < s.size(); ++j)
        if (s[j] == RelatorSign::Fail)
            throw InvalidRepresentation("relator " + std::to_string(j) + " (" +
                                        format_word(rho.presentation().relators[j], rho.presentation().names) +
                                        ") does not evaluate to " +
                                        (rho.flavor() == Flavor::SL2 ? "+Id" : "+/-Id"));
}

Representation conjugate(const Representation& rho, const Mat2& m) {
    const Mat2 minv = m.inverse();
    std::vector<Mat2> images;
    for (const auto& g : rho.images()) images.push_back(m * g * minv);
    return {rho.presentation(), std::move(images), rho.flavor()};
}

Complex tau(const Representation& rho, const Word& w) { return evaluate(rho, w).trace_squared(); }

std::vector<Word> coordinate_family(int rank, int depth) {
    std::vector<Word> family;
    const int max_len = std::min(depth, rank);
    // Subsets of generators in ascending order, grouped by size then lexicographically.
    for (int len = 1; len <= max_len; ++len) {
        std::vector<int> idx(static_cast<std::size_t>(len));
        for (int k = 0; k < len; ++k) idx[static_cast<std::size_t>(k)] = k;
        while (true) {
            std::vector<Letter> letters;
            for (int g : idx) letters.push_back({g, 1});
            family.emplace_back(std::move(letters));
            int k = len - 1;
            while (k >= 0 && idx[static_cast<std::size_t>(k)] == rank - len + k) --k;
            if (k < 0) break;
            ++idx[static_cast<std::size_t>(k)];
            for (int j = k + 1; j < len; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j) family.push_back(commutator(Word::generator(i), Word::generator(j)));
    return family;
}

CharacterVector character_coords(const Representation& rho, int depth) {
    CharacterVector cv;
    cv.words = coordinate_family(rho.rank(), depth);
    for (const auto& w : cv.words) cv.values.push_back(tau(rho, w));
    return cv;
}

double conjugation_residual(const Mat2& m, const Representation& r1, const Representation& r2) {
    const Mat2 minv = m.inverse();
    double worst = 0.0;
    for (int i = 0; i < r1.rank(); ++i) {
        const Mat2 lhs = m * r1.image(i) * minv;
        const Mat2& rhs = r2.image(i);
        worst = std::max(worst, std::min((lhs - rhs).norm_inf(), (lhs + rhs).norm_inf()));
    }
    return worst;
}

std::optional<PSL2Elt> find_conjugator(const Representation& r1, const Representation& r2) {
    if (r1.presentation() != r2.presentation())
        throw PreconditionError("find_conjugator: representations of different presentations");
    if (is_reducible(r1) || is_reducible(r2))
        throw PreconditionError("find_conjugator: conjugacy is only decided for irreducible representations");

    const int s = r1.rank();
    constexpr double kResidualTol = 1e-7;
    std::optional<PSL2Elt> best;
    double best_residual = kResidualTol;
    for (unsigned mask = 0; mask < (1u << s); ++mask) {
        // M A_i - eps_i B_i M = 0, unknown M flattened row-major (m00, m01, m10, m11).
        linalg::MatrixXc sys(4 * s, 4);
        for (int i = 0; i < s; ++i) {
            const Mat2& a = r1.image(i);
            const Mat2 b = ((mask >> i) & 1u) ? -r2.image(i) : r2.image(i);
            const auto r = 4 * i;
            // (M A)_{pq} = sum_k M_{pk} A_{kq};  (B M)_{pq} = sum_k B_{pk} M_{kq}
            const Complex A[2][2] = {{a.a, a.b}, {a.c, a.d}};
            const Complex B[2][2] = {{b.a, b.b}, {b.c, b.d}};
            for (int p = 0; p < 2; ++p)
                for (int q = 0; q < 2; ++q) {
                    const auto row = r + 2 * p + q;
                    sys.row(row).setZero();
                    for (int k = 0; k < 2; ++k) {
                        sys(row, 2 * p + k) += A[k][q];
                        sys(row, 2 * k + q) -= B[p][k];
                    }
                }
        }
        const auto ns = linalg::null_space(sys);
        if (ns.basis.cols() == 0) continue;
        const auto v = ns.basis.col(0);
        Mat2 m{v(0), v(1), v(2), v(3)};
        const Complex det = m.det();
        if (std::abs(det) <= 1e-8 * m.norm_inf() * m.norm_inf()) continue;
        m = (1.0 / std::sqrt(det)) * m;
        const double res = conjugation_residual(m, r1, r2);
        if (res <= best_residual) {
            best_residual = res;
            best = PSL2Elt(m);
        }
    }
    return best;
}

}  // namespace charvar
