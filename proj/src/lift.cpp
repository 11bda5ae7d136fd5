#include "charvar/lift.hpp"

#include <string>

#include "charvar/errors.hpp"

namespace charvar {

namespace {

constexpr double kSignTol = 1e-8;
constexpr std::size_t kMaxLiftRank = 12;

}  // namespace

Representation apply_sign_flips(const Representation& rho, const F2Vector& flips, Flavor flavor) {
    std::vector<Mat2> images = rho.images();
    for (std::size_t i = 0; i < images.size(); ++i)
        if (flips[i] & 1) images[i] = -images[i];
    return {rho.presentation(), std::move(images), flavor};
}

LiftReport lift_obstruction(const Representation& rho) {
    const Representation psl = rho.with_flavor(Flavor::PSL2);
    const auto signs = validate(psl, kSignTol);
    const auto& pres = psl.presentation();

    LiftReport report;
    report.system = relator_matrix_mod2(pres);
    report.rhs.assign(signs.size(), 0);
    for (std::size_t j = 0; j < signs.size(); ++j) {
        if (signs[j] == RelatorSign::Fail)
            throw InvalidRepresentation("relator " + std::to_string(j) + " (" +
                                        format_word(pres.relators[j], pres.names) + ") is not +/-Id");
        report.relator_signs.push_back(signs[j] == RelatorSign::Plus ? 1 : -1);
        report.rhs[j] = signs[j] == RelatorSign::Minus ? 1 : 0;
    }
    report.solution = report.system.solve(report.rhs);
    report.liftable = report.solution.has_value();
    report.h1_basis = report.system.null_space();
    if (report.liftable) {
        report.lift_class_count = report.h1_basis.size() < 64 ? 1ull << report.h1_basis.size() : 0;
        report.lift = apply_sign_flips(psl, *report.solution, Flavor::SL2);
    }
    return report;
}

std::vector<Representation> enumerate_lifts(const Representation& rho) {
    const LiftReport report = lift_obstruction(rho);
    if (!report.liftable) throw PreconditionError("enumerate_lifts: representation does not lift to SL(2,C)");
    const std::size_t dim = report.h1_basis.size();
    if (dim > kMaxLiftRank)
        throw PreconditionError("enumerate_lifts: 2^" + std::to_string(dim) + " lifts exceeds the enumeration bound");

    std::vector<Representation> lifts;
    for (unsigned long long mask = 0; mask < (1ull << dim); ++mask) {
        F2Vector x = *report.solution;
        for (std::size_t k = 0; k < dim; ++k)
            if ((mask >> k) & 1ull)
                for (std::size_t i = 0; i < x.size(); ++i) x[i] ^= report.h1_basis[k][i];
        lifts.push_back(apply_sign_flips(rho, x, Flavor::SL2));
    }
    return lifts;
}

bool brute_force_lift_check(const Representation& rho) {
    const auto s = static_cast<std::size_t>(rho.rank());
    if (s > kMaxLiftRank) throw PreconditionError("brute_force_lift_check: rank above 12");
    for (unsigned mask = 0; mask < (1u << s); ++mask) {
        F2Vector flips(s, 0);
        for (std::size_t i = 0; i < s; ++i) flips[i] = static_cast<std::uint8_t>((mask >> i) & 1u);
        const Representation candidate = apply_sign_flips(rho, flips, Flavor::SL2);
        if (is_valid(candidate, kSignTol)) return true;
    }
    return false;
}

}  // namespace charvar
