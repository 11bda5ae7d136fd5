#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <regex>
#include <sstream>

#include "charvar/classify.hpp"
#include "charvar/cohomology.hpp"
#include "charvar/errors.hpp"
#include "charvar/family.hpp"
#include "charvar/json_io.hpp"
#include "charvar/lift.hpp"
#include "charvar/sampling.hpp"
#include "charvar/tracepoly.hpp"

namespace charvar::cli {

namespace {

using io::json;

constexpr std::uint64_t kDefaultSeed = 0x5eed2c0ffee1ull;

enum class Format { Auto, Text, Json, Csv };

struct Config {
    std::optional<double> tol;
    std::optional<double> det_tol;
    std::optional<double> rank_tol;
    std::optional<std::uint64_t> seed;
    std::string format = "auto";

    Format resolved(Format fallback) const {
        if (format == "text") return Format::Text;
        if (format == "json") return Format::Json;
        if (format == "csv") return Format::Csv;
        return fallback;
    }

    std::uint64_t effective_seed() const {
        if (seed) return *seed;
        if (const char* env = std::getenv("CHARVAR_SEED")) {
            try {
                return std::stoull(env);
            } catch (const std::exception&) {
                throw ParseError(std::string("CHARVAR_SEED is not an unsigned integer: ") + env);
            }
        }
        return kDefaultSeed;
    }
};

std::string fmt_real(double x) {
    if (std::abs(x) < 5e-13) x = 0.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string fmt_complex(Complex z) {
    const double scale = std::max(1.0, std::abs(z));
    if (std::abs(z.imag()) <= 1e-12 * scale) return fmt_real(z.real());
    if (std::abs(z.real()) <= 1e-12 * scale) return fmt_real(z.imag()) + "i";
    const std::string im = fmt_real(z.imag());
    return fmt_real(z.real()) + (im.front() == '-' ? "" : "+") + im + "i";
}

/// "re,im", "5", "1+i", "-2.5i", "0.5-3i"
Complex parse_complex(const std::string& text) {
    if (auto comma = text.find(','); comma != std::string::npos)
        return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
    static const std::regex re(R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?(?:([+-]?)((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?i)?\s*$)");
    std::smatch m;
    if (text.empty() || !std::regex_match(text, m, re)) throw ParseError("cannot parse complex number \"" + text + "\"");
    double real = m[1].matched ? std::stod(m[1].str()) : 0.0;
    double imag = 0.0;
    if (text.find('i') != std::string::npos) {
        imag = m[3].matched ? std::stod(m[3].str()) : 1.0;
        if (m[2].str() == "-") imag = -imag;
        // "-2i" lands entirely in the imaginary group only when no real part precedes it.
        if (!m[3].matched && !m[2].matched && m[1].matched) {
            imag = real;
            real = 0.0;
        }
    }
    return {real, imag};
}

std::string f2_row(const F2Vector& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(static_cast<int>(v[i]));
    return s + "]";
}

Representation load_valid(const std::string& path) {
    Representation rho = io::load_representation(path);
    require_valid(rho);
    return rho;
}

// --- subcommands -----------------------------------------------------------

int cmd_classify(const Config& cfg, const std::string& path, std::ostream& out) {
    const auto report = classify(load_valid(path));
    if (cfg.resolved(Format::Json) == Format::Text) {
        out << "reducible: " << std::boolalpha << report.reducible << "\n"
            << "ad_reducible: " << report.ad_reducible << "\n"
            << "is_trivial_character: " << report.is_trivial_character << "\n"
            << "klein4_image: " << report.klein4_image << "\n"
            << "stabilizer_type: " << to_string(report.stabilizer_type) << "\n"
            << "singular_verdict: " << to_string(report.singular_verdict) << "\n";
    } else {
        out << io::report_to_json(report).dump(2) << "\n";
    }
    return kOk;
}

int cmd_lift(const Config& cfg, const std::string& path, std::ostream& out) {
    const Representation rho = io::load_representation(path);
    const auto report = lift_obstruction(rho);
    if (cfg.resolved(Format::Text) == Format::Json) {
        out << io::report_to_json(report).dump(2) << "\n";
        return kOk;
    }
    const auto& pres = rho.presentation();
    out << "relators: " << pres.relators.size() << "  generators: " << pres.rank << "\n";
    out << "system (relator exponent sums mod 2 | rhs):\n";
    for (std::size_t j = 0; j < report.system.rows(); ++j)
        out << "  " << f2_row(report.system.row(j)) << " | " << static_cast<int>(report.rhs[j]) << "   sign "
            << (report.relator_signs[j] > 0 ? "+1" : "-1") << "   " << format_word(pres.relators[j], pres.names)
            << "\n";
    out << "liftable: " << std::boolalpha << report.liftable << "\n";
    if (report.solution) out << "solution: " << f2_row(*report.solution) << "\n";
    out << "lift_class_count: " << report.lift_class_count << "\n";
    return kOk;
}

std::string rep_class(const Representation& rho) {
    const auto r = classify(rho);
    if (r.is_trivial_character) return "trivial";
    if (!r.ad_reducible) return "irreducible";
    if (r.reducible) return preserves_h0_splitting(rho) ? "diagonal" : "reducible";
    return r.klein4_image ? "klein" : "dihedral";
}

int cmd_cohomology(const Config& cfg, const std::string& path, std::ostream& out) {
    const Representation rho = load_valid(path);
    const auto report = h1_dim(rho);
    switch (cfg.resolved(Format::Json)) {
        case Format::Csv:
            out << cohomology_csv_header() << "\n" << cohomology_csv_row(rho.rank(), rep_class(rho), report) << "\n";
            break;
        case Format::Text:
            out << "dim Z1: " << report.dim_z1 << "\ndim B1: " << report.dim_b1 << "\ndim H1: " << report.dim_h1
                << "\n";
            if (report.block_dims)
                out << "h0 block (z,b,h): " << report.block_dims->h0.z1 << "," << report.block_dims->h0.b1 << ","
                    << report.block_dims->h0.h1 << "\nh+/h- block (z,b,h): " << report.block_dims->hpm.z1 << ","
                    << report.block_dims->hpm.b1 << "," << report.block_dims->hpm.h1 << "\n";
            break;
        default:
            out << io::report_to_json(report).dump(2) << "\n";
    }
    return kOk;
}

int cmd_cohomology_sweep(const Config& cfg, const std::vector<int>& ranks, int samples, std::ostream& out) {
    Sampler sampler(cfg.effective_seed());
    out << cohomology_csv_header() << "\n";
    for (int n : ranks) {
        if (n < 1) throw PreconditionError("cohomology-sweep: ranks must be positive");
        for (int k = 0; k < samples; ++k) {
            out << cohomology_csv_row(n, "irreducible", h1_dim(sampler.random_irreducible(n))) << "\n";
            out << cohomology_csv_row(n, "diagonal", h1_dim(sampler.random_diagonal(n))) << "\n";
            if (n >= 2) out << cohomology_csv_row(n, "dihedral", h1_dim(sampler.random_dihedral(n))) << "\n";
        }
    }
    return kOk;
}

int cmd_family(const Config& cfg, int m1, int m2, const std::vector<std::string>& zs, std::ostream& out) {
    std::vector<Complex> samples;
    for (const auto& z : zs) samples.push_back(parse_complex(z));
    if (samples.empty()) samples = {0.0, Complex(1.0, 1.0), 5.0};
    Census census;
    try {
        census = component_census(m1, m2, samples);
    } catch (const std::invalid_argument& e) {
        throw PreconditionError(e.what());
    }
    switch (cfg.resolved(Format::Text)) {
        case Format::Json: {
            json rows = json::array();
            for (const auto& r : census.rows)
                rows.push_back({{"m1", m1}, {"m2", m2}, {"p1", r.p1}, {"p2", r.p2},
                                {"tau_alpha", io::complex_to_json(r.tau_alpha)},
                                {"tau_beta", io::complex_to_json(r.tau_beta)}, {"liftable", r.liftable}});
            out << json{{"schema", io::kSchemaVersion}, {"rows", rows}, {"components", census.distinct_count}}.dump(2)
                << "\n";
            break;
        }
        case Format::Csv:
            out << "m1,m2,p1,p2,tau_alpha,tau_beta,liftable\n";
            for (const auto& r : census.rows)
                out << m1 << "," << m2 << "," << r.p1 << "," << r.p2 << "," << fmt_complex(r.tau_alpha) << ","
                    << fmt_complex(r.tau_beta) << "," << (r.liftable ? "true" : "false") << "\n";
            break;
        default: {
            char line[160];
            std::snprintf(line, sizeof line, "%4s %4s %4s %4s %22s %22s %9s\n", "m1", "m2", "p1", "p2", "tau_alpha",
                          "tau_beta", "liftable");
            out << line;
            for (const auto& r : census.rows) {
                std::snprintf(line, sizeof line, "%4d %4d %4d %4d %22s %22s %9s\n", m1, m2, r.p1, r.p2,
                              fmt_complex(r.tau_alpha).c_str(), fmt_complex(r.tau_beta).c_str(),
                              r.liftable ? "true" : "false");
                out << line;
            }
            out << "components: " << census.distinct_count << "\n";
        }
    }
    return kOk;
}

int cmd_tracepoly(const Config& cfg, const std::vector<std::string>& texts, std::optional<int> rank, bool squared,
                  std::ostream& out) {
    const auto letters = Presentation::default_names(26);
    std::vector<Word> words;
    int needed = 1;
    for (const auto& t : texts) {
        words.push_back(parse_word(t, letters));
        needed = std::max(needed, words.back().min_rank());
    }
    const int n = rank.value_or(needed);
    if (n < needed) throw PreconditionError("word uses generators beyond --rank " + std::to_string(n));
    const auto names = Presentation::default_names(n);
    TracePoly p;
    if (words.size() > 1)
        p = sigma_poly(words, n);
    else
        p = squared ? tau_poly(words.front(), n) : reduce_trace(words.front(), n);
    if (cfg.resolved(Format::Text) == Format::Json)
        out << json{{"schema", io::kSchemaVersion}, {"rank", n}, {"polynomial", p.to_string(names)}}.dump(2) << "\n";
    else
        out << p.to_string(names) << "\n";
    return kOk;
}

int cmd_xf2(const Config& cfg, const std::string& path, std::ostream& out) {
    const auto c = xf2_coords(load_valid(path));
    if (cfg.resolved(Format::Json) == Format::Text) {
        const auto j = j_coords_from_xf2(c);
        out << "X = " << fmt_complex(c.x) << "\nY = " << fmt_complex(c.y) << "\nZ = " << fmt_complex(c.z)
            << "\nW = " << fmt_complex(c.w) << "\n|W^2 - XYZ| (relative) = " << fmt_real(c.relation_residual())
            << "\nJ_ab^-1 = XY + Z - 2W = " << fmt_complex(j[3]) << "\n";
    } else {
        out << io::report_to_json(c).dump(2) << "\n";
    }
    return kOk;
}

int cmd_verify_identities(const Config& cfg, int samples, std::ostream& out) {
    bool ok = true;
    auto report = [&](const std::string& name, bool pass, const std::string& detail) {
        ok = ok && pass;
        out << (pass ? "PASS " : "FAIL ") << name << (detail.empty() ? "" : "  " + detail) << "\n";
    };
    report("sigma_{a,b,ab} = (tau_a tau_b + tau_ab - tau_{ab^-1})/2 [exact]", verify_eq3(), "");
    report("sigma_[a,b] = tau_a + tau_b + tau_ab/2 + tau_{ab^-1}/2 - tau_a tau_b/2 - 2 [exact]", verify_eq4(),
           "");

    Sampler sampler(cfg.effective_seed());
    double adj = 0.0, fund = 0.0;
    for (int k = 0; k < samples; ++k) {
        const Mat2 x = sampler.random_sl2_bounded(2.0);
        const Complex t = x.trace();
        const Complex ad = adjoint_so3(x).trace();
        adj = std::max({adj, std::abs(ad - (t * t - 1.0)), std::abs(ad - ((x * x).trace() + 1.0))});
        fund = std::max(fund, verify_fundamental_identity(x, sampler.random_sl2_bounded(2.0)));
    }
    auto sci = [](double x) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3g", x);
        return std::string(buf);
    };
    report("tr Ad(A) = tr^2 A - 1 = tr A^2 + 1", adj <= 1e-8, "max residual " + sci(adj));
    report("tr AB + tr A^-1 B = tr A tr B", fund <= 1e-8, "max residual " + sci(fund));
    return ok ? kOk : kCheckFailed;
}

int cmd_sample(const Config& cfg, const std::string& kind, int rank, std::ostream& out) {
    Sampler sampler(cfg.effective_seed());
    std::optional<Representation> rho;
    if (kind == "irreducible") rho = sampler.random_irreducible(rank);
    else if (kind == "diagonal") rho = sampler.random_diagonal(rank);
    else if (kind == "dihedral") rho = sampler.random_dihedral(std::max(rank, 2));
    else if (kind == "klein") rho = Representation(parse_presentation("gens: x y\nrel: [x,y]\n"), klein_pair());
    else if (kind == "finite") rho = sampler.random_finite_presentation_rep(std::max(rank, 1), 3);
    else throw PreconditionError("unknown sample kind \"" + kind + "\"");
    out << io::representation_to_json(*rho).dump(2) << "\n";
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Character varieties in PSL(2,C) and SL(2,C): traces, lifting, cohomology", "charvar"};
    app.require_subcommand(1);
    app.fallthrough();

    Config cfg;
    app.add_option("--tol", cfg.tol, "PSL2 equality tolerance (relative)")->check(CLI::PositiveNumber);
    app.add_option("--det-tol", cfg.det_tol, "determinant tolerance")->check(CLI::PositiveNumber);
    app.add_option("--rank-tol", cfg.rank_tol, "relative singular-value threshold")->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "random seed (default: $CHARVAR_SEED or built-in)");
    app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"auto", "text", "json", "csv"}));

    std::string rep_path;
    std::function<int()> action;

    auto* classify_cmd = app.add_subcommand("classify", "reducibility, Ad-reducibility, stabilizer, singular locus");
    classify_cmd->add_option("rep", rep_path, "representation JSON file")->required();
    classify_cmd->callback([&] { action = [&] { return cmd_classify(cfg, rep_path, out); }; });

    auto* lift_cmd = app.add_subcommand("lift", "SL2 lifting obstruction as a linear system over Z/2");
    lift_cmd->add_option("rep", rep_path, "representation JSON file")->required();
    lift_cmd->callback([&] { action = [&] { return cmd_lift(cfg, rep_path, out); }; });

    auto* coh_cmd = app.add_subcommand("cohomology", "dimensions of Z1, B1, H1 with adjoint coefficients");
    coh_cmd->add_option("rep", rep_path, "representation JSON file")->required();
    coh_cmd->callback([&] { action = [&] { return cmd_cohomology(cfg, rep_path, out); }; });

    std::vector<int> sweep_ranks{2, 3, 4, 5};
    int sweep_samples = 10;
    auto* sweep_cmd = app.add_subcommand("cohomology-sweep", "CSV of H1 dimensions over random free-group samples");
    sweep_cmd->add_option("--ranks", sweep_ranks, "free-group ranks")->delimiter(',');
    sweep_cmd->add_option("--samples", sweep_samples, "samples per class and rank")->check(CLI::PositiveNumber);
    sweep_cmd->callback([&] { action = [&] { return cmd_cohomology_sweep(cfg, sweep_ranks, sweep_samples, out); }; });

    int m1 = 0, m2 = 0;
    std::vector<std::string> zs;
    auto* family_cmd = app.add_subcommand("family", "census of the non-lifting torus-bundle families");
    family_cmd->add_option("m1", m1)->required();
    family_cmd->add_option("m2", m2)->required();
    family_cmd->add_option("--z", zs, "sample values of tr(AB), e.g. 5, 1+i, 0.5,-2");
    family_cmd->callback([&] { action = [&] { return cmd_family(cfg, m1, m2, zs, out); }; });

    std::vector<std::string> words;
    std::optional<int> tp_rank;
    bool squared = false;
    auto* tp_cmd = app.add_subcommand("tracepoly", "trace of a word as a polynomial in square-free trace coordinates");
    tp_cmd->add_option("words", words, "one word for tr(w); several for the product of their traces")
        ->required();
    tp_cmd->add_option("--rank", tp_rank, "free-group rank (default: generators used)")->check(CLI::PositiveNumber);
    tp_cmd->add_flag("--tau", squared, "print tr^2 instead of tr");
    tp_cmd->callback([&] { action = [&] { return cmd_tracepoly(cfg, words, tp_rank, squared, out); }; });

    auto* xf2_cmd = app.add_subcommand("xf2", "(X, Y, Z, W) coordinates of a representation of F2");
    xf2_cmd->add_option("rep", rep_path, "representation JSON file")->required();
    xf2_cmd->callback([&] { action = [&] { return cmd_xf2(cfg, rep_path, out); }; });

    int vi_samples = 1000;
    auto* vi_cmd = app.add_subcommand("verify-identities", "exact and numeric checks of the trace identities");
    vi_cmd->add_option("--samples", vi_samples, "random samples per numeric sweep")->check(CLI::PositiveNumber);
    vi_cmd->callback([&] { action = [&] { return cmd_verify_identities(cfg, vi_samples, out); }; });

    std::string kind;
    int sample_rank = 2;
    auto* sample_cmd = app.add_subcommand("sample", "write a seeded random representation document");
    sample_cmd->add_option("kind", kind, "irreducible | diagonal | dihedral | klein | finite")->required();
    sample_cmd->add_option("--rank", sample_rank)->check(CLI::PositiveNumber);
    sample_cmd->callback([&] { action = [&] { return cmd_sample(cfg, kind, sample_rank, out); }; });

    const Tolerances saved = tolerances();
    int code = kOk;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        // CLI11 reads "[a,b]" as a list literal; a leading space keeps a commutator word intact.
        for (auto& a : reversed)
            if (!a.empty() && a.front() == '[') a.insert(a.begin(), ' ');
        app.parse(reversed);
        if (cfg.tol) tolerances().eq = *cfg.tol;
        if (cfg.det_tol) tolerances().det = *cfg.det_tol;
        if (cfg.rank_tol) tolerances().rank = *cfg.rank_tol;
        code = action ? action() : kOk;
    } catch (const CLI::ParseError& e) {
        code = app.exit(e, out, err);
        if (code != 0) code = kParseError;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        code = kParseError;
    } catch (const InvalidRepresentation& e) {
        err << "invalid representation: " << e.what() << "\n";
        code = kInvalidRepresentation;
    } catch (const PreconditionError& e) {
        err << "precondition violated: " << e.what() << "\n";
        code = kPrecondition;
    }
    tolerances() = saved;
    return code;
}

}  // namespace charvar::cli
