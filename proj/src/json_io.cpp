#include "charvar/json_io.hpp"

#include <fstream>
#include <sstream>

#include "charvar/errors.hpp"

namespace charvar::io {

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ParseError("expected a complex number [re, im], got " + j.dump());
    return {j[0].get<double>(), j[1].get<double>()};
}

json mat2_to_json(const Mat2& m) {
    return json::array({complex_to_json(m.a), complex_to_json(m.b), complex_to_json(m.c), complex_to_json(m.d)});
}

Mat2 mat2_from_json(const json& j) {
    if (!j.is_array() || j.size() != 4) throw ParseError("expected a 2x2 matrix as four [re, im] entries");
    return {complex_from_json(j[0]), complex_from_json(j[1]), complex_from_json(j[2]), complex_from_json(j[3])};
}

json representation_to_json(const Representation& rho) {
    json images = json::array();
    for (const auto& g : rho.images()) images.push_back(mat2_to_json(g));
    return {{"schema", kSchemaVersion},
            {"presentation", format_presentation(rho.presentation())},
            {"images", std::move(images)},
            {"flavor", rho.flavor() == Flavor::SL2 ? "SL2" : "PSL2"}};
}

Representation representation_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("representation document must be a JSON object");
    if (j.contains("schema") && j.at("schema") != kSchemaVersion)
        throw ParseError("unsupported schema version " + j.at("schema").dump());
    if (!j.contains("presentation") || !j.at("presentation").is_string())
        throw ParseError("representation document lacks a \"presentation\" string");
    if (!j.contains("images") || !j.at("images").is_array())
        throw ParseError("representation document lacks an \"images\" array");
    Presentation pres = parse_presentation(j.at("presentation").get<std::string>());
    std::vector<Mat2> images;
    for (const auto& m : j.at("images")) images.push_back(mat2_from_json(m));
    Flavor flavor = Flavor::PSL2;
    if (j.contains("flavor")) {
        const auto f = j.at("flavor").get<std::string>();
        if (f == "SL2")
            flavor = Flavor::SL2;
        else if (f != "PSL2")
            throw ParseError("unknown flavor \"" + f + "\"");
    }
    return {std::move(pres), std::move(images), flavor};
}

Representation load_representation(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    return representation_from_json(j);
}

json report_to_json(const ClassificationReport& r) {
    return {{"schema", kSchemaVersion},
            {"reducible", r.reducible},
            {"ad_reducible", r.ad_reducible},
            {"is_trivial_character", r.is_trivial_character},
            {"klein4_image", r.klein4_image},
            {"stabilizer_type", std::string(to_string(r.stabilizer_type))},
            {"singular_verdict", std::string(to_string(r.singular_verdict))}};
}

namespace {

json f2_to_json(const F2Vector& v) {
    json a = json::array();
    for (auto x : v) a.push_back(static_cast<int>(x));
    return a;
}

json dims_to_json(const CohomologyDims& d) { return {{"z1", d.z1}, {"b1", d.b1}, {"h1", d.h1}}; }

}  // namespace

json report_to_json(const LiftReport& r) {
    json system = json::array();
    for (std::size_t j = 0; j < r.system.rows(); ++j) system.push_back(f2_to_json(r.system.row(j)));
    json out = {{"schema", kSchemaVersion},
                {"liftable", r.liftable},
                {"relator_signs", r.relator_signs},
                {"system", std::move(system)},
                {"rhs", f2_to_json(r.rhs)},
                {"solution", r.solution ? f2_to_json(*r.solution) : json(nullptr)},
                {"lift_class_count", r.lift_class_count}};
    if (r.lift) out["lift"] = representation_to_json(*r.lift);
    return out;
}

json report_to_json(const CocycleReport& r) {
    json out = {{"schema", kSchemaVersion},
                {"dim_z1", r.dim_z1},
                {"dim_b1", r.dim_b1},
                {"dim_h1", r.dim_h1},
                {"singular_values", r.singular_values},
                {"coboundary_singular_values", r.coboundary_singular_values}};
    if (r.block_dims)
        out["block_dims"] = {{"h0", dims_to_json(r.block_dims->h0)}, {"hplus_hminus", dims_to_json(r.block_dims->hpm)}};
    else
        out["block_dims"] = nullptr;
    return out;
}

json report_to_json(const XF2Coords& c) {
    const auto j = j_coords_from_xf2(c);
    return {{"schema", kSchemaVersion},
            {"X", complex_to_json(c.x)},
            {"Y", complex_to_json(c.y)},
            {"Z", complex_to_json(c.z)},
            {"W", complex_to_json(c.w)},
            {"relation_residual", c.relation_residual()},
            {"J", {{"a", complex_to_json(j[0])},
                   {"b", complex_to_json(j[1])},
                   {"ab", complex_to_json(j[2])},
                   {"ab^-1", complex_to_json(j[3])}}}};
}

}  // namespace charvar::io
