#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "charvar/classify.hpp"
#include "charvar/cohomology.hpp"
#include "charvar/lift.hpp"
#include "charvar/mat2.hpp"
#include "charvar/rep.hpp"
#include "charvar/tracepoly.hpp"

namespace charvar::io {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

json complex_to_json(Complex z);
Complex complex_from_json(const json& j);

/// [[re,im],[re,im],[re,im],[re,im]], row-major.
json mat2_to_json(const Mat2& m);
Mat2 mat2_from_json(const json& j);

/// {"schema": 1, "presentation": "<text format>", "images": [Mat2...], "flavor": "PSL2"|"SL2"}
json representation_to_json(const Representation& rho);
/// Throws ParseError on malformed documents and InvalidRepresentation on
/// arity/determinant problems. Relators are not checked here.
Representation representation_from_json(const json& j);
Representation load_representation(const std::filesystem::path& path);

json report_to_json(const ClassificationReport& r);
json report_to_json(const LiftReport& r);
json report_to_json(const CocycleReport& r);
json report_to_json(const XF2Coords& c);

}  // namespace charvar::io
