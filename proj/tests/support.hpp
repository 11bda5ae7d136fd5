#pragma once

#include <string>

#include "charvar/json_io.hpp"

namespace test_support {

inline std::string fixture(const std::string& name) { return std::string(CHARVAR_FIXTURE_DIR) + "/" + name; }

inline charvar::Representation load(const std::string& name) { return charvar::io::load_representation(fixture(name)); }

}  // namespace test_support
