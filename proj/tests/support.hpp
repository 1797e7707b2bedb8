#pragma once

#include <string>

#include "pwmap/io.hpp"
#include "pwmap/map.hpp"

namespace pwmap::testing {

inline Rational q(const char* text) { return Rational::parse(text); }

inline Vec v(std::initializer_list<Rational> values) { return make_vec(values); }

inline std::string fixture_path(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

inline SetValuedMap fixture_map(const std::string& name) { return parse_map(read_file(fixture_path(name + ".json"))); }

inline PLFunction fixture_function(const std::string& name) {
  return parse_function(read_file(fixture_path(name + ".json")));
}

}  // namespace pwmap::testing
