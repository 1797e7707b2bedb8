#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "pwmap/map.hpp"
#include "pwmap/oracle.hpp"
#include "pwmap/sublevel.hpp"

namespace pwmap {

using Json = nlohmann::ordered_json;

/// Input error carrying the location of the offending item, e.g. "cells[1].le[0]".
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& where, const std::string& what)
      : std::runtime_error(where.empty() ? what : where + ": " + what), where_(where) {}
  [[nodiscard]] const std::string& where() const { return where_; }

 private:
  std::string where_;
};

Rational parse_rational_token(const std::string& text, const std::string& where = "");
/// Comma-separated rationals, e.g. "1/2,-3".
Vec parse_point(const std::string& text, const std::string& where = "");

Json rational_to_json(const Rational& r);
Json vec_to_json(const Vec& v);
Json cell_to_json(const LinearCell& cell);
LinearCell cell_from_json(const Json& j, Eigen::Index dim, const std::string& where);

/// Document "svmap/1": {"format", "name", "n", "m", "cells": [{"eq", "le", "lt"}]}; every row
/// lists n + m coefficients followed by the right-hand side.
SetValuedMap parse_map(const std::string& text);
std::string serialize_map(const SetValuedMap& map);

/// Document "plfn/1": {"format", "name", "n", "pieces": [{"cell", "coeffs", "offset"}]}.
PLFunction parse_function(const std::string& text);
std::string serialize_function(const PLFunction& f);

/// Document "polymap/1": {"format", "n", "m", "cells": [{"zero": [poly], "pos": [poly]}]}, where a
/// polynomial is a list of {"coeff", "exp"} monomials over the n + m graph coordinates.
struct PolynomialMap {
  Eigen::Index n = 0;
  Eigen::Index m = 0;
  std::vector<oracle::PolynomialCell> cells;
  std::string name;
};

PolynomialMap parse_polynomial_map(const std::string& text);

std::string read_file(const std::string& path);

}  // namespace pwmap
