#include "pwmap/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace pwmap {

namespace {

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), "invalid JSON");
  }
}

void check_fields(const Json& j, const std::string& where, const std::set<std::string>& allowed) {
  if (!j.is_object()) throw ParseError(where, "expected an object");
  for (const auto& item : j.items())
    if (!allowed.contains(item.key())) throw ParseError(where, "unknown field '" + item.key() + "'");
}

const Json& require(const Json& j, const std::string& key, const std::string& where) {
  if (!j.contains(key)) throw ParseError(where, "missing field '" + key + "'");
  return j.at(key);
}

Eigen::Index read_dim(const Json& j, const std::string& key, const std::string& where) {
  const Json& v = require(j, key, where);
  if (!v.is_number_integer() || v.get<long long>() < 0) throw ParseError(where + "." + key, "expected a nonnegative integer");
  return static_cast<Eigen::Index>(v.get<long long>());
}

void check_format(const Json& j, const std::string& expected) {
  const Json& f = require(j, "format", "");
  if (!f.is_string() || f.get<std::string>() != expected)
    throw ParseError("format", "expected \"" + expected + "\"");
}

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational_token(j.get<std::string>(), where);
  throw ParseError(where, "expected a rational string \"p/q\" or an integer");
}

Vec vec_from_json(const Json& j, Eigen::Index size, const std::string& where) {
  if (!j.is_array()) throw ParseError(where, "expected an array");
  if (static_cast<Eigen::Index>(j.size()) != size)
    throw ParseError(where, "expected " + std::to_string(size) + " entries, got " + std::to_string(j.size()));
  Vec v(size);
  for (Eigen::Index i = 0; i < size; ++i)
    v(i) = rational_from_json(j[static_cast<std::size_t>(i)], where + "[" + std::to_string(i) + "]");
  return v;
}

std::string optional_name(const Json& j) {
  if (!j.contains("name")) return "";
  if (!j.at("name").is_string()) throw ParseError("name", "expected a string");
  return j.at("name").get<std::string>();
}

}  // namespace

Rational parse_rational_token(const std::string& text, const std::string& where) {
  try {
    return Rational::parse(text);
  } catch (const std::invalid_argument& e) {
    throw ParseError(where, e.what());
  }
}

Vec parse_point(const std::string& text, const std::string& where) {
  std::vector<Rational> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(parse_rational_token(item, where));
  if (parts.empty()) throw ParseError(where, "empty point");
  Vec v(static_cast<Eigen::Index>(parts.size()));
  for (std::size_t i = 0; i < parts.size(); ++i) v(static_cast<Eigen::Index>(i)) = parts[i];
  return v;
}

Json rational_to_json(const Rational& r) { return r.str(); }

Json vec_to_json(const Vec& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(rational_to_json(v(i)));
  return out;
}

Json cell_to_json(const LinearCell& cell) {
  auto rows = [](const std::vector<Constraint>& src) {
    Json out = Json::array();
    for (const auto& r : src) {
      Json row = vec_to_json(r.normal);
      row.push_back(rational_to_json(r.rhs));
      out.push_back(std::move(row));
    }
    return out;
  };
  Json j;
  j["eq"] = rows(cell.eq);
  j["le"] = rows(cell.le);
  j["lt"] = rows(cell.lt);
  return j;
}

LinearCell cell_from_json(const Json& j, Eigen::Index dim, const std::string& where) {
  check_fields(j, where, {"eq", "le", "lt"});
  LinearCell cell(dim);
  for (const char* kind : {"eq", "le", "lt"}) {
    if (!j.contains(kind)) continue;
    const Json& rows = j.at(kind);
    const std::string at = where + "." + kind;
    if (!rows.is_array()) throw ParseError(at, "expected a list of rows");
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const std::string row_at = at + "[" + std::to_string(r) + "]";
      const Vec row = vec_from_json(rows[r], dim + 1, row_at);
      const Vec a = row.head(dim);
      const Rational b = row(dim);
      if (std::string(kind) == "eq") cell.add_eq(a, b);
      else if (std::string(kind) == "le") cell.add_le(a, b);
      else cell.add_lt(a, b);
    }
  }
  return cell;
}

SetValuedMap parse_map(const std::string& text) {
  const Json j = parse_json(text);
  check_fields(j, "", {"format", "name", "seed", "n", "m", "cells"});
  check_format(j, "svmap/1");
  const Eigen::Index n = read_dim(j, "n", ""), m = read_dim(j, "m", "");
  if (n == 0 || m == 0) throw ParseError("", "n and m must be positive");
  const Json& cells = require(j, "cells", "");
  if (!cells.is_array()) throw ParseError("cells", "expected a list");
  std::vector<LinearCell> out;
  for (std::size_t i = 0; i < cells.size(); ++i)
    out.push_back(cell_from_json(cells[i], n + m, "cells[" + std::to_string(i) + "]"));
  return SetValuedMap(n, m, std::move(out), optional_name(j));
}

std::string serialize_map(const SetValuedMap& map) {
  Json j;
  j["format"] = "svmap/1";
  if (!map.name.empty()) j["name"] = map.name;
  j["n"] = map.n;
  j["m"] = map.m;
  j["cells"] = Json::array();
  for (const auto& c : map.graph.cells) j["cells"].push_back(cell_to_json(c));
  return j.dump(2) + "\n";
}

PLFunction parse_function(const std::string& text) {
  const Json j = parse_json(text);
  check_fields(j, "", {"format", "name", "n", "pieces"});
  check_format(j, "plfn/1");
  PLFunction f;
  f.n = read_dim(j, "n", "");
  if (f.n == 0) throw ParseError("n", "must be positive");
  f.name = optional_name(j);
  const Json& pieces = require(j, "pieces", "");
  if (!pieces.is_array()) throw ParseError("pieces", "expected a list");
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const std::string at = "pieces[" + std::to_string(i) + "]";
    check_fields(pieces[i], at, {"cell", "coeffs", "offset"});
    AffinePiece p;
    p.cell = cell_from_json(require(pieces[i], "cell", at), f.n, at + ".cell");
    p.coeffs = vec_from_json(require(pieces[i], "coeffs", at), f.n, at + ".coeffs");
    p.offset = rational_from_json(require(pieces[i], "offset", at), at + ".offset");
    f.pieces.push_back(std::move(p));
  }
  return f;
}

std::string serialize_function(const PLFunction& f) {
  Json j;
  j["format"] = "plfn/1";
  if (!f.name.empty()) j["name"] = f.name;
  j["n"] = f.n;
  j["pieces"] = Json::array();
  for (const auto& p : f.pieces) {
    Json piece;
    piece["cell"] = cell_to_json(p.cell);
    piece["coeffs"] = vec_to_json(p.coeffs);
    piece["offset"] = rational_to_json(p.offset);
    j["pieces"].push_back(std::move(piece));
  }
  return j.dump(2) + "\n";
}

PolynomialMap parse_polynomial_map(const std::string& text) {
  const Json j = parse_json(text);
  check_fields(j, "", {"format", "name", "n", "m", "cells"});
  check_format(j, "polymap/1");
  PolynomialMap pm;
  pm.n = read_dim(j, "n", "");
  pm.m = read_dim(j, "m", "");
  pm.name = optional_name(j);
  const Eigen::Index d = pm.n + pm.m;
  const Json& cells = require(j, "cells", "");
  if (!cells.is_array()) throw ParseError("cells", "expected a list");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const std::string at = "cells[" + std::to_string(i) + "]";
    check_fields(cells[i], at, {"zero", "pos"});
    oracle::PolynomialCell cell;
    cell.dim = d;
    for (const char* kind : {"zero", "pos"}) {
      if (!cells[i].contains(kind)) continue;
      const Json& polys = cells[i].at(kind);
      if (!polys.is_array()) throw ParseError(at + "." + kind, "expected a list of polynomials");
      for (std::size_t p = 0; p < polys.size(); ++p) {
        const std::string pat = at + "." + kind + "[" + std::to_string(p) + "]";
        if (!polys[p].is_array()) throw ParseError(pat, "expected a list of monomials");
        oracle::Polynomial poly;
        for (std::size_t k = 0; k < polys[p].size(); ++k) {
          const std::string mat = pat + "[" + std::to_string(k) + "]";
          const Json& mono = polys[p][k];
          check_fields(mono, mat, {"coeff", "exp"});
          oracle::Monomial mo;
          mo.coeff = rational_from_json(require(mono, "coeff", mat), mat + ".coeff");
          const Json& e = require(mono, "exp", mat);
          if (!e.is_array() || static_cast<Eigen::Index>(e.size()) != d)
            throw ParseError(mat + ".exp", "expected " + std::to_string(d) + " exponents");
          for (const auto& x : e) {
            if (!x.is_number_integer() || x.get<int>() < 0) throw ParseError(mat + ".exp", "expected nonnegative integers");
            mo.exponents.push_back(x.get<int>());
          }
          poly.push_back(std::move(mo));
        }
        (std::string(kind) == "zero" ? cell.zero : cell.pos).push_back(std::move(poly));
      }
    }
    pm.cells.push_back(std::move(cell));
  }
  return pm;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace pwmap
