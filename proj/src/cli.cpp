#include "pwmap/cli.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "pwmap/germ.hpp"
#include "pwmap/io.hpp"
#include "pwmap/oracle.hpp"
#include "pwmap/pareto.hpp"
#include "pwmap/random_maps.hpp"
#include "pwmap/stratification.hpp"
#include "pwmap/sublevel.hpp"
#include "pwmap/svmap.hpp"
#include "pwmap/variational.hpp"

namespace pwmap {

namespace {

struct Options {
  std::string command;
  std::string map_path;
  std::string fn_path;
  std::string point;
  std::string point2;
  std::string value;
  std::string ystar;
  std::string norms = "sup";
  std::string property = "strict";
  std::string random;
  std::string box;
  std::string h;
  std::uint64_t seed = 1;
  bool json = false;
  bool csv = false;
  bool epigraph = false;
  bool timing = false;
};

// Verdict-free commands report with status 0; checks report 2 when they fail.
struct Outcome {
  Json result;
  bool pass = true;
  std::vector<std::vector<std::string>> table;  // rows for --csv, first row is the header
};

NormKind parse_norm_kind(const std::string& s) {
  if (s == "sup") return NormKind::sup;
  if (s == "sum") return NormKind::sum;
  throw ParseError("--norms", "expected sup or sum, got '" + s + "'");
}

NormSpec parse_norms(const std::string& s) {
  NormSpec spec;
  const auto comma = s.find(',');
  if (comma == std::string::npos) {
    spec.domain = spec.range = parse_norm_kind(s);
  } else {
    spec.domain = parse_norm_kind(s.substr(0, comma));
    spec.range = parse_norm_kind(s.substr(comma + 1));
  }
  return spec;
}

Json extended_to_json(const Extended& v) { return format_extended(v); }

Json outer_norm_to_json(const OuterNorm& o) {
  Json j;
  j["value"] = extended_to_json(o.value);
  if (o.euclidean) j["euclidean"] = Json::array({o.euclidean->lo.str(), o.euclidean->hi.str()});
  else j["euclidean"] = "inf";
  return j;
}

Json cell_report(const LinearCell& c) {
  Json j = cell_to_json(c);
  j["text"] = describe(c);
  return j;
}

Json cone_to_json(const ConvexCone& k) {
  Json j;
  j["lineality"] = Json::array();
  for (const auto& v : k.lineality()) j["lineality"].push_back(vec_to_json(v));
  j["rays"] = Json::array();
  for (const auto& v : k.rays()) j["rays"].push_back(vec_to_json(v));
  j["text"] = k.describe();
  return j;
}

Json failure_set_to_json(const FailureSet& f) {
  Json j;
  j["strata"] = Json::array();
  for (std::size_t i = 0; i < f.strata.size(); ++i) {
    Json s = cell_report(f.strata[i]);
    s["dim"] = f.dims[i];
    j["strata"].push_back(std::move(s));
  }
  j["dim"] = f.dim;
  j["reference_dim"] = f.reference_dim;
  j["verdict"] = f.verdict;
  return j;
}

Json aubin_to_json(const AubinVerdict& v) {
  Json j;
  j["applicable"] = v.applicable;
  j["holds"] = v.holds;
  j["modulus"] = outer_norm_to_json(v.modulus);
  return j;
}

template <class T>
Json optional_vec(const std::optional<T>& v) {
  return v ? vec_to_json(*v) : Json(nullptr);
}

Json continuity_to_json(const ContinuityReport& r) {
  Json j;
  j["point"] = vec_to_json(r.point);
  j["in_domain"] = r.in_domain;
  j["isolated"] = r.isolated;
  j["osc"] = r.osc;
  j["isc"] = r.isc;
  j["continuous"] = r.continuous;
  j["strictly_continuous"] = r.strictly_continuous;
  j["osc_witness"] = optional_vec(r.osc_witness);
  j["isc_witness"] = optional_vec(r.isc_witness);
  j["isc_direction"] = optional_vec(r.isc_direction);
  j["lip_witness"] = optional_vec(r.lip_witness);
  return j;
}

Json double_point(const oracle::Point& p) {
  Json j = Json::array();
  for (double v : p) j.push_back(v);
  return j;
}

Json sampled_summary(const oracle::SampledSet& s) {
  Json j;
  j["dim"] = s.dim;
  j["empty"] = s.empty();
  j["points"] = s.points.size();
  if (s.empty()) return j;
  oracle::Point lo, hi;
  auto widen = [&](const oracle::Point& p) {
    if (lo.empty()) lo = hi = p;
    for (std::size_t i = 0; i < p.size(); ++i) {
      lo[i] = std::min(lo[i], p[i]);
      hi[i] = std::max(hi[i], p[i]);
    }
  };
  for (const auto& p : s.points) widen(p);
  for (const auto& [l, u] : s.intervals) {
    widen({l});
    widen({u});
  }
  j["bounding_box"] = Json::array({double_point(lo), double_point(hi)});
  return j;
}


SetValuedMap load_map(const Options& o) {
  if (o.map_path.empty()) throw ParseError("--map", "required for '" + o.command + "'");
  return parse_map(read_file(o.map_path));
}

PLFunction load_function(const Options& o) {
  if (o.fn_path.empty()) throw ParseError("--fn", "required for '" + o.command + "'");
  return parse_function(read_file(o.fn_path));
}

Vec require_point(const std::string& text, const char* flag, Eigen::Index dim) {
  if (text.empty()) throw ParseError(flag, "required");
  Vec v = parse_point(text, flag);
  if (v.size() != dim)
    throw ParseError(flag, "expected " + std::to_string(dim) + " coordinates, got " + std::to_string(v.size()));
  return v;
}

std::pair<Rational, Rational> parse_box(const std::string& text, const std::string& fallback) {
  const Vec v = parse_point(text.empty() ? fallback : text, "--box");
  if (v.size() == 1) {
    if (v(0).sign() <= 0) throw ParseError("--box", "radius must be positive");
    return {-v(0), v(0)};
  }
  if (v.size() != 2 || !(v(0) < v(1))) throw ParseError("--box", "expected r or lo,hi with lo < hi");
  return {v(0), v(1)};
}

Rational parse_step(const std::string& text, const std::string& fallback) {
  const Rational h = parse_rational_token(text.empty() ? fallback : text, "--h");
  if (h.sign() <= 0) throw ParseError("--h", "must be positive");
  return h;
}

LinearCell box_in(Eigen::Index dim, const std::pair<Rational, Rational>& box) {
  return box_cell(Vec::Constant(dim, box.first), Vec::Constant(dim, box.second));
}

Vec join(const Vec& x, const Vec& y) {
  Vec z(x.size() + y.size());
  z << x, y;
  return z;
}

Json cells_json(const std::vector<LinearCell>& cells) {
  Json j = Json::array();
  for (const auto& c : cells) j.push_back(cell_report(c));
  return j;
}

ConvexCone nonnegative_orthant(Eigen::Index m) {
  std::vector<Vec> rows;
  for (Eigen::Index i = 0; i < m; ++i) rows.push_back(-unit(m, i));
  return ConvexCone::from_constraints(m, {}, std::move(rows));
}

// S(x) ∩ box as one convex cell; the exact Hausdorff distance needs convex values.
LinearCell single_value(const SetValuedMap& map, const Vec& x, const Options& o, const char* flag) {
  std::vector<LinearCell> parts = evaluate(map, x);
  if (!o.box.empty()) {
    const LinearCell b = box_in(map.m, parse_box(o.box, ""));
    std::vector<LinearCell> cut;
    for (const auto& c : parts)
      if (LinearCell d = c.intersect(b); !is_empty(d)) cut.push_back(remove_redundant(d));
    parts = std::move(cut);
  }
  std::vector<LinearCell> distinct;
  for (auto& c : parts)
    if (std::find(distinct.begin(), distinct.end(), c) == distinct.end()) distinct.push_back(std::move(c));
  if (distinct.size() != 1)
    throw ParseError(flag, "the value must be a single nonempty convex cell (got " + std::to_string(distinct.size()) +
                               " cells); use oracle-hausdorff for unions");
  return distinct.front();
}

Outcome cmd_eval(const Options& o) {
  const SetValuedMap map = load_map(o);
  const Vec x = require_point(o.point, "--point", map.n);
  Outcome out;
  out.result["point"] = vec_to_json(x);
  out.result["values"] = cells_json(evaluate(map, x));
  return out;
}

Outcome cmd_domain(const Options& o) {
  const SetValuedMap map = load_map(o);
  Outcome out;
  out.result["cells"] = cells_json(domain(map).cells);
  return out;
}

Outcome cmd_closure(const Options& o) {
  Outcome out;
  out.result["map"] = Json::parse(serialize_map(closure_map(load_map(o))));
  return out;
}

Outcome cmd_defect(const Options& o) {
  const FailureSet f = closedness_defect(load_map(o));
  return {failure_set_to_json(f), f.verdict, {}};
}

Outcome cmd_classify(const Options& o) {
  const SetValuedMap map = load_map(o);
  const Vec x = require_point(o.point, "--point", map.n);
  return {continuity_to_json(classify_point(map, x, parse_norms(o.norms))), true, {}};
}

Outcome cmd_disc_set(const Options& o) {
  ContinuityProperty p;
  if (o.property == "continuity") p = ContinuityProperty::continuity;
  else if (o.property == "strict") p = ContinuityProperty::strict_continuity;
  else throw ParseError("--property", "expected continuity or strict");
  const FailureSet f = discontinuity_set(load_map(o), p, parse_norms(o.norms));
  Outcome out{failure_set_to_json(f), f.verdict, {}};
  out.result["property"] = o.property;
  return out;
}

Outcome cmd_aubin(const Options& o) {
  const SetValuedMap map = load_map(o);
  const Vec x = require_point(o.point, "--point", map.n);
  const Vec y = require_point(o.value, "--value", map.m);
  const AubinVerdict v = aubin_check(map, x, y, parse_norms(o.norms));
  return {aubin_to_json(v), v.applicable && v.holds, {}};
}

Outcome cmd_aubin_rel(const Options& o) {
  const SetValuedMap map = load_map(o);
  const Vec x = require_point(o.point, "--point", map.n);
  const Vec y = require_point(o.value, "--value", map.m);
  const MapStructure s = map_structure(map);
  const auto g = locate(s.dom, x);
  if (!g || !s.in_dom[*g]) throw ParseError("--point", "not in the domain");
  const LinearCell& stratum = s.dom.strata[*g].cell;
  const AubinVerdict v = aubin_check_relative(map, stratum, x, y, parse_norms(o.norms));
  Outcome out{aubin_to_json(v), v.applicable && v.holds, {}};
  out.result["stratum"] = cell_report(stratum);
  return out;
}

Outcome cmd_kappa(const Options& o) {
  return {outer_norm_to_json(uniform_kappa(load_map(o), parse_norms(o.norms))), true, {}};
}

Outcome cmd_normal_cone(const Options& o) {
  const SetValuedMap map = load_map(o);
  const Vec z = join(require_point(o.point, "--point", map.n), require_point(o.value, "--value", map.m));
  const NormalConeResult r = normal_cones(closed_graph(map), z);
  Outcome out;
  out.result["hadamard"] = cone_to_json(r.hadamard);
  out.result["limiting"] = Json::array();
  for (const auto& k : r.limiting.members) out.result["limiting"].push_back(cone_to_json(k));
  return out;
}

Outcome cmd_coderivative(const Options& o) {
  const SetValuedMap map = load_map(o);
  const Vec x = require_point(o.point, "--point", map.n);
  const Vec y = require_point(o.value, "--value", map.m);
  const Vec ys = require_point(o.ystar, "--ystar", map.m);
  Outcome out;
  out.result["cells"] = cells_json(coderivative(map, x, y, ys));
  return out;
}

Outcome cmd_outer_norm(const Options& o) {
  const SetValuedMap map = load_map(o);
  const Vec z = join(require_point(o.point, "--point", map.n), require_point(o.value, "--value", map.m));
  const ConeUnion lim = limiting_normal_cone(closed_graph(map), z);
  return {outer_norm_to_json(outer_norm(lim, map.n, parse_norms(o.norms))), true, {}};
}

Outcome cmd_sublevel(const Options& o) {
  const PLFunction f = load_function(o);
  const CellComplex d = function_domain(f);
  validate_function(f, d);
  const SetValuedMap l = sublevel_map(f, d);
  Outcome out;
  if (o.value.empty()) {
    out.result["map"] = Json::parse(serialize_map(l));
  } else {
    const Vec r = require_point(o.value, "--value", 1);
    out.result["level"] = vec_to_json(r);
    out.result["values"] = cells_json(evaluate(l, r));
  }
  return out;
}

Outcome cmd_minvalues(const Options& o) {
  const PLFunction f = load_function(o);
  const LocalMinReport r = local_min_values(f, function_domain(f));
  Outcome out;
  out.result["values"] = Json::array();
  for (const auto& v : r.values) out.result["values"].push_back(v.str());
  out.result["minimizer_strata"] = cells_json(r.minimizer_strata);
  out.result["sublevel_jumps"] = Json::array();
  for (const auto& v : r.sublevel_jumps) out.result["sublevel_jumps"].push_back(v.str());
  out.result["consistent"] = r.consistent;
  out.pass = r.consistent;
  return out;
}

Outcome cmd_pareto(const Options& o) {
  SetValuedMap map = load_map(o);
  const ConvexCone k = nonnegative_orthant(map.m);
  bool epigraph = false;
  if (o.epigraph && !is_k_invariant(map, k)) {
    map = epigraphical_map(map, k);
    epigraph = true;
  }
  const ParetoReport r = pareto_min_values(map, k);
  Outcome out;
  out.result["cone"] = cone_to_json(k);
  out.result["epigraph_applied"] = epigraph;
  out.result["values"] = Json::array();
  for (std::size_t i = 0; i < r.values.size(); ++i) {
    Json c = cell_report(r.values[i]);
    c["dim"] = r.dims[i];
    out.result["values"].push_back(std::move(c));
  }
  out.result["dim"] = r.dim;
  out.result["meager"] = r.meager;
  out.pass = r.meager;
  return out;
}

Outcome cmd_regularity(const Options& o) {
  const FailureSet f = generic_regularity_check(closed_graph(load_map(o)));
  return {failure_set_to_json(f), f.verdict, {}};
}

Outcome cmd_hausdorff(const Options& o) {
  const SetValuedMap map = load_map(o);
  const LinearCell a = single_value(map, require_point(o.point, "--point", map.n), o, "--point");
  const LinearCell b = single_value(map, require_point(o.point2, "--point2", map.n), o, "--point2");
  Outcome out;
  out.result["a"] = cell_report(a);
  out.result["b"] = cell_report(b);
  out.result["norm"] = to_string(parse_norms(o.norms).range);
  out.result["distance"] = hausdorff_distance(a, b, parse_norms(o.norms).range).str();
  return out;
}

oracle::ValueSampler sampler_for(const SetValuedMap& map, const Options& o, double resolution) {
  const auto box = parse_box(o.box, "10");
  return oracle::polyhedral_sampler(map, resolution, std::max(-box.first.to_double(), box.second.to_double()));
}

Outcome cmd_oracle_hausdorff(const Options& o) {
  const SetValuedMap map = load_map(o);
  const double h = parse_step(o.h, "1/100").to_double();
  const auto s = sampler_for(map, o, h);
  const oracle::SampledSet a = s(to_double(require_point(o.point, "--point", map.n)));
  const oracle::SampledSet b = s(to_double(require_point(o.point2, "--point2", map.n)));
  if (a.empty() || b.empty()) throw ParseError(a.empty() ? "--point" : "--point2", "the value is empty");
  Outcome out;
  out.result["h"] = h;
  out.result["estimate"] = oracle::sample_hausdorff(a, b, parse_norms(o.norms).range);
  return out;
}

Outcome cmd_oracle_limits(const Options& o) {
  const SetValuedMap map = load_map(o);
  const double h = parse_step(o.h, "1/100").to_double();
  const auto box = parse_box(o.box, "10");
  const oracle::LimitEstimate e = oracle::estimate_limits(sampler_for(map, o, h),
                                                          to_double(require_point(o.point, "--point", map.n)), map.m,
                                                          h / 10, box.second.to_double(), o.seed);
  Outcome out;
  out.result["value_empty"] = e.value_empty;
  out.result["outer"] = sampled_summary(e.outer);
  out.result["inner"] = sampled_summary(e.inner);
  return out;
}

Outcome cmd_oracle_lip(const Options& o) {
  const SetValuedMap map = load_map(o);
  oracle::LipOptions opts;
  opts.h = parse_step(o.h, "1/1000").to_double();
  opts.seed = o.seed;
  opts.norm = parse_norms(o.norms).range;
  const oracle::LipEstimate e =
      oracle::estimate_lip(sampler_for(map, o, 0.05), to_double(require_point(o.point, "--point", map.n)), opts);
  Outcome out;
  out.result["estimate"] = e.estimate;
  out.result["per_scale"] = e.per_scale;
  out.result["growth_exponent"] = e.growth_exponent;
  out.result["diverging"] = e.diverging;
  out.result["pairs_used"] = e.pairs_used;
  out.result["pairs_skipped"] = e.pairs_skipped;
  return out;
}

Outcome cmd_oracle_sur(const Options& o) {
  const SetValuedMap map = load_map(o);
  const double h = parse_step(o.h, "1/1000").to_double();
  const std::vector<double> lambdas{0.1, 0.05, 0.025};
  const oracle::Point y = to_double(require_point(o.value, "--value", map.m));
  // Radii never exceed 2λ, so by default only a box just around ȳ is sampled.
  double reach = 0;
  for (double v : y) reach = std::max(reach, std::abs(v));
  const auto s = o.box.empty() ? oracle::polyhedral_sampler(map, 0.01, reach + 0.25) : sampler_for(map, o, 0.01);
  const double rate =
      oracle::estimate_surjection_rate(s, to_double(require_point(o.point, "--point", map.n)), y, lambdas, h);
  Outcome out;
  out.result["lambdas"] = lambdas;
  out.result["rate"] = rate;
  return out;
}

std::map<std::string, long> parse_random_spec(const std::string& text) {
  std::map<std::string, long> kv;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("--random", "expected key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    if (key != "n" && key != "m" && key != "cells" && key != "count" && key != "seed" && key != "pool")
      throw ParseError("--random", "unknown key '" + key + "'");
    try {
      kv[key] = std::stol(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw ParseError("--random", "malformed value in '" + item + "'");
    }
    if (kv[key] < 0 || (key != "seed" && kv[key] == 0)) throw ParseError("--random", "value out of range in '" + item + "'");
  }
  return kv;
}

Outcome cmd_verify_generic(const Options& o) {
  std::vector<SetValuedMap> maps;
  if (!o.map_path.empty()) {
    maps.push_back(load_map(o));
  } else {
    if (o.random.empty()) throw ParseError("--random", "required unless --map is given");
    const auto kv = parse_random_spec(o.random);
    auto get = [&](const char* key, long fallback) { return kv.contains(key) ? kv.at(key) : fallback; };
    Rng rng(static_cast<std::uint64_t>(get("seed", static_cast<long>(o.seed))));
    const long count = get("count", 1);
    for (long i = 0; i < count; ++i) {
      RandomMapOptions opts;
      opts.n = get("n", rng.uniform(1, 2));
      opts.m = get("m", rng.uniform(1, 2));
      opts.max_cells = static_cast<std::size_t>(get("cells", 12));
      opts.pool = static_cast<std::size_t>(get("pool", static_cast<long>(opts.pool)));
      opts.closed_valued = true;
      maps.push_back(random_map(rng, opts));
    }
  }
  const NormSpec norms = parse_norms(o.norms);
  Outcome out;
  out.result["instances"] = Json::array();
  out.table.push_back({"index", "n", "m", "cells", "strict_dim", "defect_dim", "reference_dim", "strict_verdict",
                       "defect_verdict"});
  std::size_t passed = 0;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const SetValuedMap& map = maps[i];
    const MapStructure s = map_structure(map);
    const FailureSet strict = discontinuity_set(map, s, ContinuityProperty::strict_continuity, norms);
    const FailureSet defect = closedness_defect(map, s);
    const bool ok = strict.verdict && defect.verdict;
    passed += ok ? 1 : 0;
    Json inst;
    inst["index"] = i;
    inst["n"] = map.n;
    inst["m"] = map.m;
    inst["cells"] = map.graph.cells.size();
    inst["strict_continuity"] = failure_set_to_json(strict);
    inst["defect"] = failure_set_to_json(defect);
    inst["pass"] = ok;
    out.result["instances"].push_back(std::move(inst));
    out.table.push_back({std::to_string(i), std::to_string(map.n), std::to_string(map.m),
                         std::to_string(map.graph.cells.size()), std::to_string(strict.dim),
                         std::to_string(defect.dim), std::to_string(strict.reference_dim),
                         strict.verdict ? "pass" : "fail", defect.verdict ? "pass" : "fail"});
  }
  out.result["passed"] = passed;
  out.result["count"] = maps.size();
  out.pass = passed == maps.size();
  return out;
}

Outcome cmd_emit_samples(const Options& o) {
  const SetValuedMap map = load_map(o);
  const auto box = parse_box(o.box, "-1,1");
  const Rational h = parse_step(o.h, "1/4");
  Outcome out;
  std::vector<std::string> header;
  for (Eigen::Index i = 0; i < map.n; ++i) header.push_back("x" + std::to_string(i + 1));
  header.push_back("label");
  out.table.push_back(header);
  out.result["rows"] = Json::array();
  bool nonempty = false;
  for (const auto& c : map.graph.cells) nonempty = nonempty || !is_empty(c);
  if (!nonempty) return out;

  const MapStructure s = map_structure(map);
  const NormSpec norms = parse_norms(o.norms);
  long steps = 0;
  for (Rational t = box.first; t <= box.second; t += h) ++steps;
  std::vector<long> idx(static_cast<std::size_t>(map.n), 0);
  while (true) {
    Vec x(map.n);
    for (Eigen::Index i = 0; i < map.n; ++i) x(i) = box.first + h * Rational(idx[static_cast<std::size_t>(i)]);
    std::string label = "outside";
    if (const auto g = locate(s.dom, x); g && s.in_dom[*g]) {
      const ContinuityReport r = classify_stratum(map, s, *g, x, norms);
      label = r.strictly_continuous ? "strictly-continuous" : r.continuous ? "continuous" : "discontinuous";
    }
    std::vector<std::string> row;
    Json jrow;
    jrow["x"] = vec_to_json(x);
    jrow["label"] = label;
    for (Eigen::Index i = 0; i < x.size(); ++i) row.push_back(x(i).str());
    row.push_back(label);
    out.table.push_back(std::move(row));
    out.result["rows"].push_back(std::move(jrow));
    std::size_t i = 0;
    while (i < idx.size() && idx[i] == steps - 1) idx[i++] = 0;
    if (i == idx.size()) break;
    ++idx[i];
  }
  return out;
}

void flatten(const Json& j, const std::string& prefix, std::vector<std::vector<std::string>>& rows) {
  if (j.is_object()) {
    for (const auto& item : j.items()) flatten(item.value(), prefix.empty() ? item.key() : prefix + "." + item.key(), rows);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
  } else {
    rows.push_back({prefix, j.is_string() ? j.get<std::string>() : j.dump()});
  }
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string to_csv(const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + csv_escape(row[i]);
    out += "\n";
  }
  return out;
}

using Handler = std::function<Outcome(const Options&)>;

const std::vector<std::pair<std::string, std::pair<Handler, std::string>>>& commands() {
  static const std::vector<std::pair<std::string, std::pair<Handler, std::string>>> table{
      {"eval", {cmd_eval, "values S(x) as cells"}},
      {"domain", {cmd_domain, "projections of the graph cells"}},
      {"closure", {cmd_closure, "the map with the closed graph"}},
      {"defect", {cmd_defect, "where S and its closure differ"}},
      {"classify", {cmd_classify, "osc / isc / continuity / strict continuity at a point"}},
      {"disc-set", {cmd_disc_set, "failure set of continuity or strict continuity"}},
      {"aubin", {cmd_aubin, "Aubin property at (x, y) by the coderivative criterion"}},
      {"aubin-rel", {cmd_aubin_rel, "Aubin property relative to the domain stratum of x"}},
      {"kappa", {cmd_kappa, "uniform bound on graphical moduli over the pieces"}},
      {"normal-cone", {cmd_normal_cone, "Hadamard and limiting normal cones of the graph"}},
      {"coderivative", {cmd_coderivative, "limiting coderivative D*S(x|y)(y*)"}},
      {"outer-norm", {cmd_outer_norm, "graphical modulus at (x, y)"}},
      {"sublevel", {cmd_sublevel, "sublevel map of a piecewise-linear function"}},
      {"minvalues", {cmd_minvalues, "local minimum values, cross-checked with sublevel jumps"}},
      {"pareto", {cmd_pareto, "local Pareto minimum values for the nonnegative orthant"}},
      {"regularity", {cmd_regularity, "where Hadamard and limiting normal cones of the graph differ"}},
      {"hausdorff", {cmd_hausdorff, "exact Hausdorff distance between two convex values"}},
      {"oracle-hausdorff", {cmd_oracle_hausdorff, "sampled Hausdorff distance between two values"}},
      {"oracle-limits", {cmd_oracle_limits, "sampled outer and inner limits at a point"}},
      {"oracle-lip", {cmd_oracle_lip, "sampled Lipschitz quotient at a point"}},
      {"oracle-sur", {cmd_oracle_sur, "sampled surjection rate at (x, y)"}},
      {"verify-generic", {cmd_verify_generic, "failure-set dimension checks on random or given maps"}},
      {"emit-samples", {cmd_emit_samples, "grid of points with continuity labels"}},
  };
  return table;
}

}  // namespace

CliResult run(const std::vector<std::string>& args) {
  CliResult res;
  Options o;
  CLI::App app{"Exact analysis of piecewise-polyhedral set-valued maps", "pwmap"};
  app.require_subcommand(1, 1);
  app.set_help_flag("--help", "Print this help message and exit");
  for (const auto& [name, entry] : commands()) {
    CLI::App* sub = app.add_subcommand(name, entry.second);
    sub->set_help_flag("--help", "Print this help message and exit");
    sub->add_option("--map", o.map_path, "svmap/1 document");
    sub->add_option("--fn", o.fn_path, "plfn/1 document");
    sub->add_option("--point", o.point, "x as comma-separated rationals");
    sub->add_option("--point2", o.point2, "second point (hausdorff)");
    sub->add_option("--value", o.value, "y (or the level r for sublevel)");
    sub->add_option("--ystar", o.ystar, "y* for coderivative");
    sub->add_option("--norms", o.norms, "sup | sum | domain,range");
    sub->add_option("--property", o.property, "continuity | strict");
    sub->add_option("--random", o.random, "n=..,m=..,cells=..,count=..,seed=..");
    sub->add_option("--box", o.box, "r or lo,hi");
    sub->add_option("--h", o.h, "step or scale");
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_flag("--json", o.json, "JSON report (default)");
    sub->add_flag("--csv", o.csv, "CSV output");
    sub->add_flag("--epigraph", o.epigraph, "pareto: use S + K when S is not K-invariant");
    sub->add_flag("--timing", o.timing, "add wall-clock time to the report");
  }
  std::vector<std::string> argv_store{"pwmap"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  std::ostringstream out, err;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    res.status = app.exit(e, out, err) == 0 ? exit_pass : exit_input_error;
    res.out = out.str();
    res.err = err.str();
    return res;
  }
  o.command = app.get_subcommands().front()->get_name();
  Handler handler;
  for (const auto& [name, entry] : commands())
    if (name == o.command) handler = entry.first;
  try {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome = handler(o);
    Json report;
    report["schema"] = "pwmap-report/1";
    report["command"] = o.command;
    report["args"] = args;
    report["norms"] = to_string(parse_norms(o.norms));
    report["result"] = std::move(outcome.result);
    report["pass"] = outcome.pass;
    if (o.timing)
      report["timing_ms"] =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (o.csv) {
      if (outcome.table.empty()) flatten(report, "", outcome.table);
      res.out = to_csv(outcome.table);
    } else {
      res.out = report.dump(2) + "\n";
    }
    res.status = outcome.pass ? exit_pass : exit_check_failed;
  } catch (const std::exception& e) {
    res.status = exit_input_error;
    res.err = std::string("error: ") + e.what() + "\n";
  }
  return res;
}

}  // namespace pwmap
