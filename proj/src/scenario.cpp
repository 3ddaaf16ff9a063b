#include "svfa/scenario.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <thread>
#include <variant>

#include "svfa/element_spec.hpp"
#include "svfa/error.hpp"
#include "svfa/geometry.hpp"

namespace svfa {

namespace {

using Family = es::ParamFamily<double>;
using Object = std::variant<Svf, SetSequence, Family>;

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

void only_keys(const Json& j, const std::vector<std::string_view>& allowed, const std::string& where) {
  if (!j.is_object()) bad(where + " must be an object");
  for (const auto& [key, _] : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      bad("unknown field '" + key + "' in " + where);
    }
  }
}

const Json& need(const Json& j, const std::string& key, const std::string& where) {
  if (!j.contains(key)) bad(where + " is missing '" + key + "'");
  return j.at(key);
}

std::vector<double> reals(const Json& j, const std::string& where) {
  if (!j.is_array()) bad(where + " must be an array of numbers");
  std::vector<double> out;
  for (const auto& e : j) out.push_back(real_from_json(e));
  return out;
}

double number(const Json& j, const std::string& where) {
  if (!j.is_number()) bad(where + " must be a number, got " + j.dump());
  return j.get<double>();
}

std::string text(const Json& j, const std::string& where) {
  if (!j.is_string()) bad(where + " must be a string, got " + j.dump());
  return j.get<std::string>();
}

std::vector<std::string> ids(const Json& j, const std::string& where) {
  if (!j.is_array()) bad(where + " must be an array of element ids");
  std::vector<std::string> out;
  for (const auto& e : j) out.push_back(text(e, where));
  return out;
}

UniversePtr universe_of(const Json& spec, const std::string& where) {
  if (spec.contains("radii")) return radial_universe(reals(spec.at("radii"), where + ".radii"));
  if (spec.contains("points")) return radial_universe(reals(spec.at("points"), where + ".points"));
  if (spec.contains("coordinates")) {
    std::vector<std::array<double, 2>> pts;
    for (const auto& p : spec.at("coordinates")) {
      if (!p.is_array() || p.size() != 2) bad(where + ".coordinates entries must be [x, y]");
      pts.push_back({real_from_json(p[0]), real_from_json(p[1])});
    }
    return planar_universe(pts);
  }
  if (spec.contains("universe")) return Universe::make(ids(spec.at("universe"), where + ".universe"));
  bad(where + " needs radii, points, coordinates or universe");
}

double axis_scale(const Json& axis) {
  if (!axis.contains("scale")) return 1.0;
  const auto& s = axis.at("scale");
  if (s.is_string() && s.get<std::string>() == "pi") return std::numbers::pi;
  return number(s, "grid axis scale");
}

std::vector<double> axis_values(const Json& axis) {
  const std::string where = "grid axis";
  const double scale = axis_scale(axis);
  std::vector<double> out;
  if (axis.contains("values")) {
    only_keys(axis, {"values", "scale"}, where);
    for (double v : reals(axis.at("values"), where)) out.push_back(v * scale);
    return out;
  }
  only_keys(axis, {"from", "to", "steps", "endpoint", "scale"}, where);
  const double from = number(need(axis, "from", where), where + ".from");
  const double to = number(need(axis, "to", where), where + ".to");
  const auto& steps_j = need(axis, "steps", where);
  if (!steps_j.is_number_unsigned() || steps_j.get<std::size_t>() == 0) bad(where + ".steps must be a positive integer");
  const auto steps = steps_j.get<std::size_t>();
  const bool endpoint = axis.value("endpoint", true);
  const double denom = static_cast<double>(endpoint ? std::max<std::size_t>(steps - 1, 1) : steps);
  for (std::size_t i = 0; i < steps; ++i) {
    out.push_back((from + (to - from) * static_cast<double>(i) / denom) * scale);
  }
  return out;
}

Family family_object(const Json& spec, const std::string& where) {
  only_keys(spec, {"catalog", "grid"}, where);
  const auto catalog = text(need(spec, "catalog", where), where + ".catalog");
  const auto& grid_j = need(spec, "grid", where);
  if (!grid_j.is_array() || grid_j.empty()) bad(where + ".grid must be a non-empty array of axes");
  std::vector<std::vector<double>> axes;
  for (const auto& a : grid_j) axes.push_back(axis_values(a));
  auto grid = es::product_grid<double>(axes);
  if (catalog == "disk") {
    if (axes.size() != 2) bad(where + ": the disk family takes two axes (p, q)");
    return es::disk_family<double>(std::move(grid));
  }
  if (catalog == "scaled_direction") return es::scaled_direction_family<double>(std::move(grid));
  if (catalog == "affine") {
    if (axes.size() % 2 != 0) bad(where + ": the affine family takes 2n axes (offset, then velocity)");
    return es::affine_family<double>(std::move(grid));
  }
  if (catalog == "quadratic") return es::quadratic_family<double>(std::move(grid));
  throw Error(ErrorKind::UnsupportedKind, "unknown catalog family '" + catalog + "'");
}

Object load_object(const Json& spec, const std::string& where) {
  if (!spec.is_object()) bad(where + " must be an object");
  if (spec.contains("catalog")) return family_object(spec, where);
  if (spec.contains("cycle")) return sequence_from_json(spec);
  return svf_object(spec);
}

UniversePtr universe_of(const Object& o) {
  if (const auto* f = std::get_if<Svf>(&o)) return f->universe();
  if (const auto* s = std::get_if<SetSequence>(&o)) return s->universe();
  return nullptr;
}

// Commands --------------------------------------------------------------------

struct Command {
  std::string_view name;
  bool needs_object;
  std::vector<std::string_view> args;
  std::vector<std::string_view> expect;
};

const std::array<Command, 12> kCommands{{
    {"limit-inf", true, {"target"}, {"limit", "limsup", "liminf", "holds", "witness"}},
    {"limit-at", true, {"t0", "side", "target"}, {"limit", "holds", "witness"}},
    {"continuity", true, {"t0", "side"}, {"holds", "witness", "value"}},
    {"limsup-liminf", true, {}, {"limsup", "liminf", "limit"}},
    {"seq", true, {"target"}, {"limit", "limsup", "liminf", "holds", "witness", "symdiff_vanishes"}},
    {"bounds", true, {}, {"supremum", "infimum", "monotonicity"}},
    {"delta", true, {"target", "element"}, {"delta"}},
    {"slice", true, {"t"}, {"value"}},
    {"theorem-suite", false, {"theorem", "all", "trials", "seed", "universe_size"}, {"violations"}},
    {"element-spec", true, {"op", "t", "method", "h", "tol"}, {"holds", "witness"}},
    {"plot-data", true, {"target"}, {}},
    {"monotonicity", true, {}, {"monotonicity"}},
}};

const Command& find_command(const std::string& name) {
  for (const auto& c : kCommands) {
    if (c.name == name) return c;
  }
  throw Error(ErrorKind::UnknownCommand, "unknown command '" + name + "'");
}

const Svf& as_svf(const Object& o, std::string_view command) {
  if (const auto* f = std::get_if<Svf>(&o)) return *f;
  throw Error(ErrorKind::InvalidArgument, std::string(command) + " needs a set-valued function object");
}

Side side_of(const Json& args) {
  const std::string s = args.value("side", std::string("both"));
  if (s == "both") return Side::Both;
  if (s == "left") return Side::Left;
  if (s == "right") return Side::Right;
  bad("side must be left, right or both, got '" + s + "'");
}

Json optional_set(const std::optional<FiniteSet>& s) { return s ? to_json(*s) : Json(nullptr); }

Json verdict_result(Json result, const Verdict& v) {
  result["verdict"] = to_json(v);
  return result;
}

Json run_svf_command(std::string_view command, const Svf& f, const Json& args) {
  const auto u = f.universe();
  auto target = [&] { return target_set(u, need(args, "target", "args")); };
  Json r = Json::object();
  if (command == "limit-inf") {
    r["limit"] = optional_set(limit_at_infinity(f));
    const auto [sup, inf] = limsupinf_at_infinity(f);
    r["limsup"] = to_json(sup);
    r["liminf"] = to_json(inf);
    if (args.contains("target")) r = verdict_result(std::move(r), converges_at_infinity(f, target()));
  } else if (command == "limit-at") {
    const double t0 = real_from_json(need(args, "t0", "args"));
    const Side side = side_of(args);
    r["limit"] = optional_set(limit_at(f, t0, side));
    if (args.contains("target")) r = verdict_result(std::move(r), converges_at(f, t0, target(), side));
  } else if (command == "continuity") {
    const double t0 = real_from_json(need(args, "t0", "args"));
    r["value"] = to_json(svf_at(f, t0));
    r = verdict_result(std::move(r), continuous_at(f, t0, side_of(args)));
  } else if (command == "limsup-liminf") {
    const auto [sup, inf] = limsupinf_at_infinity(f);
    r["limsup"] = to_json(sup);
    r["liminf"] = to_json(inf);
    r["limit"] = optional_set(limit_at_infinity(f));
  } else if (command == "bounds" || command == "monotonicity") {
    if (command == "bounds") {
      r["supremum"] = to_json(supremum(f));
      r["infimum"] = to_json(infimum(f));
    }
    r["monotonicity"] = std::string(to_string(monotonicity(f)));
  } else if (command == "delta") {
    const auto element = text(need(args, "element", "args"), "args.element");
    r["element"] = element;
    r["delta"] = to_json(delta_trajectory(f, target(), element));
  } else if (command == "slice") {
    r["value"] = to_json(svf_at(f, real_from_json(need(args, "t", "args"))));
  } else if (command == "plot-data") {
    const FiniteSet t = target();
    Json rows = Json::array();
    for (std::size_t i = 0; i < f.size(); ++i) {
      rows.push_back({{"element", u->id(i)},
                      {"trajectory", to_json(f.trajectory(i))},
                      {"delta", to_json(delta_trajectory(f, t, i))}});
    }
    r["rows"] = std::move(rows);
  } else {
    throw Error(ErrorKind::InvalidArgument, std::string(command) + " does not apply to a set-valued function");
  }
  return r;
}

Json run_seq_command(const SetSequence& s, const Json& args) {
  Json r = Json::object();
  const auto [sup, inf] = seq_limsup_liminf(s);
  r["limsup"] = to_json(sup);
  r["liminf"] = to_json(inf);
  r["limit"] = sup == inf ? to_json(sup) : Json(nullptr);
  if (args.contains("target")) {
    const auto a = target_set(s.universe(), args.at("target"));
    r["symdiff_vanishes"] = seq_symdiff_vanishes(s, a);
    r = verdict_result(std::move(r), seq_converges_def(s, a));
  }
  return r;
}

Json cloud_json(const es::PointCloud<double>& c) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < c.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < c.cols(); ++j) row.push_back(c(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json run_family_command(const Family& f, const Json& args) {
  const std::string op = args.value("op", std::string("shift"));
  std::vector<double> ts;
  if (args.contains("t")) {
    const auto& tj = args.at("t");
    ts = tj.is_array() ? reals(tj, "args.t") : std::vector<double>{real_from_json(tj)};
  } else {
    ts = {1.0};
  }
  const std::string method = args.value("method", std::string("analytic"));
  if (method != "analytic" && method != "central") bad("method must be analytic or central, got '" + method + "'");
  const double h = args.contains("h") ? number(args.at("h"), "args.h") : 1e-4;
  const auto how = method == "analytic" ? es::Differentiation<double>::analytic() : es::Differentiation<double>::central(h);
  const double default_tol = method == "analytic" ? es::kAnalyticTol : es::kFiniteDifferenceTol;

  Json r{{"family", f.name}, {"grid_size", f.grid.size()}};
  if (op == "sample" || op == "derivative") {
    Json clouds = Json::array();
    for (double t : ts) {
      clouds.push_back({{"t", t}, {"points", cloud_json(op == "sample" ? es::family_sample(f, t)
                                                                        : es::family_derivative(f, t, how))}});
    }
    r["clouds"] = std::move(clouds);
    return r;
  }
  if (op == "injectivity") {
    const double tol = args.contains("tol") ? number(args.at("tol"), "args.tol") : es::kAnalyticTol;
    return verdict_result(std::move(r), es::family_injectivity_check(f, ts, tol));
  }
  if (op != "shift") bad("element-spec op must be sample, derivative, injectivity or shift, got '" + op + "'");
  const double tol = args.contains("tol") ? number(args.at("tol"), "args.tol") : default_tol;
  Json checks = Json::array();
  std::optional<Verdict> first_failure;
  for (double t : ts) {
    const auto err = es::family_shift_error(f, t, how);
    const auto v = es::family_shift_check(f, t, how, tol);
    if (!v.holds && !first_failure) first_failure = v;
    checks.push_back({{"t", t}, {"max_error", err.max_error}, {"verdict", to_json(v)}});
  }
  r["method"] = method;
  r["tol"] = tol;
  r["checks"] = std::move(checks);
  return verdict_result(std::move(r), first_failure.value_or(Verdict::pass(Definition::ShiftIdentity)));
}

Json run_suites(const Json& args, const RunOptions& opts) {
  const std::size_t trials = opts.trials.value_or(args.value("trials", std::size_t{100}));
  const std::uint64_t seed = opts.seed.value_or(args.value("seed", std::uint64_t{7}));
  const std::size_t n = args.value("universe_size", std::size_t{6});
  std::vector<std::string> tags;
  if (args.value("all", false)) {
    for (auto t : theorem_tags()) tags.emplace_back(t);
  } else {
    tags.push_back(text(need(args, "theorem", "args"), "args.theorem"));
  }
  Json reports = Json::array();
  std::size_t violations = 0;
  for (const auto& tag : tags) {
    const auto rep = run_theorem_suite(tag, trials, seed, n, opts.parallel);
    violations += rep.violations;
    reports.push_back(to_json(rep));
  }
  return Json{{"violations", violations}, {"reports", std::move(reports)}};
}

// Expectations ----------------------------------------------------------------

bool is_set_key(std::string_view key) {
  return key == "limit" || key == "limsup" || key == "liminf" || key == "supremum" || key == "infimum" ||
         key == "value";
}

Json set_mismatch(const std::string& key, const Json& expected, const Json& actual) {
  Json m{{"key", key}, {"expected", expected}, {"actual", actual}};
  if (expected.is_array() && actual.is_array()) {
    Json missing = Json::array(), unexpected = Json::array();
    for (const auto& e : expected) {
      if (std::find(actual.begin(), actual.end(), e) == actual.end()) missing.push_back(e);
    }
    for (const auto& a : actual) {
      if (std::find(expected.begin(), expected.end(), a) == expected.end()) unexpected.push_back(a);
    }
    m["missing"] = std::move(missing);
    m["unexpected"] = std::move(unexpected);
  }
  return m;
}

Json check_expectations(const Json& expect, const Json& result, const UniversePtr& u) {
  Json mismatches = Json::array();
  for (const auto& [key, want] : expect.items()) {
    if (is_set_key(key)) {
      const Json expected = want.is_null() ? Json(nullptr) : to_json(target_set(u, want));
      const Json actual = result.value(key, Json(nullptr));
      if (expected != actual) mismatches.push_back(set_mismatch(key, expected, actual));
    } else if (key == "holds" || key == "witness") {
      const Json verdict = result.value("verdict", Json(nullptr));
      const Json actual = verdict.is_null() ? Json(nullptr) : verdict.at(key == "holds" ? "holds" : "witness_element");
      if (want != actual) mismatches.push_back({{"key", key}, {"expected", want}, {"actual", actual}});
    } else if (key == "delta") {
      const Json expected = to_json(interval_set_from_json(want));
      if (expected != result.at("delta")) {
        mismatches.push_back({{"key", key}, {"expected", expected}, {"actual", result.at("delta")}});
      }
    } else {
      const Json actual = result.value(key, Json(nullptr));
      if (want != actual) mismatches.push_back({{"key", key}, {"expected", want}, {"actual", actual}});
    }
  }
  return mismatches;
}

// Validation and execution ----------------------------------------------------

struct Task {
  std::string name;
  const Command* command = nullptr;
  std::string object;
  Json args = Json::object();
  Json expect = Json::object();
};

struct Loaded {
  std::map<std::string, Object> objects;
  std::vector<Task> tasks;
};

Loaded load(const Json& scenario) {
  only_keys(scenario, {"version", "description", "objects", "tasks"}, "scenario");
  const auto version = text(need(scenario, "version", "scenario"), "version");
  if (version != kScenarioVersion) bad("unsupported scenario version '" + version + "'");
  Loaded out;
  if (scenario.contains("objects")) {
    const auto& objs = scenario.at("objects");
    if (!objs.is_object()) bad("objects must be an object keyed by name");
    for (const auto& [name, spec] : objs.items()) {
      try {
        out.objects.emplace(name, load_object(spec, "object '" + name + "'"));
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::ParseError) throw;
        bad("object '" + name + "': " + e.what());
      }
    }
  }
  const auto& tasks = need(scenario, "tasks", "scenario");
  if (!tasks.is_array() || tasks.empty()) bad("tasks must be a non-empty array");
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const auto& tj = tasks[i];
    const std::string where = "task " + std::to_string(i);
    only_keys(tj, {"name", "command", "object", "args", "expect"}, where);
    Task t;
    t.name = tj.contains("name") ? text(tj.at("name"), where + ".name") : "task" + std::to_string(i);
    t.command = &find_command(text(need(tj, "command", where), where + ".command"));
    if (t.command->needs_object) {
      t.object = text(need(tj, "object", where), where + ".object");
      if (!out.objects.contains(t.object)) bad(where + " references undeclared object '" + t.object + "'");
    } else if (tj.contains("object")) {
      bad(where + ": " + std::string(t.command->name) + " takes no object");
    }
    if (tj.contains("args")) {
      t.args = tj.at("args");
      only_keys(t.args, t.command->args, where + ".args");
    }
    if (t.command->name == "theorem-suite" && !t.args.value("all", false)) {
      const auto tag = text(need(t.args, "theorem", where + ".args"), where + ".args.theorem");
      const auto tags = theorem_tags();
      if (std::find(tags.begin(), tags.end(), tag) == tags.end()) {
        throw Error(ErrorKind::UnknownTheorem, where + ": unknown theorem '" + tag + "'");
      }
    }
    if (tj.contains("expect")) {
      t.expect = tj.at("expect");
      only_keys(t.expect, t.command->expect, where + ".expect");
    }
    out.tasks.push_back(std::move(t));
  }
  return out;
}

Json run_task(const Task& t, const Loaded& loaded, const RunOptions& opts) {
  Json report{{"name", t.name}, {"command", std::string(t.command->name)}};
  if (!t.object.empty()) report["object"] = t.object;
  const auto start = std::chrono::steady_clock::now();
  try {
    Json result;
    UniversePtr u;
    if (!t.command->needs_object) {
      result = run_suites(t.args, opts);
    } else {
      const Object& o = loaded.objects.at(t.object);
      u = universe_of(o);
      if (const auto* fam = std::get_if<Family>(&o)) {
        if (t.command->name != "element-spec") throw Error(ErrorKind::InvalidArgument, "element families only support element-spec");
        result = run_family_command(*fam, t.args);
      } else if (const auto* seq = std::get_if<SetSequence>(&o)) {
        if (t.command->name != "seq") throw Error(ErrorKind::InvalidArgument, "sequences only support seq");
        result = run_seq_command(*seq, t.args);
      } else {
        result = run_svf_command(t.command->name, as_svf(o, t.command->name), t.args);
      }
    }
    const Json mismatches = check_expectations(t.expect, result, u);
    report["status"] = mismatches.empty() ? "pass" : "fail";
    report["result"] = std::move(result);
    if (!mismatches.empty()) report["mismatches"] = mismatches;
  } catch (const Error& e) {
    report["status"] = "error";
    report["error"] = e.what();
  } catch (const std::exception& e) {
    report["status"] = "error";
    report["error"] = e.what();
  }
  if (opts.timing) {
    const std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
    report["elapsed_ms"] = ms.count();
  }
  return report;
}

std::string describe_set(const Json& j) {
  if (j.is_null()) return "absent";
  std::string s = "{";
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (i) s += ", ";
    s += j[i].is_string() ? j[i].get<std::string>() : j[i].dump();
  }
  return s + "}";
}

std::string summarize(const Json& r) {
  std::string out;
  for (const char* key : {"limit", "limsup", "liminf", "supremum", "infimum", "value"}) {
    if (r.contains(key)) out += "    " + std::string(key) + " = " + describe_set(r.at(key)) + "\n";
  }
  if (r.contains("monotonicity")) out += "    monotonicity = " + r.at("monotonicity").get<std::string>() + "\n";
  if (r.contains("delta")) out += "    delta = " + to_string(interval_set_from_json(r.at("delta"))) + "\n";
  if (r.contains("violations")) out += "    violations = " + r.at("violations").dump() + "\n";
  if (r.contains("verdict")) {
    const auto& v = r.at("verdict");
    out += "    " + v.at("checked_definition").get<std::string>() + ": " + (v.at("holds").get<bool>() ? "holds" : "fails");
    if (!v.at("witness_element").is_null()) {
      out += " (witness " + v.at("witness_element").get<std::string>() + ": " + v.at("witness_detail").get<std::string>() + ")";
    }
    out += "\n";
  }
  return out;
}

}  // namespace

Svf svf_object(const Json& spec) {
  const std::string where = "svf object";
  if (spec.contains("svf")) {
    only_keys(spec, {"svf"}, where);
    return svf_from_json(spec.at("svf"));
  }
  const auto kind = radial_kind_from_string(text(need(spec, "family", where), where + ".family"));
  switch (kind) {
    case RadialKind::Point:
      only_keys(spec, {"family", "points"}, where);
      return build_svf(kind, universe_of(spec, where));
    case RadialKind::Constant: {
      only_keys(spec, {"family", "radii", "points", "coordinates", "universe", "members"}, where);
      const auto u = universe_of(spec, where);
      return constant_family(target_set(u, need(spec, "members", where)));
    }
    default:
      only_keys(spec, {"family", "radii", "coordinates"}, where);
      return build_svf(kind, universe_of(spec, where));
  }
}

FiniteSet target_set(const UniversePtr& universe, const Json& spec) {
  if (spec.is_array()) return finite_set_from_json(universe, spec);
  if (spec.is_object() && spec.size() == 1) {
    const auto& [key, value] = *spec.items().begin();
    if (key == "open_disk") return open_disk(universe, number(value, "open_disk radius"));
    if (key == "closed_disk") return closed_disk(universe, number(value, "closed_disk radius"));
    if (key == "all" && value == true) return FiniteSet::full_of(universe);
    if (key == "none" && value == true) return FiniteSet(universe);
  }
  bad("a set is an array of ids or one of {\"open_disk\": r}, {\"closed_disk\": r}, {\"all\": true}, "
      "{\"none\": true}; got " + spec.dump());
}

RunReport run_scenario(const Json& scenario, const RunOptions& opts) {
  const Loaded loaded = load(scenario);
  std::vector<Json> reports(loaded.tasks.size());
  if (opts.parallel && loaded.tasks.size() > 1) {
    std::vector<std::jthread> workers;
    for (std::size_t i = 0; i < loaded.tasks.size(); ++i) {
      workers.emplace_back([&, i] { reports[i] = run_task(loaded.tasks[i], loaded, opts); });
    }
  } else {
    for (std::size_t i = 0; i < loaded.tasks.size(); ++i) reports[i] = run_task(loaded.tasks[i], loaded, opts);
  }
  RunReport out;
  out.passed = std::all_of(reports.begin(), reports.end(), [](const Json& r) { return r.at("status") == "pass"; });
  out.json = Json{{"version", std::string(kReportVersion)}, {"passed", out.passed}, {"tasks", reports}};
  return out;
}

RunReport run_scenario_file(const std::filesystem::path& path, const RunOptions& opts) {
  std::ifstream in(path);
  if (!in) bad("cannot read scenario file " + path.string());
  Json scenario;
  try {
    scenario = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    bad(path.string() + ": " + e.what());
  }
  auto report = run_scenario(scenario, opts);
  report.json["scenario"] = path.filename().string();
  return report;
}

std::string render_text(const RunReport& report) {
  std::ostringstream out;
  std::size_t passed = 0;
  const auto& tasks = report.json.at("tasks");
  for (const auto& t : tasks) {
    const std::string status = t.at("status");
    if (status == "pass") ++passed;
    out << (status == "pass" ? "PASS " : status == "fail" ? "FAIL " : "ERROR") << "  " << t.at("name").get<std::string>()
        << " (" << t.at("command").get<std::string>();
    if (t.contains("object")) out << " on " << t.at("object").get<std::string>();
    out << ")";
    if (t.contains("elapsed_ms")) out << "  " << format_real(t.at("elapsed_ms").get<double>()) << " ms";
    out << "\n";
    if (status == "error") out << "    " << t.at("error").get<std::string>() << "\n";
    if (t.contains("result")) out << summarize(t.at("result"));
    if (!t.contains("mismatches")) continue;
    for (const auto& m : t.at("mismatches")) {
      const std::string key = m.at("key");
      if (m.contains("missing")) {
        out << "    " << key << ": expected " << describe_set(m.at("expected")) << ", got " << describe_set(m.at("actual"))
            << "\n";
        for (const auto& e : m.at("missing")) out << "      element " << e.get<std::string>() << " missing\n";
        for (const auto& e : m.at("unexpected")) out << "      element " << e.get<std::string>() << " unexpected\n";
      } else {
        out << "    " << key << ": expected " << m.at("expected").dump() << ", got " << m.at("actual").dump() << "\n";
      }
    }
  }
  out << passed << "/" << tasks.size() << " tasks passed; " << (report.passed ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string plot_table(const Svf& f, const FiniteSet& target) {
  std::ostringstream out;
  out << "element\tpayload\tkind\tlo\tlo_closed\thi\thi_closed\n";
  const auto& u = *f.universe();
  for (std::size_t i = 0; i < f.size(); ++i) {
    std::string payload = "-";
    if (u.has_payload()) {
      payload.clear();
      for (double v : u.payload(i)) payload += (payload.empty() ? "" : ",") + format_real(v);
    }
    auto emit = [&](std::string_view kind, const IntervalSet& s) {
      if (s.empty()) {
        out << u.id(i) << '\t' << payload << '\t' << kind << "\t-\t-\t-\t-\n";
        return;
      }
      for (const auto& p : s.pieces()) {
        out << u.id(i) << '\t' << payload << '\t' << kind << '\t' << format_real(p.lo.value) << '\t'
            << (p.lo.closed ? 1 : 0) << '\t' << format_real(p.hi.value) << '\t' << (p.hi.closed ? 1 : 0) << '\n';
      }
    };
    emit("trajectory", f.trajectory(i));
    emit("delta", delta_trajectory(f, target, i));
  }
  return out.str();
}

}  // namespace svfa
