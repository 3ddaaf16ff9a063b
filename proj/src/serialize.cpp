#include "svfa/serialize.hpp"

#include <cmath>

#include "svfa/error.hpp"

namespace svfa {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

}  // namespace

Json real_to_json(double v) {
  if (std::isinf(v)) return v > 0 ? "+inf" : "-inf";
  return v;
}

double real_from_json(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s == "+inf") return kInf;
    if (s == "-inf") return -kInf;
  }
  parse_fail("expected a number or \"-inf\"/\"+inf\", got " + j.dump());
}

Json to_json(const Interval& piece) {
  return Json::array({real_to_json(piece.lo.value), piece.lo.closed, real_to_json(piece.hi.value), piece.hi.closed});
}

Json to_json(const IntervalSet& set) {
  Json out = Json::array();
  for (const auto& p : set.pieces()) out.push_back(to_json(p));
  return out;
}

IntervalSet interval_set_from_json(const Json& j) {
  if (!j.is_array()) parse_fail("interval set must be an array, got " + j.dump());
  std::vector<Interval> raw;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 4 || !e[1].is_boolean() || !e[3].is_boolean()) {
      parse_fail("interval must be [lo, lo_closed, hi, hi_closed], got " + e.dump());
    }
    raw.push_back({{real_from_json(e[0]), e[1].get<bool>()}, {real_from_json(e[2]), e[3].get<bool>()}});
  }
  return IntervalSet::normalize(raw);
}

Json to_json(const FiniteSet& s) { return s.member_ids(); }

FiniteSet finite_set_from_json(const UniversePtr& universe, const Json& j) {
  if (!j.is_array()) parse_fail("set must be an array of element ids, got " + j.dump());
  std::vector<std::string> ids;
  for (const auto& e : j) {
    if (!e.is_string()) parse_fail("element ids must be strings, got " + e.dump());
    ids.push_back(e.get<std::string>());
  }
  return FiniteSet::from_ids(universe, ids);
}

Json to_json(const Svf& f) {
  Json traj = Json::array();
  for (const auto& t : f.trajectories()) traj.push_back(to_json(t));
  return Json{{"universe", f.universe()->ids()}, {"domain", to_json(f.domain())}, {"trajectories", std::move(traj)}};
}

Svf svf_from_json(const Json& j) {
  if (!j.is_object()) parse_fail("svf must be an object");
  for (const auto& [key, _] : j.items()) {
    if (key != "universe" && key != "domain" && key != "trajectories") parse_fail("unknown svf field '" + key + "'");
  }
  if (!j.contains("universe") || !j.contains("domain") || !j.contains("trajectories")) {
    parse_fail("svf needs universe, domain and trajectories");
  }
  const auto& u = j.at("universe");
  if (!u.is_array()) parse_fail("svf universe must be an array of ids");
  std::vector<std::string> ids;
  for (const auto& e : u) {
    if (!e.is_string()) parse_fail("element ids must be strings, got " + e.dump());
    ids.push_back(e.get<std::string>());
  }
  const auto& t = j.at("trajectories");
  if (!t.is_array()) parse_fail("svf trajectories must be an array");
  std::vector<IntervalSet> trajectories;
  for (const auto& e : t) trajectories.push_back(interval_set_from_json(e));
  return Svf(Universe::make(std::move(ids)), interval_set_from_json(j.at("domain")), std::move(trajectories));
}

Json to_json(const SetSequence& s) {
  Json prefix = Json::array(), cycle = Json::array();
  for (const auto& a : s.prefix()) prefix.push_back(to_json(a));
  for (const auto& a : s.cycle()) cycle.push_back(to_json(a));
  return Json{{"universe", s.universe()->ids()}, {"prefix", std::move(prefix)}, {"cycle", std::move(cycle)}};
}

SetSequence sequence_from_json(const Json& j) {
  if (!j.is_object()) parse_fail("sequence must be an object");
  for (const auto& [key, _] : j.items()) {
    if (key != "universe" && key != "prefix" && key != "cycle") parse_fail("unknown sequence field '" + key + "'");
  }
  if (!j.contains("universe") || !j.contains("cycle")) parse_fail("sequence needs universe and cycle");
  std::vector<std::string> ids;
  for (const auto& e : j.at("universe")) {
    if (!e.is_string()) parse_fail("element ids must be strings, got " + e.dump());
    ids.push_back(e.get<std::string>());
  }
  const auto u = Universe::make(std::move(ids));
  auto sets = [&u](const Json& arr) {
    if (!arr.is_array()) parse_fail("prefix and cycle must be arrays of sets");
    std::vector<FiniteSet> out;
    for (const auto& e : arr) out.push_back(finite_set_from_json(u, e));
    return out;
  };
  return SetSequence(u, j.contains("prefix") ? sets(j.at("prefix")) : std::vector<FiniteSet>{}, sets(j.at("cycle")));
}

Json to_json(const Verdict& v) {
  Json out{{"holds", v.holds}, {"checked_definition", std::string(to_string(v.checked_definition))}};
  out["witness_element"] = v.witness_element ? Json(*v.witness_element) : Json(nullptr);
  out["witness_detail"] = v.witness_detail ? Json(*v.witness_detail) : Json(nullptr);
  return out;
}

Json to_json(const SuiteReport& r) {
  Json out{{"theorem_id", r.theorem_id}, {"trials", r.trials},   {"violations", r.violations},
           {"seed", r.seed},             {"checks", r.checks}};
  out["first_failure"] = r.first_failure ? Json::parse(*r.first_failure) : Json(nullptr);
  return out;
}

}  // namespace svfa
