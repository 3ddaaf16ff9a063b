#include "svfa/geometry.hpp"

#include <cmath>

#include "svfa/error.hpp"

namespace svfa {

namespace {

struct KindName {
  RadialKind kind;
  std::string_view name;
};

constexpr std::array<KindName, 9> kKindNames{{
    {RadialKind::OpenInner, "OPEN_INNER"},
    {RadialKind::ClosedInner, "CLOSED_INNER"},
    {RadialKind::ClosedOuter, "CLOSED_OUTER"},
    {RadialKind::OpenOuter, "OPEN_OUTER"},
    {RadialKind::OpenScale, "OPEN_SCALE"},
    {RadialKind::ClosedScale, "CLOSED_SCALE"},
    {RadialKind::GrowOpen, "GROW_OPEN"},
    {RadialKind::Point, "POINT"},
    {RadialKind::Constant, "CONSTANT"},
}};

void require_payload(const Universe& u) {
  if (!u.has_payload()) throw Error(ErrorKind::InvalidUniverse, "universe carries no radii or coordinates");
}

}  // namespace

std::string_view to_string(RadialKind kind) {
  for (const auto& k : kKindNames) {
    if (k.kind == kind) return k.name;
  }
  return "?";
}

RadialKind radial_kind_from_string(std::string_view name) {
  for (const auto& k : kKindNames) {
    if (k.name == name) return k.kind;
  }
  throw Error(ErrorKind::UnsupportedKind, "unknown family '" + std::string(name) + "'");
}

IntervalSet family_domain(RadialKind kind) {
  switch (kind) {
    case RadialKind::OpenInner:
    case RadialKind::ClosedInner:
    case RadialKind::ClosedOuter:
    case RadialKind::OpenOuter:
      return IntervalSet::ray_above(1.0, false);
    case RadialKind::OpenScale:
    case RadialKind::ClosedScale:
    case RadialKind::GrowOpen:
      return IntervalSet::ray_above(0.0, false);
    case RadialKind::Point:
    case RadialKind::Constant:
      return IntervalSet::real_line();
  }
  return {};
}

IntervalSet radial_trajectory(RadialKind kind, double rho) {
  if (!(rho >= 0.0) || std::isinf(rho)) {
    throw Error(ErrorKind::InvalidArgument, "radius must be finite and non-negative, got " + format_real(rho));
  }
  const auto domain = family_domain(kind);
  switch (kind) {
    case RadialKind::OpenInner:
      // ρ < 1 - 1/t  <=>  t > 1/(1-ρ) for ρ < 1; never for ρ >= 1.
      if (rho >= 1.0) return {};
      return domain & IntervalSet::ray_above(1.0 / (1.0 - rho), false);
    case RadialKind::ClosedInner:
      if (rho >= 1.0) return {};
      return domain & IntervalSet::ray_above(1.0 / (1.0 - rho), true);
    case RadialKind::ClosedOuter:
      // ρ <= 1 + 1/t holds for every t > 1 once ρ <= 1.
      if (rho <= 1.0) return domain;
      return domain & IntervalSet::ray_below(1.0 / (rho - 1.0), true);
    case RadialKind::OpenOuter:
      if (rho <= 1.0) return domain;
      return domain & IntervalSet::ray_below(1.0 / (rho - 1.0), false);
    case RadialKind::OpenScale:
    case RadialKind::GrowOpen:
      return domain & IntervalSet::ray_above(rho, false);
    case RadialKind::ClosedScale:
      return domain & IntervalSet::ray_above(rho, true);
    case RadialKind::Point:
    case RadialKind::Constant:
      break;
  }
  throw Error(ErrorKind::UnsupportedKind,
              std::string(to_string(kind)) + " has no radial trajectory; use point_trajectory or constant_family");
}

IntervalSet point_trajectory(double x, const IntervalSet& domain) {
  return domain.contains(x) ? IntervalSet::point(x) : IntervalSet{};
}

UniversePtr radial_universe(std::span<const double> values) {
  std::vector<std::string> ids;
  std::vector<std::vector<double>> payload;
  for (double v : values) {
    ids.push_back(format_real(v));
    payload.push_back({v});
  }
  return Universe::make(std::move(ids), std::move(payload));
}

UniversePtr planar_universe(std::span<const std::array<double, 2>> points) {
  std::vector<std::string> ids;
  std::vector<std::vector<double>> payload;
  for (const auto& [x, y] : points) {
    ids.push_back("(" + format_real(x) + "," + format_real(y) + ")");
    payload.push_back({x, y});
  }
  return Universe::make(std::move(ids), std::move(payload));
}

Svf build_svf(RadialKind kind, const UniversePtr& universe) {
  require_payload(*universe);
  const auto domain = family_domain(kind);
  std::vector<IntervalSet> trajectories;
  trajectories.reserve(universe->size());
  for (std::size_t i = 0; i < universe->size(); ++i) {
    if (kind == RadialKind::Point) {
      trajectories.push_back(point_trajectory(universe->payload(i)[0], domain));
    } else if (kind == RadialKind::Constant) {
      throw Error(ErrorKind::UnsupportedKind, "CONSTANT families need a member mask; use constant_family");
    } else {
      trajectories.push_back(radial_trajectory(kind, universe->radius(i)));
    }
  }
  return Svf(universe, domain, std::move(trajectories));
}

Svf build_svf(RadialKind kind, std::span<const double> values) {
  if (values.empty()) throw Error(ErrorKind::InvalidUniverse, "family needs at least one element");
  return build_svf(kind, radial_universe(values));
}

Svf constant_family(const FiniteSet& members) {
  return constant_svf(members, family_domain(RadialKind::Constant));
}

FiniteSet open_disk(const UniversePtr& universe, double radius) {
  require_payload(*universe);
  FiniteSet out(universe);
  for (std::size_t i = 0; i < universe->size(); ++i) out.set(i, universe->radius(i) < radius);
  return out;
}

FiniteSet closed_disk(const UniversePtr& universe, double radius) {
  require_payload(*universe);
  FiniteSet out(universe);
  for (std::size_t i = 0; i < universe->size(); ++i) out.set(i, universe->radius(i) <= radius);
  return out;
}

}  // namespace svfa
