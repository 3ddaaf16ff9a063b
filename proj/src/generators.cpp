#include "gen_internal.hpp"
#include "svfa/error.hpp"

namespace svfa {

namespace gen {

// Random interval with both ends on the grid {base + k*step : k in [kmin, kmax]}.
Interval grid_piece(Rng& rng, double base, std::int64_t kmin, std::int64_t kmax) {
  auto a = rng.between(kmin, kmax);
  auto b = rng.between(kmin, kmax);
  if (a > b) std::swap(a, b);
  const double lo = base + kGridStep * static_cast<double>(a);
  const double hi = base + kGridStep * static_cast<double>(b);
  if (a == b) return {Endpoint::closed_at(lo), Endpoint::closed_at(hi)};
  return {{lo, rng.coin()}, {hi, rng.coin()}};
}

IntervalSet grid_junk(Rng& rng, double base, std::int64_t kmin, std::int64_t kmax, std::uint64_t max_pieces) {
  std::vector<Interval> raw;
  const auto n = rng.below(max_pieces + 1);
  for (std::uint64_t i = 0; i < n; ++i) raw.push_back(grid_piece(rng, base, kmin, kmax));
  return IntervalSet::normalize(raw);
}

double grid_at(Rng& rng, double base, std::int64_t kmin, std::int64_t kmax) {
  return base + kGridStep * static_cast<double>(rng.between(kmin, kmax));
}

FiniteSet random_mask(Rng& rng, const UniversePtr& universe) {
  FiniteSet out(universe);
  for (std::size_t i = 0; i < universe->size(); ++i) out.set(i, rng.coin());
  return out;
}

Svf settled_near(Rng& rng, const UniversePtr& universe, double t0, const FiniteSet& germ, bool continuous) {
  std::vector<IntervalSet> trajectories;
  for (std::size_t i = 0; i < universe->size(); ++i) {
    const double delta = kGridStep * static_cast<double>(rng.between(1, 4));
    const auto hood = IntervalSet::open(t0 - delta, t0 + delta);
    auto traj = grid_junk(rng, t0, -6, 6, 3) - IntervalSet::closed(t0 - delta, t0 + delta);
    if (germ.contains(i)) traj = traj | (hood - IntervalSet::point(t0));
    if (continuous ? germ.contains(i) : rng.coin()) traj = traj | IntervalSet::point(t0);
    trajectories.push_back(std::move(traj));
  }
  return Svf(universe, IntervalSet::real_line(), std::move(trajectories));
}

Svf random_at_infinity(Rng& rng, const UniversePtr& universe) {
  switch (rng.below(3)) {
    case 0: return random_svf(rng, universe, SvfProfile::eventually_constant());
    case 1: return random_svf(rng, universe, SvfProfile::bounded_noise());
    default: return random_svf(rng, universe, SvfProfile::monotone());
  }
}

}  // namespace gen

namespace {

using namespace gen;

// Profiles at infinity live on (0, inf) with endpoints in [0, 8].
IntervalSet eventually_constant_traj(Rng& rng, const IntervalSet& domain) {
  auto traj = grid_junk(rng, 0.0, 0, 12, 3);
  if (rng.coin()) traj = traj | IntervalSet::ray_above(grid_at(rng, 0.0, 8, 16), rng.coin());
  return traj & domain;
}

IntervalSet bounded_noise_traj(Rng& rng, const IntervalSet& domain) {
  auto traj = grid_junk(rng, 0.0, 0, 16, 4);
  if (rng.chance(1, 3)) traj = traj | IntervalSet::ray_above(grid_at(rng, 0.0, 0, 16), rng.coin());
  if (rng.chance(1, 3)) traj = traj - grid_junk(rng, 0.0, 0, 16, 2);
  return traj & domain;
}

IntervalSet monotone_traj(Rng& rng, const IntervalSet& domain, bool expanding) {
  switch (rng.below(4)) {
    case 0: return {};
    case 1: return domain;
    default: break;
  }
  const double c = grid_at(rng, 0.0, 0, 16);
  return domain & (expanding ? IntervalSet::ray_above(c, rng.coin()) : IntervalSet::ray_below(c, rng.coin()));
}

// Endpoints on t0 + k/2, |k| <= 4, with t0 itself drawn a third of the time.
IntervalSet point_germ_traj(Rng& rng, double t0) {
  std::vector<Interval> raw;
  const auto n = rng.below(4);
  for (std::uint64_t i = 0; i < n; ++i) {
    auto piece = grid_piece(rng, t0, -4, 4);
    if (rng.chance(1, 3)) {
      if (rng.coin() && piece.hi.value > t0) piece.lo = {t0, rng.coin()};
      else if (piece.lo.value < t0) piece.hi = {t0, rng.coin()};
    }
    raw.push_back(piece);
  }
  if (rng.chance(1, 6)) raw.push_back({Endpoint::open(-kInf), {t0 + kGridStep * static_cast<double>(rng.between(-4, 0)), rng.coin()}});
  if (rng.chance(1, 6)) raw.push_back({{t0 + kGridStep * static_cast<double>(rng.between(0, 4)), rng.coin()}, Endpoint::open(kInf)});
  auto traj = IntervalSet::normalize(raw);
  switch (rng.below(4)) {
    case 0: traj = traj | IntervalSet::point(t0); break;
    case 1: traj = traj - IntervalSet::point(t0); break;
    default: break;
  }
  return traj;
}

}  // namespace

UniversePtr indexed_universe(std::size_t size) {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < size; ++i) ids.push_back("x" + std::to_string(i));
  return Universe::make(std::move(ids));
}

Svf random_svf(Rng& rng, const UniversePtr& universe, SvfProfile profile) {
  using Kind = SvfProfile::Kind;
  const IntervalSet domain =
      profile.kind == Kind::PointGerm ? IntervalSet::real_line() : IntervalSet::ray_above(0.0, false);
  const bool expanding = rng.coin();
  std::vector<IntervalSet> trajectories;
  for (std::size_t i = 0; i < universe->size(); ++i) {
    switch (profile.kind) {
      case Kind::EventuallyConstant: trajectories.push_back(eventually_constant_traj(rng, domain)); break;
      case Kind::Monotone: trajectories.push_back(monotone_traj(rng, domain, expanding)); break;
      case Kind::BoundedNoise: trajectories.push_back(bounded_noise_traj(rng, domain)); break;
      case Kind::PointGerm: trajectories.push_back(point_germ_traj(rng, profile.t0)); break;
    }
  }
  return Svf(universe, domain, std::move(trajectories));
}

Svf random_svf(std::uint64_t seed, std::size_t universe_size, SvfProfile profile) {
  if (universe_size == 0) throw Error(ErrorKind::InvalidArgument, "universe_size must be at least 1");
  Rng rng(seed);
  return random_svf(rng, indexed_universe(universe_size), profile);
}

}  // namespace svfa
