#include "svfa/svf.hpp"

#include "svfa/error.hpp"

namespace svfa {

SetValuedFunction::SetValuedFunction(UniversePtr universe, IntervalSet domain, std::vector<IntervalSet> trajectories)
    : universe_(std::move(universe)), domain_(std::move(domain)), trajectories_(std::move(trajectories)) {
  if (!universe_) throw Error(ErrorKind::InvalidUniverse, "null universe");
  if (trajectories_.size() != universe_->size()) {
    throw Error(ErrorKind::ShapeMismatch, "one trajectory per universe element is required");
  }
  for (std::size_t i = 0; i < trajectories_.size(); ++i) {
    if (!is_subset(trajectories_[i], domain_)) {
      throw Error(ErrorKind::OutOfDomain, "trajectory of '" + universe_->id(i) + "' leaves the domain");
    }
  }
}

std::string_view to_string(Definition d) {
  switch (d) {
    case Definition::ConvergesAtInfinity: return "converges_at_infinity";
    case Definition::ConvergesAtPoint: return "converges_at_point";
    case Definition::ConvergesFromLeft: return "converges_from_left";
    case Definition::ConvergesFromRight: return "converges_from_right";
    case Definition::Continuous: return "continuous";
    case Definition::ContinuousLeft: return "continuous_left";
    case Definition::ContinuousRight: return "continuous_right";
    case Definition::SequenceConvergence: return "sequence_convergence";
    case Definition::Injectivity: return "injectivity";
    case Definition::ShiftIdentity: return "shift_identity";
  }
  return "?";
}

std::string_view to_string(Monotonicity m) {
  switch (m) {
    case Monotonicity::Expanding: return "EXPANDING";
    case Monotonicity::Shrinking: return "SHRINKING";
    case Monotonicity::Constant: return "CONSTANT";
    case Monotonicity::Neither: return "NEITHER";
  }
  return "?";
}

namespace {

void require_universe(const Svf& f, const FiniteSet& s) {
  if (!f.universe()->same_as(*s.universe())) {
    throw Error(ErrorKind::UniverseMismatch, "target set lives in a different universe");
  }
}

void require_compatible(const Svf& f, const Svf& g) {
  if (!f.universe()->same_as(*g.universe())) throw Error(ErrorKind::UniverseMismatch, "SVFs use different universes");
  if (!(f.domain() == g.domain())) throw Error(ErrorKind::DomainMismatch, "SVFs use different domains");
}

void require_unbounded_domain(const Svf& f) { (void)bounded_above(IntervalSet{}, f.domain()); }

void require_accumulating_domain(const Svf& f, double t0, Side side) {
  if (!accumulates_at(f.domain(), t0, side, true)) {
    throw Error(ErrorKind::IsolatedPoint, "domain " + to_string(f.domain()) + " does not accumulate at " +
                                              format_real(t0) + " from side " + std::string(to_string(side)));
  }
}

Definition point_definition(Side side) {
  switch (side) {
    case Side::Left: return Definition::ConvergesFromLeft;
    case Side::Right: return Definition::ConvergesFromRight;
    case Side::Both: break;
  }
  return Definition::ConvergesAtPoint;
}

Definition continuity_definition(Side side) {
  switch (side) {
    case Side::Left: return Definition::ContinuousLeft;
    case Side::Right: return Definition::ContinuousRight;
    case Side::Both: break;
  }
  return Definition::Continuous;
}

// The first piece of `delta` that touches every small neighbourhood of t0.
std::string accumulating_piece(const IntervalSet& delta, double t0, Side side, bool punctured) {
  for (const auto& p : delta.pieces()) {
    if (accumulates_at(IntervalSet::normalize({p}), t0, side, punctured)) return to_string(p);
  }
  return to_string(delta);
}

FiniteSet germ_mask(const Svf& f, GermSite site) {
  FiniteSet out(f.universe());
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (germ(f.trajectory(i), site) == Germ::In) out.set(i);
  }
  return out;
}

IntervalSet up_closure(const IntervalSet& traj, const IntervalSet& domain) {
  if (traj.empty()) return traj;
  const Endpoint lo = traj.pieces().front().lo;
  if (lo.value == -kInf) return domain;
  return domain & IntervalSet::ray_above(lo.value, lo.closed);
}

IntervalSet down_closure(const IntervalSet& traj, const IntervalSet& domain) {
  if (traj.empty()) return traj;
  const Endpoint hi = traj.pieces().back().hi;
  if (hi.value == kInf) return domain;
  return domain & IntervalSet::ray_below(hi.value, hi.closed);
}

}  // namespace

FiniteSet svf_at(const Svf& f, double t) {
  if (!f.domain().contains(t)) {
    throw Error(ErrorKind::OutOfDomain, format_real(t) + " is outside the domain " + to_string(f.domain()));
  }
  FiniteSet out(f.universe());
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f.trajectory(i).contains(t)) out.set(i);
  }
  return out;
}

IntervalSet delta_trajectory(const Svf& f, const FiniteSet& target, std::size_t x) {
  require_universe(f, target);
  const auto& traj = f.trajectory(x);
  return target.contains(x) ? f.domain() - traj : traj;
}

IntervalSet delta_trajectory(const Svf& f, const FiniteSet& target, std::string_view x) {
  const auto i = f.universe()->index_of(x);
  if (!i) throw Error(ErrorKind::UniverseMismatch, "element '" + std::string(x) + "' is not in the universe");
  return delta_trajectory(f, target, *i);
}

Verdict converges_at_infinity(const Svf& f, const FiniteSet& target) {
  require_universe(f, target);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto delta = delta_trajectory(f, target, i);
    if (!bounded_above(delta, f.domain())) {
      return Verdict::fail(Definition::ConvergesAtInfinity, f.universe()->id(i),
                           "symmetric difference contains " + to_string(delta.pieces().back()) + " for all large t");
    }
  }
  return Verdict::pass(Definition::ConvergesAtInfinity);
}

std::optional<FiniteSet> limit_at_infinity(const Svf& f) {
  require_unbounded_domain(f);
  for (const auto& traj : f.trajectories()) {
    if (germ(traj, GermSite::plus_infinity()) == Germ::Oscillates) return std::nullopt;
  }
  auto candidate = germ_mask(f, GermSite::plus_infinity());
  if (!converges_at_infinity(f, candidate).holds) return std::nullopt;
  return candidate;
}

std::pair<FiniteSet, FiniteSet> limsupinf_at_infinity(const Svf& f) {
  require_unbounded_domain(f);
  FiniteSet limsup(f.universe());
  FiniteSet liminf(f.universe());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto& traj = f.trajectory(i);
    // Unbounded above and containing a terminal ray coincide for finite unions.
    if (traj.sup() == kInf) limsup.set(i);
    if (!traj.empty() && traj.pieces().back().hi.value == kInf) liminf.set(i);
  }
  return {limsup, liminf};
}

Verdict converges_at(const Svf& f, double t0, const FiniteSet& target, Side side) {
  require_universe(f, target);
  require_accumulating_domain(f, t0, side);
  const auto def = point_definition(side);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto delta = delta_trajectory(f, target, i);
    if (accumulates_at(delta, t0, side, true)) {
      return Verdict::fail(def, f.universe()->id(i),
                           "symmetric difference contains " + accumulating_piece(delta, t0, side, true) +
                               ", which accumulates at " + format_real(t0));
    }
  }
  return Verdict::pass(def);
}

std::optional<FiniteSet> limit_at(const Svf& f, double t0, Side side) {
  if (side != Side::Both) {
    require_accumulating_domain(f, t0, side);
    auto candidate = germ_mask(f, side == Side::Left ? GermSite::left_of(t0) : GermSite::right_of(t0));
    if (!converges_at(f, t0, candidate, side).holds) return std::nullopt;
    return candidate;
  }
  require_accumulating_domain(f, t0, Side::Both);
  // Two-sided limits go through the left/right coincidence; a side the domain
  // never approaches from imposes no condition.
  std::optional<FiniteSet> left;
  std::optional<FiniteSet> right;
  const bool has_left = accumulates_at(f.domain(), t0, Side::Left, true);
  const bool has_right = accumulates_at(f.domain(), t0, Side::Right, true);
  if (has_left) {
    left = limit_at(f, t0, Side::Left);
    if (!left) return std::nullopt;
  }
  if (has_right) {
    right = limit_at(f, t0, Side::Right);
    if (!right) return std::nullopt;
  }
  if (left && right) return *left == *right ? left : std::nullopt;
  return left ? left : right;
}

Verdict continuous_at(const Svf& f, double t0, Side side) {
  const auto here = svf_at(f, t0);
  const auto def = continuity_definition(side);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto delta = delta_trajectory(f, here, i);
    if (accumulates_at(delta, t0, side, false)) {
      return Verdict::fail(def, f.universe()->id(i),
                           "symmetric difference with A(" + format_real(t0) + ") contains " +
                               accumulating_piece(delta, t0, side, false));
    }
  }
  return Verdict::pass(def);
}

FiniteSet supremum(const Svf& f) {
  FiniteSet out(f.universe());
  for (std::size_t i = 0; i < f.size(); ++i) out.set(i, !f.trajectory(i).empty());
  return out;
}

FiniteSet infimum(const Svf& f) {
  FiniteSet out(f.universe());
  for (std::size_t i = 0; i < f.size(); ++i) out.set(i, f.trajectory(i) == f.domain());
  return out;
}

Monotonicity monotonicity(const Svf& f) {
  bool expanding = true;
  bool shrinking = true;
  for (const auto& traj : f.trajectories()) {
    expanding = expanding && traj == up_closure(traj, f.domain());
    shrinking = shrinking && traj == down_closure(traj, f.domain());
  }
  if (expanding && shrinking) return Monotonicity::Constant;
  if (expanding) return Monotonicity::Expanding;
  if (shrinking) return Monotonicity::Shrinking;
  return Monotonicity::Neither;
}

Svf complement(const Svf& f) {
  std::vector<IntervalSet> out;
  out.reserve(f.size());
  for (const auto& traj : f.trajectories()) out.push_back(f.domain() - traj);
  return Svf(f.universe(), f.domain(), std::move(out));
}

Svf svf_union(const Svf& f, const Svf& g) {
  require_compatible(f, g);
  std::vector<IntervalSet> out;
  for (std::size_t i = 0; i < f.size(); ++i) out.push_back(f.trajectory(i) | g.trajectory(i));
  return Svf(f.universe(), f.domain(), std::move(out));
}

Svf svf_intersect(const Svf& f, const Svf& g) {
  require_compatible(f, g);
  std::vector<IntervalSet> out;
  for (std::size_t i = 0; i < f.size(); ++i) out.push_back(f.trajectory(i) & g.trajectory(i));
  return Svf(f.universe(), f.domain(), std::move(out));
}

Svf constant_svf(const FiniteSet& s, IntervalSet domain) {
  std::vector<IntervalSet> out;
  for (std::size_t i = 0; i < s.universe_size(); ++i) out.push_back(s.contains(i) ? domain : IntervalSet{});
  return Svf(s.universe(), std::move(domain), std::move(out));
}

bool pointwise_subset(const Svf& f, const Svf& g) {
  require_compatible(f, g);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!is_subset(f.trajectory(i), g.trajectory(i))) return false;
  }
  return true;
}

}  // namespace svfa
