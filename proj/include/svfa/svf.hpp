#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "svfa/finite_set.hpp"
#include "svfa/interval.hpp"

namespace svfa {

/// A set-valued function of one real variable over a finite universe, stored
/// per element as the set of times at which that element belongs to A(t).
class SetValuedFunction {
 public:
  /// Throws OutOfDomain if some trajectory leaves the domain, ShapeMismatch if
  /// the trajectory count differs from the universe size.
  SetValuedFunction(UniversePtr universe, IntervalSet domain, std::vector<IntervalSet> trajectories);

  const UniversePtr& universe() const { return universe_; }
  const IntervalSet& domain() const { return domain_; }
  std::size_t size() const { return trajectories_.size(); }
  const IntervalSet& trajectory(std::size_t i) const { return trajectories_.at(i); }
  std::span<const IntervalSet> trajectories() const { return trajectories_; }

  friend bool operator==(const SetValuedFunction& a, const SetValuedFunction& b) {
    return a.universe_->same_as(*b.universe_) && a.domain_ == b.domain_ && a.trajectories_ == b.trajectories_;
  }

 private:
  UniversePtr universe_;
  IntervalSet domain_;
  std::vector<IntervalSet> trajectories_;
};

using Svf = SetValuedFunction;

enum class Definition {
  ConvergesAtInfinity,
  ConvergesAtPoint,
  ConvergesFromLeft,
  ConvergesFromRight,
  Continuous,
  ContinuousLeft,
  ContinuousRight,
  SequenceConvergence,
  Injectivity,
  ShiftIdentity,
};

std::string_view to_string(Definition d);

/// Outcome of a decision procedure. A failing verdict always names a witness.
struct Verdict {
  bool holds = true;
  std::optional<std::string> witness_element;
  std::optional<std::string> witness_detail;
  Definition checked_definition = Definition::ConvergesAtInfinity;

  static Verdict pass(Definition d) { return {true, std::nullopt, std::nullopt, d}; }
  static Verdict fail(Definition d, std::string element, std::string detail) {
    return {false, std::move(element), std::move(detail), d};
  }
};

/// A(t). Throws OutOfDomain when t is outside the domain.
FiniteSet svf_at(const Svf& f, double t);

/// {t | x ∈ A(t) △ target}.
IntervalSet delta_trajectory(const Svf& f, const FiniteSet& target, std::size_t x);
IntervalSet delta_trajectory(const Svf& f, const FiniteSet& target, std::string_view x);

Verdict converges_at_infinity(const Svf& f, const FiniteSet& target);
std::optional<FiniteSet> limit_at_infinity(const Svf& f);
/// (limsup, liminf) of A(t) as t -> +inf.
std::pair<FiniteSet, FiniteSet> limsupinf_at_infinity(const Svf& f);

/// Throws IsolatedPoint when the domain does not accumulate at t0 from `side`.
Verdict converges_at(const Svf& f, double t0, const FiniteSet& target, Side side);
std::optional<FiniteSet> limit_at(const Svf& f, double t0, Side side);
/// Throws OutOfDomain when t0 is not in the domain.
Verdict continuous_at(const Svf& f, double t0, Side side);

/// Union over t of A(t).
FiniteSet supremum(const Svf& f);
/// Intersection over t of A(t).
FiniteSet infimum(const Svf& f);

enum class Monotonicity { Expanding, Shrinking, Constant, Neither };
std::string_view to_string(Monotonicity m);
Monotonicity monotonicity(const Svf& f);

// Pointwise set algebra on SVFs sharing universe and domain.
Svf complement(const Svf& f);
Svf svf_union(const Svf& f, const Svf& g);
Svf svf_intersect(const Svf& f, const Svf& g);
/// The constant function t -> s over `domain`.
Svf constant_svf(const FiniteSet& s, IntervalSet domain);

/// Containment of trajectories, i.e. f(t) ⊆ g(t) for every t.
bool pointwise_subset(const Svf& f, const Svf& g);

}  // namespace svfa
