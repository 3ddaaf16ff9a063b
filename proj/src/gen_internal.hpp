#pragma once

#include "svfa/theorems.hpp"

// Building blocks shared by the instance generator and the theorem suites.
namespace svfa::gen {

inline constexpr double kGridStep = 0.5;

Interval grid_piece(Rng& rng, double base, std::int64_t kmin, std::int64_t kmax);
/// Up to max_pieces random grid intervals.
IntervalSet grid_junk(Rng& rng, double base, std::int64_t kmin, std::int64_t kmax, std::uint64_t max_pieces);
double grid_at(Rng& rng, double base, std::int64_t kmin, std::int64_t kmax);

FiniteSet random_mask(Rng& rng, const UniversePtr& universe);

/// SVF on the real line equal to `germ` on a punctured neighbourhood of t0,
/// with unrelated behaviour further out. When `continuous`, A(t0) = germ too.
Svf settled_near(Rng& rng, const UniversePtr& universe, double t0, const FiniteSet& germ, bool continuous);

/// One of the three profiles at infinity, chosen at random.
Svf random_at_infinity(Rng& rng, const UniversePtr& universe);

}  // namespace svfa::gen
