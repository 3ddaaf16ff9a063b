#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "svfa/random.hpp"
#include "svfa/svf.hpp"

namespace svfa {

struct SuiteReport {
  std::string theorem_id;
  std::size_t trials = 0;
  std::size_t violations = 0;
  std::uint64_t seed = 0;
  /// Serialized instance (JSON text) of the lowest-indexed failing trial.
  std::optional<std::string> first_failure;
  /// Individual conclusions evaluated across all trials.
  std::size_t checks = 0;
};

// Instance generation -------------------------------------------------------

struct SvfProfile {
  enum class Kind { EventuallyConstant, Monotone, BoundedNoise, PointGerm } kind = Kind::EventuallyConstant;
  double t0 = 0.0;  // PointGerm only

  static SvfProfile eventually_constant() { return {Kind::EventuallyConstant, 0.0}; }
  static SvfProfile monotone() { return {Kind::Monotone, 0.0}; }
  static SvfProfile bounded_noise() { return {Kind::BoundedNoise, 0.0}; }
  static SvfProfile point_germ(double t0) { return {Kind::PointGerm, t0}; }
};

/// Universe of `size` elements labelled x0, x1, ...
UniversePtr indexed_universe(std::size_t size);

/// Deterministic in (seed, size, profile). Profiles away from a point use the
/// domain (0, inf) with endpoints on a half-integer grid in [0, 8]; PointGerm
/// uses the real line with endpoints on t0 + k/2, |k| <= 4, biased towards t0.
Svf random_svf(std::uint64_t seed, std::size_t universe_size, SvfProfile profile);
/// Same, drawing from an existing generator and universe.
Svf random_svf(Rng& rng, const UniversePtr& universe, SvfProfile profile);

// Theorem suites -------------------------------------------------------------

/// Registered tags, in report order.
std::span<const std::string_view> theorem_tags();

/// Generates `trials` instances that satisfy the named theorem's hypotheses by
/// construction, decides the conclusion and counts violations. Trial i is
/// seeded by (seed, i), so results do not depend on `parallel`.
/// Throws UnknownTheorem for an unregistered tag.
SuiteReport run_theorem_suite(std::string_view theorem_id, std::size_t trials, std::uint64_t seed,
                              std::size_t universe_size, bool parallel = false);

namespace detail {

/// One trial: returns a description of the instance when the conclusion fails.
struct TrialResult {
  std::size_t checks = 0;
  std::optional<std::string> failure;
};

template <class TrialFn>
SuiteReport run_trials(std::string_view id, std::size_t trials, std::uint64_t seed, bool parallel, TrialFn&& fn);

}  // namespace detail

}  // namespace svfa

#include "svfa/detail/run_trials.hpp"
