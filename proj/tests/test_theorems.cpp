#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "raised.hpp"
#include "svfa/geometry.hpp"
#include "svfa/theorems.hpp"

using namespace svfa;

TEST_CASE("registered tags", "[theorems]") {
  const auto tags = theorem_tags();
  const std::vector<std::string_view> expected{
      "COMPLEMENT_DUALITY", "LIMIT_MEMBERSHIP", "UNIQUENESS",  "UNION_INTERSECTION", "EXPANDING_SUP",
      "SHRINKING_INF",      "SQUEEZE",          "UPPER_BOUND", "ORDER",              "EVENTUAL_EQ",
      "NONLIMIT_WITNESS",   "POINT_ANALOGUES",  "CONTINUITY_ANALOGUES", "COINCIDE"};
  for (auto tag : expected) CHECK(std::find(tags.begin(), tags.end(), tag) != tags.end());
  CHECK(std::find(tags.begin(), tags.end(), "SEQ_EQUIVALENCE") != tags.end());
}

TEST_CASE("every suite passes at the reference seed", "[theorems]") {
  for (auto tag : theorem_tags()) {
    const auto r = run_theorem_suite(tag, 300, 7, 6);
    INFO(tag << ": " << r.first_failure.value_or(""));
    CHECK(r.theorem_id == tag);
    CHECK(r.trials == 300);
    CHECK(r.seed == 7);
    CHECK(r.violations == 0);
    CHECK_FALSE(r.first_failure.has_value());
    CHECK(r.checks >= r.trials);
  }
}

TEST_CASE("reference examples", "[theorems]") {
  CHECK(run_theorem_suite("UNIQUENESS", 1000, 7, 6).violations == 0);
  CHECK(run_theorem_suite("SQUEEZE", 1000, 7, 6).violations == 0);
  CHECK(run_theorem_suite("COMPLEMENT_DUALITY", 1, 7, 6).violations == 0);

  const auto b = build_svf(RadialKind::ClosedInner, std::vector<double>{0.25, 0.5, 0.9, 1.0, 1.1, 1.5});
  const auto open = open_disk(b.universe());
  for (const auto& target : {open, closed_disk(b.universe())}) {
    CHECK(converges_at_infinity(b, target).holds == converges_at_infinity(complement(b), complement(target)).holds);
  }
}

TEST_CASE("suites are deterministic and independent of threading", "[theorems]") {
  for (auto tag : {"SQUEEZE", "POINT_ANALOGUES", "SEQ_EQUIVALENCE"}) {
    const auto a = run_theorem_suite(tag, 150, 99, 5, false);
    const auto b = run_theorem_suite(tag, 150, 99, 5, true);
    const auto c = run_theorem_suite(tag, 150, 99, 5, false);
    CHECK(a.checks == b.checks);
    CHECK(a.checks == c.checks);
    CHECK(a.violations == b.violations);
  }
}

TEST_CASE("argument errors", "[theorems]") {
  CHECK(raised([] { (void)run_theorem_suite("FERMAT", 10, 1, 6); }) == ErrorKind::UnknownTheorem);
  CHECK(raised([] { (void)run_theorem_suite("SQUEEZE", 0, 1, 6); }) == ErrorKind::InvalidArgument);
  CHECK(raised([] { (void)run_theorem_suite("SQUEEZE", 10, 1, 0); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("the trial runner reports the lowest failing index", "[theorems]") {
  const auto fn = [](Rng& rng) {
    detail::TrialResult r;
    r.checks = 1;
    const auto v = rng.below(1000);
    if (v % 7 == 0) r.failure = std::to_string(v);
    return r;
  };
  const auto serial = detail::run_trials("PROBE", 400, 5, false, fn);
  const auto parallel = detail::run_trials("PROBE", 400, 5, true, fn);
  CHECK(serial.violations > 0);
  CHECK(serial.violations == parallel.violations);
  CHECK(serial.first_failure == parallel.first_failure);
  CHECK(serial.checks == 400);

  std::optional<std::string> first;
  for (std::uint64_t i = 0; i < 400 && !first; ++i) {
    auto rng = Rng::for_trial(5, i);
    first = fn(rng).failure;
  }
  CHECK(serial.first_failure == first);
}

TEST_CASE("random instances are reproducible", "[theorems]") {
  const auto u = indexed_universe(4);
  CHECK(u->id(0) == "x0");
  CHECK(u->id(3) == "x3");
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    for (auto profile : {SvfProfile::eventually_constant(), SvfProfile::monotone(), SvfProfile::bounded_noise(),
                         SvfProfile::point_germ(0.5)}) {
      REQUIRE(random_svf(seed, 4, profile) == random_svf(seed, 4, profile));
    }
    const auto g = random_svf(seed, 4, SvfProfile::point_germ(0.5));
    REQUIRE(g.domain() == IntervalSet::real_line());
    REQUIRE(limit_at(g, 0.5, Side::Left).has_value());
    REQUIRE(limit_at(g, 0.5, Side::Right).has_value());
  }
}
