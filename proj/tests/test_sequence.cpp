#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "raised.hpp"
#include "svfa/sequence.hpp"

using namespace svfa;

namespace {

struct Fixture {
  UniversePtr u = Universe::make({"a", "b", "c"});
  FiniteSet set(std::vector<std::string> ids) const { return FiniteSet::from_ids(u, ids); }
  FiniteSet all() const { return FiniteSet::full_of(u); }
  FiniteSet none() const { return FiniteSet(u); }
};

/// Every sequence over `bits` elements with the given prefix and cycle lengths,
/// encoded as a mixed-radix counter over masks.
template <class Fn>
void for_each_sequence(const UniversePtr& u, std::size_t prefix, std::size_t cycle, Fn&& fn) {
  const std::uint64_t masks = std::uint64_t{1} << u->size();
  const std::size_t len = prefix + cycle;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < len; ++i) total *= masks;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<FiniteSet> p, c;
    std::uint64_t rest = code;
    for (std::size_t i = 0; i < len; ++i) {
      auto s = FiniteSet::from_mask(u, rest % masks);
      rest /= masks;
      (i < prefix ? p : c).push_back(std::move(s));
    }
    fn(SetSequence(u, std::move(p), std::move(c)));
  }
}

/// Returns the number of sequence/target pairs checked.
std::size_t exhaustive(std::size_t size, std::size_t max_prefix, std::size_t max_cycle) {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < size; ++i) ids.push_back("e" + std::to_string(i));
  const auto u = Universe::make(ids);
  std::size_t checked = 0;
  for (std::size_t p = 0; p <= max_prefix; ++p) {
    for (std::size_t c = 1; c <= max_cycle; ++c) {
      for_each_sequence(u, p, c, [&](const SetSequence& s) {
        const auto [sup, inf] = seq_limsup_liminf(s);
        REQUIRE(sup == oracle::brute_limsup(s));
        REQUIRE(inf == oracle::brute_liminf(s));
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << size); ++m) {
          const auto a = FiniteSet::from_mask(u, m);
          const bool def = seq_converges_def(s, a).holds;
          const bool squeeze = sup == a && inf == a;
          if (def != squeeze || def != seq_symdiff_vanishes(s, a) || def != oracle::def_seq_converges(s, a)) {
            FAIL("disagreement for " << to_string(a) << " with prefix " << p << ", cycle " << c);
          }
          ++checked;
        }
      });
    }
  }
  return checked;
}

}  // namespace

TEST_CASE("indexing", "[sequence]") {
  Fixture fx;
  const SetSequence s(fx.u, {fx.set({"a"})}, {fx.set({"a", "b"})});
  CHECK(s.at(1) == fx.set({"a"}));
  CHECK(s.at(5) == fx.set({"a", "b"}));
  CHECK(raised([&] { (void)s.at(0); }) == ErrorKind::BadIndex);

  const SetSequence alt(fx.u, {}, {fx.all(), fx.none()});
  CHECK(alt.at(1) == fx.all());
  CHECK(alt.at(2) == fx.none());
  CHECK(alt.at(3) == fx.all());

  const SetSequence k(fx.u, {}, {fx.set({"c"})});
  for (std::size_t n = 1; n < 6; ++n) CHECK(k.at(n) == fx.set({"c"}));

  CHECK(raised([&] { SetSequence(fx.u, {}, {}); }) == ErrorKind::InvalidArgument);
  CHECK(raised([&] { SetSequence(fx.u, {}, {FiniteSet(Universe::make({"z"}))}); }) == ErrorKind::UniverseMismatch);
}

TEST_CASE("superior and inferior limits", "[sequence]") {
  Fixture fx;
  const auto [sup, inf] = seq_limsup_liminf(SetSequence(fx.u, {}, {fx.all(), fx.none()}));
  CHECK(sup == fx.all());
  CHECK(inf == fx.none());
  const auto ab = fx.set({"a", "b"});
  const auto [sup2, inf2] = seq_limsup_liminf(SetSequence(fx.u, {fx.none(), fx.none(), fx.none()}, {ab}));
  CHECK(sup2 == ab);
  CHECK(inf2 == ab);
}

TEST_CASE("convergence examples", "[sequence]") {
  Fixture fx;
  const auto ab = fx.set({"a", "b"});
  CHECK(seq_converges_def(SetSequence(fx.u, {}, {ab}), ab).holds);

  const SetSequence alt(fx.u, {}, {fx.all(), fx.none()});
  for (std::uint64_t m = 0; m < 8; ++m) {
    const auto v = seq_converges_def(alt, FiniteSet::from_mask(fx.u, m));
    CHECK_FALSE(v.holds);
    CHECK(v.witness_element.has_value());
    CHECK_FALSE(seq_symdiff_vanishes(alt, FiniteSet::from_mask(fx.u, m)));
  }
  const auto v = seq_converges_def(alt, fx.none());
  CHECK(v.witness_element == "a");

  const SetSequence settle(fx.u, {fx.set({"a"})}, {fx.set({"b"})});
  CHECK(seq_converges_def(settle, fx.set({"b"})).holds);
  CHECK(seq_symdiff_vanishes(settle, fx.set({"b"})));
  CHECK_FALSE(seq_converges_def(settle, fx.set({"a", "b"})).holds);

  const auto mapped = settle.map(fx.set({"b"}), SetOp::Xor);
  CHECK(mapped.at(1) == fx.set({"a", "b"}));
  CHECK(mapped.at(7).empty());
}

TEST_CASE("limits match the brute-force index oracle", "[sequence][property]") {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto s = random_sequence(seed, {6, 4, 3});
    const auto [sup, inf] = seq_limsup_liminf(s);
    REQUIRE(sup == oracle::brute_limsup(s));
    REQUIRE(inf == oracle::brute_liminf(s));
    REQUIRE(is_subset(inf, sup));
    const bool converges = seq_converges_def(s, sup).holds;
    REQUIRE(converges == (sup == inf));
    REQUIRE(converges == oracle::def_seq_converges(s, sup));
    Rng rng(seed);
    const auto a = FiniteSet::from_mask(s.universe(), rng.below(64));
    REQUIRE(seq_converges_def(s, a).holds == oracle::def_seq_converges(s, a));
  }
}

TEST_CASE("exhaustive equivalence on small universes", "[sequence][property]") {
  CHECK(exhaustive(1, 3, 3) > 0);
  CHECK(exhaustive(2, 3, 3) > 0);
  CHECK(exhaustive(3, 2, 3) > 0);
  CHECK(exhaustive(4, 2, 2) > 0);
}

TEST_CASE("equivalence suite", "[sequence]") {
  const auto r = seq_equivalence_suite(1000, 3, 6);
  CHECK(r.violations == 0);
  CHECK_FALSE(r.first_failure.has_value());
  CHECK(r.trials == 1000);
  CHECK(seq_equivalence_suite(200, 9, 6, true).checks == seq_equivalence_suite(200, 9, 6, false).checks);
  CHECK(raised([] { (void)seq_equivalence_suite(0, 1, 6); }) == ErrorKind::InvalidArgument);
}
