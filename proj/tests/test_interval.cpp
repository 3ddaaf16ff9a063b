#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "svfa/error.hpp"
#include "svfa/interval.hpp"

using namespace svfa;

namespace {

Interval cc(double a, double b) { return {Endpoint::closed_at(a), Endpoint::closed_at(b)}; }
Interval co(double a, double b) { return {Endpoint::closed_at(a), Endpoint::open(b)}; }
Interval oc(double a, double b) { return {Endpoint::open(a), Endpoint::closed_at(b)}; }
Interval oo(double a, double b) { return {Endpoint::open(a), Endpoint::open(b)}; }

bool canonical(const IntervalSet& s) {
  const auto ps = s.pieces();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const auto& p = ps[i];
    if (p.lo.value > p.hi.value) return false;
    if (p.lo.value == p.hi.value && !(p.lo.closed && p.hi.closed)) return false;
    if (std::isinf(p.lo.value) && p.lo.closed) return false;
    if (std::isinf(p.hi.value) && p.hi.closed) return false;
    if (i == 0) continue;
    const auto& q = ps[i - 1];
    if (q.hi.value > p.lo.value) return false;
    if (q.hi.value == p.lo.value && (q.hi.closed || p.lo.closed)) return false;
  }
  return true;
}

bool oracle_op(bool a, bool b, SetOp op) {
  switch (op) {
    case SetOp::Union: return a || b;
    case SetOp::Intersect: return a && b;
    case SetOp::Xor: return a != b;
    case SetOp::Minus: return a && !b;
  }
  return false;
}

}  // namespace

TEST_CASE("normalize merges overlaps and keeps open gaps", "[interval]") {
  CHECK(IntervalSet::normalize({cc(1, 3), cc(2, 5)}) == IntervalSet::closed(1, 5));

  const auto split = IntervalSet::normalize({co(1, 2), oc(2, 3)});
  REQUIRE(split.size() == 2);
  CHECK(split.pieces()[0] == co(1, 2));
  CHECK(split.pieces()[1] == oc(2, 3));

  CHECK(IntervalSet::normalize(std::span<const Interval>{}).empty());
  CHECK(IntervalSet::normalize({cc(1, 2), oc(2, 3)}) == IntervalSet::closed(1, 3));
  CHECK(IntervalSet::normalize({cc(2, 2), oo(1, 2)}) == IntervalSet::open_closed(1, 2));
}

TEST_CASE("normalize rejects malformed pieces", "[interval]") {
  const auto kind_of = [](std::initializer_list<Interval> raw) {
    try {
      (void)IntervalSet::normalize(raw);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  CHECK(kind_of({cc(3, 1)}) == ErrorKind::MalformedInterval);
  CHECK(kind_of({co(1, 1)}) == ErrorKind::MalformedInterval);
  CHECK(kind_of({{Endpoint::closed_at(-kInf), Endpoint::open(0)}}) == ErrorKind::MalformedInterval);
  CHECK(kind_of({{Endpoint::open(std::nan("")), Endpoint::open(0)}}) == ErrorKind::MalformedInterval);
}

TEST_CASE("combine examples", "[interval]") {
  const auto ray1 = IntervalSet::ray_above(1, false);
  const auto ray10 = IntervalSet::ray_above(10, false);
  CHECK((ray1 ^ ray1).empty());

  const auto d = ray10 ^ ray1;
  CHECK(d == IntervalSet::open_closed(1, 10));
  CHECK(oracle::member(d, 2));
  CHECK(oracle::member(d, 10));
  CHECK_FALSE(oracle::member(d, 11));
  CHECK_FALSE(oracle::member(d, 1));

  CHECK((IntervalSet::point(1) & IntervalSet::open(0, 2)) == IntervalSet::point(1));
}

TEST_CASE("complement within a domain", "[interval]") {
  CHECK(complement(IntervalSet::point(1), IntervalSet::open(0, 2)) ==
        IntervalSet::normalize({oo(0, 1), oo(1, 2)}));
  const auto dom = IntervalSet::closed(-1, 4);
  CHECK(complement(IntervalSet{}, dom) == dom);

  const auto c = complement(IntervalSet::open_closed(1, 10), IntervalSet::ray_above(1, false));
  CHECK(c == IntervalSet::ray_above(10, false));
  for (double t : {1.5, 10.0, 10.5, 100.0}) CHECK(oracle::member(c, t) == (t > 10));

  CHECK_THROWS_MATCHES(complement(IntervalSet::closed(0, 3), IntervalSet::open(0, 2)), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) { return e.kind() == ErrorKind::OutOfDomain; }));
}

TEST_CASE("bounded above", "[interval]") {
  const auto dom = IntervalSet::ray_above(1, false);
  CHECK(bounded_above(IntervalSet::open_closed(1, 10), dom));
  CHECK_FALSE(bounded_above(IntervalSet::ray_above(1, false), dom));
  CHECK(bounded_above(IntervalSet::open(1, 2) | IntervalSet::closed(5, 7), dom));
  CHECK(bounded_above(IntervalSet{}, dom));
  try {
    (void)bounded_above(IntervalSet::open(0, 1), IntervalSet::open(0, 2));
    FAIL("expected DomainBoundedAbove");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DomainBoundedAbove);
  }
}

TEST_CASE("accumulation at a point", "[interval]") {
  const auto ray = IntervalSet::ray_above(1, false);
  CHECK(accumulates_at(ray, 1, Side::Right, true));
  CHECK_FALSE(accumulates_at(ray, 1, Side::Left, true));
  CHECK(accumulates_at(ray, 1, Side::Both, true));

  const auto pt = IntervalSet::point(1);
  CHECK_FALSE(accumulates_at(pt, 1, Side::Both, true));
  CHECK(accumulates_at(pt, 1, Side::Both, false));
  CHECK(accumulates_at(pt, 1, Side::Left, false));
  CHECK_FALSE(accumulates_at(pt, 1.5, Side::Both, false));
  CHECK_FALSE(accumulates_at(IntervalSet{}, 0, Side::Both, false));
}

TEST_CASE("germs", "[interval]") {
  CHECK(germ(IntervalSet::ray_above(10, false), GermSite::plus_infinity()) == Germ::In);
  CHECK(germ(IntervalSet::open_closed(1, 10), GermSite::plus_infinity()) == Germ::Out);
  const auto a = IntervalSet::ray_above(0.8, false);
  CHECK(germ(a, GermSite::left_of(1)) == Germ::In);
  CHECK(germ(a, GermSite::right_of(1)) == Germ::In);
  CHECK(germ(IntervalSet::point(1), GermSite::left_of(1)) == Germ::Out);
  CHECK(germ(IntervalSet::open(1, 2), GermSite::left_of(1)) == Germ::Out);
  CHECK(germ(IntervalSet::open(1, 2), GermSite::right_of(1)) == Germ::In);
}

TEST_CASE("formatting", "[interval]") {
  CHECK(format_real(1) == "1.0");
  CHECK(format_real(0.9) == "0.9");
  CHECK(format_real(1.0 / (1.0 - 0.9)) == "10.000000000000002");
  CHECK(format_real(kInf) == "+inf");
  CHECK(format_real(-kInf) == "-inf");
  CHECK(to_string(IntervalSet{}) == "{}");
  CHECK(to_string(IntervalSet::open_closed(1, 10) | IntervalSet::ray_above(12, true)) == "(1.0,10.0] U [12.0,+inf)");
}

TEST_CASE("normalize agrees with pointwise union of its raw pieces", "[interval][property]") {
  Rng rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto raw = oracle::random_raw(rng, 5);
    const auto s = IntervalSet::normalize(raw);
    INFO("normalized " << to_string(s));
    REQUIRE(canonical(s));
    CHECK(IntervalSet::normalize(s.pieces()) == s);
    std::vector<IntervalSet> single;
    for (const auto& p : raw) single.push_back(IntervalSet::normalize({p}));
    std::vector<const IntervalSet*> sets{&s};
    for (const auto& one : single) sets.push_back(&one);
    for (double t : oracle::probes(sets)) REQUIRE(oracle::member(raw, t) == oracle::member(s, t));
  }
}

TEST_CASE("combine agrees with the probe oracle", "[interval][property]") {
  Rng rng(12);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto a = oracle::random_set(rng);
    const auto b = oracle::random_set(rng);
    for (SetOp op : {SetOp::Union, SetOp::Intersect, SetOp::Xor, SetOp::Minus}) {
      const auto c = combine(a, b, op);
      INFO(to_string(a) << " " << to_string(op) << " " << to_string(b) << " = " << to_string(c));
      REQUIRE(canonical(c));
      for (double t : oracle::probes({&a, &b, &c})) {
        REQUIRE(oracle::member(c, t) == oracle_op(oracle::member(a, t), oracle::member(b, t), op));
      }
    }
  }
}

TEST_CASE("symmetric-difference identities on time sets", "[interval][property]") {
  Rng rng(13);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto dom = IntervalSet::normalize(oracle::random_raw(rng, 2)) | IntervalSet::open(-2, 2);
    const auto a = oracle::random_set(rng) & dom;
    const auto b = oracle::random_set(rng) & dom;
    const auto c = oracle::random_set(rng) & dom;
    const auto d = oracle::random_set(rng) & dom;
    INFO(to_string(a) << " / " << to_string(b) << " in " << to_string(dom));
    REQUIRE((a ^ b) == ((a - b) | (b - a)));
    REQUIRE((a ^ b) == (complement(a, dom) ^ complement(b, dom)));
    REQUIRE(complement(complement(a, dom), dom) == a);
    const auto lhs = (a | c) ^ (b | d);
    const auto rhs = (a ^ b) | (c ^ d);
    REQUIRE(is_subset(lhs, rhs));
    for (double t : oracle::probes({&a, &b, &c, &d})) {
      REQUIRE((!oracle::member(lhs, t) || oracle::member(rhs, t)));
    }
  }
}

TEST_CASE("accumulation agrees with shrinking neighbourhood probes", "[interval][property]") {
  Rng rng(14);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto a = oracle::random_set(rng);
    const double t0 = static_cast<double>(rng.between(-8, 8)) / 2;
    // Endpoints lie on a half-integer grid, so a quarter step stays within one gap.
    const double l = t0 - 0.25, r = t0 + 0.25;
    const bool left = oracle::member(a, l), right = oracle::member(a, r), at = oracle::member(a, t0);
    INFO(to_string(a) << " at " << t0);
    REQUIRE(accumulates_at(a, t0, Side::Left, true) == left);
    REQUIRE(accumulates_at(a, t0, Side::Right, true) == right);
    REQUIRE(accumulates_at(a, t0, Side::Both, true) == (left || right));
    REQUIRE(accumulates_at(a, t0, Side::Left, false) == (left || at));
    REQUIRE(accumulates_at(a, t0, Side::Both, false) == (left || right || at));
    REQUIRE((germ(a, GermSite::left_of(t0)) == Germ::In) == left);
    REQUIRE((germ(a, GermSite::right_of(t0)) == Germ::In) == right);
    REQUIRE((germ(a, GermSite::plus_infinity()) == Germ::In) == oracle::member(a, 1e6));
  }
}
