#include "svfa/theorems.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <initializer_list>

#include "gen_internal.hpp"
#include "svfa/error.hpp"
#include "svfa/sequence.hpp"
#include "svfa/serialize.hpp"

namespace svfa {

namespace {

using namespace gen;

// Every trajectory in these suites has endpoints on a 0.5 grid, so membership
// is constant on (t0, t0 + kNear] and [t0 - kNear, t0).
constexpr double kNear = 0x1p-20;

/// Collects the instance as it is built and records the first failed check.
class Trial {
 public:
  void svf(const std::string& name, const Svf& f) { instance_["svfs"][name] = to_json(f); }
  void set(const std::string& name, const FiniteSet& s) { instance_["sets"][name] = to_json(s); }
  void note(const std::string& key, Json value) { instance_["params"][key] = std::move(value); }

  void expect(bool ok, std::string_view what) {
    ++result_.checks;
    if (ok || result_.failure) return;
    instance_["violated"] = std::string(what);
    result_.failure = instance_.dump();
  }

  detail::TrialResult finish() { return std::move(result_); }

 private:
  Json instance_ = Json::object();
  detail::TrialResult result_;
};

Svf fold(std::span<const Svf> fs, Svf (*op)(const Svf&, const Svf&)) {
  Svf acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = op(acc, fs[i]);
  return acc;
}

FiniteSet fold(std::span<const FiniteSet> ss, SetOp op) {
  FiniteSet acc = ss.front();
  for (std::size_t i = 1; i < ss.size(); ++i) acc = apply(acc, ss[i], op);
  return acc;
}

/// A time past every finite endpoint, after which no trajectory changes.
double settled_time(std::initializer_list<const Svf*> fs) {
  double t = 1.0;
  auto bump = [&t](const IntervalSet& s) {
    for (const auto& p : s.pieces()) {
      if (std::isfinite(p.lo.value)) t = std::max(t, p.lo.value + 1.0);
      if (std::isfinite(p.hi.value)) t = std::max(t, p.hi.value + 1.0);
    }
  };
  for (const Svf* f : fs) {
    bump(f->domain());
    for (const auto& traj : f->trajectories()) bump(traj);
  }
  return t;
}

/// Times at which every slice of f occurs: endpoints, and points between and beyond them.
std::vector<double> probe_times(const Svf& f) {
  std::vector<double> ends;
  auto add = [&ends](const IntervalSet& s) {
    for (const auto& p : s.pieces()) {
      if (std::isfinite(p.lo.value)) ends.push_back(p.lo.value);
      if (std::isfinite(p.hi.value)) ends.push_back(p.hi.value);
    }
  };
  add(f.domain());
  for (const auto& traj : f.trajectories()) add(traj);
  std::sort(ends.begin(), ends.end());
  ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
  std::vector<double> probes;
  if (ends.empty()) {
    probes.push_back(0.0);
  } else {
    probes.push_back(ends.front() - 1.0);
    for (std::size_t i = 0; i < ends.size(); ++i) {
      probes.push_back(ends[i]);
      probes.push_back(i + 1 < ends.size() ? (ends[i] + ends[i + 1]) / 2 : ends[i] + 1.0);
    }
  }
  std::erase_if(probes, [&f](double t) { return !f.domain().contains(t); });
  return probes;
}

double pick_time(Rng& rng, const Svf& f) {
  const auto probes = probe_times(f);
  return probes[rng.below(probes.size())];
}

/// Slices of f immediately beside t0 on the given side(s).
std::vector<FiniteSet> near_slices(const Svf& f, double t0, Side side) {
  std::vector<FiniteSet> out;
  if (side != Side::Right) out.push_back(svf_at(f, t0 - kNear));
  if (side != Side::Left) out.push_back(svf_at(f, t0 + kNear));
  return out;
}

Side random_side(Rng& rng) {
  constexpr std::array<Side, 3> sides{Side::Both, Side::Left, Side::Right};
  return sides[rng.below(sides.size())];
}

double random_t0(Rng& rng) { return grid_at(rng, 0.0, -4, 4); }

/// Some element outside `s`, if any.
std::optional<std::size_t> outsider(Rng& rng, const FiniteSet& s) {
  const auto out = complement(s).members();
  if (out.empty()) return std::nullopt;
  return out[rng.below(out.size())];
}

// At infinity --------------------------------------------------------------------

detail::TrialResult complement_duality(Rng& rng, const UniversePtr& u) {
  Trial tr;
  const Svf f = random_at_infinity(rng, u);
  const auto lim = limit_at_infinity(f);
  const FiniteSet a = (rng.coin() && lim) ? *lim : random_mask(rng, u);
  tr.svf("f", f);
  tr.set("A", a);
  const bool direct = converges_at_infinity(f, a).holds;
  const bool dual = converges_at_infinity(complement(f), complement(a)).holds;
  tr.expect(direct == dual, "f -> A iff f^c -> A^c");
  tr.expect(!lim || converges_at_infinity(complement(f), complement(*lim)).holds, "f^c -> lim(f)^c");
  return tr.finish();
}

detail::TrialResult limit_membership(Rng& rng, const UniversePtr& u) {
  Trial tr;
  const Svf f = random_at_infinity(rng, u);
  tr.svf("f", f);
  const auto lim = limit_at_infinity(f);
  tr.expect(lim.has_value(), "limit exists");
  if (!lim) return tr.finish();
  tr.set("limit", *lim);
  const Svf fc = complement(f);
  const auto tail = f.domain() & IntervalSet::ray_above(settled_time({&f}), true);
  for (std::size_t x = 0; x < u->size(); ++x) {
    if (lim->contains(x)) {
      tr.expect(is_subset(tail, f.trajectory(x)), "x in A stays in A(t) eventually");
    } else {
      tr.expect(is_subset(tail, fc.trajectory(x)), "x in A^c stays in A(t)^c eventually");
    }
  }
  // Leaving the symmetric difference once convergence holds is permanent.
  const double ti = pick_time(rng, f);
  const auto outside = complement(svf_at(f, ti) ^ *lim);
  tr.note("t_i", ti);
  for (std::size_t x : outside.members()) {
    tr.expect(bounded_above(delta_trajectory(f, *lim, x), f.domain()), "x outside the difference stays outside");
  }
  return tr.finish();
}

detail::TrialResult uniqueness(Rng& rng, const UniversePtr& u) {
  Trial tr;
  const Svf f = random_at_infinity(rng, u);
  tr.svf("f", f);
  const auto lim = limit_at_infinity(f);
  tr.expect(lim.has_value(), "limit exists");
  if (!lim) return tr.finish();
  tr.set("limit", *lim);
  tr.expect(converges_at_infinity(f, *lim).holds, "f converges to its computed limit");
  const auto [sup, inf] = limsupinf_at_infinity(f);
  tr.expect(sup == *lim && inf == *lim, "limsup = limit = liminf");
  for (int k = 0; k < 4; ++k) {
    FiniteSet b = random_mask(rng, u);
    if (k == 0) {
      b = *lim;
      const auto x = rng.below(u->size());
      b.set(x, !b.contains(x));
    }
    if (converges_at_infinity(f, b).holds) {
      tr.set("B", b);
      tr.expect(b == *lim, "a second limit equals the first");
    }
  }
  return tr.finish();
}

detail::TrialResult union_intersection(Rng& rng, const UniversePtr& u) {
  Trial tr;
  const std::size_t n = 2 + rng.below(3);
  std::vector<Svf> fs;
  std::vector<FiniteSet> lims;
  for (std::size_t i = 0; i < n; ++i) {
    fs.push_back(random_at_infinity(rng, u));
    tr.svf("f" + std::to_string(i), fs.back());
    const auto lim = limit_at_infinity(fs.back());
    tr.expect(lim.has_value(), "limit exists");
    if (!lim) return tr.finish();
    lims.push_back(*lim);
  }
  tr.expect(converges_at_infinity(svf_union(fs[0], fs[1]), lims[0] | lims[1]).holds, "f u g -> A u B");
  tr.expect(converges_at_infinity(svf_intersect(fs[0], fs[1]), lims[0] & lims[1]).holds, "f n g -> A n B");
  tr.expect(converges_at_infinity(fold(fs, svf_union), fold(lims, SetOp::Union)).holds, "n-fold union");
  tr.expect(converges_at_infinity(fold(fs, svf_intersect), fold(lims, SetOp::Intersect)).holds,
            "n-fold intersection");
  return tr.finish();
}

/// Union and intersection of the slices at every probe time.
std::pair<FiniteSet, FiniteSet> sampled_sup_inf(const Svf& f) {
  FiniteSet sup(f.universe());
  FiniteSet inf = FiniteSet::full_of(f.universe());
  for (double t : probe_times(f)) {
    const auto slice = svf_at(f, t);
    sup = sup | slice;
    inf = inf & slice;
  }
  return {sup, inf};
}

// Expanding instances come from the monotone profile; the complement of a
// shrinking function is expanding.
detail::TrialResult monotone_limit(Rng& rng, const UniversePtr& u, bool expanding) {
  Trial tr;
  Svf f = random_svf(rng, u, SvfProfile::monotone());
  const auto m = monotonicity(f);
  tr.expect(m != Monotonicity::Neither, "monotone profile is monotone");
  if ((expanding && m == Monotonicity::Shrinking) || (!expanding && m == Monotonicity::Expanding)) f = complement(f);
  tr.svf("f", f);
  const auto kind = monotonicity(f);
  tr.expect(kind == Monotonicity::Constant || kind == (expanding ? Monotonicity::Expanding : Monotonicity::Shrinking),
            "hypothesis holds");
  const auto [sampled_sup, sampled_inf] = sampled_sup_inf(f);
  const FiniteSet bound = expanding ? supremum(f) : infimum(f);
  tr.set(expanding ? "supremum" : "infimum", bound);
  tr.expect(bound == (expanding ? sampled_sup : sampled_inf), "bound equals union/intersection of slices");
  tr.expect(converges_at_infinity(f, bound).holds, expanding ? "f -> supremum" : "f -> infimum");
  tr.expect(limit_at_infinity(f) == std::optional<FiniteSet>(bound), "limit equals bound");
  return tr.finish();
}

detail::TrialResult squeeze(Rng& rng, const UniversePtr& u) {
  Trial tr;
  const FiniteSet l = random_mask(rng, u);
  const auto domain = IntervalSet::ray_above(0.0, false);
  std::vector<IntervalSet> lo, mid, hi;
  for (std::size_t x = 0; x < u->size(); ++x) {
    auto a = grid_junk(rng, 0.0, 0, 12, 2) & domain;
    if (l.contains(x)) a = a | IntervalSet::ray_above(grid_at(rng, 0.0, 8, 16), rng.coin());
    const auto c = a | (grid_junk(rng, 0.0, 0, 16, 3) & domain);
    auto pick = grid_junk(rng, 0.0, 0, 16, 3);
    if (rng.coin()) pick = pick | IntervalSet::ray_above(grid_at(rng, 0.0, 0, 16), rng.coin());
    lo.push_back(a);
    mid.push_back(a | ((c - a) & pick));
    hi.push_back(c);
  }
  const Svf a(u, domain, lo), b(u, domain, mid), c(u, domain, hi);
  tr.svf("A", a);
  tr.svf("B", b);
  tr.svf("C", c);
  tr.set("L", l);
  tr.expect(pointwise_subset(a, b) && pointwise_subset(b, c), "A <= B <= C");
  tr.expect(converges_at_infinity(a, l).holds && converges_at_infinity(c, l).holds, "A, C -> L");
  tr.expect(converges_at_infinity(b, l).holds, "B -> L");
  return tr.finish();
}

detail::TrialResult upper_bound(Rng& rng, const UniversePtr& u) {
  Trial tr;
  const Svf f = random_at_infinity(rng, u);
  tr.svf("f", f);
  const auto lim = limit_at_infinity(f);
  tr.expect(lim.has_value(), "limit exists");
  if (!lim) return tr.finish();
  const FiniteSet b = svf_at(f, settled_time({&f})) & random_mask(rng, u);
  tr.set("B", b);
  tr.expect(is_subset(b, *lim), "eventual members lie in the limit");
  return tr.finish();
}

detail::TrialResult order(Rng& rng, const UniversePtr& u) {
  Trial tr;
  const Svf f = random_at_infinity(rng, u);
  const Svf h = random_at_infinity(rng, u);
  const Svf g = rng.coin() ? svf_union(f, h) : f;
  const Svf lower = rng.coin() ? svf_intersect(f, h) : f;
  tr.svf("f", lower);
  tr.svf("g", g);
  tr.expect(pointwise_subset(lower, g), "f(t) <= g(t)");
  const auto lf = limit_at_infinity(lower);
  const auto lg = limit_at_infinity(g);
  tr.expect(lf && lg, "limits exist");
  if (lf && lg) tr.expect(is_subset(*lf, *lg), "lim f <= lim g");
  return tr.finish();
}

detail::TrialResult eventual_eq(Rng& rng, const UniversePtr& u) {
  Trial tr;
  const auto domain = IntervalSet::ray_above(0.0, false);
  const FiniteSet target = random_mask(rng, u);
  const double t0 = grid_at(rng, 0.0, 2, 12);
  std::vector<IntervalSet> trajectories;
  for (std::size_t x = 0; x < u->size(); ++x) {
    auto traj = grid_junk(rng, 0.0, 0, 16, 3) & domain & IntervalSet::ray_below(t0, false);
    if (target.contains(x)) traj = traj | IntervalSet::ray_above(t0, true);
    trajectories.push_back(traj);
  }
  const Svf e(u, domain, trajectories);
  tr.svf("E", e);
  tr.set("E_tail", target);
  tr.note("t0", t0);
  tr.expect(converges_at_infinity(e, target).holds, "A(t) = A for t >= t0 implies A(t) -> A");

  const Svf f = random_at_infinity(rng, u);
  const Svf g = random_at_infinity(rng, u);
  tr.svf("f", f);
  tr.svf("g", g);
  const double t = settled_time({&f, &g});
  const FiniteSet cup = svf_at(svf_union(f, g), t);
  const FiniteSet cap = svf_at(svf_intersect(f, g), t);
  const auto lf = limit_at_infinity(f);
  const auto lg = limit_at_infinity(g);
  tr.expect(lf && lg, "limits exist");
  if (!lf || !lg) return tr.finish();
  tr.expect((*lf | *lg) == cup, "eventual union C gives A u B = C");
  tr.expect((*lf & *lg) == cap, "eventual intersection C gives A n B = C");
  return tr.finish();
}

detail::TrialResult nonlimit_witness(Rng& rng, const UniversePtr& u) {
  Trial tr;
  const Svf f = random_at_infinity(rng, u);
  tr.svf("f", f);
  const auto lim = limit_at_infinity(f);
  tr.expect(lim.has_value(), "limit exists");
  if (!lim) return tr.finish();
  const auto extra = outsider(rng, *lim);
  if (!extra) return tr.finish();
  FiniteSet b = random_mask(rng, u);
  b.set(*extra);
  tr.set("B", b);
  // Past the settled time membership never changes, so leaving A(t) there
  // means leaving it at arbitrarily late times.
  const FiniteSet late = svf_at(f, settled_time({&f}));
  tr.expect(!(b - late).empty(), "some x in B is outside A(t) at arbitrarily late t");
  return tr.finish();
}

// At a point ---------------------------------------------------------------------

/// Random function whose limit from `side` exists, biased to be interesting.
Svf near_point(Rng& rng, const UniversePtr& u, double t0, Side side) {
  if (side != Side::Both && rng.coin()) return random_svf(rng, u, SvfProfile::point_germ(t0));
  return settled_near(rng, u, t0, random_mask(rng, u), rng.chance(1, 3));
}

detail::TrialResult point_analogues(Rng& rng, const UniversePtr& u) {
  Trial tr;
  const double t0 = random_t0(rng);
  const Side side = random_side(rng);
  tr.note("t0", t0);
  tr.note("side", std::string(to_string(side)));
  const Svf f = near_point(rng, u, t0, side);
  tr.svf("f", f);
  const auto lim = limit_at(f, t0, side);
  tr.expect(lim.has_value(), "limit exists");
  if (!lim) return tr.finish();
  tr.set("limit", *lim);

  const FiniteSet a = random_mask(rng, u);
  tr.set("A", a);
  tr.expect(converges_at(f, t0, a, side).holds == converges_at(complement(f), t0, complement(a), side).holds,
            "complement duality");
  tr.expect(converges_at(f, t0, *lim, side).holds, "f converges to its limit");
  if (a != *lim) tr.expect(!converges_at(f, t0, a, side).holds, "uniqueness");

  for (const auto& slice : near_slices(f, t0, side)) {
    tr.expect(slice == *lim, "members of A stay in A(t), members of A^c stay out");
  }
  if (const auto extra = outsider(rng, *lim)) {
    FiniteSet b = a;
    b.set(*extra);
    bool escapes = false;
    for (const auto& slice : near_slices(f, t0, side)) escapes = escapes || !(b - slice).empty();
    tr.expect(escapes, "B not inside A has an element leaving A(t) near t0");
  }
  FiniteSet stays = FiniteSet::full_of(u);
  for (const auto& slice : near_slices(f, t0, side)) stays = stays & slice;
  tr.expect(is_subset(stays & a, *lim), "B staying in A(t) near t0 lies in A");

  const std::size_t n = 2 + rng.below(2);
  std::vector<Svf> fs{f};
  std::vector<FiniteSet> lims{*lim};
  for (std::size_t i = 1; i < n; ++i) {
    fs.push_back(near_point(rng, u, t0, side));
    tr.svf("f" + std::to_string(i), fs.back());
    const auto li = limit_at(fs.back(), t0, side);
    tr.expect(li.has_value(), "limit exists");
    if (!li) return tr.finish();
    lims.push_back(*li);
  }
  tr.expect(converges_at(fold(fs, svf_union), t0, fold(lims, SetOp::Union), side).holds, "union of limits");
  tr.expect(converges_at(fold(fs, svf_intersect), t0, fold(lims, SetOp::Intersect), side).holds,
            "intersection of limits");
  const auto lg = limit_at(svf_union(f, fs[1]), t0, side);
  tr.expect(lg && is_subset(*lim, *lg), "order: f <= f u g gives lim f <= lim (f u g)");

  const FiniteSet l = random_mask(rng, u);
  const Svf lo = settled_near(rng, u, t0, l, rng.coin());
  const Svf outer = settled_near(rng, u, t0, l, false);
  const Svf hi = svf_union(lo, outer);
  const Svf junk = random_svf(rng, u, SvfProfile::point_germ(t0));
  const Svf mid = svf_union(lo, svf_intersect(junk, hi));
  tr.svf("A", lo);
  tr.svf("B", mid);
  tr.svf("C", hi);
  tr.set("L", l);
  tr.expect(pointwise_subset(lo, mid) && pointwise_subset(mid, hi), "A <= B <= C");
  tr.expect(converges_at(lo, t0, l, side).holds && converges_at(hi, t0, l, side).holds,
            "constant near t0 converges");
  tr.expect(converges_at(mid, t0, l, side).holds, "squeeze");
  tr.expect(limit_at(lo, t0, Side::Both) == std::optional<FiniteSet>(l), "constant near t0 has that limit");
  const double beside = side == Side::Left ? t0 - kNear : t0 + kNear;
  const auto l_outer = limit_at(outer, t0, side);
  tr.expect(l_outer && (*lim | *l_outer) == svf_at(svf_union(f, outer), beside),
            "union equal to C near t0 gives A u B = C");
  tr.expect(l_outer && (*lim & *l_outer) == svf_at(svf_intersect(f, outer), beside),
            "intersection equal to C near t0 gives A n B = C");
  return tr.finish();
}

detail::TrialResult continuity_analogues(Rng& rng, const UniversePtr& u) {
  Trial tr;
  const double t0 = random_t0(rng);
  const Side side = random_side(rng);
  tr.note("t0", t0);
  tr.note("side", std::string(to_string(side)));
  const Svf f = rng.coin() ? random_svf(rng, u, SvfProfile::point_germ(t0))
                           : settled_near(rng, u, t0, random_mask(rng, u), rng.coin());
  tr.svf("f", f);
  const FiniteSet at = svf_at(f, t0);
  const bool cont = continuous_at(f, t0, side).holds;
  tr.expect(cont == continuous_at(complement(f), t0, side).holds, "complement duality");
  tr.expect(cont == (limit_at(f, t0, side) == std::optional<FiniteSet>(at)), "continuous iff limit equals A(t0)");
  if (cont) {
    for (const auto& slice : near_slices(f, t0, side)) tr.expect(slice == at, "A(t) = A(t0) near t0");
    if (const auto extra = outsider(rng, at)) {
      FiniteSet b = random_mask(rng, u);
      b.set(*extra);
      tr.expect(!(b - at).empty(), "B not inside A(t0) has an element outside A(t) at t0");
    }
  }

  const std::size_t n = 2 + rng.below(2);
  std::vector<Svf> fs;
  for (std::size_t i = 0; i < n; ++i) {
    fs.push_back(settled_near(rng, u, t0, random_mask(rng, u), true));
    tr.svf("g" + std::to_string(i), fs.back());
    tr.expect(continuous_at(fs.back(), t0, side).holds, "constant near t0 is continuous");
  }
  tr.expect(continuous_at(fold(fs, svf_union), t0, side).holds, "union of continuous is continuous");
  tr.expect(continuous_at(fold(fs, svf_intersect), t0, side).holds, "intersection of continuous is continuous");

  FiniteSet stays = svf_at(fs[0], t0);
  for (const auto& slice : near_slices(fs[0], t0, side)) stays = stays & slice;
  tr.expect(is_subset(stays & random_mask(rng, u), svf_at(fs[0], t0)), "B staying in A(t) lies in A(t0)");
  return tr.finish();
}

detail::TrialResult coincide(Rng& rng, const UniversePtr& u) {
  Trial tr;
  const double t0 = random_t0(rng);
  tr.note("t0", t0);
  const Svf f = rng.chance(2, 3) ? random_svf(rng, u, SvfProfile::point_germ(t0))
                                 : settled_near(rng, u, t0, random_mask(rng, u), rng.coin());
  tr.svf("f", f);
  const auto left = limit_at(f, t0, Side::Left);
  const auto right = limit_at(f, t0, Side::Right);
  const auto both = limit_at(f, t0, Side::Both);
  tr.expect(both.has_value() == (left && right && *left == *right), "two-sided limit iff one-sided agree");
  if (both) tr.expect(*both == *left, "common value");

  for (const FiniteSet& a : {random_mask(rng, u), left.value_or(random_mask(rng, u))}) {
    tr.expect(converges_at(f, t0, a, Side::Both).holds ==
                  (converges_at(f, t0, a, Side::Left).holds && converges_at(f, t0, a, Side::Right).holds),
              "convergence to A iff both one-sided");
  }
  const FiniteSet at = svf_at(f, t0);
  const bool cont = continuous_at(f, t0, Side::Both).holds;
  tr.expect(cont == (continuous_at(f, t0, Side::Left).holds && continuous_at(f, t0, Side::Right).holds),
            "continuity iff both one-sided");
  tr.expect(cont == (left == std::optional<FiniteSet>(at) && right == std::optional<FiniteSet>(at)),
            "continuity iff both one-sided limits equal A(t0)");
  return tr.finish();
}

using TrialFn = detail::TrialResult (*)(Rng&, const UniversePtr&);

struct Registered {
  std::string_view tag;
  TrialFn fn;
};

detail::TrialResult expanding_sup(Rng& rng, const UniversePtr& u) { return monotone_limit(rng, u, true); }
detail::TrialResult shrinking_inf(Rng& rng, const UniversePtr& u) { return monotone_limit(rng, u, false); }

constexpr std::array<Registered, 14> kSuites{{
    {"COMPLEMENT_DUALITY", complement_duality},
    {"LIMIT_MEMBERSHIP", limit_membership},
    {"UNIQUENESS", uniqueness},
    {"UNION_INTERSECTION", union_intersection},
    {"EXPANDING_SUP", expanding_sup},
    {"SHRINKING_INF", shrinking_inf},
    {"SQUEEZE", squeeze},
    {"UPPER_BOUND", upper_bound},
    {"ORDER", order},
    {"EVENTUAL_EQ", eventual_eq},
    {"NONLIMIT_WITNESS", nonlimit_witness},
    {"POINT_ANALOGUES", point_analogues},
    {"CONTINUITY_ANALOGUES", continuity_analogues},
    {"COINCIDE", coincide},
}};

constexpr std::string_view kSequenceTag = "SEQ_EQUIVALENCE";

constexpr auto kTags = [] {
  std::array<std::string_view, kSuites.size() + 1> tags{};
  for (std::size_t i = 0; i < kSuites.size(); ++i) tags[i] = kSuites[i].tag;
  tags[kSuites.size()] = kSequenceTag;
  return tags;
}();

}  // namespace

std::span<const std::string_view> theorem_tags() { return kTags; }

SuiteReport run_theorem_suite(std::string_view theorem_id, std::size_t trials, std::uint64_t seed,
                              std::size_t universe_size, bool parallel) {
  if (trials == 0) throw Error(ErrorKind::InvalidArgument, "trials must be at least 1");
  if (universe_size == 0) throw Error(ErrorKind::InvalidArgument, "universe size must be at least 1");
  if (theorem_id == kSequenceTag) return seq_equivalence_suite(trials, seed, universe_size, parallel);
  for (const auto& s : kSuites) {
    if (s.tag != theorem_id) continue;
    const UniversePtr u = indexed_universe(universe_size);
    return detail::run_trials(s.tag, trials, seed, parallel, [&](Rng& rng) { return s.fn(rng, u); });
  }
  throw Error(ErrorKind::UnknownTheorem, "no theorem suite named '" + std::string(theorem_id) + "'");
}

}  // namespace svfa
