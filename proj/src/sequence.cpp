#include "svfa/sequence.hpp"

#include "gen_internal.hpp"
#include "svfa/error.hpp"
#include "svfa/serialize.hpp"

namespace svfa {

SetSequence::SetSequence(UniversePtr universe, std::vector<FiniteSet> prefix, std::vector<FiniteSet> cycle)
    : universe_(std::move(universe)), prefix_(std::move(prefix)), cycle_(std::move(cycle)) {
  if (!universe_) throw Error(ErrorKind::InvalidUniverse, "null universe");
  if (cycle_.empty()) throw Error(ErrorKind::InvalidArgument, "a sequence needs a non-empty cycle");
  for (const auto* part : {&prefix_, &cycle_}) {
    for (const auto& s : *part) {
      if (!universe_->same_as(*s.universe())) {
        throw Error(ErrorKind::UniverseMismatch, "sequence member " + to_string(s) + " uses another universe");
      }
    }
  }
}

const FiniteSet& SetSequence::at(std::size_t n) const {
  if (n == 0) throw Error(ErrorKind::BadIndex, "sequences are indexed from 1");
  if (n <= prefix_.size()) return prefix_[n - 1];
  return cycle_[(n - prefix_.size() - 1) % cycle_.size()];
}

SetSequence SetSequence::map(const FiniteSet& target, SetOp op) const {
  auto over = [&](const std::vector<FiniteSet>& part) {
    std::vector<FiniteSet> out;
    out.reserve(part.size());
    for (const auto& s : part) out.push_back(apply(s, target, op));
    return out;
  };
  return SetSequence(universe_, over(prefix_), over(cycle_));
}

std::pair<FiniteSet, FiniteSet> seq_limsup_liminf(const SetSequence& s) {
  FiniteSet sup(s.universe());
  FiniteSet inf = FiniteSet::full_of(s.universe());
  for (const auto& c : s.cycle()) {
    sup = sup | c;
    inf = inf & c;
  }
  return {sup, inf};
}

Verdict seq_converges_def(const SetSequence& s, const FiniteSet& target) {
  if (!s.universe()->same_as(*target.universe())) {
    throw Error(ErrorKind::UniverseMismatch, "target set lives in a different universe");
  }
  const std::size_t p = s.prefix().size();
  const std::size_t end = s.period_end();
  // Every index n_i is congruent to one of 1..end, and from p+1 on the
  // sequence repeats, so "for all n >= n_j" is decided on one period.
  for (std::size_t x = 0; x < s.universe()->size(); ++x) {
    bool seen = false;
    for (std::size_t ni = 1; ni <= end && !seen; ++ni) seen = (s.at(ni) ^ target).contains(x);
    if (!seen) continue;
    for (std::size_t n = p + 1; n <= end; ++n) {
      if ((s.at(n) ^ target).contains(x)) {
        return Verdict::fail(Definition::SequenceConvergence, s.universe()->id(x),
                             "in A_n △ A for n = " + std::to_string(n) + " + k*" +
                                 std::to_string(s.cycle().size()) + ", every k >= 0");
      }
    }
  }
  return Verdict::pass(Definition::SequenceConvergence);
}

bool seq_symdiff_vanishes(const SetSequence& s, const FiniteSet& target) {
  const auto [sup, inf] = seq_limsup_liminf(s.map(target, SetOp::Xor));
  return sup.empty() && inf.empty();
}

namespace {

SetSequence random_sequence(Rng& rng, const UniversePtr& u, const SequenceGenOptions& opts) {
  std::vector<FiniteSet> prefix, cycle;
  const auto plen = rng.below(opts.max_prefix + 1);
  const auto clen = 1 + rng.below(std::max<std::size_t>(opts.max_cycle, 1));
  for (std::uint64_t i = 0; i < plen; ++i) prefix.push_back(gen::random_mask(rng, u));
  // A third of the cycles are made constant on a random subset of elements,
  // so convergent sequences appear often.
  const bool settle = rng.chance(1, 3);
  const FiniteSet fixed = gen::random_mask(rng, u);
  const FiniteSet value = gen::random_mask(rng, u);
  for (std::uint64_t i = 0; i < clen; ++i) {
    FiniteSet c = gen::random_mask(rng, u);
    if (settle) c = (c - fixed) | (value & fixed);
    cycle.push_back(c);
  }
  return SetSequence(u, std::move(prefix), std::move(cycle));
}

}  // namespace

SetSequence random_sequence(std::uint64_t seed, const SequenceGenOptions& opts) {
  if (opts.universe_size == 0) throw Error(ErrorKind::InvalidArgument, "universe_size must be at least 1");
  Rng rng(seed);
  return random_sequence(rng, indexed_universe(opts.universe_size), opts);
}

SuiteReport seq_equivalence_suite(std::size_t trials, std::uint64_t seed, std::size_t universe_size, bool parallel) {
  if (trials == 0) throw Error(ErrorKind::InvalidArgument, "trials must be at least 1");
  if (universe_size == 0) throw Error(ErrorKind::InvalidArgument, "universe size must be at least 1");
  const UniversePtr u = indexed_universe(universe_size);
  const SequenceGenOptions opts{universe_size, 4, 3};
  return detail::run_trials("SEQ_EQUIVALENCE", trials, seed, parallel, [&](Rng& rng) {
    detail::TrialResult r;
    const SetSequence s = random_sequence(rng, u, opts);
    const auto [sup, inf] = seq_limsup_liminf(s);
    for (const FiniteSet& a : {inf, sup, gen::random_mask(rng, u), FiniteSet(u), FiniteSet::full_of(u)}) {
      const bool def = seq_converges_def(s, a).holds;
      const bool squeezed = sup == a && inf == a;
      const bool vanishes = seq_symdiff_vanishes(s, a);
      r.checks += 2;
      if ((def != squeezed || def != vanishes) && !r.failure) {
        Json j{{"sequence", to_json(s)},
               {"A", to_json(a)},
               {"definition", def},
               {"limsup_eq_liminf_eq_A", squeezed},
               {"symdiff_vanishes", vanishes}};
        r.failure = j.dump();
      }
    }
    return r;
  });
}

}  // namespace svfa
