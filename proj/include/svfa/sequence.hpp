#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "svfa/finite_set.hpp"
#include "svfa/svf.hpp"
#include "svfa/theorems.hpp"

namespace svfa {

/// Eventually periodic sequence of sets: A_1..A_p are the prefix, after which
/// the cycle repeats forever. A one-set cycle is an eventually constant tail.
class SetSequence {
 public:
  SetSequence(UniversePtr universe, std::vector<FiniteSet> prefix, std::vector<FiniteSet> cycle);

  const UniversePtr& universe() const { return universe_; }
  const std::vector<FiniteSet>& prefix() const { return prefix_; }
  const std::vector<FiniteSet>& cycle() const { return cycle_; }

  /// One past the last index needed to see every distinct position once.
  std::size_t period_end() const { return prefix_.size() + cycle_.size(); }

  /// A_n for n >= 1. Throws BadIndex for n = 0.
  const FiniteSet& at(std::size_t n) const;

  /// {A_n op target} with the same prefix/cycle shape.
  SetSequence map(const FiniteSet& target, SetOp op) const;

 private:
  UniversePtr universe_;
  std::vector<FiniteSet> prefix_;
  std::vector<FiniteSet> cycle_;
};

inline const FiniteSet& seq_at(const SetSequence& s, std::size_t n) { return s.at(n); }

/// (limsup, liminf): the union and intersection of the cycle.
std::pair<FiniteSet, FiniteSet> seq_limsup_liminf(const SetSequence& s);

/// The symmetric-difference convergence statement for sequences, evaluated
/// quantifier by quantifier: every x in some A_{n_i} △ A must eventually leave
/// A_n △ A for good.
Verdict seq_converges_def(const SetSequence& s, const FiniteSet& target);

/// True iff limsup and liminf of {A_n △ A} are both empty.
bool seq_symdiff_vanishes(const SetSequence& s, const FiniteSet& target);

struct SequenceGenOptions {
  std::size_t universe_size = 6;
  std::size_t max_prefix = 4;
  std::size_t max_cycle = 3;
};

SetSequence random_sequence(std::uint64_t seed, const SequenceGenOptions& opts);

/// For random sequences and mixed candidates, the statement-form verdict must
/// agree with limsup = A = liminf and with the vanishing of {A_n △ A}.
SuiteReport seq_equivalence_suite(std::size_t trials, std::uint64_t seed, std::size_t universe_size,
                                  bool parallel = false);

}  // namespace svfa
