#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "svfa/interval.hpp"

namespace svfa {

class Universe;
using UniversePtr = std::shared_ptr<const Universe>;

/// Finite, non-empty, ordered collection of element identifiers. Each element
/// may carry a numeric payload (a radius, a coordinate pair, a real point).
class Universe {
 public:
  static UniversePtr make(std::vector<std::string> ids, std::vector<std::vector<double>> payload = {});

  std::size_t size() const { return ids_.size(); }
  const std::string& id(std::size_t i) const { return ids_.at(i); }
  std::span<const std::string> ids() const { return ids_; }
  std::optional<std::size_t> index_of(std::string_view id) const;

  bool has_payload() const { return !payload_.empty(); }
  std::span<const double> payload(std::size_t i) const { return payload_.at(i); }
  /// Euclidean norm of the payload; the radius for radial universes.
  double radius(std::size_t i) const;

  bool same_as(const Universe& other) const { return this == &other || ids_ == other.ids_; }

 private:
  Universe() = default;
  std::vector<std::string> ids_;
  std::vector<std::vector<double>> payload_;
};

/// Membership mask over a universe.
class FiniteSet {
 public:
  explicit FiniteSet(UniversePtr universe);

  static FiniteSet empty_of(UniversePtr universe) { return FiniteSet(std::move(universe)); }
  static FiniteSet full_of(UniversePtr universe);
  static FiniteSet from_ids(UniversePtr universe, std::span<const std::string> ids);
  static FiniteSet from_indices(UniversePtr universe, std::span<const std::size_t> indices);
  static FiniteSet from_mask(UniversePtr universe, std::uint64_t bits);

  const UniversePtr& universe() const { return universe_; }
  std::size_t universe_size() const { return size_; }

  bool contains(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  void set(std::size_t i, bool member = true);
  std::size_t count() const;
  bool empty() const { return count() == 0; }
  std::vector<std::size_t> members() const;
  std::vector<std::string> member_ids() const;

  FiniteSet operator|(const FiniteSet& o) const;
  FiniteSet operator&(const FiniteSet& o) const;
  FiniteSet operator^(const FiniteSet& o) const;
  FiniteSet operator-(const FiniteSet& o) const;

  /// Equality requires the same universe contents and the same members.
  friend bool operator==(const FiniteSet& a, const FiniteSet& b);

 private:
  void require_same(const FiniteSet& o) const;
  void clear_tail();

  UniversePtr universe_;
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Element-wise Boolean algebra; SetOp::Xor is the symmetric difference.
FiniteSet apply(const FiniteSet& a, const FiniteSet& b, SetOp op);
FiniteSet complement(const FiniteSet& a);
bool is_subset(const FiniteSet& a, const FiniteSet& b);

/// "{0.25, 0.5}" in universe order.
std::string to_string(const FiniteSet& s);

}  // namespace svfa
