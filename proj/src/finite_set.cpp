#include "svfa/finite_set.hpp"

#include <bit>
#include <cmath>
#include <unordered_set>

#include "svfa/error.hpp"

namespace svfa {

UniversePtr Universe::make(std::vector<std::string> ids, std::vector<std::vector<double>> payload) {
  if (ids.empty()) throw Error(ErrorKind::InvalidUniverse, "universe must not be empty");
  std::unordered_set<std::string_view> seen;
  for (const auto& id : ids) {
    if (!seen.insert(id).second) throw Error(ErrorKind::InvalidUniverse, "duplicate element id '" + id + "'");
  }
  if (!payload.empty() && payload.size() != ids.size()) {
    throw Error(ErrorKind::InvalidUniverse, "payload count does not match element count");
  }
  auto u = std::shared_ptr<Universe>(new Universe());
  u->ids_ = std::move(ids);
  u->payload_ = std::move(payload);
  return u;
}

std::optional<std::size_t> Universe::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (ids_[i] == id) return i;
  }
  return std::nullopt;
}

double Universe::radius(std::size_t i) const {
  const auto p = payload(i);
  double sq = 0.0;
  for (double c : p) sq += c * c;
  return p.size() == 1 ? std::abs(p[0]) : std::sqrt(sq);
}

FiniteSet::FiniteSet(UniversePtr universe)
    : universe_(std::move(universe)), size_(universe_ ? universe_->size() : 0), words_((size_ + 63) / 64, 0) {
  if (!universe_) throw Error(ErrorKind::InvalidUniverse, "null universe");
}

FiniteSet FiniteSet::full_of(UniversePtr universe) {
  FiniteSet s(std::move(universe));
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  s.clear_tail();
  return s;
}

FiniteSet FiniteSet::from_ids(UniversePtr universe, std::span<const std::string> ids) {
  FiniteSet s(std::move(universe));
  for (const auto& id : ids) {
    const auto i = s.universe_->index_of(id);
    if (!i) throw Error(ErrorKind::UniverseMismatch, "element '" + id + "' is not in the universe");
    s.set(*i);
  }
  return s;
}

FiniteSet FiniteSet::from_indices(UniversePtr universe, std::span<const std::size_t> indices) {
  FiniteSet s(std::move(universe));
  for (auto i : indices) {
    if (i >= s.size_) throw Error(ErrorKind::BadIndex, "element index out of range");
    s.set(i);
  }
  return s;
}

FiniteSet FiniteSet::from_mask(UniversePtr universe, std::uint64_t bits) {
  FiniteSet s(std::move(universe));
  s.words_[0] = bits;
  s.clear_tail();
  return s;
}

void FiniteSet::set(std::size_t i, bool member) {
  if (i >= size_) throw Error(ErrorKind::BadIndex, "element index out of range");
  const std::uint64_t bit = std::uint64_t{1} << (i % 64);
  if (member) {
    words_[i / 64] |= bit;
  } else {
    words_[i / 64] &= ~bit;
  }
}

std::size_t FiniteSet::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::vector<std::size_t> FiniteSet::members() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size_; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

std::vector<std::string> FiniteSet::member_ids() const {
  std::vector<std::string> out;
  for (auto i : members()) out.push_back(universe_->id(i));
  return out;
}

void FiniteSet::require_same(const FiniteSet& o) const {
  if (!universe_->same_as(*o.universe_)) {
    throw Error(ErrorKind::UniverseMismatch, "operands live in different universes");
  }
}

void FiniteSet::clear_tail() {
  if (size_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
}

FiniteSet apply(const FiniteSet& a, const FiniteSet& b, SetOp op) {
  switch (op) {
    case SetOp::Union: return a | b;
    case SetOp::Intersect: return a & b;
    case SetOp::Xor: return a ^ b;
    case SetOp::Minus: return a - b;
  }
  return a;
}

#define SVFA_WORDWISE(OP, EXPR)                                  \
  FiniteSet FiniteSet::operator OP(const FiniteSet& o) const {   \
    require_same(o);                                             \
    FiniteSet r(universe_);                                      \
    for (std::size_t w = 0; w < words_.size(); ++w) {            \
      const auto x = words_[w];                                  \
      const auto y = o.words_[w];                                \
      r.words_[w] = (EXPR);                                      \
    }                                                            \
    return r;                                                    \
  }

SVFA_WORDWISE(|, x | y)
SVFA_WORDWISE(&, x & y)
SVFA_WORDWISE(^, x ^ y)
SVFA_WORDWISE(-, x & ~y)

#undef SVFA_WORDWISE

bool operator==(const FiniteSet& a, const FiniteSet& b) {
  return a.universe_->same_as(*b.universe_) && a.words_ == b.words_;
}

FiniteSet complement(const FiniteSet& a) { return FiniteSet::full_of(a.universe()) - a; }

bool is_subset(const FiniteSet& a, const FiniteSet& b) { return (a - b).empty(); }

std::string to_string(const FiniteSet& s) {
  std::string out = "{";
  bool first = true;
  for (auto i : s.members()) {
    if (!first) out += ", ";
    out += s.universe()->id(i);
    first = false;
  }
  return out + "}";
}

}  // namespace svfa
