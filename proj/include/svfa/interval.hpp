#pragma once

#include <limits>
#include <span>
#include <string>
#include <vector>

namespace svfa {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct Endpoint {
  double value = 0.0;
  bool closed = false;

  static Endpoint open(double v) { return {v, false}; }
  static Endpoint closed_at(double v) { return {v, true}; }

  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

/// A single convex piece of the real line. Infinite endpoints are always open;
/// a degenerate piece [a,a] is allowed only with both ends closed.
struct Interval {
  Endpoint lo;
  Endpoint hi;

  bool contains(double t) const {
    const bool above = lo.closed ? t >= lo.value : t > lo.value;
    const bool below = hi.closed ? t <= hi.value : t < hi.value;
    return above && below;
  }
  bool is_point() const { return lo.value == hi.value; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

enum class SetOp { Union, Intersect, Xor, Minus };

/// Finite union of pairwise disjoint, non-adjacent intervals, sorted by lower
/// endpoint. Instances are always canonical, so == is set equality.
class IntervalSet {
 public:
  IntervalSet() = default;

  /// Canonical merge of arbitrary (possibly overlapping) pieces.
  /// Throws MalformedInterval for lo > hi, NaN, closed infinities or an
  /// open-ended point piece.
  static IntervalSet normalize(std::span<const Interval> raw);
  static IntervalSet normalize(std::initializer_list<Interval> raw) {
    return normalize(std::span<const Interval>(raw.begin(), raw.size()));
  }

  static IntervalSet real_line();
  static IntervalSet point(double t);
  static IntervalSet open(double lo, double hi);
  static IntervalSet closed(double lo, double hi);
  static IntervalSet open_closed(double lo, double hi);
  static IntervalSet closed_open(double lo, double hi);
  /// (lo, +inf) or [lo, +inf)
  static IntervalSet ray_above(double lo, bool closed);
  /// (-inf, hi) or (-inf, hi]
  static IntervalSet ray_below(double hi, bool closed);

  std::span<const Interval> pieces() const { return pieces_; }
  bool empty() const { return pieces_.empty(); }
  std::size_t size() const { return pieces_.size(); }

  bool contains(double t) const;
  /// True iff the open gap (a, b), a < b, lies inside the set. a and b must be
  /// consecutive breakpoints of this set (or coarser), which the sweep in
  /// combine() guarantees.
  bool covers_gap(double a, double b) const;

  double sup() const;  // -inf for the empty set
  double inf() const;  // +inf for the empty set

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  explicit IntervalSet(std::vector<Interval> canonical) : pieces_(std::move(canonical)) {}
  friend IntervalSet combine(const IntervalSet&, const IntervalSet&, SetOp);

  std::vector<Interval> pieces_;
};

IntervalSet combine(const IntervalSet& a, const IntervalSet& b, SetOp op);

inline IntervalSet operator|(const IntervalSet& a, const IntervalSet& b) { return combine(a, b, SetOp::Union); }
inline IntervalSet operator&(const IntervalSet& a, const IntervalSet& b) { return combine(a, b, SetOp::Intersect); }
inline IntervalSet operator^(const IntervalSet& a, const IntervalSet& b) { return combine(a, b, SetOp::Xor); }
inline IntervalSet operator-(const IntervalSet& a, const IntervalSet& b) { return combine(a, b, SetOp::Minus); }

bool is_subset(const IntervalSet& a, const IntervalSet& b);

/// domain \ a. Throws OutOfDomain unless a is contained in domain.
IntervalSet complement(const IntervalSet& a, const IntervalSet& domain);

/// True iff some finite M has a ∩ [M, +inf) empty. Throws DomainBoundedAbove
/// when the domain itself has a finite supremum.
bool bounded_above(const IntervalSet& a, const IntervalSet& domain);

enum class Side { Both, Left, Right };

/// Every one-sided (or two-sided) neighbourhood of t0 meets a. With
/// punctured = true the point t0 itself is excluded.
bool accumulates_at(const IntervalSet& a, double t0, Side side, bool punctured);

enum class Germ { In, Out, Oscillates };

struct GermSite {
  enum class Kind { PlusInfinity, LeftOf, RightOf } kind = Kind::PlusInfinity;
  double t0 = 0.0;

  static GermSite plus_infinity() { return {Kind::PlusInfinity, 0.0}; }
  static GermSite left_of(double t) { return {Kind::LeftOf, t}; }
  static GermSite right_of(double t) { return {Kind::RightOf, t}; }
};

/// Stable membership on a terminal ray or a one-sided punctured
/// neighbourhood. Finite unions never oscillate.
Germ germ(const IntervalSet& a, GermSite at);

std::string_view to_string(Side side);
std::string_view to_string(Germ g);
std::string_view to_string(SetOp op);

/// Shortest round-trip decimal; always carries a '.' (1 -> "1.0") so values
/// read as reals in reports. Infinities print as "-inf"/"+inf".
std::string format_real(double v);
std::string to_string(const Interval& piece);
/// "(1.0,10.0] U [12.0,+inf)"; "{}" for the empty set.
std::string to_string(const IntervalSet& set);

}  // namespace svfa
