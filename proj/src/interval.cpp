#include "svfa/interval.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "svfa/error.hpp"

namespace svfa {

namespace {

void validate(const Interval& piece) {
  const auto describe = [&] { return to_string(piece); };
  if (std::isnan(piece.lo.value) || std::isnan(piece.hi.value)) {
    throw Error(ErrorKind::MalformedInterval, "NaN endpoint");
  }
  if ((std::isinf(piece.lo.value) && piece.lo.closed) || (std::isinf(piece.hi.value) && piece.hi.closed)) {
    throw Error(ErrorKind::MalformedInterval, "infinite endpoint marked closed in " + describe());
  }
  if (piece.lo.value > piece.hi.value) {
    throw Error(ErrorKind::MalformedInterval, "lo > hi in " + describe());
  }
  if (piece.lo.value == piece.hi.value && !(piece.lo.closed && piece.hi.closed)) {
    throw Error(ErrorKind::MalformedInterval, "point interval with an open endpoint " + describe());
  }
}

// Sweeps the elementary regions cut out by `breaks` (sorted, unique, finite):
// (-inf,b0), {b0}, (b0,b1), ..., {bk}, (bk,+inf). `in_gap(a,b)` and
// `in_point(v)` report membership of the result on each region; maximal runs
// of included regions become the canonical pieces.
template <class GapFn, class PointFn>
std::vector<Interval> sweep(const std::vector<double>& breaks, GapFn in_gap, PointFn in_point) {
  std::vector<Interval> out;
  bool running = false;
  Endpoint start;
  Endpoint last_end;

  const auto visit = [&](bool included, Endpoint region_start, Endpoint region_end) {
    if (included) {
      if (!running) {
        start = region_start;
        running = true;
      }
      last_end = region_end;
    } else if (running) {
      out.push_back({start, last_end});
      running = false;
    }
  };

  double prev = -kInf;
  for (double b : breaks) {
    visit(in_gap(prev, b), Endpoint::open(prev), Endpoint::open(b));
    visit(in_point(b), Endpoint::closed_at(b), Endpoint::closed_at(b));
    prev = b;
  }
  visit(in_gap(prev, kInf), Endpoint::open(prev), Endpoint::open(kInf));
  if (running) out.push_back({start, last_end});
  return out;
}

void collect_breaks(std::span<const Interval> pieces, std::vector<double>& breaks) {
  for (const auto& p : pieces) {
    if (std::isfinite(p.lo.value)) breaks.push_back(p.lo.value);
    if (std::isfinite(p.hi.value)) breaks.push_back(p.hi.value);
  }
}

void sort_unique(std::vector<double>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Index of the piece with the largest lo.value <= t, or npos.
std::size_t candidate_piece(std::span<const Interval> pieces, double t) {
  auto it = std::upper_bound(pieces.begin(), pieces.end(), t,
                             [](double v, const Interval& p) { return v < p.lo.value; });
  if (it == pieces.begin()) return static_cast<std::size_t>(-1);
  return static_cast<std::size_t>(std::distance(pieces.begin(), it) - 1);
}

}  // namespace

IntervalSet IntervalSet::normalize(std::span<const Interval> raw) {
  for (const auto& piece : raw) validate(piece);
  std::vector<double> breaks;
  collect_breaks(raw, breaks);
  sort_unique(breaks);
  auto in_gap = [&](double a, double b) {
    return std::any_of(raw.begin(), raw.end(),
                       [&](const Interval& p) { return p.lo.value <= a && p.hi.value >= b; });
  };
  auto in_point = [&](double v) {
    return std::any_of(raw.begin(), raw.end(), [&](const Interval& p) { return p.contains(v); });
  };
  return IntervalSet(sweep(breaks, in_gap, in_point));
}

IntervalSet IntervalSet::real_line() { return IntervalSet({{Endpoint::open(-kInf), Endpoint::open(kInf)}}); }
IntervalSet IntervalSet::point(double t) { return normalize({{Endpoint::closed_at(t), Endpoint::closed_at(t)}}); }
IntervalSet IntervalSet::open(double lo, double hi) { return normalize({{Endpoint::open(lo), Endpoint::open(hi)}}); }
IntervalSet IntervalSet::closed(double lo, double hi) {
  return normalize({{Endpoint::closed_at(lo), Endpoint::closed_at(hi)}});
}
IntervalSet IntervalSet::open_closed(double lo, double hi) {
  return normalize({{Endpoint::open(lo), Endpoint::closed_at(hi)}});
}
IntervalSet IntervalSet::closed_open(double lo, double hi) {
  return normalize({{Endpoint::closed_at(lo), Endpoint::open(hi)}});
}
IntervalSet IntervalSet::ray_above(double lo, bool closed) {
  return normalize({{Endpoint{lo, closed}, Endpoint::open(kInf)}});
}
IntervalSet IntervalSet::ray_below(double hi, bool closed) {
  return normalize({{Endpoint::open(-kInf), Endpoint{hi, closed}}});
}

bool IntervalSet::contains(double t) const {
  const auto i = candidate_piece(pieces_, t);
  return i != static_cast<std::size_t>(-1) && pieces_[i].contains(t);
}

bool IntervalSet::covers_gap(double a, double b) const {
  const auto i = candidate_piece(pieces_, a);
  return i != static_cast<std::size_t>(-1) && pieces_[i].hi.value >= b;
}

double IntervalSet::sup() const { return pieces_.empty() ? -kInf : pieces_.back().hi.value; }
double IntervalSet::inf() const { return pieces_.empty() ? kInf : pieces_.front().lo.value; }

IntervalSet combine(const IntervalSet& a, const IntervalSet& b, SetOp op) {
  const auto apply = [op](bool x, bool y) {
    switch (op) {
      case SetOp::Union: return x || y;
      case SetOp::Intersect: return x && y;
      case SetOp::Xor: return x != y;
      case SetOp::Minus: return x && !y;
    }
    return false;
  };
  std::vector<double> breaks;
  breaks.reserve(2 * (a.size() + b.size()));
  collect_breaks(a.pieces(), breaks);
  collect_breaks(b.pieces(), breaks);
  sort_unique(breaks);
  auto in_gap = [&](double lo, double hi) { return apply(a.covers_gap(lo, hi), b.covers_gap(lo, hi)); };
  auto in_point = [&](double v) { return apply(a.contains(v), b.contains(v)); };
  return IntervalSet(sweep(breaks, in_gap, in_point));
}

bool is_subset(const IntervalSet& a, const IntervalSet& b) { return (a - b).empty(); }

IntervalSet complement(const IntervalSet& a, const IntervalSet& domain) {
  if (!is_subset(a, domain)) {
    throw Error(ErrorKind::OutOfDomain, to_string(a) + " is not contained in domain " + to_string(domain));
  }
  return domain - a;
}

bool bounded_above(const IntervalSet& a, const IntervalSet& domain) {
  if (domain.sup() != kInf) {
    throw Error(ErrorKind::DomainBoundedAbove,
                "domain " + to_string(domain) + " has no unbounded tail; convergence at infinity is undefined");
  }
  return a.sup() != kInf;
}

bool accumulates_at(const IntervalSet& a, double t0, Side side, bool punctured) {
  if (!punctured && a.contains(t0)) return true;
  const auto pieces = a.pieces();
  const bool from_left = std::any_of(pieces.begin(), pieces.end(),
                                     [&](const Interval& p) { return p.lo.value < t0 && t0 <= p.hi.value; });
  const bool from_right = std::any_of(pieces.begin(), pieces.end(),
                                      [&](const Interval& p) { return p.lo.value <= t0 && t0 < p.hi.value; });
  switch (side) {
    case Side::Left: return from_left;
    case Side::Right: return from_right;
    case Side::Both: return from_left || from_right;
  }
  return false;
}

Germ germ(const IntervalSet& a, GermSite at) {
  switch (at.kind) {
    case GermSite::Kind::PlusInfinity:
      // The last piece is either a ray or bounded; no finite union oscillates.
      return a.sup() == kInf ? Germ::In : Germ::Out;
    case GermSite::Kind::LeftOf:
      return accumulates_at(a, at.t0, Side::Left, true) ? Germ::In : Germ::Out;
    case GermSite::Kind::RightOf:
      return accumulates_at(a, at.t0, Side::Right, true) ? Germ::In : Germ::Out;
  }
  return Germ::Oscillates;
}

std::string_view to_string(Side side) {
  switch (side) {
    case Side::Both: return "both";
    case Side::Left: return "left";
    case Side::Right: return "right";
  }
  return "?";
}

std::string_view to_string(Germ g) {
  switch (g) {
    case Germ::In: return "IN";
    case Germ::Out: return "OUT";
    case Germ::Oscillates: return "OSCILLATES";
  }
  return "?";
}

std::string_view to_string(SetOp op) {
  switch (op) {
    case SetOp::Union: return "union";
    case SetOp::Intersect: return "intersect";
    case SetOp::Xor: return "xor";
    case SetOp::Minus: return "minus";
  }
  return "?";
}

std::string format_real(double v) {
  if (std::isinf(v)) return v > 0 ? "+inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  std::string s(buf, end);
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

std::string to_string(const Interval& piece) {
  std::string s;
  s += piece.lo.closed ? '[' : '(';
  s += format_real(piece.lo.value);
  s += ',';
  s += format_real(piece.hi.value);
  s += piece.hi.closed ? ']' : ')';
  return s;
}

std::string to_string(const IntervalSet& set) {
  if (set.empty()) return "{}";
  std::string s;
  for (const auto& p : set.pieces()) {
    if (!s.empty()) s += " U ";
    s += to_string(p);
  }
  return s;
}

}  // namespace svfa
