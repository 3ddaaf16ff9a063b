#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "svfa/error.hpp"
#include "svfa/interval.hpp"
#include "svfa/svf.hpp"

namespace svfa::es {

/// Row i is the point a_{λ_i}(t); the row index is the bijection between slices.
template <class Scalar>
using PointCloud = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <class Scalar>
struct ParamFamily {
  using Eval = std::function<Vector<Scalar>(const Vector<Scalar>& lambda, Scalar t)>;

  std::string name;
  std::vector<Vector<Scalar>> grid;
  Eigen::Index dim = 0;
  IntervalSet time_domain = IntervalSet::real_line();
  Eval eval;
  Eval analytic_derivative;  // empty when only finite differences are available

  bool has_analytic() const { return static_cast<bool>(analytic_derivative); }
};

enum class DiffMethod { Analytic, CentralDifference };

template <class Scalar>
struct Differentiation {
  DiffMethod method = DiffMethod::Analytic;
  Scalar h = Scalar(1e-4);

  static Differentiation analytic() { return {DiffMethod::Analytic, Scalar(1e-4)}; }
  static Differentiation central(Scalar h = Scalar(1e-4)) { return {DiffMethod::CentralDifference, h}; }
};

inline constexpr double kAnalyticTol = 1e-9;
inline constexpr double kFiniteDifferenceTol = 1e-6;

/// Cartesian product of per-coordinate value lists, first axis varying slowest.
template <class Scalar>
std::vector<Vector<Scalar>> product_grid(const std::vector<std::vector<Scalar>>& axes) {
  std::vector<Vector<Scalar>> out{Vector<Scalar>(0)};
  for (const auto& axis : axes) {
    std::vector<Vector<Scalar>> next;
    for (const auto& prefix : out) {
      for (Scalar v : axis) {
        Vector<Scalar> p(prefix.size() + 1);
        p << prefix, v;
        next.push_back(std::move(p));
      }
    }
    out = std::move(next);
  }
  return out;
}

template <class Scalar>
std::string label(const Vector<Scalar>& lambda) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    if (i) s += ",";
    s += format_real(static_cast<double>(lambda[i]));
  }
  return s + ")";
}

// Catalog ---------------------------------------------------------------------

/// b_{p,q}(t) = (tp cos q, tp sin q) for t > 0, λ = (p, q).
template <class Scalar>
ParamFamily<Scalar> disk_family(std::vector<Vector<Scalar>> grid) {
  using std::cos;
  using std::sin;
  ParamFamily<Scalar> f;
  f.name = "disk";
  f.grid = std::move(grid);
  f.dim = 2;
  f.time_domain = IntervalSet::ray_above(0.0, false);
  f.eval = [](const Vector<Scalar>& l, Scalar t) {
    Vector<Scalar> v(2);
    v << t * l[0] * cos(l[1]), t * l[0] * sin(l[1]);
    return v;
  };
  f.analytic_derivative = [](const Vector<Scalar>& l, Scalar) {
    Vector<Scalar> v(2);
    v << l[0] * cos(l[1]), l[0] * sin(l[1]);
    return v;
  };
  return f;
}

template <class Scalar>
ParamFamily<Scalar> disk_family(const std::vector<Scalar>& ps, const std::vector<Scalar>& qs) {
  return disk_family<Scalar>(product_grid<Scalar>({ps, qs}));
}

/// a_v(t) = t v, λ = v.
template <class Scalar>
ParamFamily<Scalar> scaled_direction_family(std::vector<Vector<Scalar>> grid) {
  ParamFamily<Scalar> f;
  f.name = "scaled_direction";
  f.dim = grid.empty() ? 0 : grid.front().size();
  f.grid = std::move(grid);
  f.eval = [](const Vector<Scalar>& v, Scalar t) -> Vector<Scalar> { return t * v; };
  f.analytic_derivative = [](const Vector<Scalar>& v, Scalar) -> Vector<Scalar> { return v; };
  return f;
}

/// a_{c,v}(t) = c + t v, λ = (c, v) stacked.
template <class Scalar>
ParamFamily<Scalar> affine_family(std::vector<Vector<Scalar>> grid) {
  ParamFamily<Scalar> f;
  f.name = "affine";
  f.dim = grid.empty() ? 0 : grid.front().size() / 2;
  f.grid = std::move(grid);
  const Eigen::Index n = f.dim;
  f.eval = [n](const Vector<Scalar>& l, Scalar t) -> Vector<Scalar> { return l.head(n) + t * l.tail(n); };
  f.analytic_derivative = [n](const Vector<Scalar>& l, Scalar) -> Vector<Scalar> { return l.tail(n); };
  return f;
}

/// a_v(t) = t² v, λ = v. Not t-linear, so the shift identity fails.
template <class Scalar>
ParamFamily<Scalar> quadratic_family(std::vector<Vector<Scalar>> grid) {
  ParamFamily<Scalar> f;
  f.name = "quadratic";
  f.dim = grid.empty() ? 0 : grid.front().size();
  f.grid = std::move(grid);
  f.eval = [](const Vector<Scalar>& v, Scalar t) -> Vector<Scalar> { return t * t * v; };
  f.analytic_derivative = [](const Vector<Scalar>& v, Scalar t) -> Vector<Scalar> { return Scalar(2) * t * v; };
  return f;
}

// Operations ------------------------------------------------------------------

namespace detail {

template <class Scalar>
void require_time(const ParamFamily<Scalar>& f, Scalar t) {
  if (!f.time_domain.contains(static_cast<double>(t))) {
    throw Error(ErrorKind::OutOfDomain, "t = " + format_real(static_cast<double>(t)) + " is outside " +
                                            to_string(f.time_domain) + " for family " + f.name);
  }
}

template <class Scalar, class Fn>
PointCloud<Scalar> tabulate(const ParamFamily<Scalar>& f, Fn&& row) {
  PointCloud<Scalar> out(static_cast<Eigen::Index>(f.grid.size()), f.dim);
  for (std::size_t i = 0; i < f.grid.size(); ++i) {
    const Vector<Scalar> v = row(f.grid[i]);
    if (v.size() != f.dim) throw Error(ErrorKind::ShapeMismatch, "family " + f.name + " returned a point of wrong size");
    out.row(static_cast<Eigen::Index>(i)) = v.transpose();
  }
  return out;
}

}  // namespace detail

template <class Scalar>
PointCloud<Scalar> family_sample(const ParamFamily<Scalar>& f, Scalar t) {
  detail::require_time(f, t);
  return detail::tabulate(f, [&](const Vector<Scalar>& l) { return f.eval(l, t); });
}

template <class Scalar>
PointCloud<Scalar> family_derivative(const ParamFamily<Scalar>& f, Scalar t,
                                     const Differentiation<Scalar>& how = Differentiation<Scalar>::analytic()) {
  detail::require_time(f, t);
  if (how.method == DiffMethod::Analytic) {
    if (!f.has_analytic()) throw Error(ErrorKind::NoAnalyticDerivative, "family " + f.name + " has no analytic derivative");
    return detail::tabulate(f, [&](const Vector<Scalar>& l) { return f.analytic_derivative(l, t); });
  }
  if (!(how.h > Scalar(0))) throw Error(ErrorKind::InvalidArgument, "finite-difference step must be positive");
  detail::require_time(f, t - how.h);
  detail::require_time(f, t + how.h);
  return (family_sample(f, t + how.h) - family_sample(f, t - how.h)) / (Scalar(2) * how.h);
}

template <class Scalar>
PointCloud<Scalar> family_elementwise_add(const PointCloud<Scalar>& a, const PointCloud<Scalar>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::ShapeMismatch, "clouds of shape " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                              " and " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  return a + b;
}

/// Fails on the first pair of grid points closer than tol at some probe time.
template <class Scalar>
Verdict family_injectivity_check(const ParamFamily<Scalar>& f, const std::vector<Scalar>& probes, Scalar tol) {
  for (Scalar t : probes) {
    const auto cloud = family_sample(f, t);
    for (Eigen::Index i = 0; i < cloud.rows(); ++i) {
      for (Eigen::Index j = i + 1; j < cloud.rows(); ++j) {
        const Scalar d = (cloud.row(i) - cloud.row(j)).norm();
        if (d <= tol) {
          return Verdict::fail(Definition::Injectivity, label(f.grid[static_cast<std::size_t>(i)]),
                               "coincides with " + label(f.grid[static_cast<std::size_t>(j)]) +
                                   " at t = " + format_real(static_cast<double>(t)) +
                                   " (distance " + format_real(static_cast<double>(d)) + ")");
        }
      }
    }
  }
  return Verdict::pass(Definition::Injectivity);
}

struct ShiftError {
  double max_error = 0.0;
  std::size_t worst = 0;  // grid index attaining max_error
};

/// max over λ of |(a_λ(t) + a_λ'(t)) - a_λ(t+1)|.
template <class Scalar>
ShiftError family_shift_error(const ParamFamily<Scalar>& f, Scalar t, const Differentiation<Scalar>& how) {
  detail::require_time(f, t + Scalar(1));
  const auto lhs = family_elementwise_add(family_sample(f, t), family_derivative(f, t, how));
  const auto rhs = family_sample(f, t + Scalar(1));
  ShiftError out;
  for (Eigen::Index i = 0; i < lhs.rows(); ++i) {
    const double e = static_cast<double>((lhs.row(i) - rhs.row(i)).norm());
    if (e > out.max_error || i == 0) out = {e, static_cast<std::size_t>(i)};
  }
  return out;
}

template <class Scalar>
Verdict family_shift_check(const ParamFamily<Scalar>& f, Scalar t, const Differentiation<Scalar>& how, Scalar tol) {
  const auto err = family_shift_error(f, t, how);
  if (err.max_error <= static_cast<double>(tol)) return Verdict::pass(Definition::ShiftIdentity);
  return Verdict::fail(Definition::ShiftIdentity, label(f.grid[err.worst]),
                       "|a(t) + a'(t) - a(t+1)| = " + format_real(err.max_error) + " > " +
                           format_real(static_cast<double>(tol)) + " at t = " + format_real(static_cast<double>(t)));
}

}  // namespace svfa::es
