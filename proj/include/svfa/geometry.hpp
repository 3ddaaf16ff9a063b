#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "svfa/svf.hpp"

namespace svfa {

/// Disk families in the plane. Membership depends only on the radius ρ of a
/// point, so universes store radii and every trajectory has a closed form.
enum class RadialKind {
  OpenInner,    // ρ < 1 - 1/t on (1, inf)
  ClosedInner,  // ρ <= 1 - 1/t on (1, inf)
  ClosedOuter,  // ρ <= 1 + 1/t on (1, inf)
  OpenOuter,    // ρ < 1 + 1/t on (1, inf)
  OpenScale,    // ρ < t on (0, inf)
  ClosedScale,  // ρ <= t on (0, inf)
  GrowOpen,     // ρ < t on (0, inf), the family with no proper upper bound
  Point,        // C(t) = {t} on the real line
  Constant,     // a fixed mask on the real line
};

std::string_view to_string(RadialKind kind);
/// Accepts the upper-case names used in scenario files ("OPEN_INNER", ...).
RadialKind radial_kind_from_string(std::string_view name);

IntervalSet family_domain(RadialKind kind);

/// Solution set in t of the family's membership inequality for a point at
/// radius rho, intersected with the family domain. Thresholds are evaluated
/// as 1/(1-ρ) and 1/(ρ-1) verbatim; ρ = 1 is decided by case analysis.
IntervalSet radial_trajectory(RadialKind kind, double rho);

/// [x,x] when x lies in the domain, empty otherwise.
IntervalSet point_trajectory(double x, const IntervalSet& domain);

/// Elements labelled by format_real(value), payload = {value}.
UniversePtr radial_universe(std::span<const double> values);
/// Elements labelled "(x,y)", payload = {x, y}; radius is the Euclidean norm.
UniversePtr planar_universe(std::span<const std::array<double, 2>> points);

/// Point kind reads payload values as reals, the radial kinds read radii.
/// Constant is rejected here; use constant_family().
Svf build_svf(RadialKind kind, const UniversePtr& universe);
Svf build_svf(RadialKind kind, std::span<const double> values);
Svf constant_family(const FiniteSet& members);

/// {ρ < radius} and {ρ <= radius} over a radial or planar universe.
FiniteSet open_disk(const UniversePtr& universe, double radius = 1.0);
FiniteSet closed_disk(const UniversePtr& universe, double radius = 1.0);

}  // namespace svfa
