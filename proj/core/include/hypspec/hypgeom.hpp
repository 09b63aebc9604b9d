#pragma once

// Closed-form hyperbolic trigonometry for pairs of pants with equal cuffs
// and for standard collars, plus the numerical oracles used to check it.
//
// Collar coordinates: (rho, t) in [-w, w] x [0, 1) with metric
// d rho^2 + l^2 cosh^2(rho) dt^2 around a geodesic of length l.

#include <cmath>
#include <concepts>
#include <cstddef>
#include <limits>
#include <numbers>
#include <span>
#include <string>

#include "hypspec/errors.hpp"

namespace hypspec::geom {

/// Largest cuff or geodesic length accepted by the closed forms.
inline constexpr double kMaxLength = 1e4;

namespace detail {

template <std::floating_point T>
void check_length(T x, const char* what) {
  if (!std::isfinite(x) || !(x > T(0)) || x > T(kMaxLength)) {
    throw DomainError(std::string(what) + " must lie in (0, 1e4], got " +
                      std::to_string(static_cast<long double>(x)));
  }
}

}  // namespace detail

/// 1/sinh(x) for x > 0, evaluated as 2e^{-x}/(1 - e^{-2x}) so that it
/// underflows gracefully instead of dividing by an overflowed sinh.
template <std::floating_point T>
T inv_sinh(T x) {
  using std::exp;
  using std::expm1;
  return T(2) * exp(-x) / -expm1(T(-2) * x);
}

/// arcsinh with a log1p form near zero and a log form for huge arguments.
template <std::floating_point T>
T stable_asinh(T x) {
  using std::log;
  using std::log1p;
  using std::sqrt;
  const T ax = std::fabs(x);
  T r;
  if (ax > T(1) / sqrt(std::numeric_limits<T>::epsilon())) {
    r = log(ax) + std::numbers::ln2_v<T>;
  } else {
    r = log1p(ax + ax * ax / (T(1) + sqrt(T(1) + ax * ax)));
  }
  return std::copysign(r, x);
}

/// Distance between two cuffs of a pair of pants whose cuffs all have
/// length eps: d = 2 arcsinh(1 / (2 sinh(eps/4))).
template <std::floating_point T>
T compute_d(T eps) {
  detail::check_length(eps, "cuff length");
  return T(2) * stable_asinh(inv_sinh(eps / T(4)) / T(2));
}

/// Altitude h of the right-angled hexagon, sinh h = cosh(eps/2)/sinh(eps/4).
template <std::floating_point T>
T compute_h(T eps) {
  detail::check_length(eps, "cuff length");
  using std::exp;
  using std::expm1;
  using std::log;
  using std::log1p;
  if (eps > T(100)) {
    // arcsinh(R) = ln(2R) + O(R^-2) with R = e^{eps/4}(1+e^{-eps})/(1-e^{-eps/2}).
    return std::numbers::ln2_v<T> + eps / T(4) + log1p(exp(-eps)) - log(-expm1(-eps / T(2)));
  }
  const T ratio = exp(eps / T(4)) * (T(1) + exp(-eps)) / -expm1(-eps / T(2));
  return stable_asinh(ratio);
}

/// Shortest arc from a cuff back to itself: tau = 2h.
template <std::floating_point T>
T compute_tau(T eps) {
  return T(2) * compute_h(eps);
}

/// Half width of the standard collar, w = arcsinh(1 / sinh(l/2)).
template <std::floating_point T>
T collar_half_width(T length) {
  detail::check_length(length, "geodesic length");
  return stable_asinh(inv_sinh(length / T(2)));
}

/// Area of the full collar, 2 l / sinh(l/2). Always below 4.
template <std::floating_point T>
T collar_area(T length) {
  detail::check_length(length, "geodesic length");
  return T(2) * length * inv_sinh(length / T(2));
}

/// Area of one side of the collar, l / sinh(l/2).
template <std::floating_point T>
T half_collar_area(T length) {
  detail::check_length(length, "geodesic length");
  return length * inv_sinh(length / T(2));
}

/// arctan(tanh(w/2)); a quarter of the integral of sech over [-w, w].
template <std::floating_point T>
T collar_arc(T half_width) {
  using std::atan;
  using std::tanh;
  return atan(tanh(half_width / T(2)));
}

/// Minimum Dirichlet energy of a collar around a geodesic of length l whose
/// boundary values differ by one: l / (4 arctan(tanh(w/2))).
template <std::floating_point T>
T collar_conductance(T length) {
  const T w = collar_half_width(length);
  return length / (T(4) * collar_arc(w));
}

template <std::floating_point T>
struct BasicPantsGeometry {
  T epsilon;
  T d;
  T tau;
  T h;
  T half_width;
  T collar_area;
  T pants_area;
};

using PantsGeometry = BasicPantsGeometry<double>;

template <std::floating_point T>
BasicPantsGeometry<T> pants_geometry(T eps) {
  BasicPantsGeometry<T> p{};
  p.epsilon = eps;
  p.d = compute_d(eps);
  p.h = compute_h(eps);
  p.tau = T(2) * p.h;
  p.half_width = collar_half_width(eps);
  p.collar_area = collar_area(eps);
  p.pants_area = T(2) * std::numbers::pi_v<T>;
  return p;
}

/// A collar with prescribed constant values a at rho = -w and b at rho = +w.
struct CollarProfile {
  double length = 0;
  double half_width = 0;
  double a = 0;
  double b = 0;

  /// Standard collar of a cuff of length `length`.
  static CollarProfile standard(double length, double a, double b);

  void validate() const;
};

/// Closed-form minimum of the collar energy over functions with the
/// profile's boundary values: (a-b)^2 l / (4 arctan(tanh(w/2))).
double collar_energy_min(const CollarProfile& profile);

/// The rotationally symmetric minimizer evaluated at rho in [-w, w].
double harmonic_profile(const CollarProfile& profile, double rho);

/// Discrete energy  sum_i l cosh(rho_{i+1/2}) (f_{i+1} - f_i)^2 / drho  of
/// nodal values f_0..f_N on the uniform grid over [-w, w].
double discrete_collar_energy(const CollarProfile& profile, std::span<const double> values);

/// Minimizes the discrete energy with f_0 = a, f_N = b by solving its
/// tridiagonal Euler-Lagrange system. Converges to collar_energy_min at
/// second order in grid_size (number of cells, at least 16).
double collar_energy_bruteforce(const CollarProfile& profile, std::size_t grid_size);

/// Adaptive Simpson quadrature of the collar volume element l cosh(rho)
/// over [0,1] x [-w, w]; relative accuracy tol.
double collar_area_quadrature(double length, double tol);

struct DiskMeasure {
  double area;
  double perimeter;
};

/// Area and boundary length of a hyperbolic disk of radius r.
DiskMeasure disk_isoperimetric(double radius);

}  // namespace hypspec::geom
