#include "hypspec/hypgeom.hpp"

#include <vector>

namespace hypspec::geom {

namespace {

constexpr int kMaxSimpsonDepth = 50;

struct SimpsonState {
  std::size_t evaluations = 0;
};

template <class F>
double simpson_step(const F& f, double a, double fa, double b, double fb, double whole, double fm,
                    double tol, int depth, SimpsonState& state) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  state.evaluations += 2;
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (std::fabs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  if (depth >= kMaxSimpsonDepth) {
    throw NumericalError("adaptive Simpson quadrature did not converge within depth budget");
  }
  return simpson_step(f, a, fa, m, fm, left, flm, 0.5 * tol, depth + 1, state) +
         simpson_step(f, m, fm, b, fb, right, frm, 0.5 * tol, depth + 1, state);
}

// Relative tolerance is measured against the single-panel estimate.
template <class F>
double adaptive_simpson(const F& f, double a, double b, double rel_tol) {
  SimpsonState state;
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  const double tol = rel_tol * std::fabs(whole);
  return simpson_step(f, a, fa, b, fb, whole, fm, tol, 0, state);
}

}  // namespace

CollarProfile CollarProfile::standard(double length, double a, double b) {
  CollarProfile p;
  p.length = length;
  p.half_width = collar_half_width(length);
  p.a = a;
  p.b = b;
  p.validate();
  return p;
}

void CollarProfile::validate() const {
  if (!std::isfinite(length) || !(length > 0.0)) {
    throw DomainError("collar profile: length must be positive and finite");
  }
  if (!std::isfinite(half_width) || !(half_width > 0.0)) {
    throw DomainError("collar profile: half width must be positive and finite");
  }
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("collar profile: boundary values must be finite");
  }
}

double collar_energy_min(const CollarProfile& profile) {
  profile.validate();
  const double jump = profile.a - profile.b;
  return jump * jump * profile.length / (4.0 * collar_arc(profile.half_width));
}

double harmonic_profile(const CollarProfile& profile, double rho) {
  profile.validate();
  const double w = profile.half_width;
  if (!(rho >= -w && rho <= w)) {
    throw DomainError("harmonic_profile: rho outside [-w, w]");
  }
  const double mid = 0.5 * (profile.a + profile.b);
  const double slope = (profile.b - profile.a) / (2.0 * collar_arc(w));
  return mid + slope * std::atan(std::tanh(0.5 * rho));
}

double discrete_collar_energy(const CollarProfile& profile, std::span<const double> values) {
  profile.validate();
  if (values.size() < 2) {
    throw DomainError("discrete_collar_energy: need at least two nodal values");
  }
  const std::size_t cells = values.size() - 1;
  const double w = profile.half_width;
  const double step = 2.0 * w / static_cast<double>(cells);
  double energy = 0.0;
  for (std::size_t i = 0; i < cells; ++i) {
    const double rho_mid = -w + (static_cast<double>(i) + 0.5) * step;
    const double diff = values[i + 1] - values[i];
    energy += profile.length * std::cosh(rho_mid) * diff * diff / step;
  }
  return energy;
}

double collar_energy_bruteforce(const CollarProfile& profile, std::size_t grid_size) {
  profile.validate();
  if (grid_size < 16) {
    throw DomainError("collar_energy_bruteforce: grid_size must be at least 16");
  }
  const std::size_t cells = grid_size;
  const double w = profile.half_width;
  const double step = 2.0 * w / static_cast<double>(cells);

  // Cell conductances l cosh(rho_{i+1/2}) / drho.
  std::vector<double> cond(cells);
  for (std::size_t i = 0; i < cells; ++i) {
    const double rho_mid = -w + (static_cast<double>(i) + 0.5) * step;
    cond[i] = profile.length * std::cosh(rho_mid) / step;
  }

  // Unknowns u_j = f_j - a for j = 1..cells-1 with u_0 = 0, u_cells = b - a.
  const std::size_t n = cells - 1;
  const double jump = profile.b - profile.a;
  std::vector<double> diag(n);
  std::vector<double> upper(n);
  std::vector<double> rhs(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    diag[j] = cond[j] + cond[j + 1];
    upper[j] = -cond[j + 1];
  }
  rhs[n - 1] = cond[cells - 1] * jump;

  // Thomas elimination; the sub-diagonal entry of row j is -cond[j].
  for (std::size_t j = 1; j < n; ++j) {
    if (!(diag[j - 1] > 0.0)) {
      throw NumericalError("collar_energy_bruteforce: singular tridiagonal system");
    }
    const double factor = -cond[j] / diag[j - 1];
    diag[j] -= factor * upper[j - 1];
    rhs[j] -= factor * rhs[j - 1];
  }
  if (!(diag[n - 1] > 0.0)) {
    throw NumericalError("collar_energy_bruteforce: singular tridiagonal system");
  }
  std::vector<double> u(cells + 1, 0.0);
  u[cells] = jump;
  u[n] = rhs[n - 1] / diag[n - 1];
  for (std::size_t j = n - 1; j-- > 0;) {
    u[j + 1] = (rhs[j] - upper[j] * u[j + 2]) / diag[j];
  }

  double energy = 0.0;
  for (std::size_t i = 0; i < cells; ++i) {
    const double diff = u[i + 1] - u[i];
    energy += cond[i] * diff * diff;
  }
  return energy;
}

double collar_area_quadrature(double length, double tol) {
  detail::check_length(length, "geodesic length");
  if (!std::isfinite(tol) || !(tol > 0.0)) {
    throw DomainError("collar_area_quadrature: tol must be positive");
  }
  const double w = collar_half_width(length);
  const auto slice = [&](double /*t*/) {
    return adaptive_simpson([&](double rho) { return length * std::cosh(rho); }, -w, w, 0.5 * tol);
  };
  return adaptive_simpson(slice, 0.0, 1.0, 0.5 * tol);
}

DiskMeasure disk_isoperimetric(double radius) {
  if (!std::isfinite(radius) || !(radius > 0.0)) {
    throw DomainError("disk radius must be positive and finite");
  }
  const double s = std::sinh(0.5 * radius);
  return {4.0 * std::numbers::pi * s * s, 2.0 * std::numbers::pi * std::sinh(radius)};
}

}  // namespace hypspec::geom
