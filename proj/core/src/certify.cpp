#include "hypspec/certify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hypspec/hypgeom.hpp"

namespace hypspec::certify {

namespace {

bool girth_condition(std::size_t girth, double d, double epsilon) {
  return static_cast<double>(girth) * d >= 2.0 * epsilon;
}

}  // namespace

std::size_t required_girth(double epsilon) {
  const double d = geom::compute_d(epsilon);
  auto w = static_cast<std::size_t>(std::max(1.0, std::ceil(2.0 * epsilon / d)));
  while (!girth_condition(w, d, epsilon)) ++w;
  while (w > 1 && girth_condition(w - 1, d, epsilon)) --w;
  return w;
}

SystoleCertificate certify_systole(const surface::FNSurface& surface) {
  const auto eps = surface.uniform_length();
  if (!eps) throw UnsupportedError("certify_systole: cuff lengths must all be equal");

  SystoleCertificate cert;
  cert.epsilon = *eps;
  cert.graph_girth = graphs::girth(surface.graph().graph());
  cert.d_value = geom::compute_d(*eps);
  cert.tau_value = geom::compute_tau(*eps);
  cert.condition_lhs = static_cast<double>(cert.graph_girth) * cert.d_value;
  cert.condition_rhs = 2.0 * *eps;
  cert.required_girth = required_girth(*eps);
  const bool girth_ok = cert.condition_lhs >= cert.condition_rhs;
  const bool arc_ok = cert.tau_value > 0.5 * *eps;
  cert.verdict = girth_ok && arc_ok ? Verdict::kCertified : Verdict::kInsufficientGirth;
  return cert;
}

CheegerBound cheeger_lower(std::size_t genus, double epsilon) {
  if (genus < 2) throw DomainError("cheeger_lower: genus must be at least 2");
  if (!std::isfinite(epsilon) || !(epsilon > 0.0)) {
    throw DomainError("cheeger_lower: epsilon must be positive");
  }
  const double pi = std::numbers::pi;
  const double g1 = static_cast<double>(genus - 1);
  CheegerBound b;
  b.genus = genus;
  b.epsilon = epsilon;
  b.h_lower = std::min(1.0, epsilon / (2.0 * pi * g1));
  b.lambda1_lower = std::min(0.25, epsilon * epsilon / (16.0 * pi * pi * g1 * g1));
  b.alpha = epsilon * epsilon / (16.0 * pi * pi);
  return b;
}

}  // namespace hypspec::certify
