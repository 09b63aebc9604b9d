#pragma once

// Systole certificates for surfaces glued from equal-cuff pants, and the
// Cheeger lower bound on the first eigenvalue.

#include <cstddef>

#include "hypspec/surface.hpp"

namespace hypspec::certify {

/// Smallest girth W with W * d(eps) >= 2 eps, evaluated with the same
/// floating-point comparison the certificate uses.
std::size_t required_girth(double epsilon);

enum class Verdict { kCertified, kInsufficientGirth };

/// Evidence that every closed geodesic other than the cuffs is longer than
/// eps: a non-trivial graph cycle crosses at least girth pants, each
/// contributing d(eps), and a curve inside one pants returns along an arc
/// of length tau(eps) > eps / 2.
struct SystoleCertificate {
  double epsilon = 0;
  std::size_t graph_girth = 0;
  double d_value = 0;
  double condition_lhs = 0;  // girth * d
  double condition_rhs = 0;  // 2 eps
  double tau_value = 0;
  Verdict verdict = Verdict::kInsufficientGirth;
  std::size_t required_girth = 0;

  bool certified() const noexcept { return verdict == Verdict::kCertified; }
};

/// Requires all cuffs to have the same length; throws UnsupportedError
/// otherwise.
SystoleCertificate certify_systole(const surface::FNSurface& surface);

/// h >= min(1, eps / (2 pi (g - 1))) and lambda_1 >= h^2 / 4.
struct CheegerBound {
  std::size_t genus = 0;
  double epsilon = 0;
  double h_lower = 0;
  double lambda1_lower = 0;
  double alpha = 0;  // eps^2 / (16 pi^2)
};

CheegerBound cheeger_lower(std::size_t genus, double epsilon);

}  // namespace hypspec::certify
