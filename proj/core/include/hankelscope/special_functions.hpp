#pragma once

#include <complex>
#include <vector>

namespace hankelscope {

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// Largest order accepted by build_gamma_jet.
inline constexpr int kMaxGammaJetOrder = 30;

/// Taylor jet of omega(z) = 1 / Gamma(1 - z) at z = 0.
struct GammaJet {
  int order = 0;
  /// omega^{(m)}(0) for m = 0..order.
  std::vector<double> omega_derivs;
  /// Taylor coefficients c_k of 1 / Gamma(1 + w) = sum c_k w^k.
  std::vector<double> reciprocal_gamma_taylor;
  double euler_gamma = kEulerGamma;
  /// zeta(2)..zeta(order); zeta_values[k - 2] = zeta(k).
  std::vector<double> zeta_values;
};

/// Builds the jet from the standard log-gamma series
///   log Gamma(1 + w) = -gamma w + sum_{k>=2} (-1)^k zeta(k) w^k / k
/// followed by series exponentiation. Throws UnsupportedError for
/// order > kMaxGammaJetOrder and DomainError for order < 0.
GammaJet build_gamma_jet(int order);

/// Riemann zeta for real s > 1 by Euler-Maclaurin summation.
double riemann_zeta(double s);

/// Principal branch of log Gamma(z) for Re z > 0 (Lanczos, g = 7, 9 terms).
/// Throws DomainError for Re z <= 0.
std::complex<double> log_gamma(std::complex<double> z);

/// log cosh(x) without overflow.
double log_cosh(double x);

/// Gamma(1/2 + i xi) / |Gamma(1/2 + i xi)|, evaluated entirely in log space.
std::complex<double> gamma_half_phase(double xi);

}  // namespace hankelscope
