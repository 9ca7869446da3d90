#pragma once

#include "hankelscope/polynomial.hpp"

#include <complex>
#include <functional>
#include <vector>

namespace hankelscope {

/// Uniform grid in the logarithmic variable x = ln t together with its
/// discrete Fourier dual.
///
/// Spatial nodes:   x_j  = -L + j dx,          j = 0..N-1,  dx  = 2L / N
/// Spectral nodes:  xi_k = (k - N/2) dxi,      k = 0..N-1,  dxi = pi / L
///
/// The spectral nodes cover [-pi/dx, pi/dx); index N/2 is xi = 0. The
/// spatial nodes coincide with the dual grid of the spectral nodes, so the
/// symbol of D = i d/dxi on spectral samples is multiplication by x_j.
class LogGrid {
 public:
  /// Throws DomainError unless L > 0 and N is a power of two >= 2.
  LogGrid(double L, int N);

  [[nodiscard]] double half_width() const { return L_; }
  [[nodiscard]] int size() const { return N_; }
  [[nodiscard]] double dx() const { return 2.0 * L_ / N_; }
  [[nodiscard]] double dxi() const;
  [[nodiscard]] double node(int j) const { return -L_ + j * dx(); }
  [[nodiscard]] double frequency(int k) const { return (k - N_ / 2) * dxi(); }
  [[nodiscard]] std::vector<double> nodes() const;
  [[nodiscard]] std::vector<double> frequencies() const;

  friend bool operator==(const LogGrid&, const LogGrid&) = default;

 private:
  double L_;
  int N_;
};

enum class SampleDomain { kSpatial, kSpectral };

/// Complex samples on either the spatial or the spectral nodes of a grid.
struct GridFunction {
  LogGrid grid;
  SampleDomain domain = SampleDomain::kSpatial;
  std::vector<std::complex<double>> values;

  /// sqrt(h * sum |values|^2) with h = dx or dxi depending on the domain.
  [[nodiscard]] double norm() const;
  /// h * sum values * conj(other).
  [[nodiscard]] std::complex<double> inner(const GridFunction& other) const;
};

using RealFunction = std::function<double(double)>;

/// v(xi) = sqrt(pi / cosh(pi xi)).
double v_eval(double xi);

/// (U f)(x_j) = e^{x_j/2} f(e^{x_j}). Throws DomainError naming the node on a
/// non-finite sample.
GridFunction u_map(const RealFunction& f, const LogGrid& grid);

/// (2 pi)^{-1/2} int u(x) e^{-i x xi} dx on the spectral nodes (FFT).
GridFunction mellin(const GridFunction& u);

/// Inverse of mellin: spectral samples back to spatial samples.
GridFunction inverse_mellin(const GridFunction& w);

/// F f = Gamma(1/2 + i xi)/|Gamma(1/2 + i xi)| * (M f)(xi).
GridFunction f_transform(const RealFunction& f, const LogGrid& grid);

/// Applies Q(D), D = i d/dxi, to spectral samples by multiplying the dual
/// spatial samples by Q(x_j) (periodic spectral differentiation).
GridFunction apply_polynomial_of_d(const RealPolynomial& q, const GridFunction& w);

/// sinh(pi xi) / pi^2, the closed form of int_0^xi v(eta)^{-2} d eta.
double t_reparametrization(double xi);

/// Band-limited (sinc) interpolation of spectral samples at an arbitrary
/// point; zero outside the sampled window.
std::complex<double> sinc_interpolate(const GridFunction& g, double xi);

/// (T g)(xi) = v(xi)^{-1} exp(i q0/q1 xi) g(sinh(pi xi)/pi^2) on the spectral
/// nodes of g. Throws DomainError if q1 == 0 or g is not spectral.
GridFunction t_transform(const GridFunction& g, double q0, double q1);

}  // namespace hankelscope
