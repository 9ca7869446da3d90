#include "hankelscope/special_functions.hpp"

#include "hankelscope/errors.hpp"

#include <array>
#include <cmath>
#include <string>

namespace hankelscope {

namespace {

// Lanczos coefficients for g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

const double kHalfLogTwoPi = 0.5 * std::log(2.0 * kPi);

// B_{2j} / (2j)! for j = 1..7.
constexpr std::array<double, 7> kBernoulliOverFactorial = {
    1.0 / 12.0,           -1.0 / 720.0,          1.0 / 30240.0,         -1.0 / 1209600.0,
    1.0 / 47900160.0,     -691.0 / 1307674368000.0, 1.0 / 74724249600.0};

}  // namespace

namespace {

// zeta(s) - 1 = sum_{n>=2} n^{-s}: direct sum to n = 11, Euler-Maclaurin tail from 12.
long double zeta_minus_one(long double s) {
  constexpr int n_terms = 12;
  long double sum = 0.0L;
  for (int n = n_terms - 1; n >= 2; --n) sum += std::pow(static_cast<long double>(n), -s);
  const long double N = n_terms;
  sum += std::pow(N, 1.0L - s) / (s - 1.0L) + 0.5L * std::pow(N, -s);
  // sum_j B_{2j}/(2j)! * s (s+1) ... (s+2j-2) * N^{-s-2j+1}
  long double rising = s;
  for (size_t j = 1; j <= kBernoulliOverFactorial.size(); ++j) {
    const long double twoj = 2.0L * static_cast<long double>(j);
    sum += static_cast<long double>(kBernoulliOverFactorial[j - 1]) * rising * std::pow(N, -s - twoj + 1.0L);
    rising *= (s + twoj - 1.0L) * (s + twoj);
  }
  return sum;
}

}  // namespace

double riemann_zeta(double s) {
  if (!(s > 1.0)) throw DomainError("riemann_zeta: requires s > 1, got " + std::to_string(s));
  return static_cast<double>(1.0L + zeta_minus_one(s));
}

GammaJet build_gamma_jet(int order) {
  if (order < 0) throw DomainError("build_gamma_jet: order must be >= 0");
  if (order > kMaxGammaJetOrder)
    throw UnsupportedError("build_gamma_jet: order " + std::to_string(order) + " exceeds " +
                           std::to_string(kMaxGammaJetOrder));
  GammaJet jet;
  jet.order = order;
  const auto n = static_cast<size_t>(order) + 1;

  // log Gamma(1+w) = -gamma w + sum_{k>=2} (-1)^k zeta(k) w^k / k. Splitting
  // zeta(k) = 1 + (zeta(k) - 1) and summing the ones gives
  //   1/Gamma(1+w) = (1 + w) exp(sum_k b_k w^k),
  //   b_1 = gamma - 1,  b_k = (-1)^{k+1} (zeta(k) - 1) / k,
  // whose coefficients decay like 2^{-k}, so the exponential recurrence below
  // does not cancel.
  std::vector<long double> b(n, 0.0L);
  if (order >= 1) b[1] = 0.57721566490153286060651209008240243L - 1.0L;
  for (int k = 2; k <= order; ++k) {
    const long double zm1 = zeta_minus_one(k);
    jet.zeta_values.push_back(static_cast<double>(1.0L + zm1));
    b[static_cast<size_t>(k)] = ((k % 2 == 0) ? -1.0L : 1.0L) * zm1 / k;
  }

  // e = exp(sum b_k w^k): m e_m = sum_{k=1}^{m} k b_k e_{m-k}
  std::vector<long double> e(n, 0.0L);
  e[0] = 1.0L;
  for (size_t m = 1; m < n; ++m) {
    long double acc = 0.0L;
    for (size_t k = 1; k <= m; ++k) acc += static_cast<long double>(k) * b[k] * e[m - k];
    e[m] = acc / static_cast<long double>(m);
  }

  auto& c = jet.reciprocal_gamma_taylor;
  c.resize(n);
  for (size_t m = 0; m < n; ++m) c[m] = static_cast<double>(e[m] + (m > 0 ? e[m - 1] : 0.0L));

  // omega(z) = 1/Gamma(1 - z) = sum c_m (-z)^m  =>  omega^{(m)}(0) = (-1)^m m! c_m
  jet.omega_derivs.resize(n);
  long double factorial = 1.0L;
  for (size_t m = 0; m < n; ++m) {
    if (m > 0) factorial *= static_cast<long double>(m);
    const long double cm = e[m] + (m > 0 ? e[m - 1] : 0.0L);
    jet.omega_derivs[m] = static_cast<double>(((m % 2 == 0) ? 1.0L : -1.0L) * factorial * cm);
  }
  return jet;
}

std::complex<double> log_gamma(std::complex<double> z) {
  if (!(z.real() > 0.0))
    throw DomainError("log_gamma: requires Re z > 0, got Re z = " + std::to_string(z.real()));
  const std::complex<double> zm1 = z - 1.0;
  std::complex<double> series = kLanczosCoeffs[0];
  for (size_t k = 1; k < kLanczosCoeffs.size(); ++k) series += kLanczosCoeffs[k] / (zm1 + static_cast<double>(k));
  const std::complex<double> t = zm1 + kLanczosG + 0.5;
  return kHalfLogTwoPi + (zm1 + 0.5) * std::log(t) - t + std::log(series);
}

double log_cosh(double x) {
  const double a = std::abs(x);
  return a + std::log1p(std::exp(-2.0 * a)) - std::log(2.0);
}

std::complex<double> gamma_half_phase(double xi) {
  const std::complex<double> lg = log_gamma({0.5, xi});
  // |Gamma(1/2 + i xi)|^2 = pi / cosh(pi xi): the log-modulus is known in
  // closed form, so only the residual of the Lanczos real part is kept.
  const double log_modulus_residual = lg.real() - 0.5 * (std::log(kPi) - log_cosh(kPi * xi));
  return std::exp(std::complex<double>(log_modulus_residual, lg.imag()));
}

}  // namespace hankelscope
