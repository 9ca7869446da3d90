#include "hankelscope/coeff_map.hpp"

#include "hankelscope/errors.hpp"
#include "hankelscope/special_functions.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace hankelscope {

QuasiCarlemanKernel::QuasiCarlemanKernel(RealPolynomial p) : p_(std::move(p)) {
  if (p_.is_zero()) throw DomainError("QuasiCarlemanKernel: P must not be identically zero");
  for (double c : p_.coeffs())
    if (!std::isfinite(c)) throw DomainError("QuasiCarlemanKernel: non-finite coefficient");
}

double QuasiCarlemanKernel::operator()(double t) const {
  if (!(t > 0.0)) throw DomainError("QuasiCarlemanKernel: t must be positive");
  return p_.eval(std::log(t)) / t;
}

double QuasiCarlemanKernel::log_kernel(double x, double y) const {
  // s = ln(e^x + e^y) = max + log1p(exp(-|x - y|))
  const double hi = std::max(x, y);
  const double s = hi + std::log1p(std::exp(-std::abs(x - y)));
  return std::exp(0.5 * (x + y) - s) * p_.eval(s);
}

namespace {

std::vector<std::vector<double>> pascal(int n) {
  std::vector<std::vector<double>> c(static_cast<size_t>(n) + 1);
  for (int l = 0; l <= n; ++l) {
    c[static_cast<size_t>(l)].assign(static_cast<size_t>(l) + 1, 1.0);
    for (int k = 1; k < l; ++k)
      c[static_cast<size_t>(l)][static_cast<size_t>(k)] =
          c[static_cast<size_t>(l - 1)][static_cast<size_t>(k - 1)] + c[static_cast<size_t>(l - 1)][static_cast<size_t>(k)];
  }
  return c;
}

Eigen::VectorXd as_vector(const RealPolynomial& p, int K) {
  Eigen::VectorXd v(K + 1);
  for (int k = 0; k <= K; ++k) v(k) = p.coeff(k);
  return v;
}

RealPolynomial from_vector(const Eigen::VectorXd& v) {
  return RealPolynomial(std::vector<double>(v.data(), v.data() + v.size()));
}

}  // namespace

CoeffMapMatrix build_map_matrix(int K) {
  if (K < 0) throw DomainError("build_map_matrix: K must be >= 0");
  if (K > kMaxMapDegree)
    throw UnsupportedError("build_map_matrix: degree " + std::to_string(K) + " exceeds " +
                           std::to_string(kMaxMapDegree));
  const GammaJet jet = build_gamma_jet(K);
  const auto binom = pascal(K);
  CoeffMapMatrix m{K, Eigen::MatrixXd::Zero(K + 1, K + 1)};
  for (int k = 0; k <= K; ++k)
    for (int l = k; l <= K; ++l)
      m.entries(k, l) = binom[static_cast<size_t>(l)][static_cast<size_t>(k)] * jet.omega_derivs[static_cast<size_t>(l - k)];
  return m;
}

RealPolynomial p_to_q(const RealPolynomial& p) {
  if (p.is_zero()) throw DomainError("p_to_q: P must not be identically zero");
  const auto m = build_map_matrix(p.degree());
  return from_vector(m.entries * as_vector(p, m.K));
}

RealPolynomial q_to_p(const RealPolynomial& q) {
  if (q.is_zero()) throw DomainError("q_to_p: Q must not be identically zero");
  const auto m = build_map_matrix(q.degree());
  Eigen::VectorXd p = as_vector(q, m.K);
  m.entries.triangularView<Eigen::UnitUpper>().solveInPlace(p);
  return from_vector(p);
}

}  // namespace hankelscope
