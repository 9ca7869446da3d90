#pragma once

#include "hankelscope/polynomial.hpp"

#include <Eigen/Dense>

namespace hankelscope {

/// Largest degree K supported by the coefficient map.
inline constexpr int kMaxMapDegree = 12;

/// Kernel h(t) = P(ln t) / t with a real polynomial P of degree K >= 0.
class QuasiCarlemanKernel {
 public:
  /// Throws DomainError when P is identically zero or has non-finite coefficients.
  explicit QuasiCarlemanKernel(RealPolynomial p);

  [[nodiscard]] const RealPolynomial& p() const { return p_; }
  [[nodiscard]] int degree() const { return p_.degree(); }
  /// h(t) for t > 0.
  [[nodiscard]] double operator()(double t) const;
  /// e^{x/2} e^{y/2} h(e^x + e^y), the kernel after the logarithmic change of
  /// variables, evaluated without forming e^x + e^y explicitly.
  [[nodiscard]] double log_kernel(double x, double y) const;

 private:
  RealPolynomial p_;
};

/// Upper-triangular map M with M(k, l) = C(l, k) * omega^{(l-k)}(0), so that
/// q = M p for coefficient vectors p, q (lowest degree first).
struct CoeffMapMatrix {
  int K = 0;
  Eigen::MatrixXd entries;
};

/// Throws UnsupportedError for K > kMaxMapDegree, DomainError for K < 0.
CoeffMapMatrix build_map_matrix(int K);

/// Q with q_k = sum_{l >= k} C(l, k) omega^{(l-k)}(0) p_l.
RealPolynomial p_to_q(const RealPolynomial& p);

/// Inverse of p_to_q by back substitution on the unit upper-triangular map.
RealPolynomial q_to_p(const RealPolynomial& q);

}  // namespace hankelscope
