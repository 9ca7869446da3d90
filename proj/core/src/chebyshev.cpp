#include "hankelscope/chebyshev.hpp"

#include "hankelscope/errors.hpp"
#include "hankelscope/special_functions.hpp"

#include <cmath>

namespace hankelscope {

std::vector<double> cgl_points(int N) {
  if (N < 1) throw DomainError("cgl_points: N must be >= 1");
  std::vector<double> x(static_cast<size_t>(N) + 1);
  for (int j = 0; j <= N; ++j) x[static_cast<size_t>(j)] = std::sin(kPi * (N - 2 * j) / (2.0 * N));
  return x;
}

Eigen::MatrixXd cgl_diff_matrix(int N) {
  if (N < 1) throw DomainError("cgl_diff_matrix: N must be >= 1");
  const int n = N + 1;
  auto c = [N](int j) { return ((j == 0 || j == N) ? 2.0 : 1.0) * ((j % 2) ? -1.0 : 1.0); };
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      // x_i - x_j = -2 sin(pi (i + j) / 2N) sin(pi (i - j) / 2N)
      const double dx = -2.0 * std::sin(kPi * (i + j) / (2.0 * N)) * std::sin(kPi * (i - j) / (2.0 * N));
      d(i, j) = c(i) / (c(j) * dx);
      row += d(i, j);
    }
    d(i, i) = -row;
  }
  return d;
}

GaussRule gauss_legendre(int m) {
  if (m < 1) throw DomainError("gauss_legendre: m must be >= 1");
  GaussRule rule;
  rule.nodes.resize(static_cast<size_t>(m));
  rule.weights.resize(static_cast<size_t>(m));
  for (int i = 0; i < (m + 1) / 2; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (m + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = z;
      for (int k = 2; k <= m; ++k) {
        const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = m * (z * p1 - p0) / (z * z - 1.0);
      const double step = p1 / dp;
      z -= step;
      if (std::abs(step) < 1e-16) break;
    }
    // recompute derivative at the converged node
    double p0 = 1.0;
    double p1 = z;
    for (int k = 2; k <= m; ++k) {
      const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = m * (z * p1 - p0) / (z * z - 1.0);
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    rule.nodes[static_cast<size_t>(i)] = -z;
    rule.nodes[static_cast<size_t>(m - 1 - i)] = z;
    rule.weights[static_cast<size_t>(i)] = w;
    rule.weights[static_cast<size_t>(m - 1 - i)] = w;
  }
  if (m % 2 == 1) rule.nodes[static_cast<size_t>(m / 2)] = 0.0;
  return rule;
}

Eigen::MatrixXd cgl_interpolation_matrix(int N, const std::vector<double>& y) {
  const std::vector<double> x = cgl_points(N);
  std::vector<double> w(static_cast<size_t>(N) + 1);
  for (int j = 0; j <= N; ++j) w[static_cast<size_t>(j)] = ((j % 2) ? -1.0 : 1.0) * ((j == 0 || j == N) ? 0.5 : 1.0);
  Eigen::MatrixXd e = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(y.size()), N + 1);
  for (size_t i = 0; i < y.size(); ++i) {
    int exact = -1;
    double denom = 0.0;
    for (int j = 0; j <= N; ++j) {
      const double diff = y[i] - x[static_cast<size_t>(j)];
      if (diff == 0.0) {
        exact = j;
        break;
      }
      const double term = w[static_cast<size_t>(j)] / diff;
      e(static_cast<Eigen::Index>(i), j) = term;
      denom += term;
    }
    if (exact >= 0) {
      e.row(static_cast<Eigen::Index>(i)).setZero();
      e(static_cast<Eigen::Index>(i), exact) = 1.0;
    } else {
      e.row(static_cast<Eigen::Index>(i)) /= denom;
    }
  }
  return e;
}

}  // namespace hankelscope
