#pragma once

#include <Eigen/Dense>

#include <vector>

namespace hankelscope {

/// Chebyshev-Gauss-Lobatto points x_j = cos(pi j / N), j = 0..N (descending).
/// Computed as sin(pi (N - 2j) / (2N)) so that x_{N-j} = -x_j exactly.
std::vector<double> cgl_points(int N);

/// Collocation differentiation matrix on cgl_points(N) (d/dx on [-1, 1]).
/// Node differences use trigonometric identities and the diagonal is the
/// negative row sum, which keeps D annihilating constants to rounding.
Eigen::MatrixXd cgl_diff_matrix(int N);

struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// m-point Gauss-Legendre rule on [-1, 1], ascending nodes.
GaussRule gauss_legendre(int m);

/// Barycentric interpolation matrix E with (E f)_i = p(y_i), where p is the
/// degree-N interpolant of the values f on cgl_points(N).
Eigen::MatrixXd cgl_interpolation_matrix(int N, const std::vector<double>& y);

}  // namespace hankelscope
