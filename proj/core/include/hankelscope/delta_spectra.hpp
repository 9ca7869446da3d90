#pragma once

#include <Eigen/Dense>

#include <optional>
#include <utility>
#include <vector>

namespace hankelscope {

/// h = sum_k h_k delta^{(k)}(. - t0). Restricted to (0, t0) the Hankel
/// operator becomes (H f)(t) = sum_k (-1)^k h_k f^{(k)}(t0 - t) with
/// f(0) = ... = f^{(K-1)}(0) = 0.
class DeltaKernel {
 public:
  /// Trailing zero coefficients are dropped. Throws DomainError if every
  /// coefficient is zero, any is non-finite, or t0 <= 0.
  DeltaKernel(std::vector<double> h, double t0);

  [[nodiscard]] const std::vector<double>& h() const { return h_; }
  [[nodiscard]] double t0() const { return t0_; }
  [[nodiscard]] int order() const { return static_cast<int>(h_.size()) - 1; }
  [[nodiscard]] DeltaKernel scaled(double c) const;

 private:
  std::vector<double> h_;
  double t0_;
};

struct CollocationModel {
  /// t_i = t0 sin^2(pi i / 2N), i = 0..N, with t_{N-i} = t0 - t_i exactly.
  std::vector<double> nodes;
  /// d^m/dt^m on node values, m = 0..K.
  std::vector<Eigen::MatrixXd> diff_matrices;
  /// Node reversal i -> N - i.
  std::vector<int> reflection;
  /// Row k evaluates f^{(k)}(0), k = 0..K-1.
  Eigen::MatrixXd bc_rows;
  /// Orthonormal basis of the null space of bc_rows, (N+1) x (N+1-K).
  Eigen::MatrixXd null_basis;

  [[nodiscard]] Eigen::MatrixXd reflection_matrix() const;
};

struct ReflectionOperator {
  CollocationModel model;
  /// sum_k (-1)^k h_k R D^k on all N+1 nodes.
  Eigen::MatrixXd full;
  /// Z^T full Z with Z = model.null_basis.
  Eigen::MatrixXd reduced;
};

/// Throws DomainError if N < 4K + 8 and DiscretizationError if the boundary
/// rows are numerically rank deficient.
ReflectionOperator build_reflection_operator(const DeltaKernel& kernel, int N);

/// Closed-form spectrum of h = delta'(. - t0): (2 pi (n - 1/4) / t0, -2 pi (n - 3/4) / t0).
std::pair<double, double> exact_delta_prime_eigs(double t0, int n);

/// Leading-order growth +-|h_K| (2 pi n / t0)^K. Throws DomainError for K = 0
/// (the spectrum is just {h0, -h0}) or n < 1.
std::pair<double, double> weyl_prediction(const DeltaKernel& kernel, int n);

struct EigenCluster {
  double value = 0.0;
  int size = 0;
};

struct DeltaSpectrum {
  /// Ascending: lambda_1^+ < lambda_2^+ < ...
  std::vector<double> positive;
  /// Descending: lambda_1^- > lambda_2^- > ...
  std::vector<double> negative;
  std::vector<double> positive_residuals;
  std::vector<double> negative_residuals;
  /// max |Im lambda| / |lambda| over the reported modes.
  double max_imag_ratio = 0.0;
  int trusted_modes = 0;
  std::vector<EigenCluster> clusters;
  int max_cluster_size = 0;
  /// Cluster sizes <= K; not applicable for K = 0.
  std::optional<bool> multiplicity_within_bound;
};

/// Eigenvalues of the reduced collocation matrix, n_max per sign ordered by
/// magnitude. Throws DomainError if n_max > N/4 and ConvergenceError if a
/// reported mode has |Im lambda| > 1e-6 |lambda| or fewer than n_max modes
/// of a sign are found.
DeltaSpectrum delta_spectrum(const DeltaKernel& kernel, int N, int n_max);

/// Eigenvalues of H^2 (ascending) by a Galerkin discretization of the form
/// ||H f||^2 on degree-N polynomials satisfying the boundary conditions at 0.
/// The conditions at t0 arise as natural boundary conditions.
std::vector<double> square_route_spectrum(const DeltaKernel& kernel, int N);

}  // namespace hankelscope
