#include "hankelscope/delta_spectra.hpp"

#include "hankelscope/chebyshev.hpp"
#include "hankelscope/errors.hpp"
#include "hankelscope/special_functions.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

namespace hankelscope {

DeltaKernel::DeltaKernel(std::vector<double> h, double t0) : h_(std::move(h)), t0_(t0) {
  for (double c : h_)
    if (!std::isfinite(c)) throw DomainError("DeltaKernel: coefficients must be finite");
  while (!h_.empty() && h_.back() == 0.0) h_.pop_back();
  if (h_.empty()) throw DomainError("DeltaKernel: at least one coefficient must be non-zero");
  if (!(t0 > 0.0) || !std::isfinite(t0)) throw DomainError("DeltaKernel: t0 must be a positive finite number");
}

DeltaKernel DeltaKernel::scaled(double c) const {
  std::vector<double> h = h_;
  for (double& x : h) x *= c;
  return {std::move(h), t0_};
}

Eigen::MatrixXd CollocationModel::reflection_matrix() const {
  const auto n = static_cast<Eigen::Index>(reflection.size());
  Eigen::MatrixXd r = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) r(i, reflection[static_cast<size_t>(i)]) = 1.0;
  return r;
}

namespace {

CollocationModel build_model(const DeltaKernel& kernel, int N, int max_derivative) {
  const int K = kernel.order();
  const double t0 = kernel.t0();
  CollocationModel model;
  model.nodes.resize(static_cast<size_t>(N) + 1);
  for (int i = 0; i <= N / 2; ++i) {
    const double s = std::sin(kPi * i / (2.0 * N));
    model.nodes[static_cast<size_t>(i)] = t0 * s * s;
  }
  for (int i = N / 2 + 1; i <= N; ++i) model.nodes[static_cast<size_t>(i)] = t0 - model.nodes[static_cast<size_t>(N - i)];

  // x = 1 - 2t/t0, so d/dt = -(2/t0) d/dx.
  const Eigen::MatrixXd d = cgl_diff_matrix(N) * (-2.0 / t0);
  model.diff_matrices.push_back(Eigen::MatrixXd::Identity(N + 1, N + 1));
  for (int m = 1; m <= max_derivative; ++m) model.diff_matrices.push_back(d * model.diff_matrices.back());

  model.reflection.resize(static_cast<size_t>(N) + 1);
  for (int i = 0; i <= N; ++i) model.reflection[static_cast<size_t>(i)] = N - i;

  model.bc_rows.resize(K, N + 1);
  for (int k = 0; k < K; ++k) model.bc_rows.row(k) = model.diff_matrices[static_cast<size_t>(k)].row(0);

  if (K == 0) {
    model.null_basis = Eigen::MatrixXd::Identity(N + 1, N + 1);
    return model;
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(model.bc_rows.transpose());
  const Eigen::MatrixXd r = qr.matrixQR().topRows(K).triangularView<Eigen::Upper>();
  const double rmax = r.diagonal().cwiseAbs().maxCoeff();
  for (int k = 0; k < K; ++k) {
    if (!(std::abs(r(k, k)) > 1e-13 * rmax)) {
      std::ostringstream os;
      os << "build_reflection_operator: boundary rows are rank deficient (pivot " << k << " = " << r(k, k) << ")";
      throw DiscretizationError(os.str());
    }
  }
  const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(N + 1, N + 1);
  model.null_basis = q.rightCols(N + 1 - K);
  return model;
}

void check_size(const DeltaKernel& kernel, int N, const char* where) {
  const int K = kernel.order();
  if (N < 4 * K + 8) {
    std::ostringstream os;
    os << where << ": N = " << N << " is below the minimum 4K + 8 = " << 4 * K + 8;
    throw DomainError(os.str());
  }
}

}  // namespace

ReflectionOperator build_reflection_operator(const DeltaKernel& kernel, int N) {
  check_size(kernel, N, "build_reflection_operator");
  const int K = kernel.order();
  ReflectionOperator op;
  op.model = build_model(kernel, N, K);
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(N + 1, N + 1);
  for (int k = 0; k <= K; ++k) {
    const double c = ((k % 2) ? -1.0 : 1.0) * kernel.h()[static_cast<size_t>(k)];
    if (c != 0.0) l += c * op.model.diff_matrices[static_cast<size_t>(k)];
  }
  // R l: row i picks row N - i, i.e. derivatives evaluated at t0 - t_i.
  op.full = l.colwise().reverse();
  op.reduced = op.model.null_basis.transpose() * op.full * op.model.null_basis;
  return op;
}

std::pair<double, double> exact_delta_prime_eigs(double t0, int n) {
  if (n < 1) throw DomainError("exact_delta_prime_eigs: n must be >= 1");
  if (!(t0 > 0.0)) throw DomainError("exact_delta_prime_eigs: t0 must be positive");
  return {2.0 * kPi * (n - 0.25) / t0, -2.0 * kPi * (n - 0.75) / t0};
}

std::pair<double, double> weyl_prediction(const DeltaKernel& kernel, int n) {
  const int K = kernel.order();
  if (K == 0) throw DomainError("weyl_prediction: not applicable for K = 0, the spectrum is {h0, -h0}");
  if (n < 1) throw DomainError("weyl_prediction: n must be >= 1");
  const double value = std::abs(kernel.h().back()) * std::pow(2.0 * kPi * n / kernel.t0(), K);
  return {value, -value};
}

DeltaSpectrum delta_spectrum(const DeltaKernel& kernel, int N, int n_max) {
  check_size(kernel, N, "delta_spectrum");
  if (n_max < 1) throw DomainError("delta_spectrum: n_max must be >= 1");
  if (n_max > N / 4) {
    std::ostringstream os;
    os << "delta_spectrum: n_max = " << n_max << " exceeds the trusted range N/4 = " << N / 4;
    throw DomainError(os.str());
  }
  const ReflectionOperator op = build_reflection_operator(kernel, N);
  Eigen::EigenSolver<Eigen::MatrixXd> solver(op.reduced, true);
  if (solver.info() != Eigen::Success) throw ConvergenceError("delta_spectrum: eigensolver failed");

  const Eigen::VectorXcd evals = solver.eigenvalues();
  const Eigen::MatrixXcd evecs = solver.eigenvectors();
  const Eigen::MatrixXcd a = op.reduced.cast<std::complex<double>>();

  std::vector<Eigen::Index> order(static_cast<size_t>(evals.size()));
  for (Eigen::Index i = 0; i < evals.size(); ++i) order[static_cast<size_t>(i)] = i;
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) {
    const double ax = std::abs(evals(x));
    const double ay = std::abs(evals(y));
    return ax != ay ? ax < ay : evals(x).real() > evals(y).real();
  });

  DeltaSpectrum out;
  out.trusted_modes = N / 4;
  for (Eigen::Index idx : order) {
    const std::complex<double> lam = evals(idx);
    const bool pos = lam.real() > 0.0;
    std::vector<double>& list = pos ? out.positive : out.negative;
    if (static_cast<int>(list.size()) >= n_max) {
      if (static_cast<int>(out.positive.size()) >= n_max && static_cast<int>(out.negative.size()) >= n_max) break;
      continue;
    }
    const double ratio = std::abs(lam.imag()) / std::max(std::abs(lam), 1e-300);
    if (ratio > 1e-6) {
      std::ostringstream os;
      os << "delta_spectrum: mode " << list.size() + 1 << (pos ? " (+)" : " (-)") << " has |Im|/|lambda| = " << ratio
         << " above 1e-6";
      throw ConvergenceError(os.str());
    }
    out.max_imag_ratio = std::max(out.max_imag_ratio, ratio);
    const Eigen::VectorXcd v = evecs.col(idx) / evecs.col(idx).norm();
    const double residual = (a * v - lam * v).norm();
    list.push_back(lam.real());
    (pos ? out.positive_residuals : out.negative_residuals).push_back(residual);
  }
  if (static_cast<int>(out.positive.size()) < n_max || static_cast<int>(out.negative.size()) < n_max)
    throw ConvergenceError("delta_spectrum: fewer trusted modes than requested");

  for (const std::vector<double>* list : {&out.positive, &out.negative}) {
    size_t i = 0;
    while (i < list->size()) {
      size_t j = i + 1;
      while (j < list->size() && std::abs((*list)[j] - (*list)[i]) <= 1e-6 * std::abs((*list)[i])) ++j;
      out.clusters.push_back({(*list)[i], static_cast<int>(j - i)});
      out.max_cluster_size = std::max(out.max_cluster_size, static_cast<int>(j - i));
      i = j;
    }
  }
  if (kernel.order() >= 1) out.multiplicity_within_bound = out.max_cluster_size <= kernel.order();
  return out;
}

std::vector<double> square_route_spectrum(const DeltaKernel& kernel, int N) {
  check_size(kernel, N, "square_route_spectrum");
  const int K = kernel.order();
  const double t0 = kernel.t0();
  const CollocationModel model = build_model(kernel, N, K);
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(N + 1, N + 1);
  for (int k = 0; k <= K; ++k) l += ((k % 2) ? -1.0 : 1.0) * kernel.h()[static_cast<size_t>(k)] * model.diff_matrices[static_cast<size_t>(k)];

  // ||H f|| = ||L f|| since the reflection is an isometry of L^2(0, t0).
  const GaussRule rule = gauss_legendre(N + 1 + K);
  const Eigen::MatrixXd e = cgl_interpolation_matrix(N, rule.nodes);
  Eigen::VectorXd sqrt_w(static_cast<Eigen::Index>(rule.weights.size()));
  for (size_t i = 0; i < rule.weights.size(); ++i) sqrt_w(static_cast<Eigen::Index>(i)) = std::sqrt(0.5 * t0 * rule.weights[i]);

  const Eigen::MatrixXd b = sqrt_w.asDiagonal() * e * model.null_basis;
  const Eigen::MatrixXd g = sqrt_w.asDiagonal() * e * l * model.null_basis;
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(b);
  const auto cols = b.cols();
  const Eigen::MatrixXd r = qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
  // X = G R^{-1}  <=>  R^T X^T = G^T
  const Eigen::MatrixXd xt = r.transpose().triangularView<Eigen::Lower>().solve(g.transpose());
  Eigen::BDCSVD<Eigen::MatrixXd> svd(xt.transpose());
  std::vector<double> mu(static_cast<size_t>(svd.singularValues().size()));
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    const double s = svd.singularValues()(i);
    mu[static_cast<size_t>(i)] = s * s;
  }
  std::sort(mu.begin(), mu.end());
  return mu;
}

}  // namespace hankelscope
