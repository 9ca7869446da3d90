#include "hankelscope/discretization.hpp"

#include "hankelscope/errors.hpp"
#include "hankelscope/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hankelscope {

std::string to_string(EssentialSpectrum e) {
  switch (e) {
    case EssentialSpectrum::kRealLine: return "R";
    case EssentialSpectrum::kHalfLine: return "[0,inf)";
    case EssentialSpectrum::kUnknown: return "unknown";
  }
  return "unknown";
}

double SpectrumReport::min_eigenvalue() const { return eigenvalues.empty() ? 0.0 : eigenvalues.front(); }

double SpectrumReport::max_eigenvalue() const { return eigenvalues.empty() ? 0.0 : eigenvalues.back(); }

double SpectrumReport::max_abs_eigenvalue() const {
  return std::max(std::abs(min_eigenvalue()), std::abs(max_eigenvalue()));
}

double SpectrumReport::residual_max() const {
  return residuals.empty() ? 0.0 : *std::max_element(residuals.begin(), residuals.end());
}

int SpectrumReport::count_below(double tol) const {
  return static_cast<int>(std::count_if(eigenvalues.begin(), eigenvalues.end(), [tol](double l) { return l < -tol; }));
}

DiscreteOperator build_hankel_matrix(const QuasiCarlemanKernel& kernel, const LogGrid& grid) {
  const int n = grid.size();
  const double dx = grid.dx();
  const std::vector<double> x = grid.nodes();
  Eigen::MatrixXd m(n, n);
  bool finite = true;
#pragma omp parallel for schedule(dynamic, 16) reduction(&& : finite)
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const double value = dx * kernel.log_kernel(x[static_cast<size_t>(i)], x[static_cast<size_t>(j)]);
      finite = finite && std::isfinite(value);
      m(i, j) = value;
      m(j, i) = value;
    }
  }
  if (!finite) {
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j)
        if (!std::isfinite(m(i, j))) {
          std::ostringstream os;
          os << "build_hankel_matrix: non-finite entry at node pair (" << i << ", " << j
             << "); reduce the truncation half-width L";
          throw DiscretizationError(os.str());
        }
  }
  return {std::move(m), grid, DiscreteOperator::Kind::kHankelSide, "nystrom-trapezoid", 0.0};
}

DiscreteOperator build_a_matrix(const RealPolynomial& q, const LogGrid& grid, const RealFunction& weight) {
  const int n = grid.size();
  std::vector<double> w(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) w[static_cast<size_t>(k)] = weight(grid.frequency(k));

  // Circulant symbol c(d) = (1/N) sum_k w_k cos(2 pi d (k - N/2) / N).
  std::vector<double> c(static_cast<size_t>(n));
  for (int d = 0; d < n; ++d) {
    double acc = 0.0;
    for (int k = 0; k < n; ++k) {
      const long long phase = (static_cast<long long>(d) * (k - n / 2)) % n;
      acc += w[static_cast<size_t>(k)] * std::cos(2.0 * kPi * static_cast<double>(phase) / n);
    }
    c[static_cast<size_t>(d)] = acc / n;
  }
  Eigen::MatrixXd circ(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) circ(i, j) = c[static_cast<size_t>(std::abs(i - j))];

  Eigen::VectorXd symbol(n);
  for (int j = 0; j < n; ++j) symbol(j) = q.eval(grid.node(j));

  Eigen::MatrixXd m = circ * symbol.asDiagonal() * circ;
  const double scale = m.cwiseAbs().maxCoeff();
  const double asym = scale > 0.0 ? (m - m.transpose()).cwiseAbs().maxCoeff() / scale : 0.0;
  if (asym > 1e-6) {
    std::ostringstream os;
    os << "build_a_matrix: relative asymmetry " << asym << " exceeds 1e-6";
    throw DiscretizationError(os.str());
  }
  Eigen::MatrixXd sym = 0.5 * (m + m.transpose());
  return {std::move(sym), grid, DiscreteOperator::Kind::kASide, "fourier-spectral", asym};
}

std::pair<SpectrumReport, Eigen::MatrixXd> eigen_sym_with_vectors(const DiscreteOperator& op,
                                                                  const EigenOptions& options) {
  const auto& m = op.matrix;
  if (m.rows() != m.cols()) throw DomainError("eigen_sym: matrix is not square");
  const double scale = m.size() ? m.cwiseAbs().maxCoeff() : 0.0;
  if (scale > 0.0 && (m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw DomainError("eigen_sym: matrix is not symmetric");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    std::ostringstream os;
    os << "eigen_sym: symmetric eigensolver failed (Eigen status " << static_cast<int>(solver.info())
       << ", dimension " << m.rows() << ")";
    throw ConvergenceError(os.str());
  }
  SpectrumReport report;
  report.grid = op.grid;
  report.kind = op.kind;
  const auto& evals = solver.eigenvalues();
  report.eigenvalues.assign(evals.data(), evals.data() + evals.size());
  if (options.compute_residuals) {
    const Eigen::MatrixXd& vecs = solver.eigenvectors();
    const Eigen::MatrixXd r = m * vecs - vecs * evals.asDiagonal();
    report.residuals.resize(static_cast<size_t>(evals.size()));
    for (Eigen::Index k = 0; k < evals.size(); ++k) report.residuals[static_cast<size_t>(k)] = r.col(k).norm();
    const double limit = options.residual_tolerance * std::max(report.max_abs_eigenvalue(), 1e-300);
    if (report.residual_max() > limit) {
      std::ostringstream os;
      os << "eigen_sym: residual " << report.residual_max() << " exceeds " << limit;
      throw ConvergenceError(os.str());
    }
  }
  return {std::move(report), solver.eigenvectors()};
}

SpectrumReport eigen_sym(const DiscreteOperator& op, const EigenOptions& options) {
  if (!options.compute_residuals) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(op.matrix, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw ConvergenceError("eigen_sym: symmetric eigensolver failed");
    SpectrumReport report;
    report.grid = op.grid;
    report.kind = op.kind;
    report.eigenvalues.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + solver.eigenvalues().size());
    return report;
  }
  return eigen_sym_with_vectors(op, options).first;
}

double TestFunction::phi(double x) const {
  const double u = x - center;
  const double window = std::exp(-0.5 * u * u / (width * width));
  const double arg = bandwidth * u;
  const double sinc = (std::abs(arg) < 1e-8) ? 1.0 - arg * arg / 6.0 : std::sin(arg) / arg;
  return window * sinc;
}

double TestFunction::operator()(double t) const {
  if (!(t > 0.0)) return 0.0;
  return phi(std::log(t)) / std::sqrt(t);
}

namespace {

// splitmix64, so the drawn parameters do not depend on the standard library.
std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double unit_uniform(std::uint64_t& state) { return static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53; }

}  // namespace

TestFunction test_function_factory(std::uint64_t seed, const LogGrid& grid) {
  std::uint64_t state = seed;
  const double span = std::min(2.0, grid.half_width() / 6.0);
  TestFunction f;
  f.center = span * (2.0 * unit_uniform(state) - 1.0);
  f.width = 0.8 + 0.8 * unit_uniform(state);
  f.bandwidth = 0.5 + unit_uniform(state);
  return f;
}

FormIdentityResult form_identity_check(const RealPolynomial& p, const RealFunction& f1, const RealFunction& f2,
                                       const LogGrid& grid, int oversampling) {
  if (p.is_zero()) throw DomainError("form_identity_check: P must not be identically zero");
  if (oversampling < 1) throw DomainError("form_identity_check: oversampling must be >= 1");
  FormIdentityResult result;

  // Hankel side: dx * sum_i conj(phi2_i) (M phi1)_i.
  const GridFunction u1 = u_map(f1, grid);
  const GridFunction u2 = u_map(f2, grid);
  const DiscreteOperator h = build_hankel_matrix(QuasiCarlemanKernel(p), grid);
  Eigen::VectorXcd a(grid.size());
  Eigen::VectorXcd b(grid.size());
  for (int j = 0; j < grid.size(); ++j) {
    a(j) = u1.values[static_cast<size_t>(j)];
    b(j) = u2.values[static_cast<size_t>(j)];
  }
  result.lhs = grid.dx() * b.dot(h.matrix.cast<std::complex<double>>() * a);

  // A side on the extended spectral grid.
  const LogGrid wide(grid.half_width() * oversampling, grid.size() * oversampling);
  const RealPolynomial q = p_to_q(p);
  GridFunction g1 = f_transform(f1, wide);
  const GridFunction g2 = f_transform(f2, wide);
  for (int k = 0; k < wide.size(); ++k) g1.values[static_cast<size_t>(k)] *= v_eval(wide.frequency(k));
  const auto last = static_cast<size_t>(wide.size() - 1);
  result.periodicity_error = std::max({std::abs(g1.values[0]), std::abs(g1.values[1]), std::abs(g1.values[last - 1]),
                                       std::abs(g1.values[last])});
  const GridFunction qg1 = apply_polynomial_of_d(q, g1);
  std::complex<double> acc = 0.0;
  for (int k = 0; k < wide.size(); ++k)
    acc += v_eval(wide.frequency(k)) * qg1.values[static_cast<size_t>(k)] * std::conj(g2.values[static_cast<size_t>(k)]);
  result.rhs = wide.dxi() * acc;

  const double denom = std::max(std::abs(result.lhs), std::abs(result.rhs));
  result.relative_gap = denom > 0.0 ? std::abs(result.lhs - result.rhs) / denom : 0.0;
  result.identity_violation = result.relative_gap > 1e-3;
  return result;
}

SpectrumReport spectral_rules(const RealPolynomial& p, SpectrumReport report, double negative_tolerance_rel) {
  if (p.is_zero()) throw DomainError("spectral_rules: P must not be identically zero");
  const int K = p.degree();
  if (K >= 1 && K % 2 == 1) {
    report.essential_spectrum = EssentialSpectrum::kRealLine;
  } else if (K >= 2 && p.leading() > 0.0) {
    report.essential_spectrum = EssentialSpectrum::kHalfLine;
  } else {
    report.essential_spectrum = EssentialSpectrum::kUnknown;
  }

  auto cert = is_nonnegative_on_reals(p_to_q(p));
  report.positivity = cert.nonnegative;
  report.positivity_certificate = std::move(cert);

  report.negative_tolerance = negative_tolerance_rel * report.max_abs_eigenvalue();
  report.negative_count = report.count_below(report.negative_tolerance);
  if (!report.eigenvalues.empty()) {
    // Only the positive verdict has a finite-section consequence: no
    // eigenvalue below the noise floor.
    if (*report.positivity) report.empirical_agrees = report.negative_count == 0;
  }
  return report;
}

ZeroModeDiagnostic zero_mode_diagnostic(const DiscreteOperator& a_side, double delta_rel, double boundary_mass_limit,
                                        double residual_tol, const RealFunction& weight) {
  if (a_side.kind != DiscreteOperator::Kind::kASide) throw DomainError("zero_mode_diagnostic: expects an A-side operator");
  EigenOptions opts;
  opts.residual_tolerance = 1.0;  // residuals are inspected per mode below
  auto [report, vecs] = eigen_sym_with_vectors(a_side, opts);
  const double lam_max = report.max_abs_eigenvalue();
  const double floor = delta_rel * lam_max;
  const LogGrid& grid = a_side.grid;
  std::vector<bool> negligible(static_cast<size_t>(grid.size()));
  for (int i = 0; i < grid.size(); ++i) {
    const double w = weight(grid.frequency(i));
    negligible[static_cast<size_t>(i)] = w * w < floor;
  }

  ZeroModeDiagnostic diag;
  diag.smallest_abs_eigenvalue = lam_max;
  for (size_t k = 0; k < report.eigenvalues.size(); ++k) {
    const double lam = report.eigenvalues[k];
    diag.smallest_abs_eigenvalue = std::min(diag.smallest_abs_eigenvalue, std::abs(lam));
    if (std::abs(lam) >= floor) continue;
    ++diag.near_zero_count;
    GridFunction u{grid, SampleDomain::kSpatial, {}};
    u.values.resize(static_cast<size_t>(grid.size()));
    for (int j = 0; j < grid.size(); ++j) u.values[static_cast<size_t>(j)] = vecs(j, static_cast<Eigen::Index>(k));
    const GridFunction g = mellin(u);
    double total = 0.0;
    double outer = 0.0;
    for (int i = 0; i < grid.size(); ++i) {
      const double m2 = std::norm(g.values[static_cast<size_t>(i)]);
      total += m2;
      if (negligible[static_cast<size_t>(i)]) outer += m2;
    }
    const bool interior = total > 0.0 && outer / total < boundary_mass_limit;
    if (interior && report.residuals[k] < residual_tol * lam_max) ++diag.interior_near_zero_count;
  }
  return diag;
}

}  // namespace hankelscope
