#pragma once

#include "hankelscope/coeff_map.hpp"
#include "hankelscope/polynomial.hpp"
#include "hankelscope/transforms.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hankelscope {

/// Finite symmetric model of one side of H = F* A F.
struct DiscreteOperator {
  enum class Kind { kHankelSide, kASide };

  Eigen::MatrixXd matrix;
  LogGrid grid;
  Kind kind = Kind::kHankelSide;
  std::string quadrature;
  /// max|M - M^T| / max|M| before symmetrization (A side only).
  double asymmetry = 0.0;
};

enum class EssentialSpectrum { kRealLine, kHalfLine, kUnknown };

std::string to_string(EssentialSpectrum e);

struct SpectrumReport {
  /// Ascending.
  std::vector<double> eigenvalues;
  /// ||M x - lambda x|| for unit eigenvectors, parallel to eigenvalues.
  std::vector<double> residuals;
  std::optional<LogGrid> grid;
  DiscreteOperator::Kind kind = DiscreteOperator::Kind::kHankelSide;

  // Verdicts filled by spectral_rules.
  std::optional<bool> positivity;
  std::optional<NonnegativityCertificate> positivity_certificate;
  EssentialSpectrum essential_spectrum = EssentialSpectrum::kUnknown;

  // Empirical corroboration filled by spectral_rules.
  double negative_tolerance = 0.0;
  int negative_count = 0;
  std::optional<bool> empirical_agrees;

  [[nodiscard]] double min_eigenvalue() const;
  [[nodiscard]] double max_eigenvalue() const;
  [[nodiscard]] double max_abs_eigenvalue() const;
  [[nodiscard]] double residual_max() const;
  /// Eigenvalues strictly below -tol.
  [[nodiscard]] int count_below(double tol) const;
};

/// Nystrom matrix M_ij = dx e^{(x_i + x_j)/2} h(e^{x_i} + e^{x_j}) with
/// trapezoid weights on the uniform log grid. Exactly symmetric by
/// construction. Throws DiscretizationError on a non-finite entry.
DiscreteOperator build_hankel_matrix(const QuasiCarlemanKernel& kernel, const LogGrid& grid);

/// Discretization of A = v Q(D) v with periodic spectral differentiation on
/// the spectral nodes, expressed in the spatial (dual) basis:
///   M = C diag(Q(x_j)) C,   C = M^{-1} diag(v(xi_k)) M  (real symmetric circulant).
/// This is unitarily equivalent to V Q(D_N) V on the spectral nodes.
/// `weight` replaces v (it must be even); used as a test hook.
/// Throws DiscretizationError if the assembled matrix is asymmetric beyond 1e-6.
DiscreteOperator build_a_matrix(const RealPolynomial& q, const LogGrid& grid, const RealFunction& weight = v_eval);

struct EigenOptions {
  bool compute_residuals = true;
  /// Throw ConvergenceError if any residual exceeds this multiple of max|lambda|.
  double residual_tolerance = 1e-8;
};

/// Full symmetric eigendecomposition. Throws ConvergenceError on solver
/// failure or when residuals exceed the tolerance.
SpectrumReport eigen_sym(const DiscreteOperator& op, const EigenOptions& options = {});

/// Same as eigen_sym but also returns the eigenvectors (columns, unit norm).
std::pair<SpectrumReport, Eigen::MatrixXd> eigen_sym_with_vectors(const DiscreteOperator& op,
                                                                  const EigenOptions& options = {});

/// f(t) = t^{-1/2} phi(ln t) with phi a Gaussian-windowed sinc bump.
struct TestFunction {
  double center = 0.0;
  double width = 1.0;
  double bandwidth = 1.0;

  [[nodiscard]] double phi(double x) const;
  [[nodiscard]] double operator()(double t) const;
};

/// Deterministic (platform-independent) parameters drawn from `seed`; the
/// bump centre is kept well inside the grid.
TestFunction test_function_factory(std::uint64_t seed, const LogGrid& grid);

struct FormIdentityResult {
  std::complex<double> lhs;
  std::complex<double> rhs;
  double relative_gap = 0.0;
  /// max |v F f1| over the two outermost spectral nodes on each side of the extended grid;
  /// large values mean Q(D) sees the periodic wrap-around.
  double periodicity_error = 0.0;
  /// relative_gap > 1e-3: the grid is inadequate for these test functions.
  bool identity_violation = false;
};

inline constexpr int kDefaultSpectralOversampling = 4;

/// Compares (H f1, f2), computed by Nystrom double quadrature on `grid`, with
/// int v (Q(D)(v F f1)) conj(F f2) dxi computed on the spectral nodes of an
/// extended grid (oversampling * L, oversampling * N) with the same dx. The
/// extension removes the periodic wrap-around of Q(D) on the e^{-x/2} tail of
/// the dual function.
FormIdentityResult form_identity_check(const RealPolynomial& p, const RealFunction& f1, const RealFunction& f2,
                                       const LogGrid& grid, int oversampling = kDefaultSpectralOversampling);

/// Fills the theorem-backed verdicts and the empirical corroboration.
/// `negative_tolerance_rel` scales max|lambda| for the negative count.
SpectrumReport spectral_rules(const RealPolynomial& p, SpectrumReport report, double negative_tolerance_rel = 1e-10);

/// Near-zero eigenpairs of an A-side operator that look like genuine modes.
/// Eigenvalues with |lambda| < delta_rel * max|lambda| are inspected; such a
/// mode counts as interior when its residual is below residual_tol * max|lambda|
/// and less than `boundary_mass_limit` of its spectral mass lies where the
/// weight is negligible (weight(xi)^2 < delta_rel * max|lambda|). Heuristic
/// surrogate for "0 is not an eigenvalue".
struct ZeroModeDiagnostic {
  int near_zero_count = 0;
  int interior_near_zero_count = 0;
  double smallest_abs_eigenvalue = 0.0;
};

ZeroModeDiagnostic zero_mode_diagnostic(const DiscreteOperator& a_side, double delta_rel = 1e-6,
                                        double boundary_mass_limit = 0.5, double residual_tol = 1e-8,
                                        const RealFunction& weight = v_eval);

}  // namespace hankelscope
