#pragma once

#include <complex>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hankelscope {

/// Dense real polynomial, coefficients stored lowest degree first.
///
/// The degree is the index of the highest nonzero coefficient; trailing
/// zeros are dropped after every operation using an exact `== 0` test.
/// Numerical noise is never scrubbed implicitly, use `scrubbed()` for that.
class RealPolynomial {
 public:
  RealPolynomial() = default;
  RealPolynomial(std::initializer_list<double> coeffs);
  explicit RealPolynomial(std::vector<double> coeffs);

  static RealPolynomial monomial(int k, double c = 1.0);

  /// -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] std::span<const double> coeffs() const { return coeffs_; }
  /// Coefficient of x^k, zero beyond the degree.
  [[nodiscard]] double coeff(int k) const;
  [[nodiscard]] double leading() const { return coeffs_.empty() ? 0.0 : coeffs_.back(); }
  [[nodiscard]] double max_abs_coeff() const;

  [[nodiscard]] double operator()(double x) const { return eval(x); }
  [[nodiscard]] double eval(double x) const;
  [[nodiscard]] std::complex<double> eval(std::complex<double> z) const;

  [[nodiscard]] RealPolynomial derivative() const;
  /// Antiderivative with zero constant term.
  [[nodiscard]] RealPolynomial integrate() const;
  /// Zero out coefficients with |c| <= tol * max|c|.
  [[nodiscard]] RealPolynomial scrubbed(double rel_tol) const;

  RealPolynomial& operator+=(const RealPolynomial& other);
  RealPolynomial& operator-=(const RealPolynomial& other);
  RealPolynomial& operator*=(double s);

  friend RealPolynomial operator+(RealPolynomial a, const RealPolynomial& b) { return a += b; }
  friend RealPolynomial operator-(RealPolynomial a, const RealPolynomial& b) { return a -= b; }
  friend RealPolynomial operator*(RealPolynomial a, double s) { return a *= s; }
  friend RealPolynomial operator*(double s, RealPolynomial a) { return a *= s; }
  friend RealPolynomial operator*(const RealPolynomial& a, const RealPolynomial& b);
  friend bool operator==(const RealPolynomial&, const RealPolynomial&) = default;

  [[nodiscard]] std::string to_string() const;

 private:
  void trim();
  std::vector<double> coeffs_;
};

struct DivisionResult {
  RealPolynomial quotient;
  RealPolynomial remainder;
};

/// Euclidean division; throws DomainError on a zero divisor.
DivisionResult divide(const RealPolynomial& num, const RealPolynomial& den);

/// All complex roots from the eigenvalues of the companion matrix.
std::vector<std::complex<double>> polynomial_roots(const RealPolynomial& p);

/// A real root together with its estimated multiplicity.
struct RootCluster {
  double location = 0.0;
  int multiplicity = 0;
};

/// Real roots with multiplicities. Roots are merged when they lie within
/// `cluster_tol` (relative to max(1,|root|)) of each other; complex pairs
/// whose imaginary part is below `cluster_tol` are treated as a double
/// real root.
std::vector<RootCluster> real_root_clusters(const RealPolynomial& p, double cluster_tol = 1e-8);

/// Number of distinct real roots by Sturm's theorem, or nullopt if a leading
/// coefficient in the chain falls within the ambiguity threshold.
std::optional<int> sturm_real_root_count(const RealPolynomial& p, double ambiguity_tol = 1e-12);

struct NonnegativityCertificate {
  enum class Method { kLeadingTerm, kConstant, kSturm, kRootMultiplicity };

  bool nonnegative = false;
  Method method = Method::kLeadingTerm;
  /// Point with p(witness) < 0 whenever nonnegative == false.
  std::optional<double> witness;
  /// Distinct real roots counted by Sturm's theorem, if the chain was decisive.
  std::optional<int> sturm_count;
  /// Real roots with multiplicities, filled by the root-multiplicity route.
  std::vector<RootCluster> real_roots;

  [[nodiscard]] std::string describe() const;
};

/// Decides whether p(x) >= 0 for all real x. A real root of even
/// multiplicity (p touching zero) counts as nonnegative.
///
/// Throws DomainError for the zero polynomial.
NonnegativityCertificate is_nonnegative_on_reals(const RealPolynomial& p);

std::string to_string(NonnegativityCertificate::Method m);

}  // namespace hankelscope
