#include "hankelscope/polynomial.hpp"

#include "hankelscope/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace hankelscope {

RealPolynomial::RealPolynomial(std::initializer_list<double> coeffs) : coeffs_(coeffs) { trim(); }

RealPolynomial::RealPolynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RealPolynomial RealPolynomial::monomial(int k, double c) {
  std::vector<double> v(static_cast<size_t>(k) + 1, 0.0);
  v.back() = c;
  return RealPolynomial(std::move(v));
}

void RealPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double RealPolynomial::coeff(int k) const {
  if (k < 0 || k > degree()) return 0.0;
  return coeffs_[static_cast<size_t>(k)];
}

double RealPolynomial::max_abs_coeff() const {
  double m = 0.0;
  for (double c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

double RealPolynomial::eval(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::complex<double> RealPolynomial::eval(std::complex<double> z) const {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

RealPolynomial RealPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return RealPolynomial{};
  std::vector<double> d(coeffs_.size() - 1);
  for (size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
  return RealPolynomial(std::move(d));
}

RealPolynomial RealPolynomial::integrate() const {
  if (coeffs_.empty()) return RealPolynomial{};
  std::vector<double> a(coeffs_.size() + 1, 0.0);
  for (size_t k = 0; k < coeffs_.size(); ++k) a[k + 1] = coeffs_[k] / static_cast<double>(k + 1);
  return RealPolynomial(std::move(a));
}

RealPolynomial RealPolynomial::scrubbed(double rel_tol) const {
  const double cut = rel_tol * max_abs_coeff();
  std::vector<double> v = coeffs_;
  for (double& c : v)
    if (std::abs(c) <= cut) c = 0.0;
  return RealPolynomial(std::move(v));
}

RealPolynomial& RealPolynomial::operator+=(const RealPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0.0);
  for (size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

RealPolynomial& RealPolynomial::operator-=(const RealPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0.0);
  for (size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

RealPolynomial& RealPolynomial::operator*=(double s) {
  for (double& c : coeffs_) c *= s;
  trim();
  return *this;
}

RealPolynomial operator*(const RealPolynomial& a, const RealPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return RealPolynomial{};
  std::vector<double> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RealPolynomial(std::move(out));
}

std::string RealPolynomial::to_string() const {
  std::ostringstream os;
  os.precision(17);
  os << '{';
  for (size_t k = 0; k < coeffs_.size(); ++k) os << (k ? "," : "") << coeffs_[k];
  os << '}';
  return os.str();
}

DivisionResult divide(const RealPolynomial& num, const RealPolynomial& den) {
  if (den.is_zero()) throw DomainError("polynomial division by zero polynomial");
  const int n = num.degree();
  const int d = den.degree();
  if (n < d) return {RealPolynomial{}, num};
  std::vector<double> rem(num.coeffs().begin(), num.coeffs().end());
  std::vector<double> quo(static_cast<size_t>(n - d) + 1, 0.0);
  const double lead = den.leading();
  for (int k = n - d; k >= 0; --k) {
    const double q = rem[static_cast<size_t>(k + d)] / lead;
    quo[static_cast<size_t>(k)] = q;
    for (int j = 0; j <= d; ++j) rem[static_cast<size_t>(k + j)] -= q * den.coeff(j);
    rem[static_cast<size_t>(k + d)] = 0.0;
  }
  rem.resize(static_cast<size_t>(d));
  return {RealPolynomial(std::move(quo)), RealPolynomial(std::move(rem))};
}

std::vector<std::complex<double>> polynomial_roots(const RealPolynomial& p) {
  const int n = p.degree();
  if (n < 1) return {};
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -p.coeff(i) / p.leading();
  Eigen::EigenSolver<Eigen::MatrixXd> es(companion, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) throw ConvergenceError("companion-matrix eigensolver failed");
  std::vector<std::complex<double>> roots(es.eigenvalues().begin(), es.eigenvalues().end());
  // One Newton polish step per root; the companion route loses a few digits
  // on clustered roots.
  const RealPolynomial dp = p.derivative();
  for (auto& z : roots) {
    const auto dz = dp.eval(z);
    if (std::abs(dz) > 0.0) {
      const auto step = p.eval(z) / dz;
      if (std::abs(step) < 1e-6 * std::max(1.0, std::abs(z))) z -= step;
    }
  }
  return roots;
}

std::vector<RootCluster> real_root_clusters(const RealPolynomial& p, double cluster_tol) {
  std::vector<double> reals;
  for (const auto& z : polynomial_roots(p)) {
    if (std::abs(z.imag()) <= cluster_tol * std::max(1.0, std::abs(z.real()))) reals.push_back(z.real());
  }
  std::sort(reals.begin(), reals.end());
  std::vector<RootCluster> clusters;
  for (double r : reals) {
    if (!clusters.empty()) {
      auto& last = clusters.back();
      if (std::abs(r - last.location) <= cluster_tol * std::max(1.0, std::abs(r))) {
        last.location = (last.location * last.multiplicity + r) / (last.multiplicity + 1);
        ++last.multiplicity;
        continue;
      }
    }
    clusters.push_back({r, 1});
  }
  return clusters;
}

namespace {

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

int sign_variations(const std::vector<int>& signs) {
  int count = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

// Doubling scan from |x| = 1 toward the infinity where the leading term is
// negative. Returns a point with p(x) < 0.
double witness_at_infinity(const RealPolynomial& p) {
  const bool odd = p.degree() % 2 != 0;
  const double direction = (p.leading() > 0.0) ? -1.0 : 1.0;  // only used if odd
  const double dir = odd ? direction : 1.0;
  for (double r = 1.0; r < 1e300; r *= 2.0) {
    if (p.eval(dir * r) < 0.0) return dir * r;
  }
  return dir * 1e300;
}

}  // namespace

std::optional<int> sturm_real_root_count(const RealPolynomial& p, double ambiguity_tol) {
  if (p.degree() < 1) return 0;
  std::vector<RealPolynomial> chain;
  chain.push_back(p * (1.0 / p.max_abs_coeff()));
  RealPolynomial d = p.derivative();
  chain.push_back(d * (1.0 / d.max_abs_coeff()));
  while (chain.back().degree() > 0) {
    const auto& a = chain[chain.size() - 2];
    const auto& b = chain.back();
    RealPolynomial r = divide(a, b).remainder;
    const double scale = std::max(a.max_abs_coeff(), b.max_abs_coeff());
    if (r.is_zero()) break;  // exact gcd reached
    if (r.max_abs_coeff() <= ambiguity_tol * scale) return std::nullopt;
    if (std::abs(r.leading()) <= ambiguity_tol * r.max_abs_coeff()) return std::nullopt;
    r *= -1.0 / r.max_abs_coeff();
    chain.push_back(std::move(r));
  }
  std::vector<int> at_pos;
  std::vector<int> at_neg;
  for (const auto& q : chain) {
    at_pos.push_back(sign_of(q.leading()));
    at_neg.push_back(sign_of(q.leading()) * ((q.degree() % 2 == 0) ? 1 : -1));
  }
  return sign_variations(at_neg) - sign_variations(at_pos);
}

std::string to_string(NonnegativityCertificate::Method m) {
  switch (m) {
    case NonnegativityCertificate::Method::kLeadingTerm: return "leading-term";
    case NonnegativityCertificate::Method::kConstant: return "constant";
    case NonnegativityCertificate::Method::kSturm: return "sturm";
    case NonnegativityCertificate::Method::kRootMultiplicity: return "root-multiplicity";
  }
  return "unknown";
}

std::string NonnegativityCertificate::describe() const {
  std::ostringstream os;
  os.precision(17);
  os << (nonnegative ? "nonnegative" : "not nonnegative") << " via " << to_string(method);
  if (witness) os << "; witness x=" << *witness;
  if (sturm_count) os << "; distinct real roots=" << *sturm_count;
  for (const auto& r : real_roots) os << "; root " << r.location << " (mult " << r.multiplicity << ")";
  return os.str();
}

NonnegativityCertificate is_nonnegative_on_reals(const RealPolynomial& p) {
  if (p.is_zero()) throw DomainError("is_nonnegative_on_reals: zero polynomial");
  NonnegativityCertificate cert;

  if (p.degree() == 0) {
    cert.method = NonnegativityCertificate::Method::kConstant;
    cert.nonnegative = p.leading() > 0.0;
    if (!cert.nonnegative) cert.witness = 0.0;
    return cert;
  }
  if (p.degree() % 2 != 0 || p.leading() < 0.0) {
    cert.method = NonnegativityCertificate::Method::kLeadingTerm;
    cert.nonnegative = false;
    cert.witness = witness_at_infinity(p);
    return cert;
  }

  cert.sturm_count = sturm_real_root_count(p);
  if (cert.sturm_count && *cert.sturm_count == 0) {
    cert.method = NonnegativityCertificate::Method::kSturm;
    cert.nonnegative = true;
    return cert;
  }

  cert.method = NonnegativityCertificate::Method::kRootMultiplicity;
  cert.real_roots = real_root_clusters(p);
  const bool all_even = std::all_of(cert.real_roots.begin(), cert.real_roots.end(),
                                    [](const RootCluster& c) { return c.multiplicity % 2 == 0; });
  if (all_even) {
    cert.nonnegative = true;
    return cert;
  }

  // An odd-multiplicity root: look for the sign change next to it.
  std::vector<double> candidates;
  const auto& roots = cert.real_roots;
  for (size_t i = 0; i + 1 < roots.size(); ++i)
    candidates.push_back(0.5 * (roots[i].location + roots[i + 1].location));
  for (const auto& r : roots) {
    if (r.multiplicity % 2 == 0) continue;
    const double scale = std::max(1.0, std::abs(r.location));
    for (double delta = 1e-1; delta >= 1e-9; delta *= 0.1) {
      candidates.push_back(r.location - delta * scale);
      candidates.push_back(r.location + delta * scale);
    }
  }
  double best_x = 0.0;
  double best_v = std::numeric_limits<double>::infinity();
  for (double x : candidates) {
    const double v = p.eval(x);
    if (v < best_v) {
      best_v = v;
      best_x = x;
    }
  }
  if (best_v < 0.0) {
    cert.nonnegative = false;
    cert.witness = best_x;
  } else {
    // Odd cluster but no sampled sign change: roots are numerically merged
    // with an even partner, treat as touching.
    cert.nonnegative = true;
  }
  return cert;
}

}  // namespace hankelscope
