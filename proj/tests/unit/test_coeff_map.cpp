#include "hankelscope/coeff_map.hpp"
#include "hankelscope/errors.hpp"
#include "hankelscope/special_functions.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

namespace hs = hankelscope;

namespace {

constexpr double kGamma = 0.5772156649015328606;
constexpr double kZeta2 = 1.6449340668482264365;

hs::RealPolynomial random_poly(std::mt19937_64& rng, int degree) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> c(static_cast<size_t>(degree) + 1);
  for (double& x : c) x = u(rng);
  if (c.back() == 0.0) c.back() = 0.5;
  return hs::RealPolynomial(c);
}

}  // namespace

TEST(CoeffMap, LinearKernel) {
  const auto q = hs::p_to_q(hs::RealPolynomial{1.0, 2.0});
  ASSERT_EQ(q.degree(), 1);
  EXPECT_NEAR(q.coeff(0), 1.0 - 2.0 * kGamma, 1e-15);
  EXPECT_EQ(q.coeff(1), 2.0);
}

TEST(CoeffMap, QuadraticKernel) {
  const double p0 = 0.3, p1 = -1.2, p2 = 2.5;
  const auto q = hs::p_to_q(hs::RealPolynomial{p0, p1, p2});
  EXPECT_NEAR(q.coeff(0), p0 - kGamma * p1 + (kGamma * kGamma - kZeta2) * p2, 1e-14);
  EXPECT_NEAR(q.coeff(1), p1 - 2.0 * kGamma * p2, 1e-14);
  EXPECT_EQ(q.coeff(2), p2);
}

TEST(CoeffMap, MatrixIsUnitUpperTriangular) {
  for (int K = 0; K <= hs::kMaxMapDegree; ++K) {
    const auto m = hs::build_map_matrix(K);
    ASSERT_EQ(m.entries.rows(), K + 1);
    for (int i = 0; i <= K; ++i) {
      EXPECT_EQ(m.entries(i, i), 1.0);
      for (int j = 0; j < i; ++j) EXPECT_EQ(m.entries(i, j), 0.0);
    }
  }
}

TEST(CoeffMap, EntriesAreBinomialTimesJet) {
  const auto jet = hs::build_gamma_jet(6);
  const auto m = hs::build_map_matrix(6);
  // C(6, 2) = 15
  EXPECT_NEAR(m.entries(2, 6), 15.0 * jet.omega_derivs[4], 1e-13);
  EXPECT_NEAR(m.entries(0, 6), jet.omega_derivs[6], 1e-13);
  EXPECT_NEAR(m.entries(5, 6), 6.0 * jet.omega_derivs[1], 1e-14);
}

TEST(CoeffMap, Linearity) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_poly(rng, 5);
    const auto b = random_poly(rng, 3);
    const double s = 1.7, t = -0.4;
    const auto lhs = hs::p_to_q(s * a + t * b);
    const auto rhs = s * hs::p_to_q(a) + t * hs::p_to_q(b);
    for (int k = 0; k <= 5; ++k) EXPECT_NEAR(lhs.coeff(k), rhs.coeff(k), 1e-12);
  }
}

TEST(CoeffMap, PreservesDegreeAndLeadingCoefficient) {
  std::mt19937_64 rng(3);
  for (int K = 0; K <= 8; ++K) {
    const auto p = random_poly(rng, K);
    const auto q = hs::p_to_q(p);
    EXPECT_EQ(q.degree(), K);
    EXPECT_EQ(q.leading(), p.leading());
  }
}

TEST(CoeffMap, RoundTrip) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = random_poly(rng, trial % 9);
    const auto back = hs::q_to_p(hs::p_to_q(p));
    for (int k = 0; k <= p.degree(); ++k) EXPECT_NEAR(back.coeff(k), p.coeff(k), 1e-10);
  }
}

TEST(CoeffMap, ZeroPolynomialRejected) { EXPECT_THROW(hs::p_to_q(hs::RealPolynomial{}), hs::DomainError); }

TEST(CoeffMap, DegreeLimit) {
  EXPECT_THROW(hs::build_map_matrix(hs::kMaxMapDegree + 1), hs::UnsupportedError);
  EXPECT_THROW(hs::build_map_matrix(-1), hs::DomainError);
  EXPECT_THROW(hs::p_to_q(hs::RealPolynomial::monomial(hs::kMaxMapDegree + 1)), hs::UnsupportedError);
}

TEST(QuasiCarlemanKernel, Validation) {
  EXPECT_THROW(hs::QuasiCarlemanKernel(hs::RealPolynomial{}), hs::DomainError);
  EXPECT_THROW(hs::QuasiCarlemanKernel(hs::RealPolynomial{std::numeric_limits<double>::quiet_NaN()}),
               hs::DomainError);
}

TEST(QuasiCarlemanKernel, LogKernelMatchesDirectEvaluation) {
  const hs::QuasiCarlemanKernel k(hs::RealPolynomial{0.5, -1.0, 0.25});
  for (double x : {-3.0, 0.0, 1.5}) {
    for (double y : {-2.0, 0.4, 2.0}) {
      const double t = std::exp(x) + std::exp(y);
      const double direct = std::exp(0.5 * (x + y)) * k(t);
      EXPECT_NEAR(k.log_kernel(x, y), direct, 1e-13 * std::max(1.0, std::abs(direct)));
    }
  }
  // Far tails stay finite where e^x + e^y would overflow.
  EXPECT_TRUE(std::isfinite(k.log_kernel(800.0, 790.0)));
  EXPECT_NEAR(k(std::exp(1.0)), (0.5 - 1.0 + 0.25) / std::exp(1.0), 1e-15);
}
