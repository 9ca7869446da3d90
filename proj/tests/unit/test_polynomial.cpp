#include "hankelscope/errors.hpp"
#include "hankelscope/polynomial.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using hankelscope::DomainError;
using hankelscope::NonnegativityCertificate;
using hankelscope::RealPolynomial;

TEST(RealPolynomial, TrimsTrailingZerosAndReportsDegree) {
  RealPolynomial p{1.0, 2.0, 0.0, 0.0};
  EXPECT_EQ(p.degree(), 1);
  EXPECT_EQ(RealPolynomial{}.degree(), -1);
  EXPECT_TRUE(RealPolynomial({0.0, 0.0}).is_zero());
  EXPECT_EQ(p.coeff(5), 0.0);
}

TEST(RealPolynomial, HornerMatchesDirectSum) {
  RealPolynomial p{0.5, -1.25, 3.0, 0.75};
  for (double x : {-2.0, -0.3, 0.0, 1.7}) {
    const double direct = 0.5 - 1.25 * x + 3.0 * x * x + 0.75 * x * x * x;
    EXPECT_NEAR(p.eval(x), direct, 1e-14 * (1 + std::abs(direct)));
  }
  const std::complex<double> z(0.3, -1.1);
  const auto pz = p.eval(z);
  const auto direct = 0.5 - 1.25 * z + 3.0 * z * z + 0.75 * z * z * z;
  EXPECT_NEAR(std::abs(pz - direct), 0.0, 1e-14);
}

TEST(RealPolynomial, DerivativeAndIntegralAreInverse) {
  RealPolynomial p{1.0, -2.0, 0.5, 4.0};
  EXPECT_EQ(p.integrate().derivative(), p);
  EXPECT_EQ(p.derivative(), RealPolynomial({-2.0, 1.0, 12.0}));
}

TEST(RealPolynomial, ArithmeticAndDivision) {
  RealPolynomial a{1.0, 1.0};
  RealPolynomial b{-1.0, 1.0};
  EXPECT_EQ(a * b, RealPolynomial({-1.0, 0.0, 1.0}));
  EXPECT_TRUE((a - a).is_zero());
  const auto d = hankelscope::divide(RealPolynomial{-1.0, 0.0, 1.0}, b);
  EXPECT_EQ(d.quotient, a);
  EXPECT_TRUE(d.remainder.is_zero());
  EXPECT_THROW(hankelscope::divide(a, RealPolynomial{}), DomainError);
}

TEST(RealPolynomial, ScrubbedDropsNoise) {
  RealPolynomial p{1.0, 1e-18, 2.0, 1e-17};
  const auto s = p.scrubbed(1e-14);
  EXPECT_EQ(s.degree(), 2);
  EXPECT_EQ(s.coeff(1), 0.0);
}

TEST(PolynomialRoots, RecoversKnownRoots) {
  // (x - 1)(x + 2)(x - 0.5)
  RealPolynomial p = RealPolynomial{-1.0, 1.0} * RealPolynomial{2.0, 1.0} * RealPolynomial{-0.5, 1.0};
  auto roots = hankelscope::polynomial_roots(p);
  ASSERT_EQ(roots.size(), 3u);
  std::vector<double> re;
  for (auto r : roots) {
    EXPECT_LT(std::abs(r.imag()), 1e-12);
    re.push_back(r.real());
  }
  std::sort(re.begin(), re.end());
  EXPECT_NEAR(re[0], -2.0, 1e-12);
  EXPECT_NEAR(re[1], 0.5, 1e-12);
  EXPECT_NEAR(re[2], 1.0, 1e-12);
}

TEST(PolynomialRoots, ClustersDoubleRoot) {
  RealPolynomial p = RealPolynomial{-0.3, 1.0} * RealPolynomial{-0.3, 1.0} * RealPolynomial{2.0, 1.0};
  const auto c = hankelscope::real_root_clusters(p);
  ASSERT_EQ(c.size(), 2u);
  int total = 0;
  for (const auto& r : c) total += r.multiplicity;
  EXPECT_EQ(total, 3);
}

TEST(Sturm, CountsDistinctRealRoots) {
  EXPECT_EQ(hankelscope::sturm_real_root_count(RealPolynomial{1.0, 0.0, 1.0}), 0);
  EXPECT_EQ(hankelscope::sturm_real_root_count(RealPolynomial{-1.0, 0.0, 1.0}), 2);
  EXPECT_EQ(hankelscope::sturm_real_root_count(RealPolynomial{0.0, -1.0, 0.0, 1.0}), 3);
}

TEST(Nonnegativity, EdgeCases) {
  EXPECT_THROW(hankelscope::is_nonnegative_on_reals(RealPolynomial{}), DomainError);

  auto c = hankelscope::is_nonnegative_on_reals(RealPolynomial{2.0});
  EXPECT_TRUE(c.nonnegative);
  EXPECT_EQ(c.method, NonnegativityCertificate::Method::kConstant);

  c = hankelscope::is_nonnegative_on_reals(RealPolynomial{-2.0});
  EXPECT_FALSE(c.nonnegative);

  c = hankelscope::is_nonnegative_on_reals(RealPolynomial{0.0, 1.0});
  EXPECT_FALSE(c.nonnegative);
  ASSERT_TRUE(c.witness);
  EXPECT_LT(RealPolynomial({0.0, 1.0}).eval(*c.witness), 0.0);

  c = hankelscope::is_nonnegative_on_reals(RealPolynomial{1.0, 0.0, -1.0});
  EXPECT_FALSE(c.nonnegative);
  EXPECT_EQ(c.method, NonnegativityCertificate::Method::kLeadingTerm);
}

TEST(Nonnegativity, StrictlyPositiveUsesSturm) {
  const auto c = hankelscope::is_nonnegative_on_reals(RealPolynomial{1.0, 0.0, 1.0});
  EXPECT_TRUE(c.nonnegative);
  EXPECT_EQ(c.method, NonnegativityCertificate::Method::kSturm);
  EXPECT_EQ(c.sturm_count, 0);
}

TEST(Nonnegativity, TouchingZeroIsNonnegative) {
  // (x - 1)^2 (x^2 + 1)
  RealPolynomial p = RealPolynomial{-1.0, 1.0} * RealPolynomial{-1.0, 1.0} * RealPolynomial{1.0, 0.0, 1.0};
  const auto c = hankelscope::is_nonnegative_on_reals(p);
  EXPECT_TRUE(c.nonnegative);
  EXPECT_EQ(c.method, NonnegativityCertificate::Method::kRootMultiplicity);
}

TEST(Nonnegativity, WitnessIsNegativeForRandomIndefinitePolynomials) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  int indefinite = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> c(5);
    for (double& x : c) x = u(rng);
    c[4] = std::abs(c[4]) + 0.1;
    RealPolynomial p(c);
    const auto cert = hankelscope::is_nonnegative_on_reals(p);
    // Dense scan as an independent check.
    double minimum = 1e300;
    for (int i = -4000; i <= 4000; ++i) minimum = std::min(minimum, p.eval(i * 1e-3 * 5));
    if (cert.nonnegative) {
      EXPECT_GE(minimum, -1e-9) << p.to_string();
    } else {
      ++indefinite;
      ASSERT_TRUE(cert.witness) << p.to_string();
      EXPECT_LT(p.eval(*cert.witness), 0.0) << p.to_string();
    }
  }
  EXPECT_GT(indefinite, 10);
}
