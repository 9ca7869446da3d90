#include "hankelscope/errors.hpp"
#include "hankelscope/special_functions.hpp"
#include "hankelscope/transforms.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

namespace hs = hankelscope;
using cplx = std::complex<double>;

namespace {

hs::GridFunction spatial(const hs::LogGrid& g, const std::function<cplx(double)>& u) {
  hs::GridFunction out{g, hs::SampleDomain::kSpatial, {}};
  for (int j = 0; j < g.size(); ++j) out.values.push_back(u(g.node(j)));
  return out;
}

hs::GridFunction spectral(const hs::LogGrid& g, const std::function<cplx(double)>& w) {
  hs::GridFunction out{g, hs::SampleDomain::kSpectral, {}};
  for (int k = 0; k < g.size(); ++k) out.values.push_back(w(g.frequency(k)));
  return out;
}

}  // namespace

TEST(LogGrid, NodesAndFrequencies) {
  const hs::LogGrid g(12.0, 1024);
  EXPECT_DOUBLE_EQ(g.dx(), 24.0 / 1024);
  EXPECT_DOUBLE_EQ(g.dxi(), hs::kPi / 12.0);
  EXPECT_DOUBLE_EQ(g.node(0), -12.0);
  EXPECT_EQ(g.frequency(512), 0.0);
  EXPECT_DOUBLE_EQ(g.frequency(0), -hs::kPi / g.dx());
  EXPECT_EQ(g.nodes().size(), 1024u);
}

TEST(LogGrid, RejectsBadParameters) {
  EXPECT_THROW(hs::LogGrid(0.0, 64), hs::DomainError);
  EXPECT_THROW(hs::LogGrid(-1.0, 64), hs::DomainError);
  EXPECT_THROW(hs::LogGrid(10.0, 100), hs::DomainError);
  EXPECT_THROW(hs::LogGrid(10.0, 1), hs::DomainError);
  EXPECT_THROW(hs::LogGrid(std::numeric_limits<double>::infinity(), 64), hs::DomainError);
}

TEST(Weight, ValuesAndShape) {
  EXPECT_NEAR(hs::v_eval(0.0), std::sqrt(hs::kPi), 1e-15);
  EXPECT_NEAR(hs::v_eval(1.0), std::sqrt(hs::kPi / std::cosh(hs::kPi)), 1e-15);
  EXPECT_NEAR(hs::v_eval(1.0), 0.52059, 1e-5);
  for (double xi : {0.1, 1.0, 5.0, 19.9, 20.1, 100.0, 300.0}) {
    EXPECT_EQ(hs::v_eval(xi), hs::v_eval(-xi));
    EXPECT_GT(hs::v_eval(xi), 0.0);
    EXPECT_LT(hs::v_eval(xi), hs::v_eval(0.0));
    EXPECT_LE(hs::v_eval(xi), std::sqrt(2.0 * hs::kPi) * std::exp(-hs::kPi * xi / 2) * (1 + 1e-13));
  }
  // Continuous across the switch to log space.
  EXPECT_NEAR(hs::v_eval(20.0 - 1e-12) / hs::v_eval(20.0 + 1e-12), 1.0, 1e-10);
}

TEST(UMap, SubstitutionCancelsHalfPower) {
  const hs::LogGrid g(6.0, 64);
  auto phi = [](double x) { return std::exp(-x * x) * (1 + x); };
  const auto u = hs::u_map([&](double t) { return phi(std::log(t)) / std::sqrt(t); }, g);
  for (int j = 0; j < g.size(); ++j) EXPECT_NEAR(u.values[j].real(), phi(g.node(j)), 1e-14);
}

TEST(UMap, ExponentialNorm) {
  const hs::LogGrid g(12.0, 1024);
  const auto u = hs::u_map([](double t) { return std::exp(-t); }, g);
  for (int j = 0; j < g.size(); j += 97) {
    const double x = g.node(j);
    EXPECT_NEAR(u.values[j].real(), std::exp(x / 2 - std::exp(x)), 1e-15);
  }
  // int_{-L}^{L} e^{x - 2 e^x} dx in closed form; the untruncated value is 1/2.
  // The periodic sum gives the left endpoint full weight: dx/2 * e^{-L} extra.
  const double truncated = 0.5 * (std::exp(-2.0 * std::exp(-12.0)) - std::exp(-2.0 * std::exp(12.0)));
  EXPECT_NEAR(u.norm(), std::sqrt(truncated), 1e-7);
  EXPECT_NEAR(u.norm(), std::sqrt(0.5), 5e-6);
}

TEST(UMap, NonFiniteSampleNamesNode) {
  const hs::LogGrid g(4.0, 16);
  try {
    hs::u_map([](double t) { return t > 1.0 ? std::numeric_limits<double>::quiet_NaN() : 1.0; }, g);
    FAIL() << "expected DomainError";
  } catch (const hs::DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("node"), std::string::npos);
  }
}

TEST(Mellin, GaussianIsFixedPoint) {
  const hs::LogGrid g(12.0, 256);
  const auto w = hs::mellin(spatial(g, [](double x) { return std::exp(-x * x / 2); }));
  ASSERT_EQ(w.domain, hs::SampleDomain::kSpectral);
  for (int k = 0; k < g.size(); ++k)
    EXPECT_NEAR(std::abs(w.values[k] - std::exp(-g.frequency(k) * g.frequency(k) / 2)), 0.0, 1e-8);
}

TEST(Mellin, ShiftTheorem) {
  const hs::LogGrid g(12.0, 256);
  const double a = 1.5;
  const auto w = hs::mellin(spatial(g, [a](double x) { return std::exp(-(x - a) * (x - a) / 2); }));
  for (int k = 0; k < g.size(); ++k) {
    const double xi = g.frequency(k);
    EXPECT_NEAR(std::abs(w.values[k] - std::polar(std::exp(-xi * xi / 2), -a * xi)), 0.0, 1e-8);
  }
}

TEST(Mellin, DiscreteUnitarityAndInverse) {
  const hs::LogGrid g(10.0, 512);
  std::mt19937_64 rng(42);
  std::normal_distribution<double> n;
  const auto u = spatial(g, [&](double) { return cplx(n(rng), n(rng)); });
  const auto w = hs::mellin(u);
  EXPECT_NEAR(w.norm() / u.norm(), 1.0, 1e-10);
  const auto back = hs::inverse_mellin(w);
  ASSERT_EQ(back.domain, hs::SampleDomain::kSpatial);
  double err = 0.0;
  for (int j = 0; j < g.size(); ++j) err = std::max(err, std::abs(back.values[j] - u.values[j]));
  EXPECT_LT(err, 1e-12);
  EXPECT_THROW(hs::mellin(w), hs::DomainError);
  EXPECT_THROW(hs::inverse_mellin(u), hs::DomainError);
}

TEST(FTransform, UnitarityAndConjugateSymmetry) {
  const hs::LogGrid g(12.0, 1024);
  auto f = [](double t) { return std::exp(-t) * std::pow(t, 0.3); };
  const auto ff = hs::f_transform(f, g);
  EXPECT_NEAR(ff.norm() / hs::u_map(f, g).norm(), 1.0, 1e-8);
  for (int k = 1; k < g.size(); ++k) {
    const int mirror = g.size() - k;
    EXPECT_NEAR(std::abs(ff.values[k] - std::conj(ff.values[mirror])), 0.0, 1e-10);
  }
}

TEST(FTransform, PhaseTimesMellin) {
  const hs::LogGrid g(8.0, 128);
  auto f = [](double t) { return 1.0 / (1.0 + t * t); };
  const auto ff = hs::f_transform(f, g);
  const auto mf = hs::mellin(hs::u_map(f, g));
  for (int k = 0; k < g.size(); ++k)
    EXPECT_NEAR(std::abs(ff.values[k] - hs::gamma_half_phase(g.frequency(k)) * mf.values[k]), 0.0, 1e-14);
}

TEST(PolynomialOfD, DerivativeOfGaussian) {
  // D = i d/dxi; D e^{-xi^2/2} = -i xi e^{-xi^2/2}; D^2 e^{-xi^2/2} = (1 - xi^2) e^{-xi^2/2}.
  const hs::LogGrid g(12.0, 256);
  const auto w = spectral(g, [](double xi) { return std::exp(-xi * xi / 2); });
  const auto d1 = hs::apply_polynomial_of_d(hs::RealPolynomial{0.0, 1.0}, w);
  const auto d2 = hs::apply_polynomial_of_d(hs::RealPolynomial{0.5, 0.0, 1.0}, w);
  for (int k = 0; k < g.size(); ++k) {
    const double xi = g.frequency(k);
    const double e = std::exp(-xi * xi / 2);
    EXPECT_NEAR(std::abs(d1.values[k] - cplx(0.0, -xi * e)), 0.0, 1e-8);
    EXPECT_NEAR(std::abs(d2.values[k] - (0.5 + 1.0 - xi * xi) * e), 0.0, 1e-8);
  }
}

TEST(Reparametrization, ClosedFormMatchesQuadrature) {
  EXPECT_EQ(hs::t_reparametrization(0.0), 0.0);
  // Composite Simpson on int_0^1 cosh(pi eta)/pi.
  const int n = 2000;
  double s = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    s += w * std::cosh(hs::kPi * i / n) / hs::kPi;
  }
  s *= 1.0 / (3.0 * n);
  EXPECT_NEAR(hs::t_reparametrization(1.0), s, 1e-12);
  EXPECT_NEAR(hs::t_reparametrization(1.0), 1.1701, 1e-4);
  EXPECT_EQ(hs::t_reparametrization(-0.7), -hs::t_reparametrization(0.7));
}

TEST(SincInterpolate, ExactAtNodesZeroOutside) {
  const hs::LogGrid g(20.0, 512);
  const auto w = spectral(g, [](double xi) { return std::exp(-xi * xi) * cplx(1.0, xi); });
  for (int k = 0; k < g.size(); k += 31) EXPECT_EQ(hs::sinc_interpolate(w, g.frequency(k)), w.values[k]);
  EXPECT_EQ(hs::sinc_interpolate(w, 1e6), cplx(0.0));
  // dxi = pi/20, the Gaussian is well resolved.
  for (double xi : {0.013, -0.51, 1.234}) {
    const cplx expected = std::exp(-xi * xi) * cplx(1.0, xi);
    EXPECT_NEAR(std::abs(hs::sinc_interpolate(w, xi) - expected), 0.0, 1e-8);
  }
}

TEST(TTransform, MatchesDefinitionAndErrors) {
  const hs::LogGrid g(40.0, 2048);
  auto gfun = [](double s) { return cplx(std::exp(-s * s / 2), 0.0); };
  const auto w = spectral(g, gfun);
  const auto tw = hs::t_transform(w, 0.0, 1.0);
  for (int k = 0; k < g.size(); k += 41) {
    const double xi = g.frequency(k);
    if (std::abs(xi) > 2.0) continue;
    const cplx expected = gfun(hs::t_reparametrization(xi)) / hs::v_eval(xi);
    EXPECT_NEAR(std::abs(tw.values[k] - expected), 0.0, 1e-7) << xi;
  }
  const auto shifted = hs::t_transform(w, 0.5, 2.0);
  const int k = g.size() / 2 + 3;
  const double xi = g.frequency(k);
  EXPECT_NEAR(std::abs(shifted.values[k] - tw.values[k] * std::polar(1.0, 0.25 * xi)), 0.0, 1e-14);

  EXPECT_THROW(hs::t_transform(w, 1.0, 0.0), hs::DomainError);
  const auto s = spatial(g, [](double) { return cplx(1.0); });
  EXPECT_THROW(hs::t_transform(s, 0.0, 1.0), hs::DomainError);
}

TEST(TTransform, NearlyIsometric) {
  const hs::LogGrid g(64.0, 4096);
  const auto w = spectral(g, [](double s) { return std::exp(-(s - 0.5) * (s - 0.5)) * cplx(1.0, 0.3 * s); });
  const auto tw = hs::t_transform(w, 0.2, 1.0);
  EXPECT_NEAR(tw.norm() / w.norm(), 1.0, 1e-4);
}
