#include "hankelscope/transforms.hpp"

#include "fft.hpp"
#include "hankelscope/errors.hpp"
#include "hankelscope/special_functions.hpp"

#include <cmath>
#include <sstream>

namespace hankelscope {

namespace {

bool is_power_of_two(int n) { return n >= 2 && (n & (n - 1)) == 0; }

double parity(int k) { return (k % 2 == 0) ? 1.0 : -1.0; }

void require_domain(const GridFunction& g, SampleDomain d, const char* what) {
  if (g.domain != d) throw DomainError(std::string(what) + ": grid function has the wrong sample domain");
  if (static_cast<int>(g.values.size()) != g.grid.size())
    throw DomainError(std::string(what) + ": sample count does not match grid size");
}

}  // namespace

LogGrid::LogGrid(double L, int N) : L_(L), N_(N) {
  if (!(L > 0.0) || !std::isfinite(L)) throw DomainError("LogGrid: half-width L must be positive and finite");
  if (!is_power_of_two(N)) throw DomainError("LogGrid: N must be a power of two >= 2, got " + std::to_string(N));
}

double LogGrid::dxi() const { return kPi / L_; }

std::vector<double> LogGrid::nodes() const {
  std::vector<double> x(static_cast<size_t>(N_));
  for (int j = 0; j < N_; ++j) x[static_cast<size_t>(j)] = node(j);
  return x;
}

std::vector<double> LogGrid::frequencies() const {
  std::vector<double> xi(static_cast<size_t>(N_));
  for (int k = 0; k < N_; ++k) xi[static_cast<size_t>(k)] = frequency(k);
  return xi;
}

double GridFunction::norm() const { return std::sqrt(inner(*this).real()); }

std::complex<double> GridFunction::inner(const GridFunction& other) const {
  const double h = (domain == SampleDomain::kSpatial) ? grid.dx() : grid.dxi();
  std::complex<double> acc = 0.0;
  for (size_t j = 0; j < values.size(); ++j) acc += values[j] * std::conj(other.values[j]);
  return h * acc;
}

double v_eval(double xi) {
  if (std::abs(xi) <= 20.0) return std::sqrt(kPi / std::cosh(kPi * xi));
  return std::exp(0.5 * (std::log(kPi) - log_cosh(kPi * xi)));
}

GridFunction u_map(const RealFunction& f, const LogGrid& grid) {
  GridFunction out{grid, SampleDomain::kSpatial, {}};
  out.values.resize(static_cast<size_t>(grid.size()));
  for (int j = 0; j < grid.size(); ++j) {
    const double x = grid.node(j);
    const double value = std::exp(0.5 * x) * f(std::exp(x));
    if (!std::isfinite(value)) {
      std::ostringstream os;
      os.precision(17);
      os << "u_map: non-finite sample at node " << j << " (x = " << x << ")";
      throw DomainError(os.str());
    }
    out.values[static_cast<size_t>(j)] = value;
  }
  return out;
}

GridFunction mellin(const GridFunction& u) {
  require_domain(u, SampleDomain::kSpatial, "mellin");
  const int n = u.grid.size();
  std::vector<std::complex<double>> in(u.values);
  for (int j = 0; j < n; ++j) in[static_cast<size_t>(j)] *= parity(j);
  auto out = detail::dft(in, detail::FftDirection::kForward);
  const double scale = u.grid.dx() / std::sqrt(2.0 * kPi);
  for (int k = 0; k < n; ++k) out[static_cast<size_t>(k)] *= scale * parity(k - n / 2);
  return {u.grid, SampleDomain::kSpectral, std::move(out)};
}

GridFunction inverse_mellin(const GridFunction& w) {
  require_domain(w, SampleDomain::kSpectral, "inverse_mellin");
  const int n = w.grid.size();
  std::vector<std::complex<double>> in(w.values);
  for (int k = 0; k < n; ++k) in[static_cast<size_t>(k)] *= parity(k - n / 2);
  auto out = detail::dft(in, detail::FftDirection::kBackward);
  const double scale = w.grid.dxi() / std::sqrt(2.0 * kPi);
  for (int j = 0; j < n; ++j) out[static_cast<size_t>(j)] *= scale * parity(j);
  return {w.grid, SampleDomain::kSpatial, std::move(out)};
}

GridFunction f_transform(const RealFunction& f, const LogGrid& grid) {
  GridFunction w = mellin(u_map(f, grid));
  for (int k = 0; k < grid.size(); ++k) w.values[static_cast<size_t>(k)] *= gamma_half_phase(grid.frequency(k));
  return w;
}

GridFunction apply_polynomial_of_d(const RealPolynomial& q, const GridFunction& w) {
  GridFunction u = inverse_mellin(w);
  for (int j = 0; j < u.grid.size(); ++j) u.values[static_cast<size_t>(j)] *= q.eval(u.grid.node(j));
  return mellin(u);
}

double t_reparametrization(double xi) { return std::sinh(kPi * xi) / (kPi * kPi); }

std::complex<double> sinc_interpolate(const GridFunction& g, double xi) {
  require_domain(g, SampleDomain::kSpectral, "sinc_interpolate");
  const int n = g.grid.size();
  const double h = g.grid.dxi();
  const double a = (xi - g.grid.frequency(0)) / h;  // fractional sample index
  if (!(a >= 0.0 && a <= n - 1)) return 0.0;
  const double nearest = std::round(a);
  if (std::abs(a - nearest) < 1e-12) return g.values[static_cast<size_t>(nearest)];
  // sinc(a - k) = (-1)^k sin(pi a) / (pi (a - k))
  std::complex<double> acc = 0.0;
  for (int k = 0; k < n; ++k) acc += parity(k) * g.values[static_cast<size_t>(k)] / (a - k);
  return std::sin(kPi * a) / kPi * acc;
}

GridFunction t_transform(const GridFunction& g, double q0, double q1) {
  require_domain(g, SampleDomain::kSpectral, "t_transform");
  if (q1 == 0.0) throw DomainError("t_transform: q1 must be nonzero (degenerate first-order polynomial)");
  GridFunction out{g.grid, SampleDomain::kSpectral, {}};
  out.values.resize(g.values.size());
  const double shift = q0 / q1;
  for (int k = 0; k < g.grid.size(); ++k) {
    const double xi = g.grid.frequency(k);
    const std::complex<double> sample = sinc_interpolate(g, t_reparametrization(xi));
    if (sample == 0.0) continue;
    out.values[static_cast<size_t>(k)] = sample * std::polar(1.0 / v_eval(xi), shift * xi);
  }
  return out;
}

}  // namespace hankelscope
