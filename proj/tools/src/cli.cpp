#include "hankelscope_cli/cli.hpp"

#include "hankelscope/coeff_map.hpp"
#include "hankelscope/delta_spectra.hpp"
#include "hankelscope/discretization.hpp"
#include "hankelscope/errors.hpp"
#include "hankelscope/special_functions.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace hankelscope::cli {

using Json = nlohmann::ordered_json;

namespace {

void write_string(std::ostream& os, const std::string& s) {
  os << Json(s).dump();
}

// nlohmann prints the shortest round-trip form; the wire format wants %.17g.
void write_json(std::ostream& os, const Json& j, int indent, int level) {
  const std::string pad(static_cast<size_t>(indent * (level + 1)), ' ');
  const std::string close_pad(static_cast<size_t>(indent * level), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) os << ",\n";
        first = false;
        os << pad;
        write_string(os, key);
        os << ": ";
        write_json(os, value, indent, level + 1);
      }
      os << "\n" << close_pad << "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      os << "[\n";
      for (size_t i = 0; i < j.size(); ++i) {
        if (i) os << ",\n";
        os << pad;
        write_json(os, j[i], indent, level + 1);
      }
      os << "\n" << close_pad << "]";
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        os << "null";
        return;
      }
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      os << buf;
      return;
    }
    default:
      os << j.dump();
  }
}

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Json coeff_array(const RealPolynomial& p) {
  Json a = Json::array();
  for (double c : p.coeffs()) a.push_back(c);
  return a;
}

Json real_array(const std::vector<double>& v) {
  Json a = Json::array();
  for (double x : v) a.push_back(x);
  return a;
}

struct Artifact {
  Json json = Json::object();
  // (eigenvalue, residual) rows, ascending.
  std::vector<std::pair<double, double>> rows;
  bool has_rows = false;
};

RealPolynomial require_poly(const std::optional<std::string>& text, const std::string& flag) {
  if (!text) throw ValidationError("missing required flag " + flag);
  return RealPolynomial(parse_coefficients(*text, flag));
}

LogGrid make_grid(const RunConfig& c, double default_L, int default_N) {
  const double L = c.L.value_or(default_L);
  const int N = c.N.value_or(default_N);
  if (!(L > 0.0) || !std::isfinite(L)) throw ValidationError("--L must be a positive finite number");
  if (N < 2 || (N & (N - 1)) != 0) throw ValidationError("--N must be a power of two >= 2 for this command");
  return LogGrid(L, N);
}

Json grid_json(const LogGrid& g) {
  Json j = Json::object();
  j["L"] = g.half_width();
  j["N"] = g.size();
  return j;
}

Json certificate_json(const NonnegativityCertificate& c) {
  Json j = Json::object();
  j["method"] = to_string(c.method);
  j["witness"] = c.witness ? Json(*c.witness) : Json(nullptr);
  j["sturm_count"] = c.sturm_count ? Json(*c.sturm_count) : Json(nullptr);
  Json roots = Json::array();
  for (const auto& r : c.real_roots) {
    Json rj = Json::object();
    rj["location"] = r.location;
    rj["multiplicity"] = r.multiplicity;
    roots.push_back(rj);
  }
  j["real_roots"] = roots;
  j["description"] = c.describe();
  return j;
}

Json input_json(const RunConfig& c) {
  Json j = Json::object();
  j["command"] = c.command;
  if (c.p) j["p"] = real_array(parse_coefficients(*c.p, "--p"));
  if (c.q) j["q"] = real_array(parse_coefficients(*c.q, "--q"));
  if (c.h) j["h"] = real_array(parse_coefficients(*c.h, "--h"));
  return j;
}

void fill_spectrum(Artifact& a, const SpectrumReport& r) {
  a.json["eigenvalues"] = real_array(r.eigenvalues);
  a.json["residual_max"] = r.residual_max();
  a.json["min_eigenvalue"] = r.min_eigenvalue();
  a.json["max_eigenvalue"] = r.max_eigenvalue();
  a.has_rows = true;
  for (size_t i = 0; i < r.eigenvalues.size(); ++i)
    a.rows.emplace_back(r.eigenvalues[i], i < r.residuals.size() ? r.residuals[i] : 0.0);
}

Artifact cmd_pq(const RunConfig& c) {
  const RealPolynomial p = require_poly(c.p, "--p");
  Artifact a;
  a.json["q_coeffs"] = coeff_array(p_to_q(p));
  a.json["paper_refs"] = Json::array({"coefficient map q = (1/Gamma(1-D)) p"});
  return a;
}

Artifact cmd_qp(const RunConfig& c) {
  const RealPolynomial q = require_poly(c.q, "--q");
  Artifact a;
  a.json["p_coeffs"] = coeff_array(q_to_p(q));
  a.json["paper_refs"] = Json::array({"inverse coefficient map p = Gamma(1-D) q"});
  return a;
}

void add_verdicts(Artifact& a, const RealPolynomial& p) {
  const RealPolynomial q = p_to_q(p);
  a.json["q_coeffs"] = coeff_array(q);
  const auto cert = is_nonnegative_on_reals(q);
  Json pos = Json::object();
  pos["verdict"] = cert.nonnegative ? "nonnegative" : "not-nonnegative";
  pos["certificate"] = certificate_json(cert);
  a.json["positivity"] = pos;
  SpectrumReport empty;
  a.json["essential_spectrum"] = to_string(spectral_rules(p, empty).essential_spectrum);
}

Artifact cmd_positivity(const RunConfig& c) {
  const RealPolynomial p = require_poly(c.p, "--p");
  if (p.is_zero()) throw ValidationError("--p must not be the zero polynomial");
  Artifact a;
  add_verdicts(a, p);
  a.json["paper_refs"] =
      Json::array({"H >= 0 iff Q >= 0 on the real line", "essential spectrum R for odd K, [0, inf) for even K"});
  return a;
}

Artifact cmd_spectrum(const RunConfig& c, bool hankel_side) {
  const RealPolynomial p = require_poly(c.p, "--p");
  if (p.is_zero()) throw ValidationError("--p must not be the zero polynomial");
  const LogGrid grid = make_grid(c, 10.0, 512);
  const DiscreteOperator op =
      hankel_side ? build_hankel_matrix(QuasiCarlemanKernel(p), grid) : build_a_matrix(p_to_q(p), grid);
  const SpectrumReport report = spectral_rules(p, eigen_sym(op));
  Artifact a;
  add_verdicts(a, p);
  a.json["grid"] = grid_json(grid);
  fill_spectrum(a, report);
  a.json["negative_tolerance"] = report.negative_tolerance;
  a.json["negative_count"] = report.negative_count;
  a.json["empirical_agrees"] = report.empirical_agrees ? Json(*report.empirical_agrees) : Json(nullptr);
  if (!hankel_side) {
    const auto zm = zero_mode_diagnostic(op);
    Json z = Json::object();
    z["near_zero_count"] = zm.near_zero_count;
    z["interior_near_zero_count"] = zm.interior_near_zero_count;
    z["smallest_abs_eigenvalue"] = zm.smallest_abs_eigenvalue;
    a.json["zero_modes"] = z;
  }
  a.json["paper_refs"] = Json::array({hankel_side ? "Hankel operator with kernel P(ln t)/t" : "A = v Q(D) v",
                                      "H >= 0 iff Q >= 0 on the real line",
                                      "essential spectrum R for odd K, [0, inf) for even K"});
  return a;
}

Artifact cmd_equiv(const RunConfig& c) {
  const RealPolynomial p = require_poly(c.p, "--p");
  if (p.is_zero()) throw ValidationError("--p must not be the zero polynomial");
  const LogGrid grid = make_grid(c, 12.0, 1024);
  const TestFunction f1 = test_function_factory(c.seed, grid);
  const TestFunction f2 = test_function_factory(c.seed + 1, grid);
  const FormIdentityResult r = form_identity_check(p, f1, f2, grid);
  Artifact a;
  a.json["q_coeffs"] = coeff_array(p_to_q(p));
  a.json["grid"] = grid_json(grid);
  a.json["seed"] = c.seed;
  a.json["lhs"] = Json::array({r.lhs.real(), r.lhs.imag()});
  a.json["rhs"] = Json::array({r.rhs.real(), r.rhs.imag()});
  a.json["relative_gap"] = r.relative_gap;
  a.json["identity_violation"] = r.identity_violation;
  a.json["paper_refs"] = Json::array({"H = F* A F with A = v Q(D) v"});
  return a;
}

Artifact cmd_delta(const RunConfig& c) {
  if (!c.h) throw ValidationError("missing required flag --h");
  const std::vector<double> h = parse_coefficients(*c.h, "--h");
  if (!(c.t0 > 0.0) || !std::isfinite(c.t0)) throw ValidationError("--t0 must be a positive finite number");
  if (std::all_of(h.begin(), h.end(), [](double x) { return x == 0.0; }))
    throw ValidationError("--h must have a non-zero coefficient");
  const DeltaKernel kernel(h, c.t0);
  const int N = c.N.value_or(64);
  if (N < 4 * kernel.order() + 8) throw ValidationError("--N must be at least 4K + 8");
  const int n_max = c.n_max.value_or(std::max(1, std::min(10, N / 4)));
  if (n_max < 1 || n_max > N / 4) throw ValidationError("--n-max must lie in [1, N/4]");
  const DeltaSpectrum s = delta_spectrum(kernel, N, n_max);

  Artifact a;
  a.json["t0"] = c.t0;
  a.json["N"] = N;
  a.json["K"] = kernel.order();
  a.json["positive"] = real_array(s.positive);
  a.json["negative"] = real_array(s.negative);
  std::vector<double> residuals = s.positive_residuals;
  residuals.insert(residuals.end(), s.negative_residuals.begin(), s.negative_residuals.end());
  a.json["residual_max"] = residuals.empty() ? 0.0 : *std::max_element(residuals.begin(), residuals.end());
  a.json["max_imag_ratio"] = s.max_imag_ratio;
  a.json["max_cluster_size"] = s.max_cluster_size;
  a.json["multiplicity_within_bound"] =
      s.multiplicity_within_bound ? Json(*s.multiplicity_within_bound) : Json(nullptr);
  Json refs = Json::array({"reflection-differential operator on (0, t0)"});
  if (kernel.order() >= 1) {
    Json ratios_pos = Json::array();
    Json ratios_neg = Json::array();
    for (int n = 1; n <= n_max; ++n) {
      const auto [wp, wm] = weyl_prediction(kernel, n);
      ratios_pos.push_back(s.positive[static_cast<size_t>(n - 1)] / wp);
      ratios_neg.push_back(s.negative[static_cast<size_t>(n - 1)] / wm);
    }
    a.json["weyl_ratio_positive"] = ratios_pos;
    a.json["weyl_ratio_negative"] = ratios_neg;
    refs.push_back("eigenvalue asymptotics +-|h_K| (2 pi n / t0)^K");
  }
  if (kernel.order() == 1 && kernel.h()[0] == 0.0) {
    double err = 0.0;
    for (int n = 1; n <= n_max; ++n) {
      auto [ep, em] = exact_delta_prime_eigs(c.t0, n);
      ep *= kernel.h()[1];
      em *= kernel.h()[1];
      if (kernel.h()[1] < 0.0) std::swap(ep, em);
      err = std::max({err, std::abs(s.positive[static_cast<size_t>(n - 1)] - ep),
                      std::abs(s.negative[static_cast<size_t>(n - 1)] - em)});
    }
    a.json["exact_max_abs_error"] = err;
    refs.push_back("explicit delta' eigenvalues 2 pi (n - 1/4) / t0, -2 pi (n - 3/4) / t0");
  }
  a.json["paper_refs"] = refs;

  a.has_rows = true;
  for (size_t i = 0; i < s.negative.size(); ++i) a.rows.emplace_back(s.negative[i], s.negative_residuals[i]);
  for (size_t i = 0; i < s.positive.size(); ++i) a.rows.emplace_back(s.positive[i], s.positive_residuals[i]);
  std::sort(a.rows.begin(), a.rows.end());
  return a;
}

Artifact cmd_carleman(const RunConfig& c) {
  const LogGrid grid = make_grid(c, 14.0, 2048);
  const RealPolynomial p{1.0};
  const SpectrumReport report = spectral_rules(p, eigen_sym(build_hankel_matrix(QuasiCarlemanKernel(p), grid)));
  Artifact a;
  a.json["grid"] = grid_json(grid);
  fill_spectrum(a, report);
  a.json["gap"] = std::abs(report.max_eigenvalue() - kPi);
  a.json["within_range"] = report.min_eigenvalue() >= -1e-6 && report.max_eigenvalue() <= kPi + 1e-3;
  a.json["paper_refs"] = Json::array({"Carleman operator: multiplier pi / cosh(pi xi) on (0, pi]"});
  return a;
}

Artifact dispatch(const RunConfig& c) {
  if (c.command == "pq") return cmd_pq(c);
  if (c.command == "qp") return cmd_qp(c);
  if (c.command == "positivity") return cmd_positivity(c);
  if (c.command == "spectrum-hankel") return cmd_spectrum(c, true);
  if (c.command == "spectrum-a") return cmd_spectrum(c, false);
  if (c.command == "equiv-check") return cmd_equiv(c);
  if (c.command == "delta-eigs") return cmd_delta(c);
  if (c.command == "carleman") return cmd_carleman(c);
  throw ValidationError("unknown command '" + c.command + "'");
}

void emit(const RunConfig& c, const Artifact& a, std::ostream& os) {
  if (c.format == "csv") {
    os << "eigenvalue,residual\n";
    for (const auto& [lam, res] : a.rows) os << format_real(lam) << ',' << format_real(res) << '\n';
    return;
  }
  Json doc = Json::object();
  doc["schema"] = "hankelscope/1";
  doc["input"] = input_json(c);
  for (const auto& [key, value] : a.json.items()) doc[key] = value;
  write_json(os, doc, 2, 0);
  os << '\n';
}

}  // namespace

std::vector<double> parse_coefficients(const std::string& text, const std::string& flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw ValidationError(flag + ": empty coefficient in '" + text + "'");
    const std::string token = item.substr(b, e - b + 1);
    size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(token, &used);
    } catch (const std::exception&) {
      throw ValidationError(flag + ": cannot parse '" + token + "' as a real number");
    }
    if (used != token.size()) throw ValidationError(flag + ": cannot parse '" + token + "' as a real number");
    if (!std::isfinite(value)) throw ValidationError(flag + ": coefficient '" + token + "' is not finite");
    out.push_back(value);
  }
  if (out.empty() || (!text.empty() && text.back() == ','))
    throw ValidationError(flag + ": expected a comma-separated list of reals");
  return out;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.format != "json" && config.format != "csv")
      throw ValidationError("--format must be json or csv");
    const Artifact artifact = dispatch(config);
    if (config.format == "csv" && !artifact.has_rows)
      throw ValidationError("--format csv is only available for spectrum commands");
    if (config.output.empty()) {
      emit(config, artifact, out);
    } else {
      std::ofstream file(config.output);
      if (!file) throw ValidationError("--output: cannot open '" + config.output + "' for writing");
      emit(config, artifact, file);
    }
    return kExitOk;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const UnsupportedError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const ConvergenceError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitConvergence;
  } catch (const DiscretizationError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitConvergence;
  }
}

}  // namespace hankelscope::cli
