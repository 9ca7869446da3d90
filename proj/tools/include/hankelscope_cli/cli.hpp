#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hankelscope::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitConvergence = 3;

inline const std::vector<std::string> kCommands = {"pq",         "qp",          "positivity", "spectrum-hankel",
                                                   "spectrum-a", "equiv-check", "delta-eigs", "carleman"};

/// Flags as given on the command line. Coefficient lists stay raw strings so
/// that run() can report the offending flag.
struct RunConfig {
  std::string command;
  std::optional<std::string> p;
  std::optional<std::string> q;
  std::optional<std::string> h;
  double t0 = 1.0;
  std::optional<double> L;
  std::optional<int> N;
  std::optional<int> n_max;
  std::uint64_t seed = 1;
  std::string output;
  std::string format = "json";
};

/// Thrown for malformed flags; the message names the flag.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Comma-separated finite reals, lowest degree first.
std::vector<double> parse_coefficients(const std::string& text, const std::string& flag);

/// Executes one command. The artifact goes to `config.output` when set and to
/// `out` otherwise; diagnostics go to `err`. Returns the process exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace hankelscope::cli
