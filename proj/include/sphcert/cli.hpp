#pragma once

// Command-line front end. Each command builds a JSON report and an exit code:
// 0 when every verdict holds, 1 when a mathematical verdict fails, 2 on usage
// or I/O errors.

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace sphcert::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Bad flags, unknown families or cases, circles leaving the cap.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommandResult {
  int exit_code = kExitPass;
  nlohmann::ordered_json report;
  std::string csv;  // growth only
};

struct CertifyConfig {
  std::string family;
  int power = 1;
  int samples = 200;
  std::uint64_t seed = 20240611;
  unsigned workers = 1;
  double rho = 2.5;
  bool timings = false;
};

struct IdentitiesConfig {
  std::string case_name;
  std::string form = "trace";  // trace | killing | perturbed
  int degree = 4;
  int random = 20;
  std::uint64_t seed = 7;
};

struct GrowthConfig {
  std::string family;
  std::string center = "auto";  // auto | south | x,y,z
  double rmax = 1.2;
  int grid = 40;
  int quad = 256;
  double rho = 2.5;
};

struct GenHarmonicConfig {
  int m = 3;
  int d = 0;
};

/// Case selectors accepted by verify-identities.
const std::vector<std::string>& identity_cases();

CommandResult cmd_certify(const CertifyConfig& config);
CommandResult cmd_verify_identities(const IdentitiesConfig& config);
CommandResult cmd_growth(const GrowthConfig& config);
/// One basis polynomial per line, in generation order.
std::string cmd_gen_harmonic(const GenHarmonicConfig& config);

/// Worker count from SPHCERT_WORKERS, or `fallback` when unset or invalid.
unsigned workers_from_env(unsigned fallback = 1);

/// Parses argv (argv[0] is the program name), runs the command and writes
/// reports to `out` or to the --out file. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sphcert::cli
