#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "operadix/bianchi.hpp"
#include "operadix/error.hpp"
#include "operadix/sweep.hpp"

namespace operadix::cli {

enum class Command { Tabulate, Deform, VerifyLax, VerifyJacobi, EnergyCheck };
enum class OutFormat { Json, Csv, Markdown };

inline constexpr int kExitOk = 0;
inline constexpr int kExitToleranceFailure = 1;
inline constexpr int kExitUsage = 2;

/// Tolerances behind the exit status. All of them are echoed in reports.
struct Tolerances {
  double ordinary_lax = 1e-12;
  double operadic_lax = 1e-6;
  double convergence_lo = 3.5;
  double convergence_hi = 4.5;
  double jacobi_on_shell = 1e-10;
  double jacobi_off_shell = 1e-10;
  double closed_form = 1e-11;
  double energy = 1e-10;
  double off_shell_residual = 1e-3;
};

struct RunConfig {
  Command command = Command::Tabulate;
  std::vector<BianchiTag> types;  // empty: all eleven
  double omega = 1.0;
  double p0 = 2.0;
  std::optional<double> a;        // VIIa / VIa parameter, default 0.5
  double t_start = 0.0;
  std::optional<double> t_end;    // default: two periods after t_start
  std::size_t samples = 64;
  std::optional<double> fd_step;  // default 1e-4 / omega
  OutFormat format = OutFormat::Json;
  std::string out_path;           // empty: the `out` stream
  bool off_shell = false;
  std::uint64_t seed = kDefaultSeed;
  int table = 1;                  // tabulate: 1 or 2
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::optional<Command> parse_command(const std::string& name);
std::optional<OutFormat> parse_format(const std::string& name);
std::string command_name(Command c);

/// Throws UsageError for an invalid configuration.
void validate(const RunConfig& config);

/// Runs one command. Returns 0 when every checked tolerance holds, 1 on a
/// tolerance failure and 2 on a usage error (reported on `err`).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace operadix::cli
