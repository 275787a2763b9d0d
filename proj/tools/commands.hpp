#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "phasebound/zero_family.hpp"

namespace phasebound::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitVerifyFailed = 3;
inline constexpr int kExitDegraded = 4;

enum class Command { Enclose, Count, Oracle, Bench, Errgrid, Verify };
enum class Format { Csv, Json };

/// eta given as a number or as a multiple of nu ("nu", "0.5nu").
struct EtaSpec {
  double value = 0.5;
  bool relative = true;
  double resolve(double nu) const { return relative ? value * nu : value; }
};

struct RunConfig {
  Command command = Command::Enclose;
  FamilyTag family = FamilyTag::J;
  std::vector<double> nu;
  long k_first = 1;
  long k_last = 1;
  std::vector<double> lambda;
  double tau = 0.5;
  EtaSpec eta;
  Format format = Format::Csv;
  bool strict = false;
  bool grid_default = false;              ///< verify: ignore PHASEBOUND_GRID
  std::optional<std::string> grid_env;    ///< verify: value of PHASEBOUND_GRID
};

/// Thrown for malformed configuration; maps to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// "a,b,c" or "a:b:step" (inclusive of b).
std::vector<double> parse_real_range(const std::string& text);
/// "a..b" or a single integer.
std::pair<long, long> parse_k_range(const std::string& text);
EtaSpec parse_eta(const std::string& text);

/// "count[,log|linear[,xmax]]".
struct GridOverride {
  int count = 512;
  bool linear = false;
  std::optional<double> x_max;
};
GridOverride parse_grid_env(const std::string& text);

using Cell = std::variant<std::monostate, double, long, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

void write_csv(const Table& table, std::ostream& out);
void write_json(const Table& table, std::ostream& out);

/// Builds the table for the command, writes it, and returns the exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace phasebound::cli
