#include "commands.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "phasebound/classic_bounds.hpp"
#include "phasebound/enclosures.hpp"
#include "phasebound/errors.hpp"
#include "phasebound/liouville.hpp"
#include "phasebound/phase_oracle.hpp"
#include "phasebound/special_oracle.hpp"

namespace phasebound::cli {
namespace {

double parse_double(const std::string& s) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw ConfigError("not a number: '" + s + "'");
  }
  if (pos != s.size() || !std::isfinite(v)) throw ConfigError("not a number: '" + s + "'");
  return v;
}

long parse_long(const std::string& s) {
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(s, &pos);
  } catch (const std::exception&) {
    throw ConfigError("not an integer: '" + s + "'");
  }
  if (pos != s.size()) throw ConfigError("not an integer: '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::string format_double(double v) {
  if (!std::isfinite(v)) return "";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.16g", v);
  return buf;
}

Cell num(double v) { return std::isfinite(v) ? Cell{v} : Cell{}; }

Cell status_cell(BoundStatus s) { return std::string(to_string(s)); }

ZeroFamily family_for(const RunConfig& c, double nu) {
  ZeroFamily f;
  f.tag = c.family;
  f.tau = c.tau;
  f.eta = c.eta.resolve(nu);
  return f;
}

// Oracle value, or an empty cell outside the accuracy envelope.
struct Truth {
  Cell cell;
  double value = NAN;
};

struct DegradedInStrictMode : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Truth truth_of(const phase::TrueZero& z, bool strict, double nu, long k) {
  if (z.accuracy_degraded) {
    if (strict) {
      throw DegradedInStrictMode("oracle outside its accuracy envelope at nu = " + format_double(nu) +
                                 ", k = " + std::to_string(k));
    }
    return {};
  }
  return {z.value, z.value};
}

Table enclose_table(const RunConfig& c) {
  Table t{{"nu", "k", "lower", "lower_status", "upper", "upper_status", "truth", "rel_width"}, {}};
  for (const double nu : c.nu) {
    const ZeroFamily fam = family_for(c, nu);
    const auto enc = enclose_range(fam, nu, c.k_first, c.k_last);
    const auto zeros = phase::true_zeros(fam, nu, c.k_last);
    for (long k = c.k_first; k <= c.k_last; ++k) {
      const Enclosure& e = enc[static_cast<std::size_t>(k - c.k_first)];
      const Truth truth = truth_of(zeros[static_cast<std::size_t>(k - 1)], c.strict, nu, k);
      const bool both = e.lower_status == BoundStatus::Valid && e.upper_status == BoundStatus::Valid;
      t.rows.push_back({nu, k, num(e.lower), status_cell(e.lower_status), num(e.upper),
                        status_cell(e.upper_status), truth.cell,
                        both ? num((e.upper - e.lower) / e.lower) : Cell{}});
    }
  }
  return t;
}

Table count_table(const RunConfig& c) {
  if (c.family != FamilyTag::J && c.family != FamilyTag::JPrime) {
    throw ConfigError("count supports --family j or jp");
  }
  if (c.lambda.empty()) throw ConfigError("count needs --lambda");
  Table t{{"nu", "lambda", "lower", "upper", "truth"}, {}};
  const bool deriv = c.family == FamilyTag::JPrime;
  for (const double nu : c.nu) {
    for (const double lambda : c.lambda) {
      const CountBound b = deriv ? count_deriv_zeros(nu, lambda) : count_bessel_zeros(nu, lambda);
      const ZeroFamily fam = deriv ? ZeroFamily::jprime() : ZeroFamily::j();
      long n = b.upper + 1;
      Cell truth;
      bool degraded = false;
      for (;;) {
        const auto zeros = phase::true_zeros(fam, nu, n);
        long count = 0;
        for (const auto& z : zeros) {
          if (z.value <= lambda) {
            ++count;
            degraded = degraded || z.accuracy_degraded;
          }
        }
        if (count < n) {
          truth = count;
          break;
        }
        n *= 2;
      }
      if (degraded || !oracle::inside_envelope(nu, lambda)) {
        if (c.strict) throw DegradedInStrictMode("oracle outside its accuracy envelope at nu = " + format_double(nu));
        truth = Cell{};
      }
      t.rows.push_back({nu, lambda, b.lower, b.upper, truth});
    }
  }
  return t;
}

Table oracle_table(const RunConfig& c) {
  Table t{{"nu", "k", "zero", "status", "accuracy_degraded"}, {}};
  for (const double nu : c.nu) {
    const auto zeros = phase::true_zeros(family_for(c, nu), nu, c.k_last);
    for (long k = c.k_first; k <= c.k_last; ++k) {
      const auto& z = zeros[static_cast<std::size_t>(k - 1)];
      if (z.accuracy_degraded && c.strict) {
        throw DegradedInStrictMode("oracle outside its accuracy envelope at nu = " + format_double(nu) +
                                   ", k = " + std::to_string(k));
      }
      t.rows.push_back({nu, k, z.value, status_cell(z.status), std::string(z.accuracy_degraded ? "true" : "false")});
    }
  }
  return t;
}

struct BenchColumn {
  std::string name;
  double value;
  bool is_upper;
};

Table bench_table(const RunConfig& c, std::vector<std::string>& violations) {
  const bool deriv = c.family == FamilyTag::JPrime;
  if (c.family != FamilyTag::J && !deriv) throw ConfigError("bench supports --family j or jp");
  const std::vector<std::string> names =
      deriv ? std::vector<std::string>{"lower", "upper", "airy_up"}
            : std::vector<std::string>{"lower", "upper", "hethcote_lo", "hethcote_up", "el_lo", "el_up", "qw_lo", "qw_up"};
  Table t;
  t.columns = {"nu", "k"};
  for (const auto& n : names) t.columns.push_back(n);
  t.columns.push_back("truth");
  for (const auto& n : names) t.columns.push_back("rel_" + n);

  for (const double nu : c.nu) {
    const ZeroFamily fam = deriv ? ZeroFamily::jprime() : ZeroFamily::j();
    const auto enc = enclose_range(fam, nu, c.k_first, c.k_last);
    const auto zeros = phase::true_zeros(fam, nu, c.k_last);
    for (long k = c.k_first; k <= c.k_last; ++k) {
      const Enclosure& e = enc[static_cast<std::size_t>(k - c.k_first)];
      auto valid_or_nan = [](double v, BoundStatus s) { return s == BoundStatus::NotApplicable ? NAN : v; };
      std::vector<BenchColumn> cols{{"lower", valid_or_nan(e.lower, e.lower_status), false},
                                    {"upper", valid_or_nan(e.upper, e.upper_status), true}};
      if (deriv) {
        cols.push_back({"airy_up", airy_upper_jprime(nu, k), true});
      } else {
        const auto h = hethcote(nu, k);
        const auto el = elbert_laforgia(nu, k);
        cols.push_back({"hethcote_lo", h.lower.value, false});
        cols.push_back({"hethcote_up", h.upper.value, true});
        cols.push_back({"el_lo", el.lower.value, false});
        cols.push_back({"el_up", el.upper.value, true});
        if (nu > 0.0) {
          const auto qw = qu_wong(nu, k);
          cols.push_back({"qw_lo", qw.lower.value, false});
          cols.push_back({"qw_up", qw.upper.value, true});
        } else {
          cols.push_back({"qw_lo", NAN, false});
          cols.push_back({"qw_up", NAN, true});
        }
      }
      const Truth truth = truth_of(zeros[static_cast<std::size_t>(k - 1)], c.strict, nu, k);
      std::vector<Cell> row{nu, k};
      for (const auto& col : cols) row.push_back(num(col.value));
      row.push_back(truth.cell);
      for (const auto& col : cols) {
        if (!std::isfinite(col.value) || !std::isfinite(truth.value)) {
          row.emplace_back();
          continue;
        }
        // Classical bounds may coincide with the zero (nu = 1/2); allow the
        // oracle's own error there. Our bounds are strict.
        const bool ours = col.name == "lower" || col.name == "upper";
        const double slack = ours ? 0.0 : 1e-12 * std::abs(truth.value);
        const bool ok = col.is_upper ? col.value >= truth.value - slack : col.value <= truth.value + slack;
        if (!ok) {
          violations.push_back(col.name + " at nu = " + format_double(nu) + ", k = " + std::to_string(k) + ": " +
                               format_double(col.value) + " vs truth " + format_double(truth.value));
        }
        row.push_back(truth.value == 0.0 ? Cell{} : num((col.value - truth.value) / truth.value));
      }
      t.rows.push_back(std::move(row));
    }
  }
  return t;
}

Table errgrid_table(const RunConfig& c) {
  Table t{{"nu", "k", "log10_rel_err"}, {}};
  for (const double nu : c.nu) {
    const auto enc = enclose_range(family_for(c, nu), nu, c.k_first, c.k_last);
    for (long k = c.k_first; k <= c.k_last; ++k) {
      const Enclosure& e = enc[static_cast<std::size_t>(k - c.k_first)];
      const bool both = e.lower_status == BoundStatus::Valid && e.upper_status == BoundStatus::Valid;
      t.rows.push_back({nu, k, both ? num(std::log10(e.upper / e.lower - 1.0)) : Cell{}});
    }
  }
  return t;
}

Table verify_table(const RunConfig& c, bool& any_failed) {
  Table t{{"pair", "nu", "eta", "x_min", "x_max", "count", "spacing", "min_diff", "argmin", "passed"}, {}};
  std::optional<GridOverride> override_grid;
  if (c.grid_env && !c.grid_default) override_grid = parse_grid_env(*c.grid_env);
  const std::vector<double> nus = c.nu.empty() ? std::vector<double>{0.0, 0.5, 1.0, 2.7, 10.0} : c.nu;
  for (const double nu : nus) {
    for (const SturmPair pair : kAllSturmPairs) {
      std::optional<double> eta;
      if (pair == SturmPair::PsiLowerVsExact) {
        const double e = c.eta.resolve(nu);
        if (!(e > 0.0 && e <= nu)) continue;  // psi pair needs nu >= eta > 0
        eta = e;
      }
      GridSpec g = default_grid(pair, nu, eta);
      if (override_grid) {
        g.count = override_grid->count;
        g.spacing = override_grid->linear ? Spacing::Linear : Spacing::Log;
        if (override_grid->x_max) g.x_max = *override_grid->x_max;
      }
      const SturmReport r = verify_c2(pair, nu, eta, g);
      any_failed = any_failed || !r.passed;
      t.rows.push_back({std::string(to_string(pair)), nu, eta ? Cell{*eta} : Cell{}, r.grid.x_min, r.grid.x_max,
                        static_cast<long>(r.grid.count),
                        std::string(r.grid.spacing == Spacing::Log ? "log" : "linear"), num(r.min_diff),
                        r.argmin, std::string(r.passed ? "true" : "false")});
    }
  }
  return t;
}

}  // namespace

std::vector<double> parse_real_range(const std::string& text) {
  if (text.empty()) throw ConfigError("empty range");
  std::vector<double> out;
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw ConfigError("range must be a:b:step, got '" + text + "'");
    const double a = parse_double(parts[0]);
    const double b = parse_double(parts[1]);
    const double step = parse_double(parts[2]);
    if (!(step > 0.0) || b < a) throw ConfigError("range a:b:step needs a <= b and step > 0");
    const long n = static_cast<long>(std::floor((b - a) / step + 1e-9));
    if (n > 1000000) throw ConfigError("range has too many points");
    for (long i = 0; i <= n; ++i) out.push_back(a + static_cast<double>(i) * step);
    return out;
  }
  for (const auto& p : split(text, ',')) out.push_back(parse_double(p));
  return out;
}

std::pair<long, long> parse_k_range(const std::string& text) {
  const auto dots = text.find("..");
  long a = 0;
  long b = 0;
  if (dots == std::string::npos) {
    a = b = parse_long(text);
  } else {
    a = parse_long(text.substr(0, dots));
    b = parse_long(text.substr(dots + 2));
  }
  if (a < 1 || b < a) throw ConfigError("k range must satisfy 1 <= a <= b, got '" + text + "'");
  return {a, b};
}

EtaSpec parse_eta(const std::string& text) {
  if (text.size() >= 2 && text.compare(text.size() - 2, 2, "nu") == 0) {
    const std::string factor = text.substr(0, text.size() - 2);
    return {factor.empty() ? 1.0 : parse_double(factor), true};
  }
  return {parse_double(text), false};
}

GridOverride parse_grid_env(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.empty() || parts.size() > 3) throw ConfigError("PHASEBOUND_GRID must be count[,log|linear[,xmax]]");
  GridOverride g;
  const long count = parse_long(parts[0]);
  if (count < 2 || count > 10000000) throw ConfigError("PHASEBOUND_GRID count must be in [2, 1e7]");
  g.count = static_cast<int>(count);
  if (parts.size() >= 2) {
    if (parts[1] == "linear") {
      g.linear = true;
    } else if (parts[1] != "log") {
      throw ConfigError("PHASEBOUND_GRID spacing must be log or linear");
    }
  }
  if (parts.size() == 3) g.x_max = parse_double(parts[2]);
  return g;
}

void write_csv(const Table& table, std::ostream& out) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
              out << format_double(v);
            } else if constexpr (std::is_same_v<T, long> || std::is_same_v<T, std::string>) {
              out << v;
            }
          },
          row[i]);
    }
    out << '\n';
  }
}

void write_json(const Table& table, std::ostream& out) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
              obj[table.columns[i]] = nullptr;
            } else {
              obj[table.columns[i]] = v;
            }
          },
          row[i]);
    }
    rows.push_back(std::move(obj));
  }
  out << rows.dump(2) << '\n';
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  Table table;
  int code = kExitOk;
  try {
    if (c.command != Command::Verify && c.nu.empty()) throw ConfigError("--nu is required");
    switch (c.command) {
      case Command::Enclose: table = enclose_table(c); break;
      case Command::Count: table = count_table(c); break;
      case Command::Oracle: table = oracle_table(c); break;
      case Command::Errgrid: table = errgrid_table(c); break;
      case Command::Bench: {
        std::vector<std::string> violations;
        table = bench_table(c, violations);
        for (const auto& v : violations) err << "containment violated: " << v << '\n';
        if (!violations.empty()) code = kExitVerifyFailed;
        break;
      }
      case Command::Verify: {
        bool failed = false;
        table = verify_table(c, failed);
        if (failed) {
          err << "verify: at least one comparison condition failed\n";
          code = kExitVerifyFailed;
        }
        break;
      }
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const DegradedInStrictMode& e) {
    err << "error: " << e.what() << '\n';
    return kExitDegraded;
  } catch (const AccuracyDegraded& e) {
    err << "error: " << e.what() << '\n';
    return kExitDegraded;
  }
  if (c.format == Format::Json) {
    write_json(table, out);
  } else {
    write_csv(table, out);
  }
  return code;
}

}  // namespace phasebound::cli
