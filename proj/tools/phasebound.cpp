#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>

#include "commands.hpp"

using namespace phasebound::cli;

int main(int argc, char** argv) {
  CLI::App app{"Certified enclosures for Bessel-type zeros"};
  app.require_subcommand(1);

  std::string family = "j";
  std::string nu;
  std::string k = "1";
  std::string lambda;
  double tau = 0.5;
  std::string eta = "0.5nu";
  std::string format = "csv";
  std::string out_path;
  bool strict = false;
  bool grid_default = false;

  const std::map<std::string, Command> commands{
      {"enclose", Command::Enclose}, {"count", Command::Count},     {"oracle", Command::Oracle},
      {"bench", Command::Bench},     {"errgrid", Command::Errgrid}, {"verify", Command::Verify},
  };
  const std::map<std::string, std::string> help{
      {"enclose", "lower/upper bounds for zeros k of a family"},
      {"count", "bounds on the number of zeros of J or J' up to lambda"},
      {"oracle", "reference zeros from the phase oracle"},
      {"bench", "our bounds against classical bounds and the oracle"},
      {"errgrid", "log10(upper/lower - 1) over (nu, k)"},
      {"verify", "grid check of the potential comparison conditions"},
  };
  for (const auto& [name, cmd] : commands) {
    auto* sub = app.add_subcommand(name, help.at(name));
    sub->add_option("--family", family, "j, y, c, jp, yp, cp, up, wp")->capture_default_str();
    sub->add_option("--nu", nu, "list a,b,c or range a:b:step");
    sub->add_option("--k", k, "index or range a..b")->capture_default_str();
    sub->add_option("--lambda", lambda, "list or range, for count");
    sub->add_option("--tau", tau, "offset for c and cp")->capture_default_str();
    sub->add_option("--eta", eta, "number, nu, or a multiple such as 0.5nu")->capture_default_str();
    sub->add_option("--format", format, "csv or json")->capture_default_str();
    sub->add_option("--out", out_path, "output file (default stdout)");
    sub->add_flag("--strict", strict, "exit 4 when the oracle leaves its accuracy envelope");
    if (name == "verify") sub->add_flag("--grid-default", grid_default, "ignore PHASEBOUND_GRID");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  RunConfig config;
  try {
    config.command = commands.at(app.get_subcommands().front()->get_name());
    config.family = phasebound::parse_family_tag(family);
    if (!nu.empty()) config.nu = parse_real_range(nu);
    std::tie(config.k_first, config.k_last) = parse_k_range(k);
    if (!lambda.empty()) config.lambda = parse_real_range(lambda);
    config.tau = tau;
    config.eta = parse_eta(eta);
    if (format == "json") {
      config.format = Format::Json;
    } else if (format != "csv") {
      throw ConfigError("--format must be csv or json");
    }
    config.strict = strict;
    config.grid_default = grid_default;
    if (const char* g = std::getenv("PHASEBOUND_GRID")) config.grid_env = std::string(g);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  if (out_path.empty()) return run(config, std::cout, std::cerr);
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot open " << out_path << '\n';
    return kExitConfig;
  }
  return run(config, out, std::cerr);
}
