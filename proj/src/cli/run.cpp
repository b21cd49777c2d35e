#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "ekt/cli.hpp"
#include "ekt/errors.hpp"
#include "ekt/parallel.hpp"

namespace ekt::cli {

namespace {

std::string flag_name(std::string key) {
  std::replace(key.begin(), key.end(), '_', '-');
  return "--" + key;
}

unsigned thread_count(const RunConfig& c) {
  std::int64_t n = 0;
  if (c.has("threads")) {
    n = c.integer("threads");
  } else if (const char* env = std::getenv("EKT_THREADS"); env && *env) {
    n = RunConfig::build(c.command(), {{{"threads", env}}}).integer("threads");
  }
  if (n < 0 || n > 1024) throw InvalidArgument("threads must lie in [1, 1024]");
  return resolve_threads(static_cast<unsigned>(n));
}

std::string command_summary(const std::string& cmd) {
  static const std::map<std::string, std::string> m{
      {"geodesic", "sample a geodesic from the origin (closed form or ODE)"},
      {"ball-volume", "Monte Carlo volumes of geodesic balls and their growth fit"},
      {"growth", "area growth of a graph over intrinsic, extrinsic or cylinder regions"},
      {"collin-krust", "boundary height M(r) and M(r)/r for a zero-boundary graph"},
      {"growth-table", "verdicts for the table of example surfaces"},
  };
  return m.at(cmd);
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Geometry of the homogeneous spaces E(kappa, tau): geodesics, ball volumes, "
               "graph area growth"};
  app.require_subcommand(1, 1);
  std::map<std::string, std::map<std::string, std::string>> flags;
  std::map<std::string, std::map<std::string, CLI::Option*>> opts;
  std::map<std::string, std::string> config_paths;
  for (const std::string& cmd : command_names()) {
    CLI::App* sub = app.add_subcommand(cmd, command_summary(cmd));
    sub->add_option("--config", config_paths[cmd], "key=value file; flags override it");
    for (const auto* list : {&common_params(), &command_params(cmd)})
      for (const ParamSpec& p : *list) {
        std::string help = p.help;
        if (!p.fallback.empty()) help += " [" + p.fallback + "]";
        opts[cmd][p.name] = sub->add_option(flag_name(p.name), flags[cmd][p.name], help);
      }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ExitCode::ok : ExitCode::usage;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    std::vector<std::map<std::string, std::string>> sources;
    if (!config_paths[cmd].empty()) sources.push_back(read_config_file(config_paths[cmd]));
    std::map<std::string, std::string> given;
    for (const auto& [key, opt] : opts[cmd])
      if (opt->count() > 0) given[key] = flags[cmd][key];
    sources.push_back(given);
    const RunConfig cfg = RunConfig::build(cmd, sources);
    const unsigned threads = thread_count(cfg);

    const Output out = run_command(cfg, threads);
    const std::string text = cfg.text("format") == "json" ? render_json(out) : render_csv(out);
    if (cfg.has("out") && !cfg.text("out").empty()) {
      std::ofstream f(cfg.text("out"), std::ios::binary);
      if (!f) throw InvalidArgument("cannot write '" + cfg.text("out") + "'");
      f << text;
    } else {
      std::cout << text;
    }
    return ExitCode::ok;
  } catch (const HypothesisError& e) {
    std::cerr << "hypothesis violated: " << e.what() << "\n";
    return ExitCode::hypothesis;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ExitCode::usage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ExitCode::usage;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return ExitCode::numerical;
  }
}

}  // namespace ekt::cli
