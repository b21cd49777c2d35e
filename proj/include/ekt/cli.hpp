#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace ekt::cli {

enum ExitCode { ok = 0, usage = 2, hypothesis = 3, numerical = 4 };

enum class ParamKind { number, integer, seed, list, choice, text };

struct ParamSpec {
  std::string name;
  ParamKind kind = ParamKind::number;
  std::string fallback;  // empty: unset unless given
  std::string help;
  std::vector<std::string> choices = {};
};

// Keys shared by every subcommand; threads, format and out never reach the output.
const std::vector<ParamSpec>& common_params();
const std::vector<ParamSpec>& command_params(const std::string& command);
std::vector<std::string> command_names();

// Flat key=value file; '#' starts a comment. Keys are normalized ('-' becomes '_').
std::map<std::string, std::string> read_config_file(const std::string& path);

class RunConfig {
 public:
  // Later sources override earlier ones. Throws InvalidArgument on unknown keys or values that
  // do not parse as their declared kind.
  static RunConfig build(const std::string& command,
                         const std::vector<std::map<std::string, std::string>>& sources);

  const std::string& command() const { return command_; }
  bool has(const std::string& key) const;
  double number(const std::string& key) const;
  std::int64_t integer(const std::string& key) const;
  std::uint64_t seed(const std::string& key) const;
  std::vector<double> list(const std::string& key) const;
  std::string text(const std::string& key) const;

  // Typed echo of the run parameters, without threads, format and out.
  nlohmann::ordered_json echo() const;

 private:
  const ParamSpec& spec(const std::string& key) const;
  std::string command_;
  std::map<std::string, std::string> values_;
};

using Cell = std::variant<double, std::int64_t, std::string, bool>;

struct Output {
  nlohmann::ordered_json doc;  // JSON rendering; "rows" is filled from the table
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::vector<Cell>> csv_trailer;  // summary rows appended to CSV only
};

Output run_command(const RunConfig& cfg, unsigned threads);

std::string render_csv(const Output& out);
std::string render_json(const Output& out);

// Full entry point; returns the process exit code.
int run(int argc, char** argv);

}  // namespace ekt::cli
