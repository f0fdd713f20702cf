#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dowling/report.hpp"

namespace dowling::cli {

enum class Format { Csv, Json, Pretty };

Format parse_format(const std::string& s);

struct RunConfig {
  std::string command;
  std::optional<int> n_max;  // per-command default when unset
  std::optional<std::vector<long>> m;
  std::optional<std::vector<long>> r;
  std::optional<std::vector<long>> alpha;
  std::optional<std::vector<long>> x;
  std::optional<std::vector<long>> lambda;
  std::optional<Format> format;
  std::string out;           // empty: standard output
  std::string suite = "all";
  std::string kind = "gstirling";
};

struct CommandOutput {
  std::string text;
  int exit_code = 0;
};

/// Thrown for invalid ranges and cap violations; becomes a nonzero exit.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Plain table rendered as CSV, JSON rows or aligned text.
struct Table {
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;
};

std::string render_csv(const Table& t);
std::string render_pretty(const Table& t);

CommandOutput run_table(const RunConfig& cfg);
CommandOutput run_check(const RunConfig& cfg);
CommandOutput run_asymptotic(const RunConfig& cfg);
CommandOutput run_quad(const RunConfig& cfg);
CommandOutput run_oracle_diff(const RunConfig& cfg);

/// Dispatches on cfg.command.
CommandOutput run(const RunConfig& cfg);

/// "1,2,3" -> {1,2,3}; "" -> {}. Throws UsageError on junk.
std::vector<long> parse_list(const std::string& s);

}  // namespace dowling::cli
