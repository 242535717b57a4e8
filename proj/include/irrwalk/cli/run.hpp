#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "irrwalk/cli/graph_io.hpp"

namespace irrwalk {

enum ExitCode : int { exit_ok = 0, exit_failure = 1, exit_usage = 2, exit_resource = 3 };

struct RunConfig {
  std::string subcommand;
  // Exactly one of graph_path ("-" for stdin) and graph_text.
  std::string graph_path, graph_text;
  std::optional<GraphFormat> input_format;  // default: graph6 for *.g6, edge list otherwise
  std::vector<std::size_t> vertices;

  double t_max = 100, dt = 0.01;
  std::size_t grid = 200, resolution = 256;
  unsigned ell = 1, max_ell = 8;
  unsigned long bits = 64;
  std::uint64_t work_ceiling = 10'000'000;
  std::size_t max_field_degree = 5040;

  std::string out;              // empty: stdout
  std::string format = "csv";  // point clouds: csv or svg
  bool approx = false;
};

// Executes one subcommand, writing the report to `out` (or config.out) and diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv (and IRRWALK_WORK_CEILING) into a RunConfig and runs it.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace irrwalk
