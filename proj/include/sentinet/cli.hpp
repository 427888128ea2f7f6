#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sentinet/bounds.hpp"
#include "sentinet/detector.hpp"
#include "sentinet/graph.hpp"

namespace sentinet::cli {

enum class Command { partition, detect, simulate, bound, exponent_sweep };
enum class PartitionMethod { closed, brute, both };

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitCompute = 3;

struct RunConfig {
  Command command = Command::bound;

  Topology topology = Topology::complete;
  std::size_t n = 0;
  std::string edges_path;

  double theta = 0.0;
  double gamma = 0.0;
  double field = 0.0;  // partition only
  std::optional<double> pbsc;
  std::optional<double> epsilon;

  PartitionMethod method = PartitionMethod::both;
  std::vector<DetectorKind> detectors{DetectorKind::map};
  std::string y_text;
  std::string y_path;

  std::optional<SweepVariable> sweep;
  double from = 0.0;
  double to = 1.0;
  std::size_t steps = 2;
  std::size_t n_eval = kDefaultExponentNodes;
  bool raw = false;

  std::uint64_t trials = 10000;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::string out_path;

  // Channel weight from whichever of --pbsc / --epsilon was given.
  // Throws UsageError when both or (if required) neither are set.
  double resolved_epsilon() const;
  double resolved_pbsc() const;
  Network network() const;
};

// Parses argv (including argv[0]) into a config. A JSON file given with
// --config supplies defaults for every flag; explicit flags win.
// Throws UsageError on any configuration problem; returns nullopt when
// help was printed to `out`.
std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::ostream& out);

void run_partition(const RunConfig& cfg, std::ostream& out);
void run_detect(const RunConfig& cfg, std::ostream& out);
void run_simulate(const RunConfig& cfg, std::ostream& out);
void run_bound(const RunConfig& cfg, std::ostream& out);
void run_exponent_sweep(const RunConfig& cfg, std::ostream& out);

void execute(const RunConfig& cfg, std::ostream& out);

// Full front end: parse, execute, map errors to exit codes with a one-line
// message on `err`. Output goes to `out` unless --out names a file.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Numbers in CSV output: 12 significant digits.
std::string format_number(double v);

}  // namespace sentinet::cli
