#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hitlab/graph.hpp"
#include "hitlab/hitting.hpp"
#include "hitlab/paths.hpp"

namespace hitlab::cli {

enum class Command { Hit, AllPairs, Tau, Resist, Commute, Invariants, Verify, Mc, Bounds };
enum class OutputFormat { Json, Csv, Text };

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitSizeCap = 3;

std::string_view to_string(Command command);

struct RunConfig {
  Command command = Command::Hit;
  std::optional<std::string> input_path;
  std::optional<std::string> family;
  std::optional<Vertex> x;
  std::optional<Vertex> y;
  std::vector<HitMethod> methods;
  std::size_t cap = kDefaultEnumerationCap;
  std::size_t walks = 100000;
  std::uint64_t seed = 1;
  OutputFormat format = OutputFormat::Json;
  // `invariants` only; defaults to the degree function.
  std::optional<std::vector<Weight>> weights;
};

struct InputGraph {
  Graph graph;
  std::optional<std::string> family;
  std::vector<std::string> labels;
};

// A family spec ("lollipop:5,5", "random:n=8,seed=42"), literal edge-list
// text (anything containing a newline), or a path to an edge-list file.
// Throws Error (ParseError, DuplicateEdge, LoopEdge, ...).
InputGraph parse_graph_input(std::string_view source);

// Throws Error(InvalidParams) when the config is inconsistent.
void validate(const RunConfig& config);

// Builds a RunConfig from argv (CLI11). Returns nullopt after printing help;
// throws Error(InvalidParams) on bad usage. HITLAB_CAP overrides the default
// cap; an explicit --cap wins over both.
std::optional<RunConfig> parse_command_line(int argc, const char* const* argv, std::ostream& out);

// Executes the command, writing the report to `out` and diagnostics to
// `err`. Returns one of the kExit* codes.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Full entry point: parse + run with exit-code mapping.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hitlab::cli
