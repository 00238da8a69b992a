#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "forestcover/graph.hpp"

namespace forestcover {

// Instance grammar (vertices 1-based in files, 0-based in memory):
//   c <comment>
//   p fc <n> <m>      or   p bfc <n> <m>
//   e <u> <v> <w>     exactly m lines, edge ids follow file order
// Errors are InstanceError with a "line N:" prefix.
Graph parse_instance(std::string_view text);
Graph read_instance_file(const std::string& path);

// Canonical text: header, then one edge line per edge with the shortest
// round-trip decimal weight. parse_instance(emit_instance(g)) reproduces g.
std::string emit_instance(const Graph& graph, const std::vector<std::string>& comments = {});

enum class SolutionKind { fc, bfc };

struct SolutionFile {
  SolutionKind kind = SolutionKind::fc;
  std::vector<Tree> trees;
};

// Solution grammar:
//   c <comment>
//   s fc <k>   or   s bfc <k>
//   t <v1> <v2> ... ; <e1> <e2> ...     k lines, 1-based vertex and edge ids
SolutionFile parse_solution(std::string_view text);
SolutionFile read_solution_file(const std::string& path);
std::string emit_solution(const SolutionFile& solution);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// Shortest decimal string that parses back to exactly `value`.
std::string format_real(double value);

}  // namespace forestcover
