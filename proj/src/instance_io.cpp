#include "forestcover/instance_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "forestcover/errors.hpp"

namespace forestcover {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

[[noreturn]] void fail(int line_no, const std::string& what) {
  throw InstanceError("line " + std::to_string(line_no) + ": " + what);
}

long long parse_int(std::string_view word, int line_no) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || ptr != word.data() + word.size()) {
    fail(line_no, "expected an integer, got '" + std::string(word) + "'");
  }
  return value;
}

double parse_double(std::string_view word, int line_no) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || ptr != word.data() + word.size()) {
    fail(line_no, "expected a number, got '" + std::string(word) + "'");
  }
  return value;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn fn) {
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    ++line_no;
    fn(line_no, text.substr(pos, end - pos));
    if (end == text.size()) break;
    pos = end + 1;
  }
}

}  // namespace

std::string format_real(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc()) throw Error("format_real: conversion failed");
  return std::string(buf, ptr);
}

Graph parse_instance(std::string_view text) {
  bool have_header = false;
  WeightMode mode = WeightMode::fc_normalized;
  long long n = 0;
  long long m = 0;
  std::vector<Edge> edges;
  std::set<std::pair<int, int>> seen;

  for_each_line(text, [&](int line_no, std::string_view line) {
    const auto words = split_words(line);
    if (words.empty() || words[0] == "c") return;
    if (words[0] == "p") {
      if (have_header) fail(line_no, "second problem line");
      if (words.size() != 4) fail(line_no, "problem line must be 'p fc|bfc <n> <m>'");
      if (words[1] == "fc") mode = WeightMode::fc_normalized;
      else if (words[1] == "bfc") mode = WeightMode::bfc_raw;
      else fail(line_no, "unknown problem kind '" + std::string(words[1]) + "'");
      n = parse_int(words[2], line_no);
      m = parse_int(words[3], line_no);
      if (n < 0 || m < 0 || n > 1000000 || m > 10000000) fail(line_no, "vertex or edge count out of range");
      have_header = true;
      return;
    }
    if (words[0] == "e") {
      if (!have_header) fail(line_no, "edge line before problem line");
      if (words.size() != 4) fail(line_no, "edge line must be 'e <u> <v> <w>'");
      const long long u = parse_int(words[1], line_no);
      const long long v = parse_int(words[2], line_no);
      const double w = parse_double(words[3], line_no);
      if (u < 1 || u > n || v < 1 || v > n) fail(line_no, "vertex id out of range 1.." + std::to_string(n));
      if (u == v) fail(line_no, "self-loop");
      if (!seen.emplace(std::min(u, v), std::max(u, v)).second) fail(line_no, "duplicate edge");
      if (static_cast<long long>(edges.size()) >= m) fail(line_no, "more edge lines than declared");
      if (mode == WeightMode::fc_normalized && !(w >= 0.0 && w <= 1.0)) fail(line_no, "fc weight must lie in [0,1]");
      if (mode == WeightMode::bfc_raw && !(w > 0.0 && std::isfinite(w))) fail(line_no, "bfc weight must be positive");
      edges.push_back({static_cast<int>(u - 1), static_cast<int>(v - 1), w});
      return;
    }
    fail(line_no, "unknown line type '" + std::string(words[0]) + "'");
  });
  if (!have_header) throw InstanceError("missing problem line");
  if (static_cast<long long>(edges.size()) != m) {
    throw InstanceError("declared " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  return Graph(static_cast<int>(n), std::move(edges), mode);
}

std::string emit_instance(const Graph& graph, const std::vector<std::string>& comments) {
  std::ostringstream out;
  for (const std::string& c : comments) out << "c " << c << '\n';
  out << "p " << (graph.mode() == WeightMode::bfc_raw ? "bfc" : "fc") << ' ' << graph.vertex_count() << ' '
      << graph.edge_count() << '\n';
  for (const Edge& e : graph.edges()) {
    out << "e " << e.u + 1 << ' ' << e.v + 1 << ' ' << format_real(e.w) << '\n';
  }
  return out.str();
}

SolutionFile parse_solution(std::string_view text) {
  SolutionFile sol;
  bool have_header = false;
  long long declared = 0;
  for_each_line(text, [&](int line_no, std::string_view line) {
    const auto words = split_words(line);
    if (words.empty() || words[0] == "c") return;
    if (words[0] == "s") {
      if (have_header) fail(line_no, "second solution line");
      if (words.size() != 3) fail(line_no, "solution line must be 's fc|bfc <k>'");
      if (words[1] == "fc") sol.kind = SolutionKind::fc;
      else if (words[1] == "bfc") sol.kind = SolutionKind::bfc;
      else fail(line_no, "unknown solution kind");
      declared = parse_int(words[2], line_no);
      if (declared < 0) fail(line_no, "negative tree count");
      have_header = true;
      return;
    }
    if (words[0] == "t") {
      if (!have_header) fail(line_no, "tree line before solution line");
      Tree tree;
      bool edges_part = false;
      for (std::size_t i = 1; i < words.size(); ++i) {
        if (words[i] == ";") {
          if (edges_part) fail(line_no, "more than one ';'");
          edges_part = true;
          continue;
        }
        const long long id = parse_int(words[i], line_no);
        if (id < 1 || id > 100000000) fail(line_no, "id out of range");
        (edges_part ? tree.edges : tree.vertices).push_back(static_cast<int>(id - 1));
      }
      if (!edges_part) fail(line_no, "tree line needs ';' between vertices and edges");
      std::sort(tree.vertices.begin(), tree.vertices.end());
      std::sort(tree.edges.begin(), tree.edges.end());
      sol.trees.push_back(std::move(tree));
      return;
    }
    fail(line_no, "unknown line type '" + std::string(words[0]) + "'");
  });
  if (!have_header) throw InstanceError("missing solution line");
  if (static_cast<long long>(sol.trees.size()) != declared) {
    throw InstanceError("declared " + std::to_string(declared) + " trees, found " +
                        std::to_string(sol.trees.size()));
  }
  return sol;
}

std::string emit_solution(const SolutionFile& solution) {
  std::ostringstream out;
  out << "s " << (solution.kind == SolutionKind::bfc ? "bfc" : "fc") << ' ' << solution.trees.size() << '\n';
  for (const Tree& t : solution.trees) {
    out << 't';
    for (VertexId v : t.vertices) out << ' ' << v + 1;
    out << " ;";
    for (EdgeId e : t.edges) out << ' ' << e + 1;
    out << '\n';
  }
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InstanceError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

Graph read_instance_file(const std::string& path) { return parse_instance(read_text_file(path)); }

SolutionFile read_solution_file(const std::string& path) { return parse_solution(read_text_file(path)); }

}  // namespace forestcover
