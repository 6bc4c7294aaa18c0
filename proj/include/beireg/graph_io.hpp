#pragma once

#include <charconv>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "beireg/graph.hpp"

namespace beireg {

enum class GraphFormat { EdgeList, Graph6 };

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline long parse_int(std::string_view tok, std::size_t line) {
  long value = 0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc{} || ptr != end)
    throw ParseError("line " + std::to_string(line) + ": expected an integer, got '" + std::string(tok) + "'");
  return value;
}

}  // namespace detail

/// Parses the edge-list format: a header "n m" followed by m lines "u v"
/// with 1-based labels. '#' starts a comment; blank lines are ignored.
inline Graph parse_edge_list(std::string_view text) {
  std::size_t line_no = 0;
  bool have_header = false;
  long n = 0;
  long m = 0;
  long seen = 0;
  Graph g;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto toks = detail::split_ws(line);
    if (toks.size() != 2)
      throw ParseError("line " + std::to_string(line_no) + ": expected two integers, got " +
                       std::to_string(toks.size()) + " fields");
    const long a = detail::parse_int(toks[0], line_no);
    const long b = detail::parse_int(toks[1], line_no);
    if (!have_header) {
      if (a < 0 || b < 0) throw ParseError("line " + std::to_string(line_no) + ": negative count in header");
      n = a;
      m = b;
      g = Graph(static_cast<int>(n));
      have_header = true;
      continue;
    }
    if (seen == m) throw ParseError("line " + std::to_string(line_no) + ": more than " + std::to_string(m) + " edges");
    if (a < 1 || a > n || b < 1 || b > n)
      throw ParseError("line " + std::to_string(line_no) + ": label out of range 1.." + std::to_string(n));
    if (a == b) throw ParseError("line " + std::to_string(line_no) + ": self-loop at " + std::to_string(a));
    if (g.has_edge(static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1)))
      throw ParseError("line " + std::to_string(line_no) + ": duplicate edge " + std::to_string(a) + " " +
                       std::to_string(b));
    g.add_edge(static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1));
    ++seen;
  }
  if (!have_header) throw ParseError("line " + std::to_string(line_no) + ": missing 'n m' header");
  if (seen != m)
    throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(m) + " edges, found " +
                     std::to_string(seen));
  return g;
}

/// Parses one graph6 string (optionally preceded by the ">>graph6<<" header).
inline Graph parse_graph6(std::string_view text) {
  std::string_view s = detail::trim(text);
  constexpr std::string_view header = ">>graph6<<";
  if (s.substr(0, header.size()) == header) s.remove_prefix(header.size());
  if (auto nl = s.find('\n'); nl != std::string_view::npos) s = detail::trim(s.substr(0, nl));
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] < 63 || s[i] > 126) throw ParseError("graph6 offset " + std::to_string(i) + ": byte out of range");
  if (s.empty()) throw ParseError("graph6 offset 0: empty input");

  std::size_t pos = 0;
  long n = 0;
  auto take6 = [&](int count) {
    long value = 0;
    for (int k = 0; k < count; ++k) {
      if (pos >= s.size()) throw ParseError("graph6 offset " + std::to_string(pos) + ": truncated size field");
      value = (value << 6) | (s[pos++] - 63);
    }
    return value;
  };
  if (s[0] != 126) {
    n = take6(1);
  } else if (s.size() > 1 && s[1] != 126) {
    ++pos;
    n = take6(3);
  } else {
    pos += 2;
    n = take6(6);
  }
  Graph g(static_cast<int>(n));
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  const std::size_t expected_bytes = (bits + 5) / 6;
  if (s.size() - pos != expected_bytes)
    throw ParseError("graph6 offset " + std::to_string(pos) + ": expected " + std::to_string(expected_bytes) +
                     " data bytes, found " + std::to_string(s.size() - pos));
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = s[pos + k / 6] - 63;
      if ((byte >> (5 - static_cast<int>(k % 6))) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

inline Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::Graph6 ? parse_graph6(text) : parse_edge_list(text);
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u + 1 << ' ' << e.v + 1 << '\n';
  return out.str();
}

inline std::string to_graph6(const Graph& g) {
  const long n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.append(2, static_cast<char>(126));
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0;
  int used = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + 63));
  return out;
}

/// DOT export; `names`, when given, replaces the numeric labels.
inline std::string to_dot(const Graph& g, const std::vector<std::string>& names = {}) {
  auto label = [&](Vertex v) { return names.empty() ? std::to_string(v + 1) : "\"" + names.at(static_cast<std::size_t>(v)) + "\""; };
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 0) out << "  " << label(v) << ";\n";
  for (const Edge& e : g.edges()) out << "  " << label(e.u) << " -- " << label(e.v) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace beireg
