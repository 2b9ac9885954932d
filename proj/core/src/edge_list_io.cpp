#include "kout/edge_list_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string_view>
#include <vector>

namespace kout {

namespace {

std::uint32_t parse_u32(std::string_view token, std::size_t line_no) {
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": expected integer, got '" +
                     std::string(token) + "'");
  }
  return value;
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  bool have_n = false;
  std::uint32_t n = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view s(line);
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) {
      s.remove_suffix(1);
    }
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    if (s.empty()) continue;
    if (!have_n) {
      n = parse_u32(s, line_no);
      have_n = true;
      continue;
    }
    std::size_t sep = s.find_first_of(" \t");
    if (sep == std::string_view::npos) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 'u v'");
    }
    std::string_view left = s.substr(0, sep);
    std::string_view right = s.substr(sep + 1);
    while (!right.empty() && (right.front() == ' ' || right.front() == '\t')) {
      right.remove_prefix(1);
    }
    std::uint32_t u = parse_u32(left, line_no);
    std::uint32_t v = parse_u32(right, line_no);
    edges.push_back(make_edge(u, v));  // throws SelfLoop on u == v
  }
  if (!have_n) throw ParseError("empty edge-list input: missing vertex count line");
  return Graph(n, edges);  // throws VertexOutOfRange on bad endpoints
}

std::string format_edge_list(const Graph& g) {
  std::string out = std::to_string(g.vertex_count());
  out.push_back('\n');
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u);
    out.push_back(' ');
    out += std::to_string(e.v);
    out.push_back('\n');
  }
  return out;
}

Graph read_edge_list(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

void write_edge_list(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open '" + path + "' for writing");
  out << format_edge_list(g);
}

}  // namespace kout
