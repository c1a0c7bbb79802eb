#include "diskoct/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

namespace diskoct {

namespace {

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

bool blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::optional<long long> header_n;
  std::optional<long long> header_m;
  std::vector<Edge> edges;
  long long max_id = -1;
  std::string raw;
  std::size_t line_no = 0;

  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip_comment(raw);
    if (blank(line)) continue;
    std::istringstream ss(line);
    const auto where = " on line " + std::to_string(line_no);
    if (line.find_first_not_of(" \t") != std::string::npos && line[line.find_first_not_of(" \t")] == 'p') {
      std::string tag;
      long long n = 0;
      long long m = 0;
      if (header_n || !edges.empty()) throw ParseError("unexpected header" + where);
      if (!(ss >> tag >> n >> m) || tag != "p" || n < 0 || m < 0) {
        throw ParseError("malformed header" + where);
      }
      header_n = n;
      header_m = m;
      continue;
    }
    long long u = 0;
    long long v = 0;
    std::string extra;
    if (!(ss >> u >> v) || (ss >> extra)) throw ParseError("expected `u v`" + where);
    if (u < 0 || v < 0) throw ParseError("negative vertex id" + where);
    if (u == v) throw ParseError("self-loop" + where);
    if (header_n && (u >= *header_n || v >= *header_n)) {
      throw ParseError("vertex id exceeds header count" + where);
    }
    if (std::max(u, v) > std::numeric_limits<Vertex>::max() - 1) {
      throw ParseError("vertex id too large" + where);
    }
    max_id = std::max({max_id, u, v});
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (header_m && static_cast<long long>(edges.size()) != *header_m) {
    throw ParseError("header declares " + std::to_string(*header_m) + " edges, found " +
                     std::to_string(edges.size()));
  }
  const auto n = header_n ? static_cast<std::size_t>(*header_n) : static_cast<std::size_t>(max_id + 1);
  return Graph(n, edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_edge_list_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_edge_list(out, g);
}

VertexSet read_vertex_list(std::istream& in) {
  std::vector<Vertex> ids;
  std::string raw;
  while (std::getline(in, raw)) {
    std::string line = strip_comment(raw);
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) {
      std::size_t used = 0;
      long long id = 0;
      try {
        id = std::stoll(tok, &used);
      } catch (const std::exception&) {
        throw ParseError("not a vertex id: " + tok);
      }
      if (used != tok.size() || id < 0) throw ParseError("not a vertex id: " + tok);
      ids.push_back(static_cast<Vertex>(id));
    }
  }
  return make_set(std::move(ids));
}

}  // namespace diskoct
