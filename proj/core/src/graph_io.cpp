#include "graphpack/graph_io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace graphpack {

namespace {

constexpr int kGraph6MaxN = 258047;

void append_bits(std::string& out, std::uint64_t value, int bits) {
  for (int shift = bits - 6; shift >= 0; shift -= 6)
    out.push_back(static_cast<char>(((value >> shift) & 0x3f) + 63));
}

}  // namespace

std::string emit_graph6(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kGraph6MaxN) throw std::invalid_argument("emit_graph6: graph too large");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    append_bits(out, static_cast<std::uint64_t>(n), 18);
  }
  int accum = 0;
  int accum_bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      accum = (accum << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++accum_bits == 6) {
        out.push_back(static_cast<char>(accum + 63));
        accum = 0;
        accum_bits = 0;
      }
    }
  }
  if (accum_bits > 0)
    out.push_back(static_cast<char>((accum << (6 - accum_bits)) + 63));
  return out;
}

Graph parse_graph6(const std::string& line) {
  std::size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= line.size()) throw std::invalid_argument("parse_graph6: truncated input");
    const int c = static_cast<unsigned char>(line[pos++]) - 63;
    if (c < 0 || c > 63) throw std::invalid_argument("parse_graph6: bad character");
    return c;
  };
  int n;
  if (!line.empty() && line[0] == '~') {
    ++pos;
    if (pos < line.size() && line[pos] == '~')
      throw std::invalid_argument("parse_graph6: n >= 2^18 not supported");
    n = (next() << 12) | (next() << 6) | next();
  } else {
    n = next();
  }
  std::vector<std::pair<int, int>> edges;
  int accum = 0;
  int accum_bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (accum_bits == 0) {
        accum = next();
        accum_bits = 6;
      }
      if ((accum >> (accum_bits - 1)) & 1) edges.emplace_back(i, j);
      --accum_bits;
    }
  }
  return Graph(n, std::move(edges));
}

std::string emit_edgelist(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string emit_graph(const Graph& g, GraphFormat format) {
  return format == GraphFormat::graph6 ? emit_graph6(g) + "\n" : emit_edgelist(g);
}

namespace {

// graph6 lines start at '?' (ASCII 63) or '~'; edge-list lines start with a
// digit. That keeps the two formats unambiguous in an instance file.
bool looks_like_edgelist(const std::string& line) {
  return !line.empty() && line[0] >= '0' && line[0] <= '9';
}

Graph parse_graph_block(std::istream& in, std::string& pending) {
  while (pending.empty() || pending[0] == '#') {
    if (!std::getline(in, pending))
      throw std::invalid_argument("instance: missing graph block");
    while (!pending.empty() && (pending.back() == '\r' || pending.back() == ' '))
      pending.pop_back();
  }
  if (looks_like_edgelist(pending)) {
    std::istringstream header(pending);
    int n, m;
    if (!(header >> n >> m)) throw std::invalid_argument("instance: bad edge-list header");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (int e = 0; e < m; ++e) {
      int u, v;
      if (!(in >> u >> v)) throw std::invalid_argument("instance: truncated edge list");
      edges.emplace_back(u, v);
    }
    in.ignore(std::numeric_limits<std::streamsize>::max(), '\n');
    pending.clear();
    return Graph(n, std::move(edges));
  }
  Graph g = parse_graph6(pending);
  pending.clear();
  return g;
}

}  // namespace

InstanceFile parse_instance(std::istream& in) {
  InstanceFile result;
  std::string pending;
  result.blue = parse_graph_block(in, pending);
  result.red = parse_graph_block(in, pending);

  std::string line = pending;
  while (line.empty() && std::getline(in, line)) {
  }
  if (line.rfind("perm:", 0) == 0) {
    std::istringstream body(line.substr(5));
    std::vector<int> perm;
    int p;
    while (body >> p) perm.push_back(p);
    result.perm = std::move(perm);
  }
  return result;
}

InstanceFile parse_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file: " + path);
  return parse_instance(in);
}

void write_instance(std::ostream& out, const Graph& blue, const Graph& red,
                    GraphFormat format, const std::optional<std::vector<int>>& perm) {
  out << emit_graph(blue, format) << emit_graph(red, format);
  if (perm) {
    out << "perm:";
    for (int p : *perm) out << ' ' << p;
    out << '\n';
  }
}

void write_instance_file(const std::string& path, const Graph& blue,
                         const Graph& red, GraphFormat format,
                         const std::optional<std::vector<int>>& perm) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write instance file: " + path);
  write_instance(out, blue, red, format, perm);
}

std::string instance_digest(const Graph& blue, const Graph& red) {
  const std::string bytes = emit_edgelist(blue) + "|" + emit_edgelist(red);
  std::uint64_t hash = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
  return std::string(buf);
}

}  // namespace graphpack
