#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "graphpack/graph.hpp"

namespace graphpack {

enum class GraphFormat { graph6, edgelist };

/// graph6: bit-packed upper triangle, printable ASCII, one line per graph.
/// Supports n up to 258047 (the one- and four-byte size headers).
std::string emit_graph6(const Graph& g);
Graph parse_graph6(const std::string& line);

/// Edge list: first line "n m", then m lines "u v" (0-based).
std::string emit_edgelist(const Graph& g);

std::string emit_graph(const Graph& g, GraphFormat format);

/// A packing instance on disk: two graphs in sequence (each either a graph6
/// line or an edge-list block), then an optional "perm: p0 p1 ..." line.
struct InstanceFile {
  Graph blue;
  Graph red;
  std::optional<std::vector<int>> perm;
};

InstanceFile parse_instance(std::istream& in);
InstanceFile parse_instance_file(const std::string& path);
void write_instance(std::ostream& out, const Graph& blue, const Graph& red,
                    GraphFormat format,
                    const std::optional<std::vector<int>>& perm = std::nullopt);
void write_instance_file(const std::string& path, const Graph& blue,
                         const Graph& red, GraphFormat format,
                         const std::optional<std::vector<int>>& perm = std::nullopt);

/// Canonical edge-list bytes of the two graphs, FNV-1a hashed; hex string.
/// Used to identify instances in result records.
std::string instance_digest(const Graph& blue, const Graph& red);

}  // namespace graphpack
