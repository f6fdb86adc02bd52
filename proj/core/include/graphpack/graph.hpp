#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace graphpack {

/// Subset of {0..n-1} backed by a bitmask. Universe size is fixed at
/// construction; all set algebra stays within the same universe.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe_size);

  int universe_size() const { return n_; }
  int count() const { return count_; }
  bool empty() const { return count_ == 0; }
  bool contains(int v) const {
    return (bits_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
  }

  void add(int v);
  void remove(int v);

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool operator==(const VertexSet&) const = default;

  /// Members in ascending order.
  std::vector<int> members() const;

  static int intersection_size(const VertexSet& a, const VertexSet& b);

 private:
  int n_ = 0;
  int count_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Witness cycle found by find_even_short_cycle: distinct vertices in cyclic
/// order, consecutive pairs (and last-first) are edges.
struct EvenCycle {
  std::vector<int> vertices;
  int length() const { return static_cast<int>(vertices.size()); }
};

/// Simple undirected graph on {0..n-1}. Immutable after construction; safe to
/// share across threads.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int max_degree() const { return max_degree_; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }

  /// Sorted neighbor list of v.
  std::span<const int> adj(int v) const { return adjacency_[v]; }

  /// Edges as sorted (u < v) pairs, lexicographic order.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool has_edge(int u, int v) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  int max_degree_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adjacency_;
};

/// {j : ij in E(g)}. Throws std::out_of_range on a bad vertex.
VertexSet neighborhood(const Graph& g, int i);

/// Union over inner neighbors j of i of the outer neighborhoods N_outer(j).
/// May contain i itself; callers subtract when a definition requires it.
/// Throws std::invalid_argument on mismatched vertex counts.
VertexSet composed_neighborhood(const Graph& g_outer, const Graph& g_inner,
                                int i);

/// True iff some i' satisfies ii' in g_first and i'j in g_second.
/// Throws std::invalid_argument when i == j.
bool has_link(const Graph& g_first, const Graph& g_second, int i, int j);

/// Finds a 4-, 6- or 8-cycle subgraph if one exists. Exact: meets two
/// internally disjoint half-paths of equal length at an antipodal vertex.
/// Prefers shorter cycles (checks length 4, then 6, then 8).
std::optional<EvenCycle> find_even_short_cycle(const Graph& g);

/// True iff adding edge {u,v} to g would close a 4-, 6- or 8-cycle through
/// that edge, i.e. g has a simple u-v path of length 3, 5 or 7.
bool edge_closes_even_short_cycle(const Graph& g, int u, int v);

/// True iff adding {u,v} to g closes a 4-cycle, i.e. g has a simple u-v path
/// of length 3.
bool edge_closes_c4(const Graph& g, int u, int v);

/// True iff g contains a 4-cycle (some vertex pair with two common neighbors).
bool has_c4(const Graph& g);

}  // namespace graphpack
