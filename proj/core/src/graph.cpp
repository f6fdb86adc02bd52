#include "graphpack/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace graphpack {

VertexSet::VertexSet(int universe_size)
    : n_(universe_size), bits_((static_cast<std::size_t>(universe_size) + 63) / 64, 0) {
  if (universe_size < 0) throw std::invalid_argument("VertexSet: negative universe");
}

void VertexSet::add(int v) {
  if (v < 0 || v >= n_) throw std::out_of_range("VertexSet::add: vertex out of range");
  std::uint64_t& word = bits_[static_cast<std::size_t>(v) >> 6];
  const std::uint64_t mask = 1ull << (v & 63);
  if (!(word & mask)) {
    word |= mask;
    ++count_;
  }
}

void VertexSet::remove(int v) {
  if (v < 0 || v >= n_) throw std::out_of_range("VertexSet::remove: vertex out of range");
  std::uint64_t& word = bits_[static_cast<std::size_t>(v) >> 6];
  const std::uint64_t mask = 1ull << (v & 63);
  if (word & mask) {
    word &= ~mask;
    --count_;
  }
}

namespace {
void require_same_universe(const VertexSet& a, const VertexSet& b) {
  if (a.universe_size() != b.universe_size())
    throw std::invalid_argument("VertexSet: universe size mismatch");
}
}  // namespace

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  require_same_universe(*this, other);
  count_ = 0;
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    bits_[w] |= other.bits_[w];
    count_ += std::popcount(bits_[w]);
  }
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  require_same_universe(*this, other);
  count_ = 0;
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    bits_[w] &= other.bits_[w];
    count_ += std::popcount(bits_[w]);
  }
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  require_same_universe(*this, other);
  count_ = 0;
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    bits_[w] &= ~other.bits_[w];
    count_ += std::popcount(bits_[w]);
  }
  return *this;
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(count_));
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    std::uint64_t word = bits_[w];
    while (word) {
      const int bit = std::countr_zero(word);
      out.push_back(static_cast<int>(w * 64) + bit);
      word &= word - 1;
    }
  }
  return out;
}

int VertexSet::intersection_size(const VertexSet& a, const VertexSet& b) {
  require_same_universe(a, b);
  int total = 0;
  for (std::size_t w = 0; w < a.bits_.size(); ++w)
    total += std::popcount(a.bits_[w] & b.bits_[w]);
  return total;
}

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::out_of_range("Graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("Graph: self-loop");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);

  adjacency_.assign(static_cast<std::size_t>(n), {});
  for (const auto& [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& nbrs : adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    max_degree_ = std::max(max_degree_, static_cast<int>(nbrs.size()));
  }
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw std::out_of_range("Graph::has_edge: vertex out of range");
  if (u == v) return false;
  const auto& nbrs = adjacency_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

VertexSet neighborhood(const Graph& g, int i) {
  if (i < 0 || i >= g.vertex_count())
    throw std::out_of_range("neighborhood: vertex out of range");
  VertexSet out(g.vertex_count());
  for (int j : g.adj(i)) out.add(j);
  return out;
}

VertexSet composed_neighborhood(const Graph& g_outer, const Graph& g_inner, int i) {
  if (g_outer.vertex_count() != g_inner.vertex_count())
    throw std::invalid_argument("composed_neighborhood: vertex count mismatch");
  if (i < 0 || i >= g_inner.vertex_count())
    throw std::out_of_range("composed_neighborhood: vertex out of range");
  VertexSet out(g_outer.vertex_count());
  for (int j : g_inner.adj(i))
    for (int k : g_outer.adj(j)) out.add(k);
  return out;
}

bool has_link(const Graph& g_first, const Graph& g_second, int i, int j) {
  if (g_first.vertex_count() != g_second.vertex_count())
    throw std::invalid_argument("has_link: vertex count mismatch");
  if (i == j) throw std::invalid_argument("has_link: i and j must be distinct");
  if (i < 0 || i >= g_first.vertex_count() || j < 0 || j >= g_first.vertex_count())
    throw std::out_of_range("has_link: vertex out of range");
  for (int mid : g_first.adj(i))
    if (g_second.has_edge(mid, j)) return true;
  return false;
}

namespace {

// Enumerates simple paths of length exactly `depth` starting at `start`.
// Each stored path is start,...,endpoint (depth+1 vertices).
void enumerate_paths(const Graph& g, int start, int depth,
                     std::vector<int>& path, std::vector<char>& on_path,
                     std::vector<std::vector<int>>& flat_paths) {
  if (static_cast<int>(path.size()) == depth + 1) {
    flat_paths.push_back(path);
    return;
  }
  for (int next : g.adj(path.back())) {
    if (on_path[next]) continue;
    on_path[next] = 1;
    path.push_back(next);
    enumerate_paths(g, start, depth, path, on_path, flat_paths);
    path.pop_back();
    on_path[next] = 0;
  }
}

// Two internally disjoint length-k paths from u to the same endpoint form a
// 2k-cycle. Every 2k-cycle splits this way at each pair of antipodal
// vertices, so scanning all start vertices is exact.
std::optional<EvenCycle> find_cycle_of_length(const Graph& g, int half) {
  const int n = g.vertex_count();
  std::vector<int> path;
  std::vector<char> on_path(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> paths;
  // Paths reaching each endpoint, indices into `paths`.
  std::vector<std::vector<int>> by_endpoint(static_cast<std::size_t>(n));

  for (int u = 0; u < n; ++u) {
    paths.clear();
    path.assign(1, u);
    on_path.assign(static_cast<std::size_t>(n), 0);
    on_path[u] = 1;
    enumerate_paths(g, u, half, path, on_path, paths);
    if (paths.empty()) continue;

    for (auto& bucket : by_endpoint) bucket.clear();
    for (std::size_t p = 0; p < paths.size(); ++p)
      by_endpoint[paths[p].back()].push_back(static_cast<int>(p));

    std::vector<char> interior(static_cast<std::size_t>(n), 0);
    for (int w = 0; w < n; ++w) {
      const auto& bucket = by_endpoint[w];
      for (std::size_t a = 0; a + 1 < bucket.size(); ++a) {
        const auto& pa = paths[bucket[a]];
        for (int x = 1; x < half; ++x) interior[pa[x]] = 1;
        for (std::size_t b = a + 1; b < bucket.size(); ++b) {
          const auto& pb = paths[bucket[b]];
          bool disjoint = true;
          for (int x = 1; x < half && disjoint; ++x)
            if (interior[pb[x]]) disjoint = false;
          if (disjoint) {
            EvenCycle cycle;
            cycle.vertices.assign(pa.begin(), pa.end());
            for (int x = half - 1; x >= 1; --x) cycle.vertices.push_back(pb[x]);
            return cycle;
          }
        }
        for (int x = 1; x < half; ++x) interior[pa[x]] = 0;
      }
    }
  }
  return std::nullopt;
}

// Simple u-v path of exact length `len` avoiding the (absent) edge uv.
// Pruned by BFS distance to v.
bool exists_path_of_length(const Graph& g, int u, int v, int len) {
  const int n = g.vertex_count();
  std::vector<int> dist(static_cast<std::size_t>(n), n + 1);
  std::vector<int> queue;
  dist[v] = 0;
  queue.push_back(v);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int x = queue[head];
    if (dist[x] >= len) break;
    for (int y : g.adj(x)) {
      if (dist[y] > dist[x] + 1) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  if (dist[u] > len) return false;

  std::vector<char> on_path(static_cast<std::size_t>(n), 0);
  auto dfs = [&](auto&& self, int x, int remaining) -> bool {
    if (remaining == 0) return x == v;
    if (dist[x] > remaining) return false;
    on_path[x] = 1;
    for (int y : g.adj(x)) {
      if (y == v && remaining > 1) continue;  // v only enters as final vertex
      if (on_path[y]) continue;
      if (self(self, y, remaining - 1)) {
        on_path[x] = 0;
        return true;
      }
    }
    on_path[x] = 0;
    return false;
  };
  return dfs(dfs, u, len);
}

}  // namespace

std::optional<EvenCycle> find_even_short_cycle(const Graph& g) {
  for (int half : {2, 3, 4})
    if (auto cycle = find_cycle_of_length(g, half)) return cycle;
  return std::nullopt;
}

bool edge_closes_even_short_cycle(const Graph& g, int u, int v) {
  for (int len : {3, 5, 7})
    if (exists_path_of_length(g, u, v, len)) return true;
  return false;
}

bool edge_closes_c4(const Graph& g, int u, int v) {
  return exists_path_of_length(g, u, v, 3);
}

bool has_c4(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> common(static_cast<std::size_t>(n), 0);
  for (int u = 0; u < n; ++u) {
    for (int mid : g.adj(u))
      for (int w : g.adj(mid))
        if (w > u && ++common[w] >= 2) return true;
    for (int mid : g.adj(u))
      for (int w : g.adj(mid))
        if (w > u) common[w] = 0;
  }
  return false;
}

}  // namespace graphpack
