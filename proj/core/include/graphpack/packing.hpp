#pragma once

#include <utility>
#include <vector>

#include "graphpack/graph.hpp"

namespace graphpack {

/// Permutation of labels applied to the red graph: red vertex v carries label
/// perm[v]. The blue graph keeps the identity labelling. An inverse index is
/// maintained for O(1) label -> vertex lookups.
class Labelling {
 public:
  Labelling() = default;
  static Labelling identity(int n);
  /// Throws std::invalid_argument unless perm is a bijection on {0..n-1}.
  explicit Labelling(std::vector<int> perm);

  int size() const { return static_cast<int>(perm_.size()); }
  int label_of(int vertex) const { return perm_[vertex]; }
  int vertex_of(int label) const { return inv_[label]; }
  const std::vector<int>& perm() const { return perm_; }

  /// Reassigns vertex `vertex` the label `label`, keeping the inverse index in
  /// sync. Only valid as part of a sequence of moves that restores bijectivity
  /// (the swap engine uses it cycle-wise).
  void rebind(int vertex, int label) {
    perm_[vertex] = label;
    inv_[label] = vertex;
  }

  bool operator==(const Labelling& other) const { return perm_ == other.perm_; }

 private:
  std::vector<int> perm_;
  std::vector<int> inv_;
};

/// Ordered pair (blue G1, red G2) on a shared ground set, normalized so that
/// delta1 >= delta2. When the inputs arrive in the other order the roles are
/// swapped and roles_swapped records it.
class PackingInstance {
 public:
  PackingInstance(Graph blue, Graph red);

  const Graph& blue() const { return blue_; }
  const Graph& red() const { return red_; }
  int n() const { return blue_.vertex_count(); }
  int delta1() const { return blue_.max_degree(); }
  int delta2() const { return red_.max_degree(); }
  bool roles_swapped() const { return roles_swapped_; }

  /// Red adjacency viewed through a labelling: labels adjacent to label i.
  std::vector<int> red_label_neighbors(const Labelling& lab, int label) const;
  bool red_label_edge(const Labelling& lab, int a, int b) const {
    return red_.has_edge(lab.vertex_of(a), lab.vertex_of(b));
  }
  /// Purple test for a label pair: blue edge that is also a relabelled red edge.
  bool is_purple(const Labelling& lab, int a, int b) const {
    return blue_.has_edge(a, b) && red_label_edge(lab, a, b);
  }

 private:
  Graph blue_;
  Graph red_;
  bool roles_swapped_ = false;
};

struct PurpleReport {
  std::vector<std::pair<int, int>> purple_edges;  // sorted (u < v) pairs
  int count = 0;
  int max_purple_degree = 0;
};

PurpleReport purple_report(const PackingInstance& inst, const Labelling& lab);

bool is_packing(const PackingInstance& inst, const Labelling& lab);

/// Numeric side conditions from the packing literature, evaluated exactly.
struct ConditionProfile {
  bool bec = false;            // (delta1+1)(delta2+1) <= n+1
  bool sauer_spencer = false;  // 2*delta1*delta2 < n
  bool girth_ok_blue = false;  // blue has no 4-, 6- or 8-cycle
  bool girth_ok_red = false;
  bool thm12_degree_ok = false;  // delta1 >= 940060 or delta2 >= 27620
  bool thm13_applicable = false;  // blue C4-free and delta1 > 34*delta2
};

ConditionProfile condition_profile(const PackingInstance& inst);

/// Headline degree thresholds for the even-girth packing condition; t = 15
/// in `thresholds()` reproduces them.
inline constexpr long long kDelta1Threshold = 940060;
inline constexpr long long kDelta2Threshold = 27620;

}  // namespace graphpack
