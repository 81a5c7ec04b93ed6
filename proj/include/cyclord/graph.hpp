#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cyclord/hypergraph.hpp"

namespace cyclord {

using Arc = std::pair<Vertex, Vertex>;

/// Oriented graph on [m]; at most one of (u, w), (w, u) is an arc.
class OrientedGraph {
 public:
  explicit OrientedGraph(int m);
  OrientedGraph(int m, std::span<const Arc> arcs);

  int vertex_count() const noexcept { return m_; }
  bool has_arc(Vertex u, Vertex w) const noexcept {
    return adjacency_[static_cast<std::size_t>((u - 1) * m_ + (w - 1))] != 0;
  }
  /// Throws Degenerate for loops/out-of-range ends, AsymmetryViolation if the reverse arc exists.
  void add_arc(Vertex u, Vertex w);
  /// Arcs sorted lexicographically.
  std::vector<Arc> arcs() const;

  friend bool operator==(const OrientedGraph&, const OrientedGraph&) = default;

 private:
  int m_;
  std::vector<std::uint8_t> adjacency_;
};

/// A linear ordering of [m] as the sequence psi(1), ..., psi(m).
struct LinearPermutation {
  std::vector<Vertex> seq;

  /// Throws Degenerate unless `seq` is a permutation of [seq.size()].
  static LinearPermutation of(std::vector<Vertex> seq);
  friend bool operator==(const LinearPermutation&, const LinearPermutation&) = default;
};

/// Arcs (u, w) for every edge rotating to (v u w); the remaining vertices are
/// relabeled order-preservingly onto [n - 1].
OrientedGraph link_of(const OrientedThreeHypergraph& h, Vertex v);

struct GraphTransitivityViolation {
  Vertex a = 0;
  Vertex b = 0;
  Vertex c = 0;
};

/// First (a, b, c) with arcs (a, b), (b, c) but no (a, c).
std::optional<GraphTransitivityViolation> find_graph_transitivity_violation(const OrientedGraph& g);

inline bool graph_is_transitive(const OrientedGraph& g) { return !find_graph_transitivity_violation(g); }

/// Arcs all ascend, and both G and {(u, w) : u < w, (u, w) not an arc} are transitive.
bool graph_is_self_transitive(const OrientedGraph& g);

/// The permutation whose non-inversion graph is G. Throws NotSelfTransitive.
LinearPermutation linear_perm_from_graph(const OrientedGraph& g);

/// Non-inversions: arcs (i, j) with i < j and i placed before j.
OrientedGraph graph_of_linear_perm(const LinearPermutation& psi);

}  // namespace cyclord
