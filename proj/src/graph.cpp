#include "cyclord/graph.hpp"

#include <algorithm>
#include <string>

#include "cyclord/error.hpp"

namespace cyclord {

OrientedGraph::OrientedGraph(int m) : m_(m) {
  if (m < 0) throw Error(ErrorKind::InvalidSize, "negative vertex count");
  adjacency_.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0);
}

OrientedGraph::OrientedGraph(int m, std::span<const Arc> arcs) : OrientedGraph(m) {
  for (const auto& [u, w] : arcs) add_arc(u, w);
}

void OrientedGraph::add_arc(Vertex u, Vertex w) {
  if (u == w || u < 1 || w < 1 || u > m_ || w > m_) {
    throw Error(ErrorKind::Degenerate, "arc (" + std::to_string(u) + "," + std::to_string(w) + ") invalid on [" +
                                           std::to_string(m_) + "]");
  }
  if (has_arc(w, u)) {
    throw Error(ErrorKind::AsymmetryViolation, "arcs in both directions between " + std::to_string(u) + " and " +
                                                   std::to_string(w));
  }
  adjacency_[static_cast<std::size_t>((u - 1) * m_ + (w - 1))] = 1;
}

std::vector<Arc> OrientedGraph::arcs() const {
  std::vector<Arc> out;
  for (Vertex u = 1; u <= m_; ++u) {
    for (Vertex w = 1; w <= m_; ++w) {
      if (u != w && has_arc(u, w)) out.emplace_back(u, w);
    }
  }
  return out;
}

LinearPermutation LinearPermutation::of(std::vector<Vertex> seq) {
  std::vector<bool> seen(seq.size() + 1, false);
  for (Vertex v : seq) {
    if (v < 1 || v > static_cast<Vertex>(seq.size()) || seen[static_cast<std::size_t>(v)]) {
      throw Error(ErrorKind::Degenerate, "sequence is not a permutation of [" + std::to_string(seq.size()) + "]");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  return LinearPermutation{std::move(seq)};
}

OrientedGraph link_of(const OrientedThreeHypergraph& h, Vertex v) {
  const int n = h.vertex_count();
  if (v < 1 || v > n) throw Error(ErrorKind::Degenerate, "vertex " + std::to_string(v) + " outside [" + std::to_string(n) + "]");
  OrientedGraph g(n - 1);
  const auto local = [v](Vertex x) { return x < v ? x : x - 1; };
  for (const auto& e : h.edges()) {
    if (!e.support.contains(v)) continue;
    auto seq = e.cyclic_sequence();
    std::rotate(seq.begin(), std::find(seq.begin(), seq.end(), v), seq.end());
    g.add_arc(local(seq[1]), local(seq[2]));
  }
  return g;
}

std::optional<GraphTransitivityViolation> find_graph_transitivity_violation(const OrientedGraph& g) {
  const int m = g.vertex_count();
  for (Vertex a = 1; a <= m; ++a) {
    for (Vertex b = 1; b <= m; ++b) {
      if (b == a || !g.has_arc(a, b)) continue;
      for (Vertex c = 1; c <= m; ++c) {
        if (c == a || c == b || !g.has_arc(b, c)) continue;
        if (!g.has_arc(a, c)) return GraphTransitivityViolation{a, b, c};
      }
    }
  }
  return std::nullopt;
}

bool graph_is_self_transitive(const OrientedGraph& g) {
  const int m = g.vertex_count();
  OrientedGraph complement(m);
  for (Vertex u = 1; u <= m; ++u) {
    for (Vertex w = 1; w <= m; ++w) {
      if (u == w) continue;
      if (g.has_arc(u, w) && u > w) return false;
      if (u < w && !g.has_arc(u, w)) complement.add_arc(u, w);
    }
  }
  return graph_is_transitive(g) && graph_is_transitive(complement);
}

LinearPermutation linear_perm_from_graph(const OrientedGraph& g) {
  if (!graph_is_self_transitive(g)) throw Error(ErrorKind::NotSelfTransitive, "link graph is not self-transitive");
  const int m = g.vertex_count();
  // i precedes j iff (i < j and (i, j) is an arc) or (i > j and (j, i) is not).
  const auto precedes = [&g](Vertex i, Vertex j) { return i < j ? g.has_arc(i, j) : !g.has_arc(j, i); };
  std::vector<int> predecessors(static_cast<std::size_t>(m) + 1, 0);
  for (Vertex i = 1; i <= m; ++i) {
    for (Vertex j = 1; j <= m; ++j) {
      if (i != j && precedes(j, i)) ++predecessors[static_cast<std::size_t>(i)];
    }
  }
  std::vector<Vertex> seq(static_cast<std::size_t>(m), 0);
  for (Vertex i = 1; i <= m; ++i) {
    auto& slot = seq[static_cast<std::size_t>(predecessors[static_cast<std::size_t>(i)])];
    if (slot != 0) throw Error(ErrorKind::NotSelfTransitive, "precedence relation is not a total order");
    slot = i;
  }
  LinearPermutation psi{std::move(seq)};
  if (graph_of_linear_perm(psi) != g) {
    throw Error(ErrorKind::NotSelfTransitive, "sorted order does not reproduce the graph");
  }
  return psi;
}

OrientedGraph graph_of_linear_perm(const LinearPermutation& psi) {
  const int m = static_cast<int>(psi.seq.size());
  OrientedGraph g(m);
  for (int p = 0; p < m; ++p) {
    for (int q = p + 1; q < m; ++q) {
      const Vertex i = psi.seq[static_cast<std::size_t>(p)];
      const Vertex j = psi.seq[static_cast<std::size_t>(q)];
      if (i < j) g.add_arc(i, j);
    }
  }
  return g;
}

}  // namespace cyclord
