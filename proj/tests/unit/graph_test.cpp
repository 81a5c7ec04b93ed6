#include <doctest.h>

#include <numeric>

#include "cyclord/cyclic_permutation.hpp"
#include "cyclord/error.hpp"
#include "cyclord/graph.hpp"
#include "cyclord/relation.hpp"
#include "test_util.hpp"

using namespace cyclord;
using testing_util::oriented;

namespace {

std::vector<Arc> arcs(std::initializer_list<Arc> a) { return std::vector<Arc>(a); }

OrientedGraph full_tournament(int m) {
  OrientedGraph g(m);
  for (Vertex u = 1; u <= m; ++u)
    for (Vertex w = u + 1; w <= m; ++w) g.add_arc(u, w);
  return g;
}

}  // namespace

TEST_CASE("links") {
  const auto h = oriented(4, {"124F", "134F"});
  CHECK(link_of(h, 4).arcs() == arcs({{1, 2}, {1, 3}}));
  CHECK(link_of(h, 1).arcs() == arcs({{1, 3}, {2, 3}}));
  CHECK(link_of(oriented(5, {"123F"}), 5).arcs().empty());
  CHECK(link_of(h, 4).vertex_count() == 3);
  CHECK_THROWS_AS(link_of(h, 5), Error);
}

TEST_CASE("graph transitivity") {
  CHECK_FALSE(graph_is_transitive(OrientedGraph(3, arcs({{1, 2}, {2, 3}}))));
  CHECK(graph_is_transitive(OrientedGraph(3, arcs({{1, 2}, {2, 3}, {1, 3}}))));
  CHECK(graph_is_transitive(OrientedGraph(3)));
  CHECK_THROWS_AS(OrientedGraph(3, arcs({{1, 2}, {2, 1}})), Error);
}

TEST_CASE("graph self-transitivity") {
  CHECK(graph_is_self_transitive(OrientedGraph(3, arcs({{1, 2}, {1, 3}}))));
  CHECK_FALSE(graph_is_self_transitive(OrientedGraph(3, arcs({{2, 1}}))));
  CHECK(graph_is_self_transitive(full_tournament(5)));
  // (1,3) alone: complement {(1,2),(2,3)} lacks (1,3)
  CHECK_FALSE(graph_is_self_transitive(OrientedGraph(3, arcs({{1, 3}}))));
}

TEST_CASE("linear permutation from graph") {
  CHECK(linear_perm_from_graph(OrientedGraph(3, arcs({{1, 2}, {1, 3}}))).seq == std::vector<Vertex>{1, 3, 2});
  CHECK(linear_perm_from_graph(full_tournament(4)).seq == std::vector<Vertex>{1, 2, 3, 4});
  CHECK(linear_perm_from_graph(OrientedGraph(3)).seq == std::vector<Vertex>{3, 2, 1});
  try {
    linear_perm_from_graph(OrientedGraph(3, arcs({{1, 3}})));
    FAIL("expected NotSelfTransitive");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotSelfTransitive);
  }
}

TEST_CASE("graph of a linear permutation") {
  CHECK(graph_of_linear_perm(LinearPermutation::of({1, 3, 2})).arcs() == arcs({{1, 2}, {1, 3}}));
  CHECK(graph_of_linear_perm(LinearPermutation::of({1, 2, 3, 4})) == full_tournament(4));
  CHECK(graph_of_linear_perm(LinearPermutation::of({4, 3, 2, 1})).arcs().empty());
  CHECK_THROWS_AS(LinearPermutation::of({1, 1, 2}), Error);
}

TEST_CASE("permutation graphs round-trip and are self-transitive, m <= 7") {
  for (int m = 1; m <= 7; ++m) {
    std::vector<Vertex> seq(static_cast<std::size_t>(m));
    std::iota(seq.begin(), seq.end(), 1);
    do {
      const auto psi = LinearPermutation::of(seq);
      const auto g = graph_of_linear_perm(psi);
      if (m <= 6) CHECK(graph_is_self_transitive(g));
      CHECK(linear_perm_from_graph(g) == psi);
    } while (std::next_permutation(seq.begin(), seq.end()));
  }
}

TEST_CASE("link of the last vertex of H_[phi] is the permutation graph of psi, n <= 6") {
  for (int n = 3; n <= 6; ++n) {
    std::vector<Vertex> psi(static_cast<std::size_t>(n - 1));
    std::iota(psi.begin(), psi.end(), 1);
    do {
      std::vector<Vertex> seq = psi;
      seq.push_back(n);
      const auto h = hypergraph_of_cyclic_perm(CyclicPermutation(seq));
      const auto link = link_of(h, n);
      CHECK(link == graph_of_linear_perm(LinearPermutation::of(psi)));
      CHECK(graph_is_self_transitive(link));
    } while (std::next_permutation(psi.begin(), psi.end()));
  }
}
