#include <doctest.h>

#include <algorithm>
#include <array>

#include "cyclord/error.hpp"
#include "cyclord/hypergraph.hpp"
#include "test_util.hpp"

using namespace cyclord;
using testing_util::oriented;
using testing_util::unoriented;

TEST_CASE("canonical oriented triple") {
  CHECK(canonical_oriented_triple(1, 2, 3) == OrientedTriple{{1, 2, 3}, Orientation::Forward});
  CHECK(canonical_oriented_triple(2, 4, 1) == OrientedTriple{{1, 2, 4}, Orientation::Forward});
  CHECK(canonical_oriented_triple(4, 2, 1) == OrientedTriple{{1, 2, 4}, Orientation::Backward});
  CHECK(canonical_oriented_triple(3, 2, 4) == OrientedTriple{{2, 3, 4}, Orientation::Backward});
  CHECK_THROWS_AS(canonical_oriented_triple(1, 1, 2), Error);
}

TEST_CASE("rotations agree and reversal flips, all orderings of every 3-set in [6]") {
  for (Vertex a = 1; a <= 6; ++a)
    for (Vertex b = a + 1; b <= 6; ++b)
      for (Vertex c = b + 1; c <= 6; ++c) {
        std::array<Vertex, 3> p{a, b, c};
        do {
          const auto t = canonical_oriented_triple(p[0], p[1], p[2]);
          CHECK(t == canonical_oriented_triple(p[1], p[2], p[0]));
          CHECK(t == canonical_oriented_triple(p[2], p[0], p[1]));
          const auto r = canonical_oriented_triple(p[2], p[1], p[0]);
          CHECK(r.support == t.support);
          CHECK(r.orientation == flip(t.orientation));
        } while (std::next_permutation(p.begin(), p.end()));
      }
}

TEST_CASE("triple index is a lexicographic ranking") {
  const auto& idx = TripleIndex::of(5);
  REQUIRE(idx.size() == 10);
  for (int i = 0; i + 1 < idx.size(); ++i) CHECK(idx.triple(i) < idx.triple(i + 1));
  CHECK(idx.index(3, 1, 2) == 0);
  CHECK(idx.index(5, 4, 3) == 9);
  CHECK(idx.quadruples().size() == 5);
  CHECK_THROWS_AS(TripleIndex::of(kMaxVertices + 1), Error);
}

TEST_CASE("build_tt") {
  CHECK(build_tt(3).edges() == std::vector<OrientedTriple>{{{1, 2, 3}, Orientation::Forward}});
  for (int n : {4, 5}) {
    const auto tt = build_tt(n);
    CHECK(tt.edge_count() == static_cast<int>(binomial(n, 3)));
    CHECK(tt.is_tt_embedded());
    CHECK(tt.is_complete());
  }
  CHECK_THROWS_AS(build_tt(2), Error);
}

TEST_CASE("complement inside TT_n") {
  CHECK(complement_in_tt(oriented(4, {"124F", "134F"})) == oriented(4, {"123F", "234F"}));
  CHECK(complement_in_tt(build_tt(4)) == OrientedThreeHypergraph(4));
  try {
    complement_in_tt(oriented(3, {"123B"}));
    FAIL("expected NotTTEmbedded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotTTEmbedded);
  }

  // involution, edge counts and commuting with induced_sub, over every subset of TT_5
  const std::array<Vertex, 3> s{1, 3, 5};
  for (int mask = 0; mask < 1024; ++mask) {
    OrientedThreeHypergraph h(5);
    for (int i = 0; i < 10; ++i) {
      if ((mask >> i) & 1) h.set_state_at(i, EdgeState::Forward);
    }
    const auto c = complement_in_tt(h);
    CHECK(complement_in_tt(c) == h);
    CHECK(h.edge_count() + c.edge_count() == 10);
    CHECK(complement_in_tt(induced_sub(h, s)) == induced_sub(c, s));
  }
}

TEST_CASE("unoriented complement") {
  CHECK(complement_unoriented(unoriented(4, {"123", "234"})) == unoriented(4, {"124", "134"}));
  CHECK(complement_unoriented(UnorientedThreeHypergraph(4)).edge_count() == 4);
  for (int mask = 0; mask < 1024; mask += 7) {
    UnorientedThreeHypergraph h(5);
    for (int i = 0; i < 10; ++i) h.set_at(i, (mask >> i) & 1);
    CHECK(complement_unoriented(complement_unoriented(h)) == h);
  }
}

TEST_CASE("induced subhypergraph") {
  const std::array<Vertex, 3> odd{1, 3, 5};
  CHECK(induced_sub(build_tt(5), odd) == build_tt(3));
  const std::array<Vertex, 3> s{1, 2, 4};
  CHECK(induced_sub(oriented(4, {"124F", "134F", "123F"}), s) == oriented(3, {"123F"}));
  const std::array<Vertex, 2> pair{1, 2};
  const auto small = induced_sub(build_tt(5), pair);
  CHECK(small.vertex_count() == 2);
  CHECK(small.edge_count() == 0);
  // Backward edges keep their orientation under the order-preserving relabeling.
  const std::array<Vertex, 3> top{2, 3, 4};
  CHECK(induced_sub(oriented(4, {"234B"}), top) == oriented(3, {"123B"}));
}

TEST_CASE("isomorphism") {
  const auto tt4 = build_tt(4);
  const auto other = oriented(4, {"123F", "124F", "134B", "234B"});
  const auto w = find_isomorphism(tt4, other);
  REQUIRE(w);
  CHECK(relabel(tt4, *w) == other);
  CHECK(are_isomorphic(oriented(3, {"123F"}), oriented(3, {"123B"})));
  CHECK_FALSE(are_isomorphic(oriented(4, {"123F"}), oriented(4, {"123F", "124F"})));
  const auto self = find_isomorphism(other, other);
  REQUIRE(self);
  CHECK(*self == VertexMap{1, 2, 3, 4});
  CHECK_THROWS_AS(are_isomorphic(build_tt(3), build_tt(4)), Error);
  CHECK_THROWS_AS(are_isomorphic(build_tt(9), build_tt(9)), Error);
}

TEST_CASE("isomorphism is an equivalence on n = 4, matching canonical codes") {
  std::vector<OrientedThreeHypergraph> all;
  for (int c = 0; c < 81; ++c) {
    std::string code;
    for (int j = 3, x = c; j >= 0; --j, x /= 3) code.insert(code.begin(), static_cast<char>('0' + x % 3));
    all.push_back(OrientedThreeHypergraph::from_code(4, code));
  }
  std::vector<std::string> canon;
  for (const auto& h : all) canon.push_back(canonical_code(h));
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(are_isomorphic(all[i], all[i]));
    for (std::size_t j = 0; j < all.size(); ++j) {
      const auto w = find_isomorphism(all[i], all[j]);
      CHECK(w.has_value() == (canon[i] == canon[j]));
      CHECK(w.has_value() == are_isomorphic(all[j], all[i]));
      if (w) CHECK(relabel(all[i], *w) == all[j]);
    }
  }
}

TEST_CASE("codes round-trip") {
  const auto h = oriented(5, {"125B", "134F", "345B"});
  CHECK(OrientedThreeHypergraph::from_code(5, h.code()) == h);
  CHECK_THROWS_AS(OrientedThreeHypergraph::from_code(4, "0123"), Error);
  CHECK_THROWS_AS(OrientedThreeHypergraph::from_code(4, "012"), Error);
  const auto u = unoriented(5, {"125", "345"});
  CHECK(UnorientedThreeHypergraph::from_code(5, u.code()) == u);
}
