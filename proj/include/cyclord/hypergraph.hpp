#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cyclord/triple.hpp"

namespace cyclord {

/// Per-3-set state of an oriented 3-hypergraph. The numeric values are the
/// digits of the edge code.
enum class EdgeState : std::uint8_t { Absent = 0, Forward = 1, Backward = 2 };

constexpr EdgeState to_state(Orientation o) noexcept {
  return o == Orientation::Forward ? EdgeState::Forward : EdgeState::Backward;
}

class UnorientedThreeHypergraph;

/// Vertex count plus a state for every 3-subset of [n]. At most one
/// orientation per 3-set by construction.
class OrientedThreeHypergraph {
 public:
  explicit OrientedThreeHypergraph(int n);
  OrientedThreeHypergraph(int n, std::span<const OrientedTriple> edges);

  /// Inverse of code(); throws ParseError on a malformed code.
  static OrientedThreeHypergraph from_code(int n, std::string_view code);

  int vertex_count() const noexcept { return n_; }
  const TripleIndex& index() const noexcept { return *index_; }

  EdgeState state_at(int i) const noexcept { return states_[static_cast<std::size_t>(i)]; }
  EdgeState state(const Triple& t) const { return state_at(checked_index(t)); }
  std::optional<Orientation> orientation(const Triple& t) const;

  /// True iff the rotation class of (a b c) is an edge. Unchecked; a, b, c
  /// must be distinct vertices of [n].
  bool has_ordered(Vertex a, Vertex b, Vertex c) const noexcept {
    const EdgeState s = states_[static_cast<std::size_t>(index_->index(a, b, c))];
    return s != EdgeState::Absent && s == to_state(orientation_of(a, b, c));
  }

  void set(const OrientedTriple& e) { states_[static_cast<std::size_t>(checked_index(e.support))] = to_state(e.orientation); }
  void set_state_at(int i, EdgeState s) noexcept { states_[static_cast<std::size_t>(i)] = s; }
  void erase(const Triple& t) { states_[static_cast<std::size_t>(checked_index(t))] = EdgeState::Absent; }

  int edge_count() const noexcept;
  /// Present edges in lexicographic support order.
  std::vector<OrientedTriple> edges() const;
  /// Every present edge is Forward, i.e. a spanning subhypergraph of TT_n.
  bool is_tt_embedded() const noexcept;
  /// Every 3-set is oriented.
  bool is_complete() const noexcept;
  UnorientedThreeHypergraph support() const;

  /// One digit per 3-set in lexicographic order: '0' absent, '1' Forward, '2' Backward.
  std::string code() const;

  friend bool operator==(const OrientedThreeHypergraph&, const OrientedThreeHypergraph&) = default;

 private:
  int checked_index(const Triple& t) const;

  int n_;
  const TripleIndex* index_;
  std::vector<EdgeState> states_;
};

class UnorientedThreeHypergraph {
 public:
  explicit UnorientedThreeHypergraph(int n);
  UnorientedThreeHypergraph(int n, std::span<const Triple> edges);

  /// Digits '0'/'1' per 3-set in lexicographic order.
  static UnorientedThreeHypergraph from_code(int n, std::string_view code);

  int vertex_count() const noexcept { return n_; }
  const TripleIndex& index() const noexcept { return *index_; }

  bool contains_at(int i) const noexcept { return present_[static_cast<std::size_t>(i)] != 0; }
  bool contains(const Triple& t) const;
  void insert(const Triple& t);
  void set_at(int i, bool present) noexcept { present_[static_cast<std::size_t>(i)] = present ? 1 : 0; }

  int edge_count() const noexcept;
  std::vector<Triple> edges() const;
  std::string code() const;

  friend bool operator==(const UnorientedThreeHypergraph&, const UnorientedThreeHypergraph&) = default;

 private:
  int checked_index(const Triple& t) const;

  int n_;
  const TripleIndex* index_;
  std::vector<std::uint8_t> present_;
};

/// TT_n: every 3-set oriented by the cyclic ordering (1 2 ... n).
OrientedThreeHypergraph build_tt(int n);

/// O(TT_n) minus O(H). Throws NotTTEmbedded if H has a Backward edge.
OrientedThreeHypergraph complement_in_tt(const OrientedThreeHypergraph& h);

UnorientedThreeHypergraph complement_unoriented(const UnorientedThreeHypergraph& h);

/// Edges with support inside `subset`, relabeled by the order-preserving
/// bijection subset -> [|subset|]. Duplicates in `subset` are ignored.
OrientedThreeHypergraph induced_sub(const OrientedThreeHypergraph& h, std::span<const Vertex> subset);

/// Vertex map as a sequence: mapping[v - 1] is the image of v.
using VertexMap = std::vector<Vertex>;

/// Image of H under a bijection of [n]; orientations are carried along.
OrientedThreeHypergraph relabel(const OrientedThreeHypergraph& h, std::span<const Vertex> mapping);
UnorientedThreeHypergraph relabel(const UnorientedThreeHypergraph& h, std::span<const Vertex> mapping);

inline constexpr int kDefaultIsomorphismBound = 8;

/// A bijection mapping O(h1) onto O(h2), found by backtracking over vertex
/// images with degree pruning. Throws SizeMismatch / CapExceeded.
std::optional<VertexMap> find_isomorphism(const OrientedThreeHypergraph& h1,
                                          const OrientedThreeHypergraph& h2,
                                          int max_vertices = kDefaultIsomorphismBound);

inline bool are_isomorphic(const OrientedThreeHypergraph& h1, const OrientedThreeHypergraph& h2,
                           int max_vertices = kDefaultIsomorphismBound) {
  return find_isomorphism(h1, h2, max_vertices).has_value();
}

/// Lexicographically minimal code over all vertex bijections.
std::string canonical_code(const OrientedThreeHypergraph& h, int max_vertices = kDefaultIsomorphismBound);
std::string canonical_code(const UnorientedThreeHypergraph& h, int max_vertices = kDefaultIsomorphismBound);

}  // namespace cyclord
