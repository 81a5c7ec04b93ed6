#pragma once

#include <string>
#include <vector>

#include "cyclord/hypergraph.hpp"

namespace cyclord {

/// A cyclic ordering of [n], stored as the rotation that starts at 1.
class CyclicPermutation {
 public:
  /// Any rotation of any bijection [n] -> [n]; throws Degenerate otherwise.
  explicit CyclicPermutation(std::vector<Vertex> sequence);

  static CyclicPermutation identity(int n);

  int size() const noexcept { return static_cast<int>(canonical_.size()); }
  const std::vector<Vertex>& canonical() const noexcept { return canonical_; }
  /// 0-based index of v within the canonical rotation.
  int position(Vertex v) const noexcept { return position_[static_cast<std::size_t>(v)]; }

  /// Orientation the ordering induces on the 3-set t.
  Orientation orientation_of(const Triple& t) const noexcept;

  /// "(a1 a2 ... an)".
  std::string to_string() const;
  /// Accepts "(1 3 2 4)" or "1 3 2 4"; throws ParseError.
  static CyclicPermutation parse(std::string_view text);

  friend bool operator==(const CyclicPermutation& a, const CyclicPermutation& b) { return a.canonical_ == b.canonical_; }
  friend auto operator<=>(const CyclicPermutation& a, const CyclicPermutation& b) { return a.canonical_ <=> b.canonical_; }

 private:
  std::vector<Vertex> canonical_;
  std::vector<int> position_;
};

/// i < j < k appear clockwise: (pos(j) - pos(i)) mod n < (pos(k) - pos(i)) mod n.
/// Throws Degenerate unless i < j < k are vertices of phi.
bool is_clockwise(const CyclicPermutation& phi, Vertex i, Vertex j, Vertex k);

/// H_[phi]: Forward edges on exactly the clockwise 3-sets. Throws InvalidSize for n < 3.
OrientedThreeHypergraph hypergraph_of_cyclic_perm(const CyclicPermutation& phi);

/// Complete hypertournament whose every 3-set carries the orientation phi induces.
OrientedThreeHypergraph hypertournament_of(const CyclicPermutation& phi);

CyclicPermutation reverse_cyclic_perm(const CyclicPermutation& phi);

/// phi with hypergraph_of_cyclic_perm(phi) == h, read off the link of vertex n
/// and verified. Throws NotSelfTransitive.
CyclicPermutation recover_cyclic_perm(const OrientedThreeHypergraph& h);

/// Every cyclic permutation of [n] in canonical order: 1 first, then the
/// remaining vertices in lexicographic sequence.
std::vector<CyclicPermutation> all_cyclic_permutations(int n);

}  // namespace cyclord
