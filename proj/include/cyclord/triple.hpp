#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

namespace cyclord {

/// Vertices are 1-based, `1 <= v <= n` of the enclosing structure.
using Vertex = int;

/// Largest vertex count any structure in the library accepts.
inline constexpr int kMaxVertices = 12;

/// The two cyclic classes of a 3-set {a < b < c}: Forward is the class of
/// (a b c), Backward the class of (a c b).
enum class Orientation : std::uint8_t { Forward, Backward };

constexpr Orientation flip(Orientation o) noexcept {
  return o == Orientation::Forward ? Orientation::Backward : Orientation::Forward;
}

/// Unordered 3-set, stored ascending.
struct Triple {
  Vertex a = 0;
  Vertex b = 0;
  Vertex c = 0;

  /// Sorts the arguments; throws Degenerate if two coincide.
  static Triple of(Vertex x, Vertex y, Vertex z);

  bool contains(Vertex v) const noexcept { return a == v || b == v || c == v; }
  std::array<Vertex, 3> vertices() const noexcept { return {a, b, c}; }

  friend auto operator<=>(const Triple&, const Triple&) = default;
};

struct OrientedTriple {
  Triple support;
  Orientation orientation = Orientation::Forward;

  /// Canonical rotation: (a b c) for Forward, (a c b) for Backward.
  std::array<Vertex, 3> cyclic_sequence() const noexcept;

  friend auto operator<=>(const OrientedTriple&, const OrientedTriple&) = default;
};

/// Rotation class of the ordered triple (a b c). All three rotations give the
/// same value and the reversal flips the orientation.
OrientedTriple canonical_oriented_triple(Vertex a, Vertex b, Vertex c);

/// Orientation of (a b c) relative to its ascending rotation. Arguments must
/// be pairwise distinct; not checked.
constexpr Orientation orientation_of(Vertex a, Vertex b, Vertex c) noexcept {
  const int inversions = (a > b) + (a > c) + (b > c);
  return inversions % 2 == 0 ? Orientation::Forward : Orientation::Backward;
}

constexpr std::uint64_t binomial(int n, int k) noexcept {
  if (k < 0 || n < k) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

/// Lexicographic ranking of the 3-subsets of [n]. One shared immutable table
/// per n; safe to use from any thread.
class TripleIndex {
 public:
  static const TripleIndex& of(int n);

  int vertex_count() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(triples_.size()); }

  /// Rank of {x, y, z} in any argument order. Arguments must be distinct and in [1, n].
  int index(Vertex x, Vertex y, Vertex z) const noexcept {
    return table_[static_cast<std::size_t>((x * stride_ + y) * stride_ + z)];
  }
  int index(const Triple& t) const noexcept { return index(t.a, t.b, t.c); }

  const Triple& triple(int i) const noexcept { return triples_[static_cast<std::size_t>(i)]; }
  const std::vector<Triple>& triples() const noexcept { return triples_; }

  /// 4-subsets of [n] in lexicographic order.
  const std::vector<std::array<Vertex, 4>>& quadruples() const noexcept { return quadruples_; }

 private:
  explicit TripleIndex(int n);

  int n_;
  int stride_;
  std::vector<std::int16_t> table_;
  std::vector<Triple> triples_;
  std::vector<std::array<Vertex, 4>> quadruples_;
};

}  // namespace cyclord
