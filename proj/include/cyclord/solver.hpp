#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cyclord/cyclic_permutation.hpp"
#include "cyclord/hypergraph.hpp"

namespace cyclord {

/// Budgets for the exponential searches. CapExceeded is raised when one is hit.
struct SearchLimits {
  std::uint64_t max_decisions = 1'000'000;
  std::size_t max_orientations = 10'000;
  int max_isomorphism_vertices = kDefaultIsomorphismBound;
  int max_exact_vertices = 10;

  /// Defaults, with both count caps replaced by $CYCLORD_CAP when it is set
  /// to a positive integer.
  static SearchLimits from_environment();
};

struct SolverStats {
  std::uint64_t decisions = 0;
  std::uint64_t propagations = 0;
  std::uint64_t conflicts = 0;
};

/// Backtracking search for transitive orientations of an unoriented
/// 3-hypergraph. Each edge is a two-valued variable (Forward/Backward); every
/// instance of (u v z), (z v w) inside a 4-set becomes a clause forbidding
/// the pair unless (u v w) is an edge with that orientation. Branching runs
/// over edges in lexicographic order, Forward first.
///
/// Not thread-safe; use one instance per thread.
class OrientationSolver {
 public:
  explicit OrientationSolver(const UnorientedThreeHypergraph& h, SearchLimits limits = {});

  /// First transitive orientation in search order.
  std::optional<OrientedThreeHypergraph> find();

  struct Enumeration {
    std::vector<OrientedThreeHypergraph> orientations;
    bool truncated = false;
  };
  /// All transitive orientations in search order, stopping after `cap`.
  Enumeration enumerate(std::size_t cap);

  const SolverStats& stats() const noexcept { return stats_; }
  std::size_t clause_count() const noexcept { return clauses_.size(); }

 private:
  using Literal = int;  // 2 * var + (1 if Backward)

  struct Level {
    int var;
    std::size_t trail_size;
    bool flipped;
  };

  void build_clauses();
  bool assign(Literal lit);
  bool propagate();
  void undo_to(std::size_t trail_size);
  bool backtrack();
  bool search();
  void reset();
  OrientedThreeHypergraph current() const;
  bool value_true(Literal lit) const noexcept;

  UnorientedThreeHypergraph h_;
  SearchLimits limits_;
  SolverStats stats_;
  std::vector<int> var_triple_;  // var -> triple index
  std::vector<int> triple_var_;  // triple index -> var or -1
  std::vector<std::vector<Literal>> clauses_;
  std::vector<std::vector<int>> watchers_;  // literal -> clauses containing its negation
  std::vector<std::int8_t> value_;           // -1 unset, 0 Forward, 1 Backward
  std::vector<Literal> trail_;
  std::size_t queue_head_ = 0;
  std::vector<Level> levels_;
  bool started_ = false;
};

struct OrientationResult {
  std::optional<OrientedThreeHypergraph> orientation;
  SolverStats stats;
};

/// Result always passes the pair rule; a failing self-check raises InternalContradiction.
OrientationResult find_transitive_orientation(const UnorientedThreeHypergraph& h, SearchLimits limits = {});

OrientationSolver::Enumeration enumerate_transitive_orientations(const UnorientedThreeHypergraph& h,
                                                                 std::size_t cap = SearchLimits{}.max_orientations,
                                                                 SearchLimits limits = {});

struct UnionCheck {
  OrientedThreeHypergraph merged;
  /// Transitive, hence the unique transitive hypertournament up to isomorphism.
  bool is_tt = false;
};

/// Merges orientations with complementary supports. Throws SizeMismatch,
/// SupportOverlap or SupportIncomplete.
UnionCheck union_check_tt(const OrientedThreeHypergraph& a, const OrientedThreeHypergraph& b);

struct PermutationHypergraphResult {
  bool is_permutation_hypergraph = false;
  bool comparability = false;
  bool complement_comparability = false;
  /// phi with H isomorphic to the support of H_[phi], when positive.
  std::optional<CyclicPermutation> witness;
  /// Vertex map sending H onto the support of H_[witness].
  std::optional<VertexMap> relabeling;
};

/// Decides whether H and its complement both admit transitive orientations;
/// when they do, builds and verifies a witness cyclic permutation.
PermutationHypergraphResult is_cyclic_permutation_hypergraph(const UnorientedThreeHypergraph& h,
                                                             SearchLimits limits = {});

}  // namespace cyclord
