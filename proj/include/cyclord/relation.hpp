#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cyclord/hypergraph.hpp"

namespace cyclord {

/// Raw ternary relation as listed by a user; may violate any axiom.
struct TernaryRelation {
  int n = 0;
  std::vector<std::array<Vertex, 3>> triples;
};

/// Collapses rotation classes to oriented edges. Throws Degenerate for a
/// repeated or out-of-range vertex and AsymmetryViolation when a 3-set is
/// listed in both orientations.
OrientedThreeHypergraph normalize_relation(const TernaryRelation& relation);

/// All three rotations of every edge, i.e. the relation T with O(H).
TernaryRelation rotation_closure(const OrientedThreeHypergraph& h);

/// Instance of (u v z), (z v w) in O(H) whose consequence (u v w) fails.
struct TransitivityViolation {
  Vertex u = 0;
  Vertex v = 0;
  Vertex z = 0;
  Vertex w = 0;
  /// State of {u, v, w}: Absent, or present with the opposite orientation.
  EdgeState consequence = EdgeState::Absent;

  friend bool operator==(const TransitivityViolation&, const TransitivityViolation&) = default;
};

/// First violation of the pair rule under the scan order u, v, z, w ascending.
std::optional<TransitivityViolation> find_transitivity_violation(const OrientedThreeHypergraph& h);

inline bool is_transitive_pair_rule(const OrientedThreeHypergraph& h) {
  return !find_transitivity_violation(h).has_value();
}

/// Same verdict, computed one induced 4-vertex subhypergraph at a time.
bool is_transitive_quadruple_local(const OrientedThreeHypergraph& h);

/// 4-subsets of [n] inducing an odd number of edges, lexicographic order.
std::vector<std::array<Vertex, 4>> evenness_violations(const OrientedThreeHypergraph& h);

struct SelfTransitivityReport {
  bool tt_embedded = false;
  bool transitive = false;
  bool complement_transitive = false;
  std::optional<TransitivityViolation> violation;
  std::optional<TransitivityViolation> complement_violation;

  bool self_transitive() const noexcept { return tt_embedded && transitive && complement_transitive; }
};

SelfTransitivityReport self_transitivity_report(const OrientedThreeHypergraph& h);

inline bool is_self_transitive(const OrientedThreeHypergraph& h) {
  return self_transitivity_report(h).self_transitive();
}

/// A diagnostic attached to an AxiomReport.
struct AxiomViolation {
  enum class Kind { Degenerate, Asymmetry, Transitivity, Missing };
  Kind kind;
  /// Degenerate/Asymmetry/Missing: the triple involved. Transitivity: (u v z w).
  std::vector<Vertex> vertices;
  std::string message;
};

struct AxiomReport {
  bool is_cyclic_consistent = false;
  bool is_asymmetric = false;
  bool is_transitive = false;
  bool is_total = false;
  std::vector<AxiomViolation> violations;

  bool is_partial_cyclic_order() const noexcept { return is_cyclic_consistent && is_asymmetric && is_transitive; }
  bool is_complete_cyclic_order() const noexcept { return is_partial_cyclic_order() && is_total; }
};

/// Never throws on malformed relations; every problem becomes a flag plus a
/// violation entry. Transitivity and totality are evaluated only once the
/// triples form a well-defined oriented hypergraph.
AxiomReport axiom_report(const TernaryRelation& relation);

}  // namespace cyclord
