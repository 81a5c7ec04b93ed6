#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cyclord/cyclic_permutation.hpp"
#include "cyclord/solver.hpp"

namespace cyclord {

/// The unique cyclic ordering inducing every edge of a complete transitive
/// oriented 3-hypergraph: the link of vertex 1 is a transitive tournament and
/// its topological order follows 1. Throws NotHypertournament / NotTransitive.
CyclicPermutation hypertournament_to_cyclic_ordering(const OrientedThreeHypergraph& h);

enum class ExtensionVerdict { Witness, Inconclusive, NotExtendable };

struct Extension {
  ExtensionVerdict verdict = ExtensionVerdict::Inconclusive;
  std::optional<CyclicPermutation> witness;
  /// Number of inducing orderings, when counting was requested.
  std::optional<std::uint64_t> witness_count;
};

/// True iff phi orients every edge of t the way t does.
bool induces_all(const CyclicPermutation& phi, const OrientedThreeHypergraph& t);

/// Sufficient test: orient the complementary 3-sets transitively and read the
/// ordering off the union. Witness or Inconclusive, never NotExtendable.
/// Throws NotTransitive, and InternalContradiction if the union is not a
/// transitive hypertournament.
Extension extend_sufficient(const OrientedThreeHypergraph& t, SearchLimits limits = {});

struct ExactOptions {
  bool count_witnesses = false;
  /// 1 runs the serial scan; more splits the scan by second element.
  int threads = 1;
};

/// Scans all (n - 1)! cyclic orderings in canonical order; the first inducing
/// ordering is the witness. Throws NotTransitive, CapExceeded.
Extension extend_exact(const OrientedThreeHypergraph& t, SearchLimits limits = {}, ExactOptions options = {});

/// Scan kernels behind extend_exact, exposed for tests and benchmarks. No
/// precondition checks.
struct OrderingScan {
  std::optional<std::vector<Vertex>> first;
  std::uint64_t count = 0;

  friend bool operator==(const OrderingScan&, const OrderingScan&) = default;
};
OrderingScan scan_orderings_serial(const OrientedThreeHypergraph& t, bool count_all);
OrderingScan scan_orderings_parallel(const OrientedThreeHypergraph& t, bool count_all, int threads);

}  // namespace cyclord
