#include "cyclord/extendability.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include <omp.h>

#include "cyclord/error.hpp"
#include "cyclord/relation.hpp"

namespace cyclord {

CyclicPermutation hypertournament_to_cyclic_ordering(const OrientedThreeHypergraph& h) {
  const int n = h.vertex_count();
  if (n < 1) throw Error(ErrorKind::InvalidSize, "empty vertex set");
  if (!h.is_complete()) throw Error(ErrorKind::NotHypertournament, "some 3-set is not oriented");
  if (!is_transitive_pair_rule(h)) throw Error(ErrorKind::NotTransitive, "hypertournament is not transitive");

  // out[x] = #{y : (1 x y) in O(H)}; a transitive tournament has distinct scores.
  std::vector<Vertex> rest(static_cast<std::size_t>(std::max(n - 1, 0)));
  std::iota(rest.begin(), rest.end(), 2);
  std::vector<int> out(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex x : rest) {
    for (Vertex y : rest) {
      if (x != y && h.has_ordered(1, x, y)) ++out[static_cast<std::size_t>(x)];
    }
  }
  std::stable_sort(rest.begin(), rest.end(), [&out](Vertex x, Vertex y) {
    return out[static_cast<std::size_t>(x)] > out[static_cast<std::size_t>(y)];
  });
  std::vector<Vertex> seq{1};
  seq.insert(seq.end(), rest.begin(), rest.end());
  CyclicPermutation phi(std::move(seq));
  if (n >= 3 && hypertournament_of(phi) != h) {
    throw Error(ErrorKind::NotTransitive, "link of vertex 1 is not a transitive tournament");
  }
  return phi;
}

bool induces_all(const CyclicPermutation& phi, const OrientedThreeHypergraph& t) {
  for (const auto& e : t.edges()) {
    if (phi.orientation_of(e.support) != e.orientation) return false;
  }
  return true;
}

namespace {

void require_transitive(const OrientedThreeHypergraph& t) {
  if (const auto v = find_transitivity_violation(t)) {
    throw Error(ErrorKind::NotTransitive, "(" + std::to_string(v->u) + " " + std::to_string(v->v) + " " +
                                              std::to_string(v->z) + ") and (" + std::to_string(v->z) + " " +
                                              std::to_string(v->v) + " " + std::to_string(v->w) +
                                              ") lack their consequence");
  }
}

struct EdgeCheck {
  std::vector<OrientedTriple> edges;
  std::vector<int> position;

  explicit EdgeCheck(const OrientedThreeHypergraph& t)
      : edges(t.edges()), position(static_cast<std::size_t>(t.vertex_count()) + 1, 0) {}

  bool accepts(const std::vector<Vertex>& seq) {
    for (std::size_t p = 0; p < seq.size(); ++p) position[static_cast<std::size_t>(seq[p])] = static_cast<int>(p);
    for (const auto& e : edges) {
      const Orientation o = orientation_of(position[static_cast<std::size_t>(e.support.a)],
                                           position[static_cast<std::size_t>(e.support.b)],
                                           position[static_cast<std::size_t>(e.support.c)]);
      if (o != e.orientation) return false;
    }
    return true;
  }
};

// Orderings starting 1, second, then the rest in lexicographic sequence.
OrderingScan scan_block(const OrientedThreeHypergraph& t, Vertex second, bool count_all) {
  const int n = t.vertex_count();
  std::vector<Vertex> seq{1, second};
  for (Vertex v = 2; v <= n; ++v) {
    if (v != second) seq.push_back(v);
  }
  EdgeCheck check(t);
  OrderingScan scan;
  do {
    if (!check.accepts(seq)) continue;
    if (!scan.first) scan.first = seq;
    ++scan.count;
    if (!count_all) break;
  } while (std::next_permutation(seq.begin() + 2, seq.end()));
  return scan;
}

}  // namespace

OrderingScan scan_orderings_serial(const OrientedThreeHypergraph& t, bool count_all) {
  const int n = t.vertex_count();
  std::vector<Vertex> seq(static_cast<std::size_t>(n));
  std::iota(seq.begin(), seq.end(), 1);
  EdgeCheck check(t);
  OrderingScan scan;
  do {
    if (!check.accepts(seq)) continue;
    if (!scan.first) scan.first = seq;
    ++scan.count;
    if (!count_all) break;
  } while (n > 1 && std::next_permutation(seq.begin() + 1, seq.end()));
  return scan;
}

OrderingScan scan_orderings_parallel(const OrientedThreeHypergraph& t, bool count_all, int threads) {
  const int n = t.vertex_count();
  if (n < 3) return scan_orderings_serial(t, count_all);
  const int blocks = n - 1;
  std::vector<OrderingScan> partial(static_cast<std::size_t>(blocks));
#pragma omp parallel for schedule(dynamic) num_threads(std::max(threads, 1))
  for (int b = 0; b < blocks; ++b) {
    partial[static_cast<std::size_t>(b)] = scan_block(t, b + 2, count_all);
  }
  OrderingScan merged;
  for (auto& p : partial) {
    if (!merged.first && p.first) {
      merged.first = std::move(p.first);
      if (!count_all) {
        merged.count = 1;
        return merged;
      }
    }
    merged.count += p.count;
  }
  return merged;
}

Extension extend_sufficient(const OrientedThreeHypergraph& t, SearchLimits limits) {
  require_transitive(t);
  const auto complement = complement_unoriented(t.support());
  const auto completion = find_transitive_orientation(complement, limits).orientation;
  if (!completion) return {ExtensionVerdict::Inconclusive, std::nullopt, std::nullopt};
  const auto merged = union_check_tt(t, *completion);
  if (!merged.is_tt) {
    throw Error(ErrorKind::InternalContradiction, "T = " + t.code() + " with completion " + completion->code() +
                                                      " is not a transitive hypertournament");
  }
  CyclicPermutation phi = hypertournament_to_cyclic_ordering(merged.merged);
  if (!induces_all(phi, t)) {
    throw Error(ErrorKind::InternalContradiction, "ordering " + phi.to_string() + " misses an edge of " + t.code());
  }
  return {ExtensionVerdict::Witness, std::move(phi), std::nullopt};
}

Extension extend_exact(const OrientedThreeHypergraph& t, SearchLimits limits, ExactOptions options) {
  require_transitive(t);
  if (t.vertex_count() > limits.max_exact_vertices) {
    throw Error(ErrorKind::CapExceeded, "exact extension search bounded at " +
                                            std::to_string(limits.max_exact_vertices) + " vertices");
  }
  if (t.vertex_count() < 1) return {ExtensionVerdict::NotExtendable, std::nullopt, std::nullopt};
  const OrderingScan scan = options.threads > 1 ? scan_orderings_parallel(t, options.count_witnesses, options.threads)
                                                : scan_orderings_serial(t, options.count_witnesses);
  Extension result;
  if (options.count_witnesses) result.witness_count = scan.count;
  if (scan.first) {
    result.verdict = ExtensionVerdict::Witness;
    result.witness = CyclicPermutation(*scan.first);
  } else {
    result.verdict = ExtensionVerdict::NotExtendable;
  }
  return result;
}

}  // namespace cyclord
