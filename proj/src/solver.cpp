#include "cyclord/solver.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>

#include "cyclord/error.hpp"
#include "cyclord/extendability.hpp"
#include "cyclord/relation.hpp"

namespace cyclord {

SearchLimits SearchLimits::from_environment() {
  SearchLimits limits;
  if (const char* env = std::getenv("CYCLORD_CAP")) {
    char* end = nullptr;
    const unsigned long long cap = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && cap > 0) {
      limits.max_decisions = cap;
      limits.max_orientations = static_cast<std::size_t>(cap);
    }
  }
  return limits;
}

OrientationSolver::OrientationSolver(const UnorientedThreeHypergraph& h, SearchLimits limits)
    : h_(h), limits_(limits) {
  const auto& idx = h_.index();
  triple_var_.assign(static_cast<std::size_t>(idx.size()), -1);
  for (int i = 0; i < idx.size(); ++i) {
    if (!h_.contains_at(i)) continue;
    triple_var_[static_cast<std::size_t>(i)] = static_cast<int>(var_triple_.size());
    var_triple_.push_back(i);
  }
  value_.assign(var_triple_.size(), -1);
  watchers_.resize(2 * var_triple_.size());
  build_clauses();
}

void OrientationSolver::build_clauses() {
  const auto& idx = h_.index();
  const auto literal = [&](Vertex a, Vertex b, Vertex c) -> Literal {
    const int var = triple_var_[static_cast<std::size_t>(idx.index(a, b, c))];
    if (var < 0) return -1;
    return 2 * var + (orientation_of(a, b, c) == Orientation::Backward ? 1 : 0);
  };
  std::set<std::vector<Literal>> unique;
  for (const auto& quad : idx.quadruples()) {
    std::array<Vertex, 4> p = quad;
    do {
      const auto [u, v, z, w] = p;
      const Literal first = literal(u, v, z);
      const Literal second = literal(z, v, w);
      if (first < 0 || second < 0) continue;
      // (u v z) and (z v w) imply (u v w); with {u, v, w} absent the pair is forbidden.
      std::vector<Literal> clause{first ^ 1, second ^ 1};
      if (const Literal consequence = literal(u, v, w); consequence >= 0) clause.push_back(consequence);
      std::sort(clause.begin(), clause.end());
      unique.insert(std::move(clause));
    } while (std::next_permutation(p.begin(), p.end()));
  }
  clauses_.assign(unique.begin(), unique.end());
  for (std::size_t c = 0; c < clauses_.size(); ++c) {
    for (Literal lit : clauses_[c]) watchers_[static_cast<std::size_t>(lit ^ 1)].push_back(static_cast<int>(c));
  }
}

bool OrientationSolver::value_true(Literal lit) const noexcept {
  return value_[static_cast<std::size_t>(lit >> 1)] == (lit & 1);
}

bool OrientationSolver::assign(Literal lit) {
  auto& slot = value_[static_cast<std::size_t>(lit >> 1)];
  if (slot >= 0) return slot == (lit & 1);
  slot = static_cast<std::int8_t>(lit & 1);
  trail_.push_back(lit);
  return true;
}

bool OrientationSolver::propagate() {
  while (queue_head_ < trail_.size()) {
    const Literal lit = trail_[queue_head_++];
    for (int c : watchers_[static_cast<std::size_t>(lit)]) {
      Literal unit = -1;
      int open = 0;
      bool satisfied = false;
      for (Literal l : clauses_[static_cast<std::size_t>(c)]) {
        const auto v = value_[static_cast<std::size_t>(l >> 1)];
        if (v < 0) {
          ++open;
          unit = l;
        } else if (v == (l & 1)) {
          satisfied = true;
          break;
        }
      }
      if (satisfied) continue;
      if (open == 0) return false;
      if (open == 1) {
        ++stats_.propagations;
        assign(unit);
      }
    }
  }
  return true;
}

void OrientationSolver::undo_to(std::size_t trail_size) {
  for (std::size_t i = trail_size; i < trail_.size(); ++i) value_[static_cast<std::size_t>(trail_[i] >> 1)] = -1;
  trail_.resize(trail_size);
  queue_head_ = trail_size;
}

bool OrientationSolver::backtrack() {
  while (!levels_.empty()) {
    Level& top = levels_.back();
    undo_to(top.trail_size);
    if (!top.flipped) {
      top.flipped = true;
      assign(2 * top.var + 1);
      return true;
    }
    levels_.pop_back();
  }
  return false;
}

bool OrientationSolver::search() {
  for (;;) {
    if (!propagate()) {
      ++stats_.conflicts;
      if (!backtrack()) return false;
      continue;
    }
    const auto it = std::find(value_.begin(), value_.end(), std::int8_t{-1});
    if (it == value_.end()) return true;
    if (++stats_.decisions > limits_.max_decisions) {
      throw Error(ErrorKind::CapExceeded, "orientation search exceeded " + std::to_string(limits_.max_decisions) +
                                              " decisions");
    }
    const int var = static_cast<int>(it - value_.begin());
    levels_.push_back({var, trail_.size(), false});
    assign(2 * var);
  }
}

void OrientationSolver::reset() {
  undo_to(0);
  levels_.clear();
  stats_ = {};
}

OrientedThreeHypergraph OrientationSolver::current() const {
  OrientedThreeHypergraph out(h_.vertex_count());
  for (std::size_t var = 0; var < var_triple_.size(); ++var) {
    out.set_state_at(var_triple_[var], value_[var] == 0 ? EdgeState::Forward : EdgeState::Backward);
  }
  return out;
}

std::optional<OrientedThreeHypergraph> OrientationSolver::find() {
  reset();
  if (!search()) return std::nullopt;
  return current();
}

OrientationSolver::Enumeration OrientationSolver::enumerate(std::size_t cap) {
  reset();
  Enumeration result;
  bool more = search();
  while (more) {
    if (result.orientations.size() >= cap) {
      result.truncated = true;
      break;
    }
    result.orientations.push_back(current());
    more = backtrack() && search();
  }
  return result;
}

namespace {

void self_check(const OrientedThreeHypergraph& h) {
  if (!is_transitive_pair_rule(h)) {
    throw Error(ErrorKind::InternalContradiction, "solver returned a non-transitive orientation " + h.code());
  }
}

OrientedThreeHypergraph reversed(const OrientedThreeHypergraph& h) {
  OrientedThreeHypergraph out(h.vertex_count());
  for (int i = 0; i < h.index().size(); ++i) {
    const EdgeState s = h.state_at(i);
    out.set_state_at(i, s == EdgeState::Forward ? EdgeState::Backward : s == EdgeState::Backward ? EdgeState::Forward : s);
  }
  return out;
}

}  // namespace

OrientationResult find_transitive_orientation(const UnorientedThreeHypergraph& h, SearchLimits limits) {
  OrientationSolver solver(h, limits);
  OrientationResult result{solver.find(), solver.stats()};
  if (result.orientation) self_check(*result.orientation);
  return result;
}

OrientationSolver::Enumeration enumerate_transitive_orientations(const UnorientedThreeHypergraph& h, std::size_t cap,
                                                                 SearchLimits limits) {
  OrientationSolver solver(h, limits);
  auto result = solver.enumerate(cap);
  for (const auto& o : result.orientations) self_check(o);
  return result;
}

UnionCheck union_check_tt(const OrientedThreeHypergraph& a, const OrientedThreeHypergraph& b) {
  if (a.vertex_count() != b.vertex_count()) {
    throw Error(ErrorKind::SizeMismatch, std::to_string(a.vertex_count()) + " vs " + std::to_string(b.vertex_count()) +
                                             " vertices");
  }
  OrientedThreeHypergraph merged(a.vertex_count());
  const auto& idx = a.index();
  for (int i = 0; i < idx.size(); ++i) {
    const EdgeState sa = a.state_at(i);
    const EdgeState sb = b.state_at(i);
    const Triple& t = idx.triple(i);
    const std::string where = "{" + std::to_string(t.a) + "," + std::to_string(t.b) + "," + std::to_string(t.c) + "}";
    if (sa != EdgeState::Absent && sb != EdgeState::Absent) throw Error(ErrorKind::SupportOverlap, where + " in both");
    if (sa == EdgeState::Absent && sb == EdgeState::Absent) throw Error(ErrorKind::SupportIncomplete, where + " in neither");
    merged.set_state_at(i, sa != EdgeState::Absent ? sa : sb);
  }
  const bool tt = is_transitive_pair_rule(merged);
  return {std::move(merged), tt};
}

PermutationHypergraphResult is_cyclic_permutation_hypergraph(const UnorientedThreeHypergraph& h, SearchLimits limits) {
  const int n = h.vertex_count();
  if (n < 3) throw Error(ErrorKind::InvalidSize, "cyclic permutation hypergraphs need n >= 3");
  if (n > limits.max_isomorphism_vertices) {
    throw Error(ErrorKind::CapExceeded, "permutation hypergraph test bounded at " +
                                            std::to_string(limits.max_isomorphism_vertices) + " vertices");
  }
  PermutationHypergraphResult result;
  const auto a = find_transitive_orientation(h, limits).orientation;
  const auto b = find_transitive_orientation(complement_unoriented(h), limits).orientation;
  result.comparability = a.has_value();
  result.complement_comparability = b.has_value();
  if (!a || !b) return result;

  // A with B and A with B reversed are both transitive hypertournaments. Their
  // orderings agree exactly on the edges of H, so relabeling the second to the
  // identity turns the first into a permutation whose clockwise triples are H.
  const auto agree = union_check_tt(*a, *b);
  const auto disagree = union_check_tt(*a, reversed(*b));
  if (!agree.is_tt || !disagree.is_tt) {
    throw Error(ErrorKind::InternalContradiction, "union of transitive orientations of H and its complement is not "
                                                  "transitive for H = " + h.code());
  }
  const CyclicPermutation first = hypertournament_to_cyclic_ordering(agree.merged);
  const CyclicPermutation second = hypertournament_to_cyclic_ordering(disagree.merged);
  VertexMap sigma(static_cast<std::size_t>(n));
  for (Vertex v = 1; v <= n; ++v) sigma[static_cast<std::size_t>(v - 1)] = second.position(v) + 1;
  std::vector<Vertex> image;
  for (Vertex v : first.canonical()) image.push_back(sigma[static_cast<std::size_t>(v - 1)]);
  CyclicPermutation witness(std::move(image));
  if (relabel(h, sigma) != hypergraph_of_cyclic_perm(witness).support()) {
    throw Error(ErrorKind::InternalContradiction, "witness " + witness.to_string() + " does not reproduce H = " + h.code());
  }
  result.is_permutation_hypergraph = true;
  result.witness = std::move(witness);
  result.relabeling = std::move(sigma);
  return result;
}

}  // namespace cyclord
