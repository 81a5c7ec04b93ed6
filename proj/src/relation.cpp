#include "cyclord/relation.hpp"

#include <map>
#include <string>

#include "cyclord/error.hpp"

namespace cyclord {

namespace {

std::string triple_text(const std::array<Vertex, 3>& t) {
  return "(" + std::to_string(t[0]) + " " + std::to_string(t[1]) + " " + std::to_string(t[2]) + ")";
}

bool is_degenerate(const std::array<Vertex, 3>& t, int n) {
  for (Vertex v : t) {
    if (v < 1 || v > n) return true;
  }
  return t[0] == t[1] || t[1] == t[2] || t[0] == t[2];
}

}  // namespace

OrientedThreeHypergraph normalize_relation(const TernaryRelation& relation) {
  OrientedThreeHypergraph h(relation.n);
  for (const auto& t : relation.triples) {
    if (is_degenerate(t, relation.n)) {
      throw Error(ErrorKind::Degenerate, "triple " + triple_text(t) + " is not three distinct vertices of [" +
                                             std::to_string(relation.n) + "]");
    }
    const OrientedTriple e = canonical_oriented_triple(t[0], t[1], t[2]);
    const auto current = h.orientation(e.support);
    if (current && *current != e.orientation) {
      throw Error(ErrorKind::AsymmetryViolation, "{" + std::to_string(e.support.a) + "," +
                                                     std::to_string(e.support.b) + "," +
                                                     std::to_string(e.support.c) + "} listed in both orientations");
    }
    h.set(e);
  }
  return h;
}

TernaryRelation rotation_closure(const OrientedThreeHypergraph& h) {
  TernaryRelation r{h.vertex_count(), {}};
  for (const auto& e : h.edges()) {
    const auto s = e.cyclic_sequence();
    r.triples.push_back({s[0], s[1], s[2]});
    r.triples.push_back({s[1], s[2], s[0]});
    r.triples.push_back({s[2], s[0], s[1]});
  }
  return r;
}

std::optional<TransitivityViolation> find_transitivity_violation(const OrientedThreeHypergraph& h) {
  const int n = h.vertex_count();
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = 1; v <= n; ++v) {
      if (v == u) continue;
      for (Vertex z = 1; z <= n; ++z) {
        if (z == u || z == v || !h.has_ordered(u, v, z)) continue;
        for (Vertex w = 1; w <= n; ++w) {
          if (w == u || w == v || w == z || !h.has_ordered(z, v, w)) continue;
          if (!h.has_ordered(u, v, w)) {
            return TransitivityViolation{u, v, z, w, h.state(Triple::of(u, v, w))};
          }
        }
      }
    }
  }
  return std::nullopt;
}

bool is_transitive_quadruple_local(const OrientedThreeHypergraph& h) {
  for (const auto& quad : h.index().quadruples()) {
    if (!is_transitive_pair_rule(induced_sub(h, quad))) return false;
  }
  return true;
}

std::vector<std::array<Vertex, 4>> evenness_violations(const OrientedThreeHypergraph& h) {
  std::vector<std::array<Vertex, 4>> odd;
  const auto& idx = h.index();
  for (const auto& q : idx.quadruples()) {
    const std::array<int, 4> members{idx.index(q[0], q[1], q[2]), idx.index(q[0], q[1], q[3]),
                                     idx.index(q[0], q[2], q[3]), idx.index(q[1], q[2], q[3])};
    int count = 0;
    for (int i : members) count += h.state_at(i) != EdgeState::Absent;
    if (count % 2 != 0) odd.push_back(q);
  }
  return odd;
}

SelfTransitivityReport self_transitivity_report(const OrientedThreeHypergraph& h) {
  SelfTransitivityReport r;
  r.tt_embedded = h.is_tt_embedded();
  if (!r.tt_embedded) return r;
  r.violation = find_transitivity_violation(h);
  r.transitive = !r.violation;
  r.complement_violation = find_transitivity_violation(complement_in_tt(h));
  r.complement_transitive = !r.complement_violation;
  return r;
}

AxiomReport axiom_report(const TernaryRelation& relation) {
  AxiomReport report;
  report.is_cyclic_consistent = true;
  report.is_asymmetric = true;

  if (relation.n < 0 || relation.n > kMaxVertices) {
    report.is_cyclic_consistent = false;
    report.violations.push_back({AxiomViolation::Kind::Degenerate, {}, "vertex count " + std::to_string(relation.n) +
                                                                           " unsupported"});
    return report;
  }

  const TripleIndex& idx = TripleIndex::of(relation.n);
  std::map<int, Orientation> seen;
  std::vector<bool> reported(static_cast<std::size_t>(idx.size()), false);
  for (const auto& t : relation.triples) {
    if (is_degenerate(t, relation.n)) {
      report.is_cyclic_consistent = false;
      report.violations.push_back({AxiomViolation::Kind::Degenerate, {t[0], t[1], t[2]},
                                   "triple " + triple_text(t) + " is not three distinct vertices"});
      continue;
    }
    const OrientedTriple e = canonical_oriented_triple(t[0], t[1], t[2]);
    const int i = idx.index(e.support);
    const auto [it, inserted] = seen.emplace(i, e.orientation);
    if (!inserted && it->second != e.orientation && !reported[static_cast<std::size_t>(i)]) {
      reported[static_cast<std::size_t>(i)] = true;
      report.is_asymmetric = false;
      report.violations.push_back({AxiomViolation::Kind::Asymmetry, {e.support.a, e.support.b, e.support.c},
                                   "both orientations of {" + std::to_string(e.support.a) + "," +
                                       std::to_string(e.support.b) + "," + std::to_string(e.support.c) +
                                       "} present"});
    }
  }

  report.is_total = static_cast<int>(seen.size()) == idx.size();
  for (int i = 0; i < idx.size(); ++i) {
    if (seen.count(i)) continue;
    const Triple& t = idx.triple(i);
    report.violations.push_back({AxiomViolation::Kind::Missing, {t.a, t.b, t.c},
                                 "{" + std::to_string(t.a) + "," + std::to_string(t.b) + "," + std::to_string(t.c) +
                                     "} not ordered"});
  }

  if (!report.is_cyclic_consistent || !report.is_asymmetric) {
    report.is_transitive = false;
    return report;
  }

  OrientedThreeHypergraph h(relation.n);
  for (const auto& [i, o] : seen) h.set_state_at(i, to_state(o));
  const auto violation = find_transitivity_violation(h);
  report.is_transitive = !violation;
  if (violation) {
    const auto& x = *violation;
    report.violations.push_back(
        {AxiomViolation::Kind::Transitivity, {x.u, x.v, x.z, x.w},
         triple_text({x.u, x.v, x.z}) + " and " + triple_text({x.z, x.v, x.w}) + " require " +
             triple_text({x.u, x.v, x.w}) + (x.consequence == EdgeState::Absent ? ", which is absent" : ", which is reversed")});
  }
  return report;
}

}  // namespace cyclord
