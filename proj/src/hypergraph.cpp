#include "cyclord/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cyclord/error.hpp"

namespace cyclord {

namespace {

void check_vertex(const Triple& t, int n) {
  if (t.a < 1 || t.c > n || t.a == t.b || t.b == t.c) {
    throw Error(ErrorKind::Degenerate, "triple {" + std::to_string(t.a) + "," + std::to_string(t.b) + "," +
                                           std::to_string(t.c) + "} not a 3-subset of [" + std::to_string(n) + "]");
  }
}

void check_mapping(std::span<const Vertex> mapping, int n) {
  if (static_cast<int>(mapping.size()) != n) {
    throw Error(ErrorKind::SizeMismatch, "vertex map has " + std::to_string(mapping.size()) + " entries, expected " +
                                             std::to_string(n));
  }
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (Vertex v : mapping) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw Error(ErrorKind::Degenerate, "vertex map is not a bijection of [" + std::to_string(n) + "]");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

// State of the image of triple t (stored state s) under `mapping`.
EdgeState image_state(const Triple& t, EdgeState s, std::span<const Vertex> mapping) {
  if (s == EdgeState::Absent) return s;
  const Vertex a = mapping[static_cast<std::size_t>(t.a - 1)];
  const Vertex b = mapping[static_cast<std::size_t>(t.b - 1)];
  const Vertex c = mapping[static_cast<std::size_t>(t.c - 1)];
  // Forward reads (a b c), Backward reads (a c b).
  return s == EdgeState::Forward ? to_state(orientation_of(a, b, c)) : to_state(orientation_of(a, c, b));
}

}  // namespace

OrientedThreeHypergraph::OrientedThreeHypergraph(int n)
    : n_(n), index_(&TripleIndex::of(n)), states_(static_cast<std::size_t>(index_->size()), EdgeState::Absent) {}

OrientedThreeHypergraph::OrientedThreeHypergraph(int n, std::span<const OrientedTriple> edges)
    : OrientedThreeHypergraph(n) {
  for (const auto& e : edges) {
    const int i = checked_index(e.support);
    const EdgeState s = to_state(e.orientation);
    if (states_[static_cast<std::size_t>(i)] != EdgeState::Absent && states_[static_cast<std::size_t>(i)] != s) {
      throw Error(ErrorKind::AsymmetryViolation, "both orientations of {" + std::to_string(e.support.a) + "," +
                                                     std::to_string(e.support.b) + "," +
                                                     std::to_string(e.support.c) + "}");
    }
    states_[static_cast<std::size_t>(i)] = s;
  }
}

OrientedThreeHypergraph OrientedThreeHypergraph::from_code(int n, std::string_view code) {
  OrientedThreeHypergraph h(n);
  if (static_cast<int>(code.size()) != h.index().size()) {
    throw Error(ErrorKind::ParseError, "code length " + std::to_string(code.size()) + " does not match n=" +
                                           std::to_string(n));
  }
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (code[i] < '0' || code[i] > '2') throw Error(ErrorKind::ParseError, "bad digit in oriented code");
    h.states_[i] = static_cast<EdgeState>(code[i] - '0');
  }
  return h;
}

int OrientedThreeHypergraph::checked_index(const Triple& t) const {
  check_vertex(t, n_);
  return index_->index(t);
}

std::optional<Orientation> OrientedThreeHypergraph::orientation(const Triple& t) const {
  switch (state(t)) {
    case EdgeState::Forward: return Orientation::Forward;
    case EdgeState::Backward: return Orientation::Backward;
    case EdgeState::Absent: break;
  }
  return std::nullopt;
}

int OrientedThreeHypergraph::edge_count() const noexcept {
  return static_cast<int>(std::count_if(states_.begin(), states_.end(), [](EdgeState s) { return s != EdgeState::Absent; }));
}

std::vector<OrientedTriple> OrientedThreeHypergraph::edges() const {
  std::vector<OrientedTriple> out;
  for (int i = 0; i < index_->size(); ++i) {
    const EdgeState s = states_[static_cast<std::size_t>(i)];
    if (s == EdgeState::Absent) continue;
    out.push_back({index_->triple(i), s == EdgeState::Forward ? Orientation::Forward : Orientation::Backward});
  }
  return out;
}

bool OrientedThreeHypergraph::is_tt_embedded() const noexcept {
  return std::none_of(states_.begin(), states_.end(), [](EdgeState s) { return s == EdgeState::Backward; });
}

bool OrientedThreeHypergraph::is_complete() const noexcept {
  return std::none_of(states_.begin(), states_.end(), [](EdgeState s) { return s == EdgeState::Absent; });
}

UnorientedThreeHypergraph OrientedThreeHypergraph::support() const {
  UnorientedThreeHypergraph u(n_);
  for (int i = 0; i < index_->size(); ++i) u.set_at(i, states_[static_cast<std::size_t>(i)] != EdgeState::Absent);
  return u;
}

std::string OrientedThreeHypergraph::code() const {
  std::string s(states_.size(), '0');
  for (std::size_t i = 0; i < states_.size(); ++i) s[i] = static_cast<char>('0' + static_cast<int>(states_[i]));
  return s;
}

UnorientedThreeHypergraph::UnorientedThreeHypergraph(int n)
    : n_(n), index_(&TripleIndex::of(n)), present_(static_cast<std::size_t>(index_->size()), 0) {}

UnorientedThreeHypergraph::UnorientedThreeHypergraph(int n, std::span<const Triple> edges)
    : UnorientedThreeHypergraph(n) {
  for (const auto& t : edges) insert(t);
}

UnorientedThreeHypergraph UnorientedThreeHypergraph::from_code(int n, std::string_view code) {
  UnorientedThreeHypergraph h(n);
  if (static_cast<int>(code.size()) != h.index().size()) {
    throw Error(ErrorKind::ParseError, "code length " + std::to_string(code.size()) + " does not match n=" +
                                           std::to_string(n));
  }
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (code[i] != '0' && code[i] != '1') throw Error(ErrorKind::ParseError, "bad digit in unoriented code");
    h.present_[i] = code[i] == '1' ? 1 : 0;
  }
  return h;
}

int UnorientedThreeHypergraph::checked_index(const Triple& t) const {
  check_vertex(t, n_);
  return index_->index(t);
}

bool UnorientedThreeHypergraph::contains(const Triple& t) const { return contains_at(checked_index(t)); }

void UnorientedThreeHypergraph::insert(const Triple& t) { present_[static_cast<std::size_t>(checked_index(t))] = 1; }

int UnorientedThreeHypergraph::edge_count() const noexcept {
  return static_cast<int>(std::count(present_.begin(), present_.end(), std::uint8_t{1}));
}

std::vector<Triple> UnorientedThreeHypergraph::edges() const {
  std::vector<Triple> out;
  for (int i = 0; i < index_->size(); ++i) {
    if (contains_at(i)) out.push_back(index_->triple(i));
  }
  return out;
}

std::string UnorientedThreeHypergraph::code() const {
  std::string s(present_.size(), '0');
  for (std::size_t i = 0; i < present_.size(); ++i) s[i] = present_[i] ? '1' : '0';
  return s;
}

OrientedThreeHypergraph build_tt(int n) {
  if (n < 3) throw Error(ErrorKind::InvalidSize, "TT_n needs n >= 3, got " + std::to_string(n));
  OrientedThreeHypergraph h(n);
  for (int i = 0; i < h.index().size(); ++i) h.set_state_at(i, EdgeState::Forward);
  return h;
}

OrientedThreeHypergraph complement_in_tt(const OrientedThreeHypergraph& h) {
  if (!h.is_tt_embedded()) throw Error(ErrorKind::NotTTEmbedded, "hypergraph has a Backward edge");
  OrientedThreeHypergraph out(h.vertex_count());
  for (int i = 0; i < h.index().size(); ++i) {
    out.set_state_at(i, h.state_at(i) == EdgeState::Absent ? EdgeState::Forward : EdgeState::Absent);
  }
  return out;
}

UnorientedThreeHypergraph complement_unoriented(const UnorientedThreeHypergraph& h) {
  UnorientedThreeHypergraph out(h.vertex_count());
  for (int i = 0; i < h.index().size(); ++i) out.set_at(i, !h.contains_at(i));
  return out;
}

OrientedThreeHypergraph induced_sub(const OrientedThreeHypergraph& h, std::span<const Vertex> subset) {
  std::vector<Vertex> keep(subset.begin(), subset.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  for (Vertex v : keep) {
    if (v < 1 || v > h.vertex_count()) {
      throw Error(ErrorKind::Degenerate, "vertex " + std::to_string(v) + " outside [" +
                                             std::to_string(h.vertex_count()) + "]");
    }
  }
  const int m = static_cast<int>(keep.size());
  OrientedThreeHypergraph out(m);
  // The relabeling is order preserving, so Forward/Backward carry over unchanged.
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      for (int k = j + 1; k < m; ++k) {
        const EdgeState s = h.state_at(h.index().index(keep[static_cast<std::size_t>(i)],
                                                       keep[static_cast<std::size_t>(j)],
                                                       keep[static_cast<std::size_t>(k)]));
        out.set_state_at(out.index().index(i + 1, j + 1, k + 1), s);
      }
    }
  }
  return out;
}

OrientedThreeHypergraph relabel(const OrientedThreeHypergraph& h, std::span<const Vertex> mapping) {
  const int n = h.vertex_count();
  check_mapping(mapping, n);
  const auto& idx = h.index();
  OrientedThreeHypergraph out(n);
  for (int i = 0; i < idx.size(); ++i) {
    const Triple& t = idx.triple(i);
    out.set_state_at(idx.index(mapping[static_cast<std::size_t>(t.a - 1)], mapping[static_cast<std::size_t>(t.b - 1)],
                               mapping[static_cast<std::size_t>(t.c - 1)]),
                     image_state(t, h.state_at(i), mapping));
  }
  return out;
}

UnorientedThreeHypergraph relabel(const UnorientedThreeHypergraph& h, std::span<const Vertex> mapping) {
  const int n = h.vertex_count();
  check_mapping(mapping, n);
  const auto& idx = h.index();
  UnorientedThreeHypergraph out(n);
  for (int i = 0; i < idx.size(); ++i) {
    const Triple& t = idx.triple(i);
    out.set_at(idx.index(mapping[static_cast<std::size_t>(t.a - 1)], mapping[static_cast<std::size_t>(t.b - 1)],
                         mapping[static_cast<std::size_t>(t.c - 1)]),
               h.contains_at(i));
  }
  return out;
}

namespace {

std::vector<int> degrees(const OrientedThreeHypergraph& h) {
  std::vector<int> deg(static_cast<std::size_t>(h.vertex_count()) + 1, 0);
  for (const auto& e : h.edges()) {
    for (Vertex v : e.support.vertices()) ++deg[static_cast<std::size_t>(v)];
  }
  return deg;
}

class IsomorphismSearch {
 public:
  IsomorphismSearch(const OrientedThreeHypergraph& h1, const OrientedThreeHypergraph& h2)
      : h1_(h1), h2_(h2), n_(h1.vertex_count()), deg1_(degrees(h1)), deg2_(degrees(h2)),
        image_(static_cast<std::size_t>(n_), 0), used_(static_cast<std::size_t>(n_) + 1, false) {}

  bool run() { return extend(1); }
  VertexMap witness() const { return image_; }

 private:
  bool extend(Vertex v) {
    if (v > n_) return true;
    for (Vertex target = 1; target <= n_; ++target) {
      if (used_[static_cast<std::size_t>(target)]) continue;
      if (deg1_[static_cast<std::size_t>(v)] != deg2_[static_cast<std::size_t>(target)]) continue;
      image_[static_cast<std::size_t>(v - 1)] = target;
      if (!consistent(v)) continue;
      used_[static_cast<std::size_t>(target)] = true;
      if (extend(v + 1)) return true;
      used_[static_cast<std::size_t>(target)] = false;
    }
    return false;
  }

  // All triples {a < b < v} are now fully mapped; absent must map to absent too.
  bool consistent(Vertex v) const {
    const auto& idx = h1_.index();
    for (Vertex a = 1; a < v; ++a) {
      for (Vertex b = a + 1; b < v; ++b) {
        const Triple t{a, b, v};
        const Vertex ia = image_[static_cast<std::size_t>(a - 1)];
        const Vertex ib = image_[static_cast<std::size_t>(b - 1)];
        const Vertex iv = image_[static_cast<std::size_t>(v - 1)];
        const EdgeState expected = image_state(t, h1_.state_at(idx.index(t)), image_);
        if (h2_.state_at(idx.index(ia, ib, iv)) != expected) return false;
      }
    }
    return true;
  }

  const OrientedThreeHypergraph& h1_;
  const OrientedThreeHypergraph& h2_;
  int n_;
  std::vector<int> deg1_;
  std::vector<int> deg2_;
  VertexMap image_;
  std::vector<bool> used_;
};

template <typename StateOf>
std::string minimal_code(int n, const TripleIndex& idx, StateOf state_of) {
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::string best;
  std::string current(static_cast<std::size_t>(idx.size()), '0');
  do {
    for (int i = 0; i < idx.size(); ++i) {
      const Triple& t = idx.triple(i);
      const int j = idx.index(perm[static_cast<std::size_t>(t.a - 1)], perm[static_cast<std::size_t>(t.b - 1)],
                              perm[static_cast<std::size_t>(t.c - 1)]);
      current[static_cast<std::size_t>(j)] = state_of(i, perm);
    }
    if (best.empty() || current < best) best = current;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

void check_bound(int n, int max_vertices) {
  if (n > max_vertices) {
    throw Error(ErrorKind::CapExceeded, "factorial search over " + std::to_string(n) + " vertices exceeds bound " +
                                            std::to_string(max_vertices));
  }
}

}  // namespace

std::optional<VertexMap> find_isomorphism(const OrientedThreeHypergraph& h1, const OrientedThreeHypergraph& h2,
                                          int max_vertices) {
  if (h1.vertex_count() != h2.vertex_count()) {
    throw Error(ErrorKind::SizeMismatch, std::to_string(h1.vertex_count()) + " vs " +
                                             std::to_string(h2.vertex_count()) + " vertices");
  }
  check_bound(h1.vertex_count(), max_vertices);
  if (h1.edge_count() != h2.edge_count()) return std::nullopt;
  auto d1 = degrees(h1);
  auto d2 = degrees(h2);
  std::sort(d1.begin(), d1.end());
  std::sort(d2.begin(), d2.end());
  if (d1 != d2) return std::nullopt;
  IsomorphismSearch search(h1, h2);
  if (!search.run()) return std::nullopt;
  return search.witness();
}

std::string canonical_code(const OrientedThreeHypergraph& h, int max_vertices) {
  check_bound(h.vertex_count(), max_vertices);
  const auto& idx = h.index();
  return minimal_code(h.vertex_count(), idx, [&](int i, const std::vector<Vertex>& perm) {
    return static_cast<char>('0' + static_cast<int>(image_state(idx.triple(i), h.state_at(i), perm)));
  });
}

std::string canonical_code(const UnorientedThreeHypergraph& h, int max_vertices) {
  check_bound(h.vertex_count(), max_vertices);
  return minimal_code(h.vertex_count(), h.index(),
                      [&](int i, const std::vector<Vertex>&) { return h.contains_at(i) ? '1' : '0'; });
}

}  // namespace cyclord
