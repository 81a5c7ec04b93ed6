#include "cyclord/cyclic_permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cyclord/error.hpp"
#include "cyclord/graph.hpp"
#include "cyclord/relation.hpp"

namespace cyclord {

CyclicPermutation::CyclicPermutation(std::vector<Vertex> sequence) {
  const int n = static_cast<int>(sequence.size());
  position_.assign(static_cast<std::size_t>(n) + 1, -1);
  for (Vertex v : sequence) {
    if (v < 1 || v > n || position_[static_cast<std::size_t>(v)] != -1) {
      throw Error(ErrorKind::Degenerate, "sequence is not a permutation of [" + std::to_string(n) + "]");
    }
    position_[static_cast<std::size_t>(v)] = 0;
  }
  if (n > 0) std::rotate(sequence.begin(), std::find(sequence.begin(), sequence.end(), 1), sequence.end());
  canonical_ = std::move(sequence);
  for (int p = 0; p < n; ++p) position_[static_cast<std::size_t>(canonical_[static_cast<std::size_t>(p)])] = p;
}

CyclicPermutation CyclicPermutation::identity(int n) {
  std::vector<Vertex> seq(static_cast<std::size_t>(n));
  std::iota(seq.begin(), seq.end(), 1);
  return CyclicPermutation(std::move(seq));
}

Orientation CyclicPermutation::orientation_of(const Triple& t) const noexcept {
  return cyclord::orientation_of(position(t.a), position(t.b), position(t.c));
}

std::string CyclicPermutation::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < canonical_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(canonical_[i]);
  }
  return out + ")";
}

CyclicPermutation CyclicPermutation::parse(std::string_view text) {
  std::string cleaned(text);
  std::replace(cleaned.begin(), cleaned.end(), '(', ' ');
  std::replace(cleaned.begin(), cleaned.end(), ')', ' ');
  std::istringstream in(cleaned);
  std::vector<Vertex> seq;
  std::string token;
  while (in >> token) {
    try {
      std::size_t used = 0;
      seq.push_back(std::stoi(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "bad vertex '" + token + "' in cyclic permutation");
    }
  }
  try {
    return CyclicPermutation(std::move(seq));
  } catch (const Error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

bool is_clockwise(const CyclicPermutation& phi, Vertex i, Vertex j, Vertex k) {
  const int n = phi.size();
  if (!(1 <= i && i < j && j < k && k <= n)) {
    throw Error(ErrorKind::Degenerate, "is_clockwise needs 1 <= i < j < k <= n");
  }
  const int pi = phi.position(i);
  const int dj = (phi.position(j) - pi + n) % n;
  const int dk = (phi.position(k) - pi + n) % n;
  return dj < dk;
}

OrientedThreeHypergraph hypergraph_of_cyclic_perm(const CyclicPermutation& phi) {
  const int n = phi.size();
  if (n < 3) throw Error(ErrorKind::InvalidSize, "cyclic permutation hypergraph needs n >= 3");
  OrientedThreeHypergraph h(n);
  const auto& idx = h.index();
  for (int i = 0; i < idx.size(); ++i) {
    const Triple& t = idx.triple(i);
    if (is_clockwise(phi, t.a, t.b, t.c)) h.set_state_at(i, EdgeState::Forward);
  }
  return h;
}

OrientedThreeHypergraph hypertournament_of(const CyclicPermutation& phi) {
  OrientedThreeHypergraph h(phi.size());
  const auto& idx = h.index();
  for (int i = 0; i < idx.size(); ++i) h.set_state_at(i, to_state(phi.orientation_of(idx.triple(i))));
  return h;
}

CyclicPermutation reverse_cyclic_perm(const CyclicPermutation& phi) {
  std::vector<Vertex> seq(phi.canonical().rbegin(), phi.canonical().rend());
  return CyclicPermutation(std::move(seq));
}

CyclicPermutation recover_cyclic_perm(const OrientedThreeHypergraph& h) {
  const int n = h.vertex_count();
  if (n < 3) throw Error(ErrorKind::InvalidSize, "recovery needs n >= 3");
  if (!is_self_transitive(h)) throw Error(ErrorKind::NotSelfTransitive, "hypergraph is not self-transitive");
  // The link of n lives on [n - 1] with labels unchanged.
  const LinearPermutation psi = linear_perm_from_graph(link_of(h, n));
  std::vector<Vertex> seq = psi.seq;
  seq.push_back(n);
  CyclicPermutation phi(std::move(seq));
  if (hypergraph_of_cyclic_perm(phi) != h) {
    throw Error(ErrorKind::NotSelfTransitive, "recovered ordering " + phi.to_string() + " does not reproduce the input");
  }
  return phi;
}

std::vector<CyclicPermutation> all_cyclic_permutations(int n) {
  std::vector<CyclicPermutation> out;
  if (n < 1) return out;
  std::vector<Vertex> seq(static_cast<std::size_t>(n));
  std::iota(seq.begin(), seq.end(), 1);
  do {
    out.emplace_back(seq);
  } while (std::next_permutation(seq.begin() + 1, seq.end()));
  return out;
}

}  // namespace cyclord
