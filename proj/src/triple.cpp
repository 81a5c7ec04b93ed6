#include "cyclord/triple.hpp"

#include <algorithm>
#include <memory>
#include <string>

#include "cyclord/error.hpp"

namespace cyclord {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::InvalidSize: return "InvalidSize";
    case ErrorKind::NotTTEmbedded: return "NotTTEmbedded";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::AsymmetryViolation: return "AsymmetryViolation";
    case ErrorKind::NotSelfTransitive: return "NotSelfTransitive";
    case ErrorKind::NotHypertournament: return "NotHypertournament";
    case ErrorKind::NotTransitive: return "NotTransitive";
    case ErrorKind::SupportOverlap: return "SupportOverlap";
    case ErrorKind::SupportIncomplete: return "SupportIncomplete";
    case ErrorKind::InternalContradiction: return "InternalContradiction";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

Triple Triple::of(Vertex x, Vertex y, Vertex z) {
  if (x == y || y == z || x == z) {
    throw Error(ErrorKind::Degenerate, "repeated vertex in (" + std::to_string(x) + " " +
                                           std::to_string(y) + " " + std::to_string(z) + ")");
  }
  std::array<Vertex, 3> v{x, y, z};
  std::sort(v.begin(), v.end());
  return {v[0], v[1], v[2]};
}

std::array<Vertex, 3> OrientedTriple::cyclic_sequence() const noexcept {
  if (orientation == Orientation::Forward) return {support.a, support.b, support.c};
  return {support.a, support.c, support.b};
}

OrientedTriple canonical_oriented_triple(Vertex a, Vertex b, Vertex c) {
  return {Triple::of(a, b, c), orientation_of(a, b, c)};
}

TripleIndex::TripleIndex(int n) : n_(n), stride_(n + 1) {
  table_.assign(static_cast<std::size_t>(stride_ * stride_ * stride_), -1);
  for (Vertex a = 1; a <= n; ++a) {
    for (Vertex b = a + 1; b <= n; ++b) {
      for (Vertex c = b + 1; c <= n; ++c) {
        const auto rank = static_cast<std::int16_t>(triples_.size());
        triples_.push_back({a, b, c});
        const std::array<std::array<Vertex, 3>, 6> orders{{
            {a, b, c}, {a, c, b}, {b, a, c}, {b, c, a}, {c, a, b}, {c, b, a}}};
        for (const auto& o : orders) {
          table_[static_cast<std::size_t>((o[0] * stride_ + o[1]) * stride_ + o[2])] = rank;
        }
        for (Vertex d = c + 1; d <= n; ++d) quadruples_.push_back({a, b, c, d});
      }
    }
  }
  std::sort(quadruples_.begin(), quadruples_.end());
}

const TripleIndex& TripleIndex::of(int n) {
  static const auto tables = [] {
    std::array<std::unique_ptr<TripleIndex>, kMaxVertices + 1> t;
    for (int k = 0; k <= kMaxVertices; ++k) t[static_cast<std::size_t>(k)].reset(new TripleIndex(k));
    return t;
  }();
  if (n < 0 || n > kMaxVertices) {
    throw Error(ErrorKind::InvalidSize,
                "vertex count " + std::to_string(n) + " outside [0, " + std::to_string(kMaxVertices) + "]");
  }
  return *tables[static_cast<std::size_t>(n)];
}

}  // namespace cyclord
