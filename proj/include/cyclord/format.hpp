#pragma once

#include <array>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cyclord/hypergraph.hpp"
#include "cyclord/relation.hpp"

namespace cyclord {

/// Text instance format (.c3h):
///
///   # comment
///   mode oriented        (or: mode unoriented)
///   n 4
///   e 1 2 4              ordered triple, oriented mode
///   u 1 2 3              3-set, unoriented mode
///
/// Header lines come before any record; blank lines and '#' comments are ignored.
struct InstanceFile {
  struct Record {
    int line = 0;
    std::array<Vertex, 3> vertices{};
  };

  bool oriented = true;
  int n = 0;
  std::vector<Record> records;
};

/// Syntax only; records are not checked against axioms. Throws ParseError with the line number.
InstanceFile parse_instance_file(std::string_view text);

/// Raw relation view of an oriented file, for axiom checking.
TernaryRelation to_relation(const InstanceFile& file);

using Instance3h = std::variant<OrientedThreeHypergraph, UnorientedThreeHypergraph>;

/// Full parse: oriented records go through rotation normalization. Degenerate
/// and AsymmetryViolation errors carry the offending line number.
Instance3h parse_instance(std::string_view text);

/// Canonical text: header, then one record per edge in support order, single
/// spaces, trailing newline. Oriented edges print their canonical rotation.
std::string render(const OrientedThreeHypergraph& h);
std::string render(const UnorientedThreeHypergraph& h);
std::string render(const Instance3h& instance);

}  // namespace cyclord
