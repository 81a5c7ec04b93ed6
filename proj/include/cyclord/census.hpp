#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyclord/hypergraph.hpp"
#include "cyclord/solver.hpp"

namespace cyclord {

enum class InstanceMode { Unoriented, Oriented, TTSubsets };

std::string_view to_string(InstanceMode mode);
InstanceMode parse_instance_mode(std::string_view text);

/// One enumerated instance. Unoriented codes use digits 0/1, oriented and
/// tt_subsets codes use 0/1/2 (tt_subsets never contain 2).
struct Instance {
  InstanceMode mode;
  int n;
  std::string code;

  OrientedThreeHypergraph oriented() const { return OrientedThreeHypergraph::from_code(n, code); }
  UnorientedThreeHypergraph unoriented() const { return UnorientedThreeHypergraph::from_code(n, code); }
};

/// Largest n accepted by exhaustive enumeration in each mode.
int max_enumeration_vertices(InstanceMode mode);

/// Visits every instance in lexicographic code order. With up_to_iso only
/// codes that equal their own canonical code are visited, one per
/// isomorphism class. Throws CapExceeded when n is beyond the mode bound.
void for_each_instance(int n, InstanceMode mode, bool up_to_iso, const std::function<void(const Instance&)>& visit);

std::vector<Instance> enumerate_instances(int n, InstanceMode mode, bool up_to_iso = false);

/// Transitive oriented instances only, in the same order as filtering
/// for_each_instance(Oriented) by the pair rule, but generated by pruned
/// search: each 4-set is checked as soon as its last 3-set is assigned.
/// `prefix` fixes the leading digits.
void for_each_transitive_oriented(int n, std::string_view prefix, const std::function<void(std::string_view)>& visit);

struct CensusRecord {
  int n = 0;
  InstanceMode mode = InstanceMode::Oriented;
  std::string code;
  int edges = 0;
  std::optional<bool> transitive;
  std::optional<bool> tt_embedded;
  std::optional<bool> self_transitive;
  std::optional<bool> comparability;
  std::optional<bool> complement_comparability;
  std::optional<bool> permutation_hypergraph;
  std::optional<bool> extendable;
  std::optional<std::string> witness;
  std::optional<std::string> sufficient_witness;

  friend bool operator==(const CensusRecord&, const CensusRecord&) = default;
};

/// A failed consistency check, kept as data.
struct Contradiction {
  std::string check;
  InstanceMode mode = InstanceMode::Oriented;
  std::string code;
  std::string detail;

  friend bool operator==(const Contradiction&, const Contradiction&) = default;
};

struct Classified {
  CensusRecord record;
  std::uint64_t union_pairs = 0;
  std::vector<Contradiction> contradictions;
};

/// Recomputes every flag of an instance from its code.
Classified classify(const Instance& instance, const SearchLimits& limits = {});

/// Flag implications every record must satisfy; returns the first broken one.
std::optional<std::string> record_inconsistency(const CensusRecord& record);

std::string record_to_json(const CensusRecord& record);
CensusRecord record_from_json(std::string_view line);

struct CensusOptions {
  int n = 4;
  int threads = 1;
  SearchLimits limits = {};
};

struct CensusResult {
  /// Summary document, serialized with sorted keys.
  std::string summary_json;
  std::vector<CensusRecord> records;
  std::vector<Contradiction> contradictions;
  std::uint64_t hypertournaments_transitive = 0;
};

/// Maximum n run_census accepts.
inline constexpr int kMaxCensusVertices = 6;

/// Exhaustive census: tt_subsets, transitive oriented instances and unoriented
/// instances get one record each; all orientations of the complete
/// hypergraph are counted. Work is split into blocks run under OpenMP and
/// merged in block order, so the result does not depend on `threads`.
CensusResult run_census(const CensusOptions& options);

/// Reference census: one plain loop per pass, oriented instances filtered
/// from all 3^C(n,3) codes. Must equal run_census.
CensusResult run_census_serial(int n, const SearchLimits& limits = {});

std::uint64_t count_transitive_hypertournaments_serial(int n);
std::uint64_t count_transitive_hypertournaments_parallel(int n, int threads);

/// Writes records.jsonl, summary.json and contradictions.jsonl into `dir`
/// (created if needed). Throws IoError naming the failing path.
void write_census(const CensusResult& result, const std::filesystem::path& dir);

}  // namespace cyclord
