#include "cyclord/census.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <numeric>
#include <set>

#include <json.hpp>
#include <omp.h>

#include "cyclord/cyclic_permutation.hpp"
#include "cyclord/error.hpp"
#include "cyclord/extendability.hpp"
#include "cyclord/relation.hpp"

namespace cyclord {

using nlohmann::json;

std::string_view to_string(InstanceMode mode) {
  switch (mode) {
    case InstanceMode::Unoriented: return "unoriented";
    case InstanceMode::Oriented: return "oriented";
    case InstanceMode::TTSubsets: return "tt_subsets";
  }
  return "oriented";
}

InstanceMode parse_instance_mode(std::string_view text) {
  if (text == "unoriented") return InstanceMode::Unoriented;
  if (text == "oriented") return InstanceMode::Oriented;
  if (text == "tt_subsets") return InstanceMode::TTSubsets;
  throw Error(ErrorKind::ParseError, "unknown mode '" + std::string(text) + "'");
}

int max_enumeration_vertices(InstanceMode mode) { return mode == InstanceMode::Oriented ? 6 : 7; }

namespace {

std::uint64_t power(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

int digit_base(InstanceMode mode) { return mode == InstanceMode::Oriented ? 3 : 2; }

// Code of the index-th instance in lexicographic order (first digit most significant).
std::string code_at(std::uint64_t index, int length, int base) {
  std::string code(static_cast<std::size_t>(length), '0');
  for (int j = length - 1; j >= 0; --j) {
    code[static_cast<std::size_t>(j)] = static_cast<char>('0' + index % static_cast<std::uint64_t>(base));
    index /= static_cast<std::uint64_t>(base);
  }
  return code;
}

// Smallest code in the orbit of the instance, restricted to tt_subsets for that mode.
std::string orbit_minimum(const Instance& inst) {
  std::vector<Vertex> perm(static_cast<std::size_t>(inst.n));
  std::iota(perm.begin(), perm.end(), 1);
  std::string best = inst.code;
  if (inst.mode == InstanceMode::Unoriented) {
    const auto h = inst.unoriented();
    do {
      best = std::min(best, relabel(h, perm).code());
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  }
  const auto h = inst.oriented();
  do {
    const auto image = relabel(h, perm);
    if (inst.mode == InstanceMode::TTSubsets && !image.is_tt_embedded()) continue;
    best = std::min(best, image.code());
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

void check_enumeration_bound(int n, InstanceMode mode) {
  if (n < 0 || n > max_enumeration_vertices(mode)) {
    throw Error(ErrorKind::CapExceeded, "exhaustive " + std::string(to_string(mode)) + " enumeration bounded at n=" +
                                            std::to_string(max_enumeration_vertices(mode)));
  }
}

// For each 3-set index t, the 4-sets whose lexicographically last 3-set is t,
// as the indices of their four 3-sets (123, 124, 134, 234 after relabeling).
struct QuadrupleTable {
  std::array<bool, 81> transitive{};
  std::vector<std::vector<std::array<int, 4>>> closing;

  explicit QuadrupleTable(int n) {
    for (int c = 0; c < 81; ++c) {
      transitive[static_cast<std::size_t>(c)] =
          is_transitive_pair_rule(OrientedThreeHypergraph::from_code(4, code_at(static_cast<std::uint64_t>(c), 4, 3)));
    }
    const auto& idx = TripleIndex::of(n);
    closing.resize(static_cast<std::size_t>(idx.size()));
    for (const auto& q : idx.quadruples()) {
      const std::array<int, 4> members{idx.index(q[0], q[1], q[2]), idx.index(q[0], q[1], q[3]),
                                       idx.index(q[0], q[2], q[3]), idx.index(q[1], q[2], q[3])};
      closing[static_cast<std::size_t>(members[3])].push_back(members);
    }
  }

  bool accepts(const std::string& code, int position) const {
    for (const auto& m : closing[static_cast<std::size_t>(position)]) {
      int c = 0;
      for (int i : m) c = c * 3 + (code[static_cast<std::size_t>(i)] - '0');
      if (!transitive[static_cast<std::size_t>(c)]) return false;
    }
    return true;
  }
};

}  // namespace

void for_each_instance(int n, InstanceMode mode, bool up_to_iso, const std::function<void(const Instance&)>& visit) {
  check_enumeration_bound(n, mode);
  const int length = TripleIndex::of(n).size();
  const int base = digit_base(mode);
  const std::uint64_t total = power(static_cast<std::uint64_t>(base), length);
  for (std::uint64_t i = 0; i < total; ++i) {
    Instance inst{mode, n, code_at(i, length, base)};
    if (up_to_iso && orbit_minimum(inst) != inst.code) continue;
    visit(inst);
  }
}

std::vector<Instance> enumerate_instances(int n, InstanceMode mode, bool up_to_iso) {
  std::vector<Instance> out;
  for_each_instance(n, mode, up_to_iso, [&out](const Instance& inst) { out.push_back(inst); });
  return out;
}

void for_each_transitive_oriented(int n, std::string_view prefix, const std::function<void(std::string_view)>& visit) {
  check_enumeration_bound(n, InstanceMode::Oriented);
  const int length = TripleIndex::of(n).size();
  if (static_cast<int>(prefix.size()) > length ||
      std::any_of(prefix.begin(), prefix.end(), [](char c) { return c < '0' || c > '2'; })) {
    throw Error(ErrorKind::ParseError, "bad code prefix '" + std::string(prefix) + "'");
  }
  const QuadrupleTable table(n);
  std::string code(static_cast<std::size_t>(length), '0');
  std::copy(prefix.begin(), prefix.end(), code.begin());
  const int fixed = static_cast<int>(prefix.size());
  for (int p = 0; p < fixed; ++p) {
    if (!table.accepts(code, p)) return;
  }
  // Iterative depth-first search; digit order 0 < 1 < 2 keeps codes lexicographic.
  int p = fixed;
  if (p == length) {
    visit(code);
    return;
  }
  code[static_cast<std::size_t>(p)] = '0' - 1;
  while (p >= fixed) {
    char& d = code[static_cast<std::size_t>(p)];
    if (d == '2') {
      d = '0';
      --p;
      continue;
    }
    ++d;
    if (!table.accepts(code, p)) continue;
    if (p + 1 == length) {
      visit(code);
      continue;
    }
    ++p;
    code[static_cast<std::size_t>(p)] = '0' - 1;
  }
}

namespace {

Contradiction contradiction(std::string check, const Instance& inst, std::string detail) {
  return {std::move(check), inst.mode, inst.code, std::move(detail)};
}

void classify_tt_subset(const Instance& inst, Classified& out) {
  const auto h = inst.oriented();
  auto& r = out.record;
  const auto report = self_transitivity_report(h);
  r.tt_embedded = report.tt_embedded;
  r.transitive = report.transitive;
  r.self_transitive = report.self_transitive();
  if (!report.self_transitive()) return;
  r.witness = recover_cyclic_perm(h).to_string();
  if (const auto odd = evenness_violations(h); !odd.empty()) {
    const auto& q = odd.front();
    out.contradictions.push_back(contradiction("evenness", inst, "odd quadruple {" + std::to_string(q[0]) + "," +
                                                                      std::to_string(q[1]) + "," + std::to_string(q[2]) +
                                                                      "," + std::to_string(q[3]) + "}"));
  }
}

void classify_oriented(const Instance& inst, const SearchLimits& limits, Classified& out) {
  const auto h = inst.oriented();
  auto& r = out.record;
  r.transitive = is_transitive_pair_rule(h);
  r.tt_embedded = h.is_tt_embedded();
  r.self_transitive = *r.tt_embedded ? std::optional<bool>(is_self_transitive(h)) : std::optional<bool>(false);
  if (!*r.transitive) return;
  r.comparability = true;
  r.complement_comparability =
      find_transitive_orientation(complement_unoriented(h.support()), limits).orientation.has_value();
  const auto exact = extend_exact(h, limits);
  r.extendable = exact.verdict == ExtensionVerdict::Witness;
  if (exact.witness) r.witness = exact.witness->to_string();
  if (*r.complement_comparability) {
    try {
      const auto sufficient = extend_sufficient(h, limits);
      if (sufficient.witness) {
        r.sufficient_witness = sufficient.witness->to_string();
        if (!induces_all(*sufficient.witness, h)) {
          out.contradictions.push_back(contradiction("sufficient_witness", inst, *r.sufficient_witness));
        }
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::InternalContradiction) throw;
      out.contradictions.push_back(contradiction("union", inst, e.what()));
    }
    if (!*r.extendable) {
      out.contradictions.push_back(contradiction("complement_extension", inst, "complement orientable but no extension exists"));
    }
  }
}

void classify_unoriented(const Instance& inst, const SearchLimits& limits, Classified& out) {
  const auto h = inst.unoriented();
  auto& r = out.record;
  try {
    const auto result = is_cyclic_permutation_hypergraph(h, limits);
    r.comparability = result.comparability;
    r.complement_comparability = result.complement_comparability;
    r.permutation_hypergraph = result.is_permutation_hypergraph;
    if (result.witness) r.witness = result.witness->to_string();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::InternalContradiction) throw;
    r.comparability = find_transitive_orientation(h, limits).orientation.has_value();
    r.complement_comparability = find_transitive_orientation(complement_unoriented(h), limits).orientation.has_value();
    r.permutation_hypergraph = false;
    out.contradictions.push_back(contradiction("characterization", inst, e.what()));
  }
  if (!*r.comparability || !*r.complement_comparability) return;

  // Every transitive orientation of H against every one of its complement.
  const auto sides = enumerate_transitive_orientations(h, limits.max_orientations, limits);
  const auto others = enumerate_transitive_orientations(complement_unoriented(h), limits.max_orientations, limits);
  if (sides.truncated || others.truncated) {
    throw Error(ErrorKind::CapExceeded, "more than " + std::to_string(limits.max_orientations) +
                                            " transitive orientations for " + inst.code);
  }
  for (const auto& a : sides.orientations) {
    for (const auto& b : others.orientations) {
      ++out.union_pairs;
      if (!union_check_tt(a, b).is_tt) {
        out.contradictions.push_back(contradiction("union", inst, a.code() + " + " + b.code()));
      }
    }
  }
}

}  // namespace

Classified classify(const Instance& inst, const SearchLimits& limits) {
  Classified out;
  out.record.n = inst.n;
  out.record.mode = inst.mode;
  out.record.code = inst.code;
  out.record.edges = static_cast<int>(std::count_if(inst.code.begin(), inst.code.end(), [](char c) { return c != '0'; }));
  switch (inst.mode) {
    case InstanceMode::TTSubsets: classify_tt_subset(inst, out); break;
    case InstanceMode::Oriented: classify_oriented(inst, limits, out); break;
    case InstanceMode::Unoriented: classify_unoriented(inst, limits, out); break;
  }
  return out;
}

std::optional<std::string> record_inconsistency(const CensusRecord& r) {
  const auto is = [](const std::optional<bool>& f) { return f.value_or(false); };
  const auto is_not = [](const std::optional<bool>& f) { return f.has_value() && !*f; };
  if (is(r.self_transitive) && !(is(r.transitive) && is(r.tt_embedded))) {
    return "self_transitive without transitive and tt_embedded";
  }
  if (is(r.permutation_hypergraph) && !(is(r.comparability) && is(r.complement_comparability))) {
    return "permutation_hypergraph without comparability of both sides";
  }
  if (is_not(r.permutation_hypergraph) && is(r.comparability) && is(r.complement_comparability)) {
    return "both sides comparability but not a permutation hypergraph";
  }
  if (is(r.permutation_hypergraph) != r.witness.has_value() && r.mode == InstanceMode::Unoriented) {
    return "permutation_hypergraph and witness disagree";
  }
  if (r.mode == InstanceMode::TTSubsets) {
    if (!is(r.tt_embedded)) return "tt_subsets record not tt_embedded";
    if (is(r.self_transitive) != r.witness.has_value()) return "self_transitive and witness disagree";
  }
  if (r.mode == InstanceMode::Oriented) {
    if (!is(r.transitive)) return "oriented record not transitive";
    if (is(r.extendable) != r.witness.has_value()) return "extendable and witness disagree";
    if (r.sufficient_witness && !is(r.extendable)) return "sufficient witness on a non-extendable record";
    if (is(r.complement_comparability) && !is(r.extendable)) return "orientable complement but not extendable";
  }
  return std::nullopt;
}

namespace {

json flag(const std::optional<bool>& f) { return f ? json(*f) : json(nullptr); }
json text(const std::optional<std::string>& s) { return s ? json(*s) : json(nullptr); }

std::optional<bool> read_flag(const json& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_null()) return std::nullopt;
  return v.get<bool>();
}

std::optional<std::string> read_text(const json& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_null()) return std::nullopt;
  return v.get<std::string>();
}

json contradiction_json(const Contradiction& c) {
  return json{{"check", c.check}, {"mode", std::string(to_string(c.mode))}, {"code", c.code}, {"detail", c.detail}};
}

}  // namespace

std::string record_to_json(const CensusRecord& r) {
  const json j{{"n", r.n},
               {"mode", std::string(to_string(r.mode))},
               {"code", r.code},
               {"edges", r.edges},
               {"transitive", flag(r.transitive)},
               {"tt_embedded", flag(r.tt_embedded)},
               {"self_transitive", flag(r.self_transitive)},
               {"comparability", flag(r.comparability)},
               {"complement_comparability", flag(r.complement_comparability)},
               {"permutation_hypergraph", flag(r.permutation_hypergraph)},
               {"extendable", flag(r.extendable)},
               {"witness", text(r.witness)},
               {"sufficient_witness", text(r.sufficient_witness)}};
  return j.dump();
}

CensusRecord record_from_json(std::string_view line) {
  try {
    const json j = json::parse(line);
    CensusRecord r;
    r.n = j.at("n").get<int>();
    r.mode = parse_instance_mode(j.at("mode").get<std::string>());
    r.code = j.at("code").get<std::string>();
    r.edges = j.at("edges").get<int>();
    r.transitive = read_flag(j, "transitive");
    r.tt_embedded = read_flag(j, "tt_embedded");
    r.self_transitive = read_flag(j, "self_transitive");
    r.comparability = read_flag(j, "comparability");
    r.complement_comparability = read_flag(j, "complement_comparability");
    r.permutation_hypergraph = read_flag(j, "permutation_hypergraph");
    r.extendable = read_flag(j, "extendable");
    r.witness = read_text(j, "witness");
    r.sufficient_witness = read_text(j, "sufficient_witness");
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("census record: ") + e.what());
  }
}

namespace {

std::uint64_t count_hypertournament_range(int n, std::uint64_t begin, std::uint64_t end) {
  const int length = TripleIndex::of(n).size();
  OrientedThreeHypergraph h(n);
  std::uint64_t count = 0;
  for (std::uint64_t mask = begin; mask < end; ++mask) {
    for (int j = 0; j < length; ++j) {
      const bool backward = (mask >> (length - 1 - j)) & 1U;
      h.set_state_at(j, backward ? EdgeState::Backward : EdgeState::Forward);
    }
    count += is_transitive_pair_rule(h);
  }
  return count;
}

void check_census_bound(int n) {
  if (n < 3 || n > kMaxCensusVertices) {
    throw Error(ErrorKind::CapExceeded, "census supports 3 <= n <= " + std::to_string(kMaxCensusVertices) + ", got " +
                                            std::to_string(n));
  }
}

struct Partial {
  std::vector<CensusRecord> records;
  std::vector<Contradiction> contradictions;
  std::uint64_t union_pairs = 0;

  void add(Classified&& c) {
    union_pairs += c.union_pairs;
    records.push_back(std::move(c.record));
    for (auto& x : c.contradictions) contradictions.push_back(std::move(x));
  }

  void append(Partial&& other) {
    union_pairs += other.union_pairs;
    std::move(other.records.begin(), other.records.end(), std::back_inserter(records));
    std::move(other.contradictions.begin(), other.contradictions.end(), std::back_inserter(contradictions));
  }
};

CensusResult summarize(int n, Partial&& all, std::uint64_t hypertournaments, const SearchLimits& limits) {
  const int length = TripleIndex::of(n).size();
  json tt{{"instances", power(2, length)}, {"transitive", 0}, {"self_transitive", 0},
          {"expected_self_transitive", factorial(n - 1)}, {"distinct_recovered", 0}, {"evenness_violations", 0}};
  json oriented{{"instances", power(3, length)}, {"transitive", 0}, {"complete_transitive", 0},
                {"complement_orientable", 0}, {"extendable", 0}, {"not_extendable", 0},
                {"sufficient_witnesses", 0}, {"complement_extension_violations", 0}, {"union_violations", 0}};
  json unoriented{{"instances", power(2, length)}, {"comparability", 0}, {"both_comparability", 0},
                  {"permutation_hypergraphs", 0}, {"union_pairs_checked", all.union_pairs}, {"union_violations", 0},
                  {"characterization_failures", 0}};
  const auto bump = [](json& j, const char* key) { j[key] = j[key].get<std::uint64_t>() + 1; };

  std::set<std::string> recovered;
  int min_edges = length + 1;
  std::set<std::string> min_classes;
  for (const auto& r : all.records) {
    const auto is = [](const std::optional<bool>& f) { return f.value_or(false); };
    switch (r.mode) {
      case InstanceMode::TTSubsets:
        if (is(r.transitive)) bump(tt, "transitive");
        if (is(r.self_transitive)) {
          bump(tt, "self_transitive");
          recovered.insert(*r.witness);
        }
        break;
      case InstanceMode::Oriented:
        bump(oriented, "transitive");
        if (r.edges == length) bump(oriented, "complete_transitive");
        if (is(r.complement_comparability)) bump(oriented, "complement_orientable");
        if (r.sufficient_witness) bump(oriented, "sufficient_witnesses");
        if (is(r.extendable)) {
          bump(oriented, "extendable");
        } else {
          bump(oriented, "not_extendable");
          if (r.edges < min_edges) {
            min_edges = r.edges;
            min_classes.clear();
          }
          if (r.edges == min_edges) {
            min_classes.insert(canonical_code(OrientedThreeHypergraph::from_code(n, r.code),
                                              limits.max_isomorphism_vertices));
          }
        }
        break;
      case InstanceMode::Unoriented:
        if (is(r.comparability)) bump(unoriented, "comparability");
        if (is(r.comparability) && is(r.complement_comparability)) bump(unoriented, "both_comparability");
        if (is(r.permutation_hypergraph)) bump(unoriented, "permutation_hypergraphs");
        break;
    }
  }
  tt["distinct_recovered"] = recovered.size();
  for (const auto& c : all.contradictions) {
    if (c.check == "evenness") bump(tt, "evenness_violations");
    if (c.check == "complement_extension" || c.check == "sufficient_witness") bump(oriented, "complement_extension_violations");
    if (c.check == "union") bump(c.mode == InstanceMode::Oriented ? oriented : unoriented, "union_violations");
    if (c.check == "characterization") bump(unoriented, "characterization_failures");
  }
  oriented["min_not_extendable_edges"] = min_classes.empty() ? json(nullptr) : json(min_edges);
  oriented["min_not_extendable_classes"] = json(std::vector<std::string>(min_classes.begin(), min_classes.end()));

  const json summary{{"n", n},
                     {"hypertournaments",
                      {{"orientations", power(2, length)}, {"transitive", hypertournaments}, {"expected", factorial(n - 1)}}},
                     {"tt_subsets", tt},
                     {"oriented", oriented},
                     {"unoriented", unoriented},
                     {"contradictions", all.contradictions.size()}};
  CensusResult result;
  result.summary_json = summary.dump(2) + "\n";
  result.records = std::move(all.records);
  result.contradictions = std::move(all.contradictions);
  result.hypertournaments_transitive = hypertournaments;
  return result;
}

template <typename Block>
Partial run_blocks(int blocks, int threads, Block block) {
  std::vector<Partial> partial(static_cast<std::size_t>(blocks));
#pragma omp parallel for schedule(dynamic) num_threads(std::max(threads, 1))
  for (int b = 0; b < blocks; ++b) partial[static_cast<std::size_t>(b)] = block(b);
  Partial merged;
  for (auto& p : partial) merged.append(std::move(p));
  return merged;
}

}  // namespace

std::uint64_t count_transitive_hypertournaments_serial(int n) {
  check_census_bound(n);
  return count_hypertournament_range(n, 0, power(2, TripleIndex::of(n).size()));
}

std::uint64_t count_transitive_hypertournaments_parallel(int n, int threads) {
  check_census_bound(n);
  const std::uint64_t total = power(2, TripleIndex::of(n).size());
  const std::uint64_t chunk = std::max<std::uint64_t>(1, total / 64);
  const auto blocks = static_cast<std::int64_t>((total + chunk - 1) / chunk);
  std::uint64_t count = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : count) num_threads(std::max(threads, 1))
  for (std::int64_t b = 0; b < blocks; ++b) {
    const auto begin = static_cast<std::uint64_t>(b) * chunk;
    count += count_hypertournament_range(n, begin, std::min(total, begin + chunk));
  }
  return count;
}

CensusResult run_census(const CensusOptions& options) {
  const int n = options.n;
  check_census_bound(n);
  const auto& limits = options.limits;
  const int length = TripleIndex::of(n).size();
  const std::uint64_t binary_total = power(2, length);
  const std::uint64_t chunk = std::max<std::uint64_t>(1, binary_total / 256);
  const int binary_blocks = static_cast<int>((binary_total + chunk - 1) / chunk);

  const auto binary_pass = [&](InstanceMode mode) {
    return run_blocks(binary_blocks, options.threads, [&](int b) {
      Partial p;
      const auto begin = static_cast<std::uint64_t>(b) * chunk;
      const auto end = std::min(binary_total, begin + chunk);
      for (std::uint64_t i = begin; i < end; ++i) p.add(classify({mode, n, code_at(i, length, 2)}, limits));
      return p;
    });
  };

  Partial all = binary_pass(InstanceMode::TTSubsets);

  const int prefix_length = std::min(length, 4);
  const int prefixes = static_cast<int>(power(3, prefix_length));
  all.append(run_blocks(prefixes, options.threads, [&](int b) {
    Partial p;
    for_each_transitive_oriented(n, code_at(static_cast<std::uint64_t>(b), prefix_length, 3), [&](std::string_view code) {
      p.add(classify({InstanceMode::Oriented, n, std::string(code)}, limits));
    });
    return p;
  }));

  all.append(binary_pass(InstanceMode::Unoriented));

  return summarize(n, std::move(all), count_transitive_hypertournaments_parallel(n, options.threads), limits);
}

CensusResult run_census_serial(int n, const SearchLimits& limits) {
  check_census_bound(n);
  Partial all;
  for_each_instance(n, InstanceMode::TTSubsets, false, [&](const Instance& inst) { all.add(classify(inst, limits)); });
  for_each_instance(n, InstanceMode::Oriented, false, [&](const Instance& inst) {
    if (is_transitive_pair_rule(inst.oriented())) all.add(classify(inst, limits));
  });
  for_each_instance(n, InstanceMode::Unoriented, false, [&](const Instance& inst) { all.add(classify(inst, limits)); });
  return summarize(n, std::move(all), count_transitive_hypertournaments_serial(n), limits);
}

void write_census(const CensusResult& result, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorKind::IoError, dir.string() + ": " + ec.message());
  const auto open = [](const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::IoError, path.string() + ": cannot open for writing");
    return out;
  };
  const auto close = [](std::ofstream& out, const std::filesystem::path& path) {
    out.close();
    if (!out) throw Error(ErrorKind::IoError, path.string() + ": write failed");
  };

  const auto records_path = dir / "records.jsonl";
  auto records = open(records_path);
  for (const auto& r : result.records) records << record_to_json(r) << '\n';
  close(records, records_path);

  const auto contradictions_path = dir / "contradictions.jsonl";
  auto contradictions = open(contradictions_path);
  for (const auto& c : result.contradictions) contradictions << contradiction_json(c).dump() << '\n';
  close(contradictions, contradictions_path);

  const auto summary_path = dir / "summary.json";
  auto summary = open(summary_path);
  summary << result.summary_json;
  close(summary, summary_path);
}

}  // namespace cyclord
