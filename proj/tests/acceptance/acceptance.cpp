// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any fail.
//
// usage: acceptance <cyclord binary> [artifact dir]

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include <unistd.h>

#include "cyclord/cyclord.hpp"
#include "oracle.hpp"

namespace fs = std::filesystem;
using namespace cyclord;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string cli_binary;
fs::path artifact_dir = ".";

std::string unoriented_code(int n, std::uint64_t mask) { return oracle::all_codes_digit(static_cast<int>(binomial(n, 3)), mask, 2); }

std::uint64_t subset_count(int n) { return std::uint64_t{1} << binomial(n, 3); }

// 1. Cyclic permutation round-trips.
Outcome round_trips() {
  Outcome out;
  std::ostringstream detail;
  for (int n = 3; n <= 7; ++n) {
    int failures = 0;
    const auto perms = all_cyclic_permutations(n);
    if (perms.size() != oracle::factorial(n - 1)) ++failures;
    for (const auto& phi : perms) {
      const auto h = hypergraph_of_cyclic_perm(phi);
      if (!is_self_transitive(h)) ++failures;
      if (complement_in_tt(h) != hypergraph_of_cyclic_perm(reverse_cyclic_perm(phi))) ++failures;
      if (recover_cyclic_perm(h) != phi) ++failures;
    }
    if (failures) out.pass = false;
    detail << "n=" << n << ": " << perms.size() << " classes, " << failures << " failures; ";
  }
  out.detail = detail.str();
  return out;
}

// 2. Transitive hypertournaments.
Outcome hypertournament_counts() {
  Outcome out;
  std::ostringstream detail;
  for (int n = 4; n <= 5; ++n) {
    std::uint64_t library = 0;
    std::uint64_t brute = 0;
    std::set<std::vector<Vertex>> orderings;
    for (std::uint64_t mask = 0; mask < subset_count(n); ++mask) {
      std::string code = unoriented_code(n, mask);
      for (auto& ch : code) ch = ch == '0' ? '1' : '2';
      const auto h = OrientedThreeHypergraph::from_code(n, code);
      if (is_transitive_pair_rule(h)) {
        ++library;
        orderings.insert(hypertournament_to_cyclic_ordering(h).canonical());
      }
      if (oracle::transitive(oracle::relation_from_code(n, code))) ++brute;
    }
    const std::uint64_t expected = oracle::factorial(n - 1);
    const std::uint64_t kernel = count_transitive_hypertournaments_parallel(n, 4);
    if (library != expected || brute != expected || kernel != expected || orderings.size() != expected) out.pass = false;
    detail << "n=" << n << ": " << library << " (oracle " << brute << ", kernel " << kernel << ", expected " << expected
           << "); ";
  }
  out.detail = detail.str();
  return out;
}

// 3. Self-transitive spanning subhypergraphs of TT_n.
Outcome self_transitive_counts() {
  Outcome out;
  std::ostringstream detail;
  for (int n = 4; n <= 5; ++n) {
    std::uint64_t count = 0;
    std::uint64_t brute = 0;
    int recover_failures = 0;
    std::set<CyclicPermutation> recovered;
    for (std::uint64_t mask = 0; mask < subset_count(n); ++mask) {
      const std::string code = unoriented_code(n, mask);
      std::string complement = code;
      for (auto& ch : complement) ch = ch == '1' ? '0' : '1';
      if (oracle::transitive(oracle::relation_from_code(n, code)) &&
          oracle::transitive(oracle::relation_from_code(n, complement)))
        ++brute;
      const auto h = OrientedThreeHypergraph::from_code(n, code);
      if (!is_self_transitive(h)) continue;
      ++count;
      const auto phi = recover_cyclic_perm(h);
      recovered.insert(phi);
      std::vector<int> seq;
      if (!oracle::recover_recursive(n, code, seq) || CyclicPermutation(seq) != phi) ++recover_failures;
    }
    const std::uint64_t expected = oracle::factorial(n - 1);
    if (count != expected || brute != expected || recovered.size() != expected || recover_failures) out.pass = false;
    detail << "n=" << n << ": " << count << " self-transitive (oracle " << brute << "), " << recovered.size()
           << " distinct recovered, " << recover_failures << " oracle disagreements; ";
  }
  out.detail = detail.str();
  return out;
}

// 4. Evenness over TT_5.
Outcome evenness() {
  const int n = 5;
  const auto& idx = TripleIndex::of(n);
  std::uint64_t self_transitive = 0;
  std::uint64_t odd = 0;
  std::uint64_t reported = 0;
  for (std::uint64_t mask = 0; mask < subset_count(n); ++mask) {
    const auto h = OrientedThreeHypergraph::from_code(n, unoriented_code(n, mask));
    if (!is_self_transitive(h)) continue;
    ++self_transitive;
    reported += evenness_violations(h).size();
    for (const auto& q : idx.quadruples()) {
      int edges = 0;
      for (int skip = 0; skip < 4; ++skip) {
        std::vector<Vertex> t;
        for (int k = 0; k < 4; ++k)
          if (k != skip) t.push_back(q[static_cast<std::size_t>(k)]);
        if (h.state(Triple::of(t[0], t[1], t[2])) != EdgeState::Absent) ++edges;
      }
      if (edges % 2) ++odd;
    }
  }
  return {odd == 0 && reported == 0 && self_transitive == 24,
          std::to_string(self_transitive) + " self-transitive subsets, " + std::to_string(odd) + " odd quadruples (" +
              std::to_string(reported) + " reported)"};
}

// 5. Pair rule vs quadruple-local check.
Outcome checker_equivalence() {
  std::uint64_t disagreements = 0;
  std::uint64_t transitive4 = 0;
  for (std::uint64_t c = 0; c < 81; ++c) {
    const auto code = oracle::all_codes_digit(4, c, 3);
    const auto h = OrientedThreeHypergraph::from_code(4, code);
    const bool pair = is_transitive_pair_rule(h);
    if (pair != is_transitive_quadruple_local(h) || pair != oracle::transitive(oracle::relation_from_code(4, code)))
      ++disagreements;
    transitive4 += pair;
  }
  // Half uniform random codes, half random subsets of random cyclic orderings,
  // so both verdicts occur often.
  std::mt19937_64 rng(0x5eed2026);
  const int n = 6;
  const auto& idx = TripleIndex::of(n);
  std::uint64_t transitive6 = 0;
  const int trials = 10000;
  for (int trial = 0; trial < trials; ++trial) {
    OrientedThreeHypergraph h(n);
    if (trial % 2 == 0) {
      for (int i = 0; i < idx.size(); ++i) h.set_state_at(i, static_cast<EdgeState>(rng() % 3));
    } else {
      std::vector<Vertex> seq{1, 2, 3, 4, 5, 6};
      std::shuffle(seq.begin(), seq.end(), rng);
      const auto full = hypertournament_of(CyclicPermutation(seq));
      const unsigned keep = 1 + static_cast<unsigned>(rng() % 4);
      for (int i = 0; i < idx.size(); ++i)
        if (rng() % 4 < keep) h.set_state_at(i, full.state_at(i));
    }
    const bool pair = is_transitive_pair_rule(h);
    if (pair != is_transitive_quadruple_local(h) || pair != oracle::transitive(oracle::relation_from_code(n, h.code())))
      ++disagreements;
    transitive6 += pair;
  }
  return {disagreements == 0, "81 instances (n=4, " + std::to_string(transitive4) + " transitive) and " +
                                  std::to_string(trials) + " random (n=6, " + std::to_string(transitive6) +
                                  " transitive): " + std::to_string(disagreements) + " disagreements"};
}

// 6. Union of transitive orientations of H and its complement.
Outcome union_of_orientations() {
  Outcome out;
  std::ostringstream detail;
  std::vector<std::string> artifact;
  for (int n = 4; n <= 5; ++n) {
    std::uint64_t hypergraphs = 0;
    std::uint64_t pairs = 0;
    std::uint64_t violations = 0;
    for (std::uint64_t mask = 0; mask < subset_count(n); ++mask) {
      const auto h = UnorientedThreeHypergraph::from_code(n, unoriented_code(n, mask));
      const auto a = enumerate_transitive_orientations(h);
      if (a.orientations.empty()) continue;
      const auto b = enumerate_transitive_orientations(complement_unoriented(h));
      if (b.orientations.empty()) continue;
      if (a.truncated || b.truncated) {
        out.pass = false;
        detail << "truncated enumeration at n=" << n << "; ";
      }
      ++hypergraphs;
      for (const auto& x : a.orientations)
        for (const auto& y : b.orientations) {
          ++pairs;
          const auto check = union_check_tt(x, y);
          if (!check.is_tt) {
            ++violations;
            artifact.push_back(R"({"check":"union","kind":")" + std::string(to_string(ErrorKind::InternalContradiction)) +
                               R"(","n":)" + std::to_string(n) + R"(,"a":")" + x.code() + R"(","b":")" + y.code() + "\"}");
          }
        }
    }
    if (violations) out.pass = false;
    detail << "n=" << n << ": " << hypergraphs << " hypergraphs, " << pairs << " pairs, " << violations
           << " violations; ";
  }
  if (!artifact.empty()) {
    const auto path = artifact_dir / "union_contradictions.jsonl";
    std::ofstream f(path);
    for (const auto& line : artifact) f << line << '\n';
    detail << "contradictions written to " << path.string();
  }
  out.detail = detail.str();
  return out;
}

// 7. Permutation hypergraph test vs relabel search.
Outcome characterization() {
  Outcome out;
  std::ostringstream detail;
  for (int n = 3; n <= 5; ++n) {
    const auto supports = oracle::permutation_hypergraph_supports(n);
    std::uint64_t positive = 0;
    std::uint64_t disagreements = 0;
    for (std::uint64_t mask = 0; mask < subset_count(n); ++mask) {
      const std::string code = unoriented_code(n, mask);
      const auto result = is_cyclic_permutation_hypergraph(UnorientedThreeHypergraph::from_code(n, code));
      const bool expected = supports.count(code) > 0;
      if (result.is_permutation_hypergraph != expected) ++disagreements;
      if (result.is_permutation_hypergraph) {
        ++positive;
        const auto target = hypergraph_of_cyclic_perm(*result.witness).support();
        if (relabel(UnorientedThreeHypergraph::from_code(n, code), *result.relabeling) != target) ++disagreements;
      }
    }
    if (disagreements) out.pass = false;
    detail << "n=" << n << ": " << positive << " positive (oracle " << supports.size() << "), " << disagreements
           << " disagreements; ";
  }
  out.detail = detail.str();
  return out;
}

// 8. Orientable complement implies extendable, n = 5.
Outcome complement_extension() {
  const int n = 5;
  std::uint64_t transitive = 0;
  std::uint64_t premise = 0;
  std::uint64_t violations = 0;
  std::uint64_t oracle_disagreements = 0;
  for (std::uint64_t c = 0; c < oracle::power(3, 10); ++c) {
    const auto code = oracle::all_codes_digit(10, c, 3);
    const auto t = OrientedThreeHypergraph::from_code(n, code);
    if (!is_transitive_pair_rule(t)) continue;
    ++transitive;
    const auto exact = extend_exact(t, {}, {.count_witnesses = true});
    const auto witnesses = oracle::extending_orderings(oracle::relation_from_code(n, code));
    if (exact.witness_count != witnesses.size()) ++oracle_disagreements;
    const auto sufficient = extend_sufficient(t);
    if (sufficient.witness && !induces_all(*sufficient.witness, t)) ++violations;
    const bool complement_orientable =
        find_transitive_orientation(complement_unoriented(t.support())).orientation.has_value();
    if (complement_orientable) {
      ++premise;
      if (exact.verdict != ExtensionVerdict::Witness || !sufficient.witness) ++violations;
    }
  }
  return {violations == 0 && oracle_disagreements == 0 && transitive == 909,
          std::to_string(transitive) + " transitive instances, " + std::to_string(premise) +
              " with orientable complement, " + std::to_string(violations) + " violations, " +
              std::to_string(oracle_disagreements) + " witness-count disagreements"};
}

// 9. Solver vs 2^|E| brute force.
Outcome solver() {
  Outcome out;
  std::ostringstream detail;
  for (int n = 3; n <= 5; ++n) {
    std::uint64_t orientable = 0;
    std::uint64_t disagreements = 0;
    for (std::uint64_t mask = 0; mask < subset_count(n); ++mask) {
      const std::string code = unoriented_code(n, mask);
      const auto h = UnorientedThreeHypergraph::from_code(n, code);
      const auto found = OrientationSolver(h).find();
      const bool expected = oracle::orientable(n, code);
      if (found.has_value() != expected) ++disagreements;
      if (found) {
        ++orientable;
        if (found->support() != h || !is_transitive_pair_rule(*found) ||
            !oracle::transitive(oracle::relation_from_code(n, found->code())))
          ++disagreements;
      }
    }
    if (disagreements) out.pass = false;
    detail << "n=" << n << ": " << orientable << "/" << subset_count(n) << " orientable, " << disagreements
           << " disagreements; ";
  }
  out.detail = detail.str();
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

// 10. Census determinism and canonical round-trips.
Outcome determinism() {
  Outcome out;
  std::ostringstream detail;
  const auto root = fs::temp_directory_path() / ("cyclord_acceptance_" + std::to_string(::getpid()));
  fs::remove_all(root);
  for (int n = 3; n <= 5; ++n) {
    const auto first = run_census({.n = n, .threads = 1});
    const auto again = run_census({.n = n, .threads = 1});
    const auto threaded = run_census({.n = n, .threads = 4});
    const auto a = root / ("n" + std::to_string(n) + "_t1");
    const auto b = root / ("n" + std::to_string(n) + "_t4");
    write_census(first, a);
    write_census(threaded, b);
    bool same = first.summary_json == again.summary_json && first.summary_json == threaded.summary_json &&
                first.records == threaded.records;
    for (const char* f : {"records.jsonl", "summary.json", "contradictions.jsonl"}) same = same && slurp(a / f) == slurp(b / f);
    if (!same || !first.contradictions.empty()) out.pass = false;
    detail << "n=" << n << (same ? " identical" : " DIFFERENT") << ", " << first.contradictions.size()
           << " contradictions; ";
  }

  int render_failures = 0;
  for (std::uint64_t c = 0; c < 81; ++c) {
    const auto text = render(OrientedThreeHypergraph::from_code(4, oracle::all_codes_digit(4, c, 3)));
    if (render(parse_instance(text)) != text) ++render_failures;
  }
  for (std::uint64_t mask = 0; mask < subset_count(5); ++mask) {
    const auto text = render(UnorientedThreeHypergraph::from_code(5, unoriented_code(5, mask)));
    if (render(parse_instance(text)) != text) ++render_failures;
  }

  // Through the binary: complementing a canonical file twice reproduces it.
  int cli_failures = 0;
  std::mt19937 rng(7);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 3 + trial % 6;
    std::string code(static_cast<std::size_t>(binomial(n, 3)), '0');
    for (auto& ch : code) ch = static_cast<char>('0' + rng() % 2);
    const std::string text = trial % 2 ? render(OrientedThreeHypergraph::from_code(n, code))
                                       : render(UnorientedThreeHypergraph::from_code(n, code));
    const auto in = root / ("cli" + std::to_string(trial) + ".c3h");
    const auto mid = root / ("cli" + std::to_string(trial) + ".mid");
    const auto back = root / ("cli" + std::to_string(trial) + ".out");
    std::ofstream(in, std::ios::binary) << text;
    const std::string cmd = "\"" + cli_binary + "\" complement \"" + in.string() + "\" > \"" + mid.string() +
                            "\" && \"" + cli_binary + "\" complement \"" + mid.string() + "\" > \"" + back.string() + "\"";
    if (std::system(cmd.c_str()) != 0 || slurp(back) != text) ++cli_failures;
  }
  fs::remove_all(root);
  if (render_failures || cli_failures) out.pass = false;
  detail << render_failures << " render round-trip failures over 1105 files, " << cli_failures
         << " CLI round-trip failures over 12 files";
  out.detail = detail.str();
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <cyclord binary> [artifact dir]\n";
    return 2;
  }
  cli_binary = argv[1];
  if (argc > 2) artifact_dir = argv[2];

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"cyclic permutation round-trip, n=3..7", round_trips},
      {"transitive hypertournament count", hypertournament_counts},
      {"self-transitive count and distinct recovery", self_transitive_counts},
      {"evenness over TT_5", evenness},
      {"pair rule vs quadruple-local checker", checker_equivalence},
      {"union of transitive orientations is TT_n", union_of_orientations},
      {"permutation hypergraph characterization", characterization},
      {"orientable complement implies extendable, n=5", complement_extension},
      {"solver vs brute force, n<=5", solver},
      {"determinism and canonical round-trip", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << ": " << o.detail << std::endl;
  }
  std::cout << criteria.size() - static_cast<std::size_t>(failed) << "/" << criteria.size() << " criteria passed\n";
  return failed ? 1 : 0;
}
