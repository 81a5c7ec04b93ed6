// cyclord: command-line front end for partial cyclic orders as oriented 3-hypergraphs.
//
// Exit codes: 0 positive answer, 1 negative answer, 2 usage or parse error,
// 3 search cap exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "cyclord/cyclord.hpp"

namespace {

using namespace cyclord;
using nlohmann::json;

constexpr int kPositive = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kCap = 3;

struct Options {
  bool json = false;
  std::string input;
  Vertex vertex = 0;
  bool sufficient = false;
  bool exact = false;
  bool count = false;
  int threads = 1;
  int census_n = 0;
  std::string out;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

void emit(const json& doc) { std::cout << doc.dump(2) << '\n'; }

std::string_view violation_kind(AxiomViolation::Kind kind) {
  switch (kind) {
    case AxiomViolation::Kind::Degenerate: return "degenerate";
    case AxiomViolation::Kind::Asymmetry: return "asymmetry";
    case AxiomViolation::Kind::Transitivity: return "transitivity";
    case AxiomViolation::Kind::Missing: return "missing";
  }
  return "unknown";
}

OrientedThreeHypergraph require_oriented(const Instance3h& instance, std::string_view command) {
  if (const auto* h = std::get_if<OrientedThreeHypergraph>(&instance)) return *h;
  throw UsageError(std::string(command) + " needs an oriented instance");
}

int cmd_validate(const Options& o) {
  const auto text = read_input(o.input);
  const auto file = parse_instance_file(text);
  if (!file.oriented) {
    // Unoriented files only need to parse to be valid.
    const auto h = std::get<UnorientedThreeHypergraph>(parse_instance(text));
    if (o.json) {
      emit({{"mode", "unoriented"}, {"n", h.vertex_count()}, {"edges", h.edge_count()}, {"valid", true}});
    } else {
      std::cout << "unoriented 3-hypergraph, n " << h.vertex_count() << ", " << h.edge_count() << " edges\n";
    }
    return kPositive;
  }
  const auto report = axiom_report(to_relation(file));
  if (o.json) {
    json violations = json::array();
    for (const auto& v : report.violations) {
      violations.push_back({{"kind", violation_kind(v.kind)}, {"vertices", v.vertices}, {"message", v.message}});
    }
    emit({{"is_cyclic_consistent", report.is_cyclic_consistent},
          {"is_asymmetric", report.is_asymmetric},
          {"is_transitive", report.is_transitive},
          {"is_total", report.is_total},
          {"is_partial_cyclic_order", report.is_partial_cyclic_order()},
          {"is_complete_cyclic_order", report.is_complete_cyclic_order()},
          {"violations", violations}});
  } else {
    const auto yes_no = [](bool b) { return b ? "yes" : "no"; };
    std::cout << "cyclic consistent: " << yes_no(report.is_cyclic_consistent) << '\n'
              << "asymmetric: " << yes_no(report.is_asymmetric) << '\n'
              << "transitive: " << yes_no(report.is_transitive) << '\n'
              << "total: " << yes_no(report.is_total) << '\n'
              << (report.is_complete_cyclic_order()  ? "complete cyclic order"
                  : report.is_partial_cyclic_order() ? "partial cyclic order"
                                                     : "not a partial cyclic order")
              << '\n';
    for (const auto& v : report.violations) {
      if (v.kind != AxiomViolation::Kind::Missing) std::cerr << "violation: " << v.message << '\n';
    }
  }
  return report.is_partial_cyclic_order() ? kPositive : kNegative;
}

int cmd_orient(const Options& o, const SearchLimits& limits) {
  const auto instance = parse_instance(read_input(o.input));
  const auto h = std::holds_alternative<UnorientedThreeHypergraph>(instance)
                     ? std::get<UnorientedThreeHypergraph>(instance)
                     : std::get<OrientedThreeHypergraph>(instance).support();
  const auto result = find_transitive_orientation(h, limits);
  if (o.json) {
    json doc = {{"orientable", result.orientation.has_value()},
                {"stats",
                 {{"decisions", result.stats.decisions},
                  {"propagations", result.stats.propagations},
                  {"conflicts", result.stats.conflicts}}}};
    doc["orientation"] = result.orientation ? json(result.orientation->code()) : json(nullptr);
    emit(doc);
  } else if (result.orientation) {
    std::cout << render(*result.orientation);
  } else {
    std::cout << "UNSAT\n";
  }
  return result.orientation ? kPositive : kNegative;
}

int cmd_recover(const Options& o) {
  const auto h = require_oriented(parse_instance(read_input(o.input)), "recover");
  const auto phi = recover_cyclic_perm(h);
  if (o.json) {
    emit({{"cyclic_permutation", phi.canonical()}, {"text", phi.to_string()}});
  } else {
    std::cout << phi.to_string() << '\n';
  }
  return kPositive;
}

int cmd_complement(const Options& o) {
  const auto instance = parse_instance(read_input(o.input));
  const Instance3h result = std::holds_alternative<OrientedThreeHypergraph>(instance)
                                ? Instance3h(complement_in_tt(std::get<OrientedThreeHypergraph>(instance)))
                                : Instance3h(complement_unoriented(std::get<UnorientedThreeHypergraph>(instance)));
  if (o.json) {
    std::visit(
        [](const auto& h) {
          emit({{"mode", std::is_same_v<std::decay_t<decltype(h)>, OrientedThreeHypergraph> ? "oriented" : "unoriented"},
                {"n", h.vertex_count()},
                {"code", h.code()}});
        },
        result);
  } else {
    std::cout << render(result);
  }
  return kPositive;
}

int cmd_link(const Options& o) {
  const auto h = require_oriented(parse_instance(read_input(o.input)), "link");
  const int n = h.vertex_count();
  if (o.vertex < 1 || o.vertex > n) throw UsageError("--vertex must lie in [1, " + std::to_string(n) + "]");
  // link_of relabels the other vertices to [n - 1]; print original labels.
  std::vector<Vertex> label;
  for (Vertex v = 1; v <= n; ++v)
    if (v != o.vertex) label.push_back(v);
  const auto arcs = link_of(h, o.vertex).arcs();
  if (o.json) {
    json out = json::array();
    for (const auto& [u, w] : arcs) out.push_back({label[static_cast<std::size_t>(u - 1)], label[static_cast<std::size_t>(w - 1)]});
    emit({{"vertex", o.vertex}, {"arcs", out}});
  } else {
    for (const auto& [u, w] : arcs) {
      std::cout << label[static_cast<std::size_t>(u - 1)] << ' ' << label[static_cast<std::size_t>(w - 1)] << '\n';
    }
  }
  return kPositive;
}

int cmd_extend(const Options& o, const SearchLimits& limits) {
  if (o.sufficient == o.exact) throw UsageError("extend needs exactly one of --sufficient, --exact");
  if (o.count && !o.exact) throw UsageError("--count requires --exact");
  const auto t = require_oriented(parse_instance(read_input(o.input)), "extend");
  const auto ext = o.exact ? extend_exact(t, limits, {.count_witnesses = o.count, .threads = o.threads})
                           : extend_sufficient(t, limits);
  const char* verdict = ext.verdict == ExtensionVerdict::Witness        ? "Witness"
                        : ext.verdict == ExtensionVerdict::Inconclusive ? "Inconclusive"
                                                                        : "NotExtendable";
  if (o.json) {
    json doc = {{"verdict", verdict}, {"witness", ext.witness ? json(ext.witness->to_string()) : json(nullptr)}};
    if (ext.witness_count) doc["witness_count"] = *ext.witness_count;
    emit(doc);
  } else {
    std::cout << (ext.witness ? ext.witness->to_string() : std::string(verdict)) << '\n';
    if (ext.witness_count) std::cout << "witnesses: " << *ext.witness_count << '\n';
  }
  return ext.verdict == ExtensionVerdict::Witness ? kPositive : kNegative;
}

int cmd_census(const Options& o, const SearchLimits& limits) {
  const auto result = run_census({.n = o.census_n, .threads = o.threads, .limits = limits});
  write_census(result, o.out);
  std::cout << result.summary_json;
  for (const auto& c : result.contradictions) {
    std::cerr << "contradiction: " << c.check << ' ' << to_string(c.mode) << ' ' << c.code << ": " << c.detail << '\n';
  }
  return result.contradictions.empty() ? kPositive : kNegative;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CapExceeded: return kCap;
    case ErrorKind::ParseError:
    case ErrorKind::IoError:
    case ErrorKind::Degenerate:
    case ErrorKind::AsymmetryViolation:
    case ErrorKind::InvalidSize:
    case ErrorKind::SizeMismatch: return kUsage;
    default: return kNegative;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partial cyclic orders as oriented 3-hypergraphs"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Machine-readable output (sorted keys)");

  const auto add_input = [&](CLI::App* sub) { sub->add_option("input", o.input, "Instance file, '-' for stdin")->required(); };

  auto* validate = app.add_subcommand("validate", "Check the partial cyclic order axioms");
  add_input(validate);
  auto* orient = app.add_subcommand("orient", "Find a transitive orientation");
  add_input(orient);
  auto* recover = app.add_subcommand("recover", "Recover the cyclic permutation of a self-transitive hypergraph");
  add_input(recover);
  auto* complement = app.add_subcommand("complement", "Complement in TT_n (oriented) or in all 3-sets (unoriented)");
  add_input(complement);
  auto* link = app.add_subcommand("link", "Print the link of a vertex as arcs");
  add_input(link);
  link->add_option("--vertex", o.vertex, "Vertex whose link is printed")->required();
  auto* extend = app.add_subcommand("extend", "Decide total extendability");
  add_input(extend);
  extend->add_flag("--sufficient", o.sufficient, "Complement-orientation test (may be inconclusive)");
  extend->add_flag("--exact", o.exact, "Scan all cyclic orderings");
  extend->add_flag("--count", o.count, "Also count inducing orderings (--exact only)");
  extend->add_option("--threads", o.threads, "Worker threads for --exact")->check(CLI::PositiveNumber);
  auto* census = app.add_subcommand("census", "Exhaustive census with JSONL output");
  census->add_option("--n", o.census_n, "Vertex count")->required();
  census->add_option("--out", o.out, "Output directory")->required();
  census->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    const auto limits = SearchLimits::from_environment();
    if (validate->parsed()) return cmd_validate(o);
    if (orient->parsed()) return cmd_orient(o, limits);
    if (recover->parsed()) return cmd_recover(o);
    if (complement->parsed()) return cmd_complement(o);
    if (link->parsed()) return cmd_link(o);
    if (extend->parsed()) return cmd_extend(o, limits);
    if (census->parsed()) return cmd_census(o, limits);
  } catch (const UsageError& e) {
    std::cerr << "cyclord: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "cyclord: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return kUsage;
}
