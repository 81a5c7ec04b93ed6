#include "cyclord/format.hpp"

#include <sstream>

#include "cyclord/error.hpp"

namespace cyclord {

namespace {

[[noreturn]] void fail(ErrorKind kind, int line, const std::string& message) {
  throw Error(kind, "line " + std::to_string(line) + ": " + message);
}

int parse_int(const std::string& token, int line) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(token, &used);
    if (used == token.size()) return v;
  } catch (const std::exception&) {
  }
  fail(ErrorKind::ParseError, line, "expected an integer, got '" + token + "'");
}

}  // namespace

InstanceFile parse_instance_file(std::string_view text) {
  InstanceFile file;
  bool have_mode = false;
  bool have_n = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream fields(raw);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;

    const std::string& key = tokens[0];
    if (key == "mode") {
      if (have_mode) fail(ErrorKind::ParseError, line, "duplicate mode line");
      if (tokens.size() != 2 || (tokens[1] != "oriented" && tokens[1] != "unoriented")) {
        fail(ErrorKind::ParseError, line, "expected 'mode oriented' or 'mode unoriented'");
      }
      file.oriented = tokens[1] == "oriented";
      have_mode = true;
    } else if (key == "n") {
      if (have_n) fail(ErrorKind::ParseError, line, "duplicate n line");
      if (tokens.size() != 2) fail(ErrorKind::ParseError, line, "expected 'n <count>'");
      file.n = parse_int(tokens[1], line);
      if (file.n < 0 || file.n > kMaxVertices) {
        fail(ErrorKind::ParseError, line, "n must lie in [0, " + std::to_string(kMaxVertices) + "]");
      }
      have_n = true;
    } else if (key == "e" || key == "u") {
      if (!have_mode || !have_n) fail(ErrorKind::ParseError, line, "record before 'mode' and 'n' header");
      if ((key == "e") != file.oriented) {
        fail(ErrorKind::ParseError, line, "'" + key + "' record in " + (file.oriented ? "oriented" : "unoriented") + " file");
      }
      if (tokens.size() != 4) fail(ErrorKind::ParseError, line, "expected three vertices");
      InstanceFile::Record record{line, {parse_int(tokens[1], line), parse_int(tokens[2], line), parse_int(tokens[3], line)}};
      for (Vertex v : record.vertices) {
        if (v < 1 || v > file.n) fail(ErrorKind::ParseError, line, "vertex " + std::to_string(v) + " outside [1, n]");
      }
      file.records.push_back(record);
    } else {
      fail(ErrorKind::ParseError, line, "unknown record type '" + key + "'");
    }
  }
  if (!have_mode) throw Error(ErrorKind::ParseError, "missing 'mode' line");
  if (!have_n) throw Error(ErrorKind::ParseError, "missing 'n' line");
  return file;
}

TernaryRelation to_relation(const InstanceFile& file) {
  TernaryRelation r{file.n, {}};
  for (const auto& rec : file.records) r.triples.push_back(rec.vertices);
  return r;
}

Instance3h parse_instance(std::string_view text) {
  const InstanceFile file = parse_instance_file(text);
  const auto checked = [&file](const InstanceFile::Record& rec) {
    const auto& v = rec.vertices;
    for (Vertex x : v) {
      if (x < 1 || x > file.n) fail(ErrorKind::Degenerate, rec.line, "vertex " + std::to_string(x) + " outside [" + std::to_string(file.n) + "]");
    }
    if (v[0] == v[1] || v[1] == v[2] || v[0] == v[2]) fail(ErrorKind::Degenerate, rec.line, "repeated vertex");
  };
  if (!file.oriented) {
    UnorientedThreeHypergraph h(file.n);
    for (const auto& rec : file.records) {
      checked(rec);
      h.insert(Triple::of(rec.vertices[0], rec.vertices[1], rec.vertices[2]));
    }
    return h;
  }
  OrientedThreeHypergraph h(file.n);
  for (const auto& rec : file.records) {
    checked(rec);
    const auto e = canonical_oriented_triple(rec.vertices[0], rec.vertices[1], rec.vertices[2]);
    if (const auto o = h.orientation(e.support); o && *o != e.orientation) {
      fail(ErrorKind::AsymmetryViolation, rec.line, "both orientations of {" + std::to_string(e.support.a) + "," +
                                                        std::to_string(e.support.b) + "," + std::to_string(e.support.c) + "}");
    }
    h.set(e);
  }
  return h;
}

std::string render(const OrientedThreeHypergraph& h) {
  std::string out = "mode oriented\nn " + std::to_string(h.vertex_count()) + "\n";
  for (const auto& e : h.edges()) {
    const auto s = e.cyclic_sequence();
    out += "e " + std::to_string(s[0]) + " " + std::to_string(s[1]) + " " + std::to_string(s[2]) + "\n";
  }
  return out;
}

std::string render(const UnorientedThreeHypergraph& h) {
  std::string out = "mode unoriented\nn " + std::to_string(h.vertex_count()) + "\n";
  for (const auto& t : h.edges()) {
    out += "u " + std::to_string(t.a) + " " + std::to_string(t.b) + " " + std::to_string(t.c) + "\n";
  }
  return out;
}

std::string render(const Instance3h& instance) {
  return std::visit([](const auto& h) { return render(h); }, instance);
}

}  // namespace cyclord
