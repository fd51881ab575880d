#include "dlf/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace dlf::io {

using nlohmann::json;

namespace {

const char* kind_name(FormatErrc k) { return k == FormatErrc::ParseError ? "ParseError" : "ValidationError"; }

std::string format_message(FormatErrc kind, const std::string& detail, int line, int column, const std::string& reason) {
  std::ostringstream os;
  os << kind_name(kind);
  if (!detail.empty()) os << " (" << detail << ")";
  if (line > 0) {
    os << " at line " << line;
    if (column > 0) os << ", column " << column;
  }
  os << ": " << reason;
  return os.str();
}

struct Token {
  std::string_view text;
  int column = 0;
};

struct Line {
  int number = 0;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '\r') ++j;
      if (j > i) line.tokens.push_back({raw.substr(i, j - i), static_cast<int>(i) + 1});
      i = j;
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

[[noreturn]] void parse_fail(const Line& line, const Token& tok, const std::string& reason) {
  throw FormatError(FormatErrc::ParseError, "", line.number, tok.column, reason);
}

[[noreturn]] void parse_fail_end(const Line& line, const std::string& reason) {
  const Token& last = line.tokens.back();
  throw FormatError(FormatErrc::ParseError, "", line.number, last.column + static_cast<int>(last.text.size()), reason);
}

int parse_count(const Line& line, std::size_t index, const char* what) {
  if (index >= line.tokens.size()) parse_fail_end(line, std::string("expected ") + what);
  const Token& tok = line.tokens[index];
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
  if (ec != std::errc() || ptr != tok.text.data() + tok.text.size() || value < 0) {
    parse_fail(line, tok, std::string("expected ") + what + ", got '" + std::string(tok.text) + "'");
  }
  return value;
}

Dart parse_dart(const Line& line, const Token& tok) {
  std::string_view s = tok.text;
  bool reversed = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    reversed = s[0] == '-';
    s.remove_prefix(1);
  }
  int e = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), e);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || e < 0) {
    parse_fail(line, tok, "expected a signed edge index such as +3 or -3, got '" + std::string(tok.text) + "'");
  }
  return dart_of(e, reversed);
}

void expect_end(const Line& line, std::size_t count) {
  if (line.tokens.size() > count) parse_fail(line, line.tokens[count], "unexpected token '" + std::string(line.tokens[count].text) + "'");
}

std::string header_name(const Line& line, std::string_view magic) {
  if (line.tokens[0].text != magic) {
    parse_fail(line, line.tokens[0], "expected header '" + std::string(magic) + " 1'");
  }
  if (parse_count(line, 1, "format version") != 1) parse_fail(line, line.tokens[1], "unsupported format version");
  std::string name;
  for (std::size_t i = 2; i < line.tokens.size(); ++i) {
    if (!name.empty()) name += ' ';
    name += line.tokens[i].text;
  }
  return name;
}

// Complex body shared by .cplx files and inline blocks in .fld files.
struct ComplexSource {
  std::string name;
  int vertex_count = -1;
  int vertices_line = 0;
  std::vector<Edge> edges;
  std::vector<int> edge_lines;
  std::vector<BoundaryWalk> faces;
  std::vector<int> face_lines;
  std::map<VertexId, std::pair<std::vector<Dart>, int>> rotation;  // vertex -> (darts, line)
  int last_line = 0;
};

void read_body_line(ComplexSource& src, const Line& line) {
  const std::string_view key = line.tokens[0].text;
  if (key == "vertices") {
    if (src.vertex_count != -1) parse_fail(line, line.tokens[0], "vertex count given twice");
    src.vertex_count = parse_count(line, 1, "vertex count");
    src.vertices_line = line.number;
    expect_end(line, 2);
  } else if (key == "edge") {
    if (src.vertex_count == -1) parse_fail(line, line.tokens[0], "'vertices' must precede edges");
    const int t = parse_count(line, 1, "tail vertex");
    const int h = parse_count(line, 2, "head vertex");
    if (t >= src.vertex_count) parse_fail(line, line.tokens[1], "no vertex " + std::to_string(t));
    if (h >= src.vertex_count) parse_fail(line, line.tokens[2], "no vertex " + std::to_string(h));
    expect_end(line, 3);
    src.edges.push_back({t, h});
    src.edge_lines.push_back(line.number);
  } else if (key == "face") {
    BoundaryWalk w;
    for (std::size_t i = 1; i < line.tokens.size(); ++i) {
      const Dart d = parse_dart(line, line.tokens[i]);
      if (edge_of(d) >= static_cast<int>(src.edges.size())) {
        parse_fail(line, line.tokens[i], "no edge " + std::to_string(edge_of(d)) + " declared before this face");
      }
      w.push_back(d);
    }
    src.faces.push_back(std::move(w));
    src.face_lines.push_back(line.number);
  } else if (key == "rotation") {
    const int v = parse_count(line, 1, "vertex");
    if (src.vertex_count == -1 || v >= src.vertex_count) parse_fail(line, line.tokens[1], "no vertex " + std::to_string(v));
    if (src.rotation.count(v)) parse_fail(line, line.tokens[1], "rotation at vertex " + std::to_string(v) + " given twice");
    std::vector<Dart> darts;
    for (std::size_t i = 2; i < line.tokens.size(); ++i) {
      const Dart d = parse_dart(line, line.tokens[i]);
      if (edge_of(d) >= static_cast<int>(src.edges.size())) parse_fail(line, line.tokens[i], "no edge " + std::to_string(edge_of(d)));
      darts.push_back(d);
    }
    src.rotation[v] = {std::move(darts), line.number};
  } else {
    parse_fail(line, line.tokens[0], "unknown keyword '" + std::string(key) + "'");
  }
}

int line_of_cell(const ComplexSource& src, ComplexErrc code, int cell) {
  auto vertex_line = [&](int v) {
    auto it = src.rotation.find(v);
    return it != src.rotation.end() ? it->second.second : src.vertices_line;
  };
  switch (code) {
    case ComplexErrc::EmptyWalk:
    case ComplexErrc::NonClosedWalk:
    case ComplexErrc::EdgeSideReused:
      return cell >= 0 && cell < static_cast<int>(src.face_lines.size()) ? src.face_lines[cell] : 0;
    case ComplexErrc::EdgeSideMissing:
    case ComplexErrc::OrientationInconsistent:
      return cell >= 0 && cell < static_cast<int>(src.edge_lines.size()) ? src.edge_lines[cell] : 0;
    case ComplexErrc::UnknownCell:
      if (!src.faces.empty() && cell >= 0 && cell < static_cast<int>(src.face_lines.size())) return src.face_lines[cell];
      return cell >= 0 && cell < static_cast<int>(src.edge_lines.size()) ? src.edge_lines[cell] : 0;
    case ComplexErrc::DisconnectedGraph:
    case ComplexErrc::NonManifoldVertex:
    case ComplexErrc::IncompleteRotation:
      return cell >= 0 ? vertex_line(cell) : src.vertices_line;
    case ComplexErrc::EmptyComplex:
      return src.vertices_line;
  }
  return 0;
}

std::vector<std::vector<Dart>> rotation_lists(const ComplexSource& src) {
  std::vector<std::vector<Dart>> around(src.vertex_count);
  for (const auto& [v, entry] : src.rotation) around[v] = entry.first;
  return around;
}

CellComplex build_from_source(const ComplexSource& src, int header_line) {
  if (src.vertex_count == -1) {
    throw FormatError(FormatErrc::ParseError, "", src.last_line > 0 ? src.last_line : header_line, 0,
                      "missing 'vertices' line");
  }
  try {
    if (src.faces.empty() && !src.rotation.empty()) {
      if (static_cast<int>(src.rotation.size()) != src.vertex_count) {
        for (VertexId v = 0; v < src.vertex_count; ++v) {
          if (!src.rotation.count(v)) {
            throw ComplexError(ComplexErrc::IncompleteRotation, v, "vertex " + std::to_string(v) + " has no rotation line");
          }
        }
      }
      return faces_from_rotation(src.vertex_count, src.edges, RotationSystem(rotation_lists(src)));
    }
    CellComplex k = build_complex(src.vertex_count, src.edges, src.faces);
    for (const auto& [v, entry] : src.rotation) {
      std::vector<std::vector<Dart>> one(k.vertex_count());
      std::vector<std::vector<Dart>> mine(k.vertex_count());
      const auto derived = k.rotation().around(v);
      one[v].assign(derived.begin(), derived.end());
      mine[v] = entry.first;
      if (!(RotationSystem(one) == RotationSystem(mine))) {
        throw ComplexError(ComplexErrc::IncompleteRotation, v,
                           "rotation at vertex " + std::to_string(v) + " disagrees with the face walks");
      }
    }
    return k;
  } catch (const ComplexError& e) {
    throw FormatError(FormatErrc::ValidationError, to_string(e.code()), line_of_cell(src, e.code(), e.cell()), 0, e.what());
  }
}

void write_complex_body(std::ostream& os, const CellComplex& k, bool with_rotation) {
  os << "vertices " << k.vertex_count() << '\n';
  for (const Edge& e : k.edges()) os << "edge " << e.tail << ' ' << e.head << '\n';
  for (const BoundaryWalk& w : k.faces()) {
    os << "face";
    for (Dart d : w) os << ' ' << dart_token(d);
    os << '\n';
  }
  if (with_rotation) {
    for (VertexId v = 0; v < k.vertex_count(); ++v) {
      os << "rotation " << v;
      for (Dart d : k.rotation().around(v)) os << ' ' << dart_token(d);
      os << '\n';
    }
  }
}

}  // namespace

FormatError::FormatError(FormatErrc kind, std::string detail, int line, int column, const std::string& reason)
    : std::runtime_error(format_message(kind, detail, line, column, reason)),
      kind_(kind),
      detail_(std::move(detail)),
      line_(line),
      column_(column),
      reason_(reason) {}

std::string dart_token(Dart d) { return (is_reversed(d) ? "-" : "+") + std::to_string(edge_of(d)); }

NamedComplex parse_complex(std::string_view text) {
  const std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw FormatError(FormatErrc::ParseError, "", 1, 1, "empty input, expected header 'cplx 1'");
  ComplexSource src;
  src.name = header_name(lines[0], "cplx");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    read_body_line(src, lines[i]);
    src.last_line = lines[i].number;
  }
  CellComplex k = build_from_source(src, lines[0].number);
  return {src.name, std::move(k)};
}

std::string serialize_complex(const CellComplex& k, const std::string& name, bool with_rotation) {
  std::ostringstream os;
  os << "cplx 1";
  if (!name.empty()) os << ' ' << name;
  os << '\n';
  write_complex_body(os, k, with_rotation);
  return os.str();
}

NamedField parse_field(std::string_view text, const std::filesystem::path& base_dir) {
  const std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw FormatError(FormatErrc::ParseError, "", 1, 1, "empty input, expected header 'fld 1'");
  const std::string name = header_name(lines[0], "fld");

  std::optional<CellComplex> complex;
  std::vector<std::pair<VertexId, EdgeId>> pairs;
  std::vector<const Line*> match_lines;
  std::size_t i = 1;
  while (i < lines.size()) {
    const Line& line = lines[i];
    const std::string_view key = line.tokens[0].text;
    if (key == "complex") {
      if (complex) parse_fail(line, line.tokens[0], "complex given twice");
      if (line.tokens.size() < 2) parse_fail_end(line, "expected a path or 'inline'");
      expect_end(line, 2);
      if (line.tokens[1].text == "inline") {
        ComplexSource src;
        ++i;
        bool closed = false;
        for (; i < lines.size(); ++i) {
          if (lines[i].tokens[0].text == "end") {
            expect_end(lines[i], 1);
            closed = true;
            ++i;
            break;
          }
          read_body_line(src, lines[i]);
          src.last_line = lines[i].number;
        }
        if (!closed) parse_fail_end(lines.back(), "inline complex is not closed by 'end'");
        complex = build_from_source(src, line.number);
        continue;
      }
      const std::filesystem::path path = base_dir / std::string(line.tokens[1].text);
      std::string body;
      try {
        body = read_file(path);
      } catch (const std::runtime_error& e) {
        parse_fail(line, line.tokens[1], e.what());
      }
      try {
        complex = parse_complex(body).complex;
      } catch (const FormatError& e) {
        throw FormatError(e.kind(), e.detail(), line.number, line.tokens[1].column,
                          path.string() + ":" + std::to_string(e.line()) + ": " + e.reason());
      }
    } else if (key == "match") {
      if (!complex) parse_fail(line, line.tokens[0], "'complex' must precede matched pairs");
      const int v = parse_count(line, 1, "vertex");
      const int e = parse_count(line, 2, "edge");
      expect_end(line, 3);
      auto invalid = [&](std::size_t tok, const char* detail, const std::string& reason) {
        throw FormatError(FormatErrc::ValidationError, detail, line.number, line.tokens[tok].column, reason);
      };
      if (v >= complex->vertex_count()) invalid(1, "UnknownVertex", "no vertex " + std::to_string(v));
      if (e >= complex->edge_count()) invalid(2, "UnknownEdge", "no edge " + std::to_string(e));
      const Edge& edge = complex->edge(e);
      if (edge.tail != v && edge.head != v) {
        invalid(2, "NotIncident", "edge " + std::to_string(e) + " is not incident to vertex " + std::to_string(v));
      }
      for (std::size_t j = 0; j < pairs.size(); ++j) {
        if (pairs[j].first == v) invalid(1, "NotAMatching", "vertex " + std::to_string(v) + " matched twice");
        if (pairs[j].second == e) invalid(2, "NotAMatching", "edge " + std::to_string(e) + " matched twice");
      }
      pairs.emplace_back(v, e);
      match_lines.push_back(&line);
    } else {
      parse_fail(line, line.tokens[0], "unknown keyword '" + std::string(key) + "'");
    }
    ++i;
  }
  if (!complex) throw FormatError(FormatErrc::ParseError, "", lines.back().number, 0, "missing 'complex' line");
  try {
    return {name, LineField::from_pairs(std::move(*complex), pairs)};
  } catch (const FieldError& e) {
    int at = 0;
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      if (pairs[j].first == e.cell()) at = match_lines[j]->number;
    }
    throw FormatError(FormatErrc::ValidationError, to_string(e.code()), at, 0, e.what());
  }
}

std::string serialize_field(const LineField& field, const std::string& name) {
  std::ostringstream os;
  os << "fld 1";
  if (!name.empty()) os << ' ' << name;
  os << "\ncomplex inline\n";
  write_complex_body(os, field.complex(), false);
  os << "end\n";
  for (const auto& [v, e] : field.pairs()) os << "match " << v << ' ' << e << '\n';
  return os.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

namespace {

json walk_json(std::span<const Dart> w) {
  json a = json::array();
  for (Dart d : w) a.push_back(dart_token(d));
  return a;
}

json cell_json(Cell c) { return to_string(c); }

}  // namespace

json to_json(const CellComplex& k) {
  json j;
  j["vertices"] = k.vertex_count();
  j["edges"] = json::array();
  for (const Edge& e : k.edges()) j["edges"].push_back({e.tail, e.head});
  j["faces"] = json::array();
  for (const BoundaryWalk& w : k.faces()) j["faces"].push_back(walk_json(w));
  j["rotation"] = json::array();
  for (VertexId v = 0; v < k.vertex_count(); ++v) j["rotation"].push_back(walk_json(k.rotation().around(v)));
  j["euler_characteristic"] = k.euler_characteristic();
  return j;
}

json to_json(const LineField& field) {
  json j;
  j["complex"] = to_json(field.complex());
  j["matching"] = json::array();
  for (const auto& [v, e] : field.pairs()) j["matching"].push_back({v, e});
  return j;
}

json to_json(const IndexReport& report) {
  json j;
  j["vertices"] = json::array();
  for (std::size_t v = 0; v < report.vertex_indices.size(); ++v) {
    j["vertices"].push_back({{"vertex", v}, {"index", report.vertex_indices[v]}});
  }
  j["faces"] = json::array();
  for (std::size_t f = 0; f < report.face_indices.size(); ++f) {
    j["faces"].push_back({{"face", f}, {"c", report.c_values[f]}, {"index", to_string(report.face_indices[f])}});
  }
  return j;
}

json matching_to_json(const HasseDiagram& h, const Matching& m) {
  json a = json::array();
  for (int id : m.edges()) {
    const HasseEdge& e = h.edge(id);
    a.push_back({{"hasse_edge", id}, {"lower", cell_json(h.node(e.lower))}, {"upper", cell_json(h.node(e.upper))}});
  }
  return a;
}

json to_json(const ReducedField& r) {
  json j;
  if (r.degeneracy) {
    j["degeneracy"] = {{"kind", to_string(r.degeneracy->kind)}, {"face", r.degeneracy->face}};
    if (r.degeneracy->component >= 0) j["degeneracy"]["component"] = r.degeneracy->component;
  } else {
    j["degeneracy"] = nullptr;
  }
  j["policy"] = r.policy == TreePolicy::BfsFromSmallest ? "smallest" : "largest";
  j["critical_vertices"] = r.critical_vertices;
  j["critical_edges"] = r.critical_edges;
  j["critical_faces"] = json::array();
  for (const CriticalFace& f : r.critical_faces) {
    j["critical_faces"].push_back(
        {{"face", f.face}, {"c", f.c_value}, {"reduced_c", f.reduced_c_value}, {"index", to_string(f.index)}});
  }
  j["index_sum"] = to_string(r.index_sum());
  j["chi"] = r.complex.euler_characteristic();
  j["complex"] = to_json(r.complex);
  j["vertex_origin"] = r.vertex_origin;
  j["edge_origin"] = r.edge_origin;
  j["face_origin"] = r.face_origin;
  j["paths"] = json::array();
  for (const PathEntry& p : r.paths) {
    j["paths"].push_back({{"face", p.face}, {"position", p.position}, {"target", p.target}, {"path", p.path}});
  }
  return j;
}

json to_json(const EmbeddedBipartiteGraph& g) {
  json j;
  j["nodes"] = json::array();
  for (int n = 0; n < g.node_count(); ++n) {
    j["nodes"].push_back({{"id", n}, {"part", g.part[n] == 0 ? "vertex" : "face"}, {"origin", g.origin[n]}});
  }
  j["embedding"] = to_json(g.embedding);
  j["quad_faces"] = has_quad_faces(g);
  j["canonical"] = to_hex(canonical_form(g));
  return j;
}

json to_json(const FormatError& e) {
  json j;
  j["kind"] = kind_name(e.kind());
  if (!e.detail().empty()) j["code"] = e.detail();
  j["line"] = e.line();
  j["column"] = e.column();
  j["reason"] = e.reason();
  return {{"error", j}};
}

namespace {

std::string node_name(const Cell& c) { return "\"" + to_string(c) + "\""; }

void write_ranks(std::ostream& os, const HasseDiagram& h, const std::vector<std::string>& labels) {
  for (int dim = 0; dim <= 2; ++dim) {
    os << "  { rank=same;";
    for (int n = 0; n < h.node_count(); ++n) {
      if (h.dim(n) == dim) os << ' ' << node_name(h.node(n));
    }
    os << " }\n";
  }
  for (int n = 0; n < h.node_count(); ++n) {
    os << "  " << node_name(h.node(n));
    if (!labels.empty() && !labels[n].empty()) os << " [label=\"" << labels[n] << "\"]";
    os << ";\n";
  }
}

}  // namespace

std::string hasse_to_dot(const HasseDiagram& h, const Matching& m) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n";
  write_ranks(os, h, {});
  for (int id = 0; id < h.edge_count(); ++id) {
    const HasseEdge& e = h.edge(id);
    os << "  " << node_name(h.node(e.lower)) << " -> " << node_name(h.node(e.upper));
    if (m.contains(id)) os << " [style=bold, color=red]";
    else os << " [dir=back]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string reduced_to_dot(const ReducedField& r) {
  const HasseDiagram& h = r.reduced_hasse;
  std::vector<std::string> labels(h.node_count());
  for (int n = 0; n < h.node_count(); ++n) {
    const Cell c = h.node(n);
    std::string index;
    if (c.dim == 0) index = "1";
    if (c.dim == 2) {
      for (const CriticalFace& f : r.critical_faces) {
        if (f.face == c.id) index = to_string(f.index);
      }
    }
    labels[n] = to_string(c) + (index.empty() ? "" : "\\nindex " + index);
  }
  std::ostringstream os;
  os << "digraph reduced {\n  rankdir=BT;\n";
  write_ranks(os, h, labels);
  for (const HasseEdge& e : h.edges()) os << "  " << node_name(h.node(e.lower)) << " -> " << node_name(h.node(e.upper)) << ";\n";
  os << "}\n";
  return os.str();
}

std::string radial_to_dot(const EmbeddedBipartiteGraph& g) {
  std::ostringstream os;
  os << "graph radial {\n";
  for (int n = 0; n < g.node_count(); ++n) {
    const bool vertex = g.part[n] == 0;
    os << "  n" << n << " [shape=" << (vertex ? "circle" : "box") << ", label=\"" << (vertex ? "v" : "f") << g.origin[n]
       << "\"];\n";
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.embedding.edge(e);
    os << "  n" << edge.tail << " -- n" << edge.head << " [label=\"" << e << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace dlf::io
