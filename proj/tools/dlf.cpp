#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "dlf/complex.hpp"
#include "dlf/generators.hpp"
#include "dlf/hasse.hpp"
#include "dlf/homotopy.hpp"
#include "dlf/io.hpp"
#include "dlf/linefield.hpp"
#include "dlf/radial.hpp"

namespace fs = std::filesystem;
using namespace dlf;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kValidation = 1, kParse = 2, kDegenerate = 3 };

struct Options {
  bool json = false;
  bool dot = false;
  bool warn_unstable = false;
};

Options opts;

struct Loaded {
  std::string name;
  bool is_field = false;
  LineField field;
};

Loaded load(const std::string& path) {
  std::string text;
  try {
    text = io::read_file(path);
  } catch (const std::runtime_error& e) {
    throw io::FormatError(io::FormatErrc::ParseError, "", 0, 0, e.what());
  }
  std::size_t i = text.find_first_not_of(" \t\r\n");
  if (i != std::string::npos && text.compare(i, 3, "fld") == 0) {
    io::NamedField f = io::parse_field(text, fs::path(path).parent_path());
    return {f.name, true, std::move(f.field)};
  }
  io::NamedComplex c = io::parse_complex(text);
  return {c.name, false, LineField(std::move(c.complex), Matching{})};
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_validate(const std::string& path) {
  Loaded in = load(path);
  const CellComplex& k = in.field.complex();
  if (opts.json) {
    json j = in.is_field ? io::to_json(in.field) : io::to_json(k);
    j["valid"] = true;
    emit(j);
    return kOk;
  }
  std::cout << "valid " << (in.is_field ? "field" : "complex") << ": V=" << k.vertex_count() << " E=" << k.edge_count()
            << " F=" << k.face_count() << " chi=" << k.euler_characteristic();
  if (in.is_field) std::cout << " matched=" << in.field.matching().size();
  std::cout << '\n';
  return kOk;
}

int cmd_euler(const std::string& path) {
  Loaded in = load(path);
  const LineFieldEuler line = euler_check(in.field);
  const Matching full = detect_degenerate(in.field) ? in.field.matching() : induced_matching(in.field);
  const FormanEuler forman = forman_euler_check(hasse_diagram(in.field.complex()), full);
  if (opts.json) {
    emit({{"line_field",
           {{"vertex_sum", line.vertex_sum}, {"face_sum", to_string(line.face_sum)}, {"chi", line.chi}, {"holds", line.holds}}},
          {"forman",
           {{"m0", forman.m0}, {"m1", forman.m1}, {"m2", forman.m2}, {"chi", forman.chi}, {"holds", forman.holds}}}});
  } else {
    std::cout << "vertex_sum=" << line.vertex_sum << " face_sum=" << to_string(line.face_sum) << " chi=" << line.chi
              << (line.holds ? " OK" : " FAIL") << '\n';
    std::cout << "m0=" << forman.m0 << " m1=" << forman.m1 << " m2=" << forman.m2 << " chi=" << forman.chi
              << (forman.holds ? " OK" : " FAIL") << '\n';
  }
  return line.holds && forman.holds ? kOk : kValidation;
}

void warn_odd(const LineField& field) {
  if (!opts.warn_unstable) return;
  const CellComplex& k = field.complex();
  for (FaceId f = 0; f < k.face_count(); ++f) {
    const int c = face_c_value(field, f);
    if (c % 2 != 0) {
      std::cerr << "warning: f" << f << " has odd C=" << c << " (index " << to_string(face_index(field, f))
                << "), not structurally stable\n";
    }
  }
}

int cmd_critical(const std::string& path) {
  Loaded in = load(path);
  const IndexReport r = index_report(in.field);
  warn_odd(in.field);
  if (opts.json) {
    json j = io::to_json(r);
    j["critical_vertices"] = json::array();
    j["critical_faces"] = json::array();
    for (std::size_t v = 0; v < r.vertex_indices.size(); ++v) {
      if (r.vertex_indices[v] != 0) j["critical_vertices"].push_back(v);
    }
    for (std::size_t f = 0; f < r.c_values.size(); ++f) {
      if (r.c_values[f] != 2) j["critical_faces"].push_back(f);
    }
    emit(j);
    return kOk;
  }
  for (std::size_t v = 0; v < r.vertex_indices.size(); ++v) {
    if (r.vertex_indices[v] != 0) std::cout << 'v' << v << " index=1\n";
  }
  for (std::size_t f = 0; f < r.c_values.size(); ++f) {
    if (r.c_values[f] == 2) continue;
    std::cout << 'f' << f << " C=" << r.c_values[f] << " index=" << to_string(r.face_indices[f]);
    if (opts.warn_unstable && r.c_values[f] % 2 != 0) std::cout << " unstable";
    std::cout << '\n';
  }
  return kOk;
}

int cmd_reduce(const std::string& path, const std::string& policy) {
  Loaded in = load(path);
  warn_odd(in.field);
  const ReducedField r = reduce(in.field, policy == "largest" ? TreePolicy::BfsFromLargest : TreePolicy::BfsFromSmallest);
  if (r.degeneracy) {
    std::cerr << "notice: degenerate field (" << to_string(r.degeneracy->kind) << " at f" << r.degeneracy->face
              << "); reduced to the sphere\n";
  }
  if (opts.json) {
    emit(io::to_json(r));
  } else if (opts.dot) {
    std::cout << io::reduced_to_dot(r);
  } else {
    std::cout << "critical vertices:";
    for (VertexId v : r.critical_vertices) std::cout << " v" << v;
    std::cout << "\ncritical edges:";
    for (EdgeId e : r.critical_edges) std::cout << " e" << e;
    std::cout << "\ncritical faces:";
    for (const CriticalFace& f : r.critical_faces) std::cout << " f" << f.face << "(index=" << to_string(f.index) << ")";
    std::cout << "\nchi=" << r.complex.euler_characteristic() << " index_sum=" << to_string(r.index_sum()) << '\n';
    std::cout << io::serialize_complex(r.complex, "reduced");
  }
  return r.degeneracy ? kDegenerate : kOk;
}

void print_radial(const EmbeddedBipartiteGraph& g) {
  if (opts.json) {
    emit(io::to_json(g));
    return;
  }
  if (opts.dot) {
    std::cout << io::radial_to_dot(g);
    return;
  }
  for (int n = 0; n < g.node_count(); ++n) {
    std::cout << 'n' << n << ' ' << (g.part[n] == 0 ? 'v' : 'f') << g.origin[n] << " rotation";
    for (Dart d : g.embedding.rotation().around(n)) std::cout << ' ' << io::dart_token(d);
    std::cout << '\n';
  }
  std::cout << io::serialize_complex(g.embedding, "radial");
}

int cmd_radial(const std::string& path, bool of_complex) {
  Loaded in = load(path);
  print_radial(of_complex ? radial_graph(in.field.complex()) : radial_of_reduced(in.field));
  return kOk;
}

int cmd_iso(const std::string& a, const std::string& b) {
  const EmbeddedBipartiteGraph ga = radial_of_reduced(load(a).field);
  const EmbeddedBipartiteGraph gb = radial_of_reduced(load(b).field);
  const bool same = canonical_form(ga) == canonical_form(gb);
  if (opts.json) emit({{"equivalent", same}});
  else std::cout << (same ? "equivalent" : "not equivalent") << '\n';
  return kOk;
}

int cmd_canon(const std::string& path, bool of_complex) {
  Loaded in = load(path);
  const EmbeddedBipartiteGraph g = of_complex ? radial_graph(in.field.complex()) : radial_of_reduced(in.field);
  const std::string hex = to_hex(canonical_form(g));
  if (opts.json) emit({{"canonical", hex}});
  else std::cout << hex << '\n';
  return kOk;
}

std::optional<CellComplex> named_complex(const std::string& name, int faces, std::uint64_t seed) {
  static const std::map<std::string, CellComplex (*)()> fixed = {
      {"point", point_sphere},           {"edge-sphere", single_edge_sphere}, {"doubled-triangle", doubled_triangle},
      {"tetrahedron", tetrahedron},      {"cube", cube},                      {"octahedron", octahedron},
      {"torus", torus_square},           {"genus2", genus2_octagon},
  };
  if (auto it = fixed.find(name); it != fixed.end()) return it->second();
  if (name == "torus-grid") return torus_grid(3, 3);
  if (name == "random-sphere") return random_sphere_triangulation(faces, seed);
  return std::nullopt;
}

int cmd_gen(const std::string& kind, const std::string& target, int root, std::uint64_t seed, int faces) {
  if (kind == "complex") {
    std::optional<CellComplex> k = named_complex(target, faces, seed);
    if (!k) {
      std::cerr << "error: unknown complex '" << target << "'\n";
      return kValidation;
    }
    if (opts.json) emit(io::to_json(*k));
    else std::cout << io::serialize_complex(*k, target);
    return kOk;
  }
  Loaded in = load(target);
  const CellComplex& k = in.field.complex();
  const LineField field = kind == "spanning" ? spanning_tree_field(k, root) : random_field(k, seed);
  if (opts.json) emit(io::to_json(field));
  else std::cout << io::serialize_field(field, in.name);
  return kOk;
}

int cmd_trace(const std::string& path) {
  io::NamedComplex c = io::parse_complex(io::read_file(path));
  if (opts.json) emit(io::to_json(c.complex));
  else std::cout << io::serialize_complex(c.complex, c.name, true);
  return kOk;
}

int report(int code, const std::string& detail, const std::string& message) {
  if (opts.json) {
    emit({{"error", {{"kind", code == kParse ? "ParseError" : "ValidationError"}, {"code", detail}, {"reason", message}}}});
  } else {
    std::cerr << "error: " << message << '\n';
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete gradient line fields on combinatorial surfaces"};
  app.require_subcommand(1);
  app.add_flag("--json", opts.json, "Machine-readable JSON output");
  app.add_flag("--dot", opts.dot, "Graphviz output where available");
  app.add_flag("--warn-unstable", opts.warn_unstable, "Warn about faces with odd C");

  std::string file, file2, policy = "smallest", kind, target;
  bool of_complex = false;
  int root = 0, faces = 12;
  std::uint64_t seed = 1;

  auto* validate = app.add_subcommand("validate", "Check a .cplx or .fld file");
  validate->add_option("file", file)->required();
  auto* euler = app.add_subcommand("euler", "Print both Euler identities");
  euler->add_option("file", file)->required();
  auto* critical = app.add_subcommand("critical", "List critical cells and their indices");
  critical->add_option("file", file)->required();
  auto* reduce_cmd = app.add_subcommand("reduce", "Reduce along the induced matching");
  reduce_cmd->add_option("file", file)->required();
  reduce_cmd->add_option("--policy", policy, "Spanning tree root choice")->check(CLI::IsMember({"smallest", "largest"}));
  auto* radial = app.add_subcommand("radial", "Radial graph of the reduced decomposition");
  radial->add_option("file", file)->required();
  radial->add_flag("--of-complex", of_complex, "Radial graph of the input complex instead");
  auto* iso = app.add_subcommand("iso", "Compare the classes of two fields");
  iso->add_option("a", file)->required();
  iso->add_option("b", file2)->required();
  auto* canon = app.add_subcommand("canon", "Canonical form of the radial graph, as hex");
  canon->add_option("file", file)->required();
  canon->add_flag("--of-complex", of_complex, "Use the input complex instead of the reduced one");
  auto* gen = app.add_subcommand("gen", "Generate complexes and fields");
  gen->add_option("kind", kind, "complex | spanning | random")->required()->check(CLI::IsMember({"complex", "spanning", "random"}));
  gen->add_option("target", target, "Complex name, or the file to put a field on")->required();
  gen->add_option("--root", root, "Root vertex for spanning");
  gen->add_option("--seed", seed, "Seed for random fields and random-sphere");
  gen->add_option("--faces", faces, "Face bound for random-sphere");
  auto* trace = app.add_subcommand("trace", "Trace faces from a rotation system");
  trace->add_option("file", file)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) return cmd_validate(file);
    if (*euler) return cmd_euler(file);
    if (*critical) return cmd_critical(file);
    if (*reduce_cmd) return cmd_reduce(file, policy);
    if (*radial) return cmd_radial(file, of_complex);
    if (*iso) return cmd_iso(file, file2);
    if (*canon) return cmd_canon(file, of_complex);
    if (*gen) return cmd_gen(kind, target, root, seed, faces);
    if (*trace) return cmd_trace(file);
  } catch (const io::FormatError& e) {
    if (opts.json) emit(io::to_json(e));
    else std::cerr << "error: " << e.what() << '\n';
    return e.kind() == io::FormatErrc::ParseError ? kParse : kValidation;
  } catch (const ComplexError& e) {
    return report(kValidation, to_string(e.code()), e.what());
  } catch (const FieldError& e) {
    return report(kValidation, to_string(e.code()), e.what());
  } catch (const HomotopyError& e) {
    return report(kValidation, "DegenerateOnNonSphere", e.what());
  }
  return kOk;
}
