#include "dlf/radial.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "dlf/generators.hpp"
#include "dlf/homotopy.hpp"

namespace dlf {

RadialError::RadialError(RadialErrc code, const std::string& what)
    : std::runtime_error(std::string(code == RadialErrc::NotQuadFaces ? "NotQuadFaces" : "NotBipartite") + ": " +
                         what),
      code_(code) {}

bool is_bipartite(const EmbeddedBipartiteGraph& g) {
  for (const Edge& e : g.embedding.edges()) {
    if (g.part[e.tail] == g.part[e.head]) return false;
  }
  return true;
}

bool has_quad_faces(const EmbeddedBipartiteGraph& g) {
  const CellComplex& k = g.embedding;
  if (k.face_count() == 1 && k.walk(0).size() == 2) return k.walk(0)[0] == opposite(k.walk(0)[1]);
  return std::all_of(k.faces().begin(), k.faces().end(), [](const BoundaryWalk& w) { return w.size() == 4; });
}

namespace {

EmbeddedBipartiteGraph sphere_graph(int vertex_origin, int face_origin) {
  EmbeddedBipartiteGraph g;
  g.embedding = faces_from_rotation(2, {{0, 1}}, RotationSystem({{0}, {1}}));
  g.part = {0, 1};
  g.origin = {vertex_origin, face_origin};
  return g;
}

}  // namespace

EmbeddedBipartiteGraph radial_graph(const CellComplex& k) {
  if (k.is_point_sphere()) return sphere_graph(0, 0);
  const int nv = k.vertex_count();
  std::vector<Edge> edges;
  for (Dart d = 0; d < k.dart_count(); ++d) edges.push_back({k.tail(d), nv + k.face_of(d)});
  std::vector<std::vector<Dart>> around(nv + k.face_count());
  for (VertexId v = 0; v < nv; ++v) {
    for (Dart d : k.rotation().around(v)) around[v].push_back(dart_of(d));
  }
  for (FaceId f = 0; f < k.face_count(); ++f) {
    const auto w = k.walk(f);
    for (auto it = w.rbegin(); it != w.rend(); ++it) around[nv + f].push_back(dart_of(*it, true));
  }
  EmbeddedBipartiteGraph g;
  g.embedding = faces_from_rotation(nv + k.face_count(), std::move(edges), RotationSystem(std::move(around)));
  g.part.assign(nv + k.face_count(), 1);
  std::fill(g.part.begin(), g.part.begin() + nv, 0);
  for (VertexId v = 0; v < nv; ++v) g.origin.push_back(v);
  for (FaceId f = 0; f < k.face_count(); ++f) g.origin.push_back(f);
  return g;
}

EmbeddedBipartiteGraph radial_of_reduced(const LineField& field) {
  const CellComplex& k = field.complex();
  if (auto deg = detect_degenerate(field)) {
    VertexId u = 0;
    while (field.vertex_matched(u)) ++u;
    return sphere_graph(u, deg->face);
  }

  std::vector<int> node_of_vertex(k.vertex_count(), -1);
  EmbeddedBipartiteGraph g;
  for (VertexId v = 0; v < k.vertex_count(); ++v) {
    if (field.vertex_matched(v)) continue;
    node_of_vertex[v] = static_cast<int>(g.origin.size());
    g.origin.push_back(v);
    g.part.push_back(0);
  }
  const int vertex_nodes = static_cast<int>(g.origin.size());
  for (FaceId f = 0; f < k.face_count(); ++f) {
    if (!is_critical_face(field, f)) continue;
    g.origin.push_back(f);
    g.part.push_back(1);
  }

  // A corner of the reduced face starts at each unmatched traversal; the
  // corners in between are joined to it by matched edges and flow to the
  // same critical vertex.
  std::vector<int> node_of_face(k.face_count(), -1);
  for (int node = vertex_nodes; node < static_cast<int>(g.origin.size()); ++node) node_of_face[g.origin[node]] = node;
  const BasinTour tour = basin_tour(field);
  std::vector<Edge> edges;
  std::vector<Dart> anchor;
  std::vector<std::vector<Dart>> around(g.origin.size());
  for (const PathEntry& entry : dimension0_paths(field)) {
    const Dart d = k.walk(entry.face)[entry.position];
    if (field.edge_matched(edge_of(d))) continue;
    const int node = node_of_face[entry.face];
    const EdgeId radial_edge = static_cast<EdgeId>(edges.size());
    edges.push_back({node_of_vertex[entry.target], node});
    anchor.push_back(d);
    around[node].insert(around[node].begin(), dart_of(radial_edge, true));
  }
  for (EdgeId e = 0; e < static_cast<EdgeId>(edges.size()); ++e) around[edges[e].tail].push_back(dart_of(e));
  for (int node = 0; node < vertex_nodes; ++node) {
    std::sort(around[node].begin(), around[node].end(),
              [&](Dart a, Dart b) { return tour.position[anchor[edge_of(a)]] < tour.position[anchor[edge_of(b)]]; });
  }
  g.embedding = faces_from_rotation(static_cast<int>(g.origin.size()), std::move(edges), RotationSystem(std::move(around)));
  return g;
}

namespace {

// Decomposition with the nodes of `keep` as vertices: every quad contributes
// the diagonal joining its two `keep` corners.
CellComplex decomposition_on(const EmbeddedBipartiteGraph& g, int keep) {
  const CellComplex& r = g.embedding;
  if (r.face_count() == 1 && r.walk(0).size() == 2) return point_sphere();

  std::vector<int> vertex_of(g.node_count(), -1);
  int vertex_count = 0;
  for (int n = 0; n < g.node_count(); ++n) {
    if (g.part[n] == keep) vertex_of[n] = vertex_count++;
  }
  std::vector<Edge> edges;
  std::vector<Dart> diagonal(r.dart_count(), -1);
  for (FaceId q = 0; q < r.face_count(); ++q) {
    const auto w = r.walk(q);
    const int s = (g.part[r.tail(w[0])] == keep) ? 0 : 1;
    const EdgeId e = static_cast<EdgeId>(edges.size());
    edges.push_back({vertex_of[r.tail(w[s])], vertex_of[r.tail(w[s + 2])]});
    diagonal[w[s]] = dart_of(e);
    diagonal[w[s + 2]] = dart_of(e, true);
  }
  std::vector<std::vector<Dart>> around(vertex_count);
  for (int n = 0; n < g.node_count(); ++n) {
    if (vertex_of[n] == -1) continue;
    for (Dart y : r.rotation().around(n)) around[vertex_of[n]].push_back(diagonal[y]);
  }
  return faces_from_rotation(vertex_count, std::move(edges), RotationSystem(std::move(around)));
}

}  // namespace

Decompositions derive_decompositions(const EmbeddedBipartiteGraph& g) {
  if (!is_bipartite(g)) throw RadialError(RadialErrc::NotBipartite, "an edge joins two nodes of the same part");
  if (!has_quad_faces(g)) throw RadialError(RadialErrc::NotQuadFaces, "a traced face is not a quadrilateral");
  return {decomposition_on(g, 0), decomposition_on(g, 1)};
}

bool radial_equivalent(const EmbeddedBipartiteGraph& a, const EmbeddedBipartiteGraph& b) {
  return equivalent_labelled_embeddings(a.embedding, a.part, b.embedding, b.part);
}

namespace {

std::vector<int> walk_code(const CellComplex& k, std::span<const int> labels, Dart start, bool reverse) {
  std::vector<int> number(k.dart_count(), -1);
  std::vector<Dart> order{start};
  number[start] = 0;
  std::vector<int> code;
  code.reserve(3 * k.dart_count());
  auto visit = [&](Dart d) {
    if (number[d] == -1) {
      number[d] = static_cast<int>(order.size());
      order.push_back(d);
    }
    return number[d];
  };
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Dart d = order[i];
    code.push_back(labels[k.tail(d)]);
    code.push_back(visit(opposite(d)));
    code.push_back(visit(reverse ? k.rotate_back(d) : k.rotate(d)));
  }
  return code;
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t x) {
  for (int shift = 24; shift >= 0; shift -= 8) out.push_back(static_cast<std::uint8_t>(x >> shift));
}

}  // namespace

std::vector<std::uint8_t> canonical_form(const CellComplex& k, std::span<const int> labels) {
  std::vector<int> best;
  for (bool reverse : {false, true}) {
    for (Dart d = 0; d < k.dart_count(); ++d) {
      std::vector<int> code = walk_code(k, labels, d, reverse);
      if (best.empty() || code < best) best = std::move(code);
    }
  }
  std::vector<std::uint8_t> out;
  put_u32(out, static_cast<std::uint32_t>(k.vertex_count()));
  put_u32(out, static_cast<std::uint32_t>(k.edge_count()));
  if (k.is_point_sphere()) put_u32(out, static_cast<std::uint32_t>(labels[0]));
  for (int x : best) put_u32(out, static_cast<std::uint32_t>(x));
  return out;
}

std::vector<std::uint8_t> canonical_form(const EmbeddedBipartiteGraph& g) { return canonical_form(g.embedding, g.part); }

std::string to_hex(std::span<const std::uint8_t> bytes) {
  std::ostringstream os;
  os << std::hex << std::setfill('0');
  for (std::uint8_t b : bytes) os << std::setw(2) << static_cast<int>(b);
  return os.str();
}

EmbeddedBipartiteGraph relabel(const EmbeddedBipartiteGraph& g, std::uint64_t seed) {
  Relabelled r = relabel_tracked(g.embedding, seed);
  EmbeddedBipartiteGraph out;
  out.part.resize(g.part.size());
  out.origin.resize(g.origin.size());
  for (int n = 0; n < g.node_count(); ++n) {
    out.part[r.vertex_map[n]] = g.part[n];
    out.origin[r.vertex_map[n]] = g.origin[n];
  }
  out.embedding = std::move(r.complex);
  return out;
}

EmbeddedBipartiteGraph mirror(const EmbeddedBipartiteGraph& g) {
  return {dlf::mirror(g.embedding), g.part, g.origin};
}

}  // namespace dlf
