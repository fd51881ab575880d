#include "dlf/homotopy.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "dlf/generators.hpp"

namespace dlf {

namespace {

struct UnionFind {
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> parent;
};

}  // namespace

std::vector<int> AuxGraph::links_of(int node) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < links.size(); ++i) {
    if (links[i].a == node || links[i].b == node) out.push_back(static_cast<int>(i));
  }
  return out;
}

AuxGraph build_aux_graph(const LineField& field) {
  const CellComplex& k = field.complex();
  AuxGraph g;
  g.node_of_edge.assign(k.edge_count(), -1);
  for (EdgeId e = 0; e < k.edge_count(); ++e) {
    if (field.edge_matched(e)) continue;
    g.node_of_edge[e] = static_cast<int>(g.nodes.size());
    g.nodes.push_back(e);
  }
  for (FaceId f = 0; f < k.face_count(); ++f) {
    std::vector<Dart> unmatched;
    for (Dart d : k.walk(f)) {
      if (!field.edge_matched(edge_of(d))) unmatched.push_back(d);
    }
    if (unmatched.size() != 2) continue;
    g.links.push_back({f, g.node_of_edge[edge_of(unmatched[0])], g.node_of_edge[edge_of(unmatched[1])], unmatched[0],
                       unmatched[1]});
  }
  UnionFind uf(static_cast<int>(g.nodes.size()));
  for (const AuxLink& l : g.links) uf.unite(l.a, l.b);
  std::vector<int> label(g.nodes.size(), -1);
  g.component.assign(g.nodes.size(), -1);
  for (std::size_t n = 0; n < g.nodes.size(); ++n) {
    const int r = uf.find(static_cast<int>(n));
    if (label[r] == -1) label[r] = g.component_count++;
    g.component[n] = label[r];
  }
  return g;
}

const char* to_string(Degeneracy::Kind kind) {
  return kind == Degeneracy::Kind::IndexOneFace ? "IndexOneFace" : "CycleInG";
}

HomotopyError::HomotopyError(HomotopyErrc code, const std::string& what)
    : std::runtime_error(std::string(code == HomotopyErrc::Degenerate ? "Degenerate" : "DegenerateOnNonSphere") +
                         ": " + what),
      code_(code) {}

std::optional<Degeneracy> detect_degenerate(const LineField& field) {
  const CellComplex& k = field.complex();
  std::optional<Degeneracy> found;
  for (FaceId f = 0; f < k.face_count() && !found; ++f) {
    if (face_c_value(field, f) == 0) found = Degeneracy{Degeneracy::Kind::IndexOneFace, f, -1};
  }
  if (!found) {
    const AuxGraph g = build_aux_graph(field);
    std::vector<int> nodes(g.component_count, 0), links(g.component_count, 0), first_face(g.component_count, -1);
    for (int c : g.component) ++nodes[c];
    for (const AuxLink& l : g.links) {
      const int c = g.component[l.a];
      ++links[c];
      if (first_face[c] == -1) first_face[c] = l.face;
    }
    for (int c = 0; c < g.component_count; ++c) {
      if (links[c] >= nodes[c]) {
        found = Degeneracy{Degeneracy::Kind::CycleInG, first_face[c], c};
        break;
      }
    }
  }
  if (found && k.euler_characteristic() != 2) {
    throw HomotopyError(HomotopyErrc::DegenerateOnNonSphere,
                        std::string(to_string(found->kind)) + " witness at face " + std::to_string(found->face) +
                            " on a complex with Euler characteristic " + std::to_string(k.euler_characteristic()));
  }
  return found;
}

InducedMatching induce(const LineField& field, TreePolicy policy) {
  if (auto deg = detect_degenerate(field)) {
    throw HomotopyError(HomotopyErrc::Degenerate, std::string(to_string(deg->kind)) + " witness at face " +
                                                      std::to_string(deg->face));
  }
  const CellComplex& k = field.complex();
  const AuxGraph g = build_aux_graph(field);
  const int n = static_cast<int>(g.nodes.size());

  std::vector<std::vector<int>> adjacent(n);
  for (std::size_t i = 0; i < g.links.size(); ++i) {
    adjacent[g.links[i].a].push_back(static_cast<int>(i));
    adjacent[g.links[i].b].push_back(static_cast<int>(i));
  }
  std::vector<int> root(g.component_count, -1);
  for (int x = 0; x < n; ++x) {
    int& r = root[g.component[x]];
    if (r == -1 || policy == TreePolicy::BfsFromLargest) r = x;
  }

  InducedMatching out;
  std::vector<int> pairs = field.matching().edges();
  std::vector<char> reached(n, 0);
  for (int r : root) {
    out.critical_edges.push_back(g.nodes[r]);
    std::deque<int> queue{r};
    reached[r] = 1;
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (int li : adjacent[x]) {
        const AuxLink& l = g.links[li];
        const bool y_is_a = (l.a != x);
        const int y = y_is_a ? l.a : l.b;
        if (reached[y]) continue;
        reached[y] = 1;
        pairs.push_back(face_level_edge(k, y_is_a ? l.dart_a : l.dart_b));
        queue.push_back(y);
      }
    }
  }
  std::sort(out.critical_edges.begin(), out.critical_edges.end());
  out.matching = Matching(std::move(pairs));
  return out;
}

std::vector<PathEntry> dimension0_paths(const LineField& field) {
  const CellComplex& k = field.complex();
  std::vector<PathEntry> out;
  for (FaceId f = 0; f < k.face_count(); ++f) {
    if (face_c_value(field, f) == 2) continue;
    const auto walk = k.walk(f);
    for (std::size_t i = 0; i < walk.size(); ++i) {
      PathEntry entry;
      entry.face = f;
      entry.position = static_cast<int>(i);
      for (VertexId v = k.tail(walk[i]); v != -1; v = field.flow_step(v)) entry.path.push_back(v);
      entry.target = entry.path.back();
      out.push_back(std::move(entry));
    }
  }
  return out;
}

BasinTour basin_tour(const LineField& field) {
  const CellComplex& k = field.complex();
  BasinTour tour;
  tour.position.assign(k.dart_count(), -1);
  tour.basin_of.assign(k.dart_count(), -1);
  for (VertexId u = 0; u < k.vertex_count(); ++u) {
    if (field.vertex_matched(u) || k.degree(u) == 0) continue;
    const Dart start = *std::min_element(k.rotation().around(u).begin(), k.rotation().around(u).end());
    int i = 0;
    Dart x = start;
    do {
      tour.position[x] = i++;
      tour.basin_of[x] = u;
      x = field.edge_matched(edge_of(x)) ? k.rotate(opposite(x)) : k.rotate(x);
    } while (x != start);
  }
  return tour;
}

HalfInteger ReducedField::index_sum() const {
  HalfInteger sum(static_cast<int>(critical_vertices.size()));
  for (const CriticalFace& f : critical_faces) sum += f.index;
  return sum;
}

namespace {

ReducedField canonical_sphere(const LineField& field, const Degeneracy& deg, TreePolicy policy) {
  VertexId u = 0;
  while (field.vertex_matched(u)) ++u;
  ReducedField r;
  r.degeneracy = deg;
  r.policy = policy;
  r.reduced_hasse = HasseDiagram({{0, u}, {2, deg.face}}, {});
  r.critical_vertices = {u};
  r.critical_faces = {{deg.face, face_c_value(field, deg.face), 0, HalfInteger(1)}};
  r.paths = dimension0_paths(field);
  r.complex = point_sphere();
  r.vertex_origin = {u};
  r.face_origin = {deg.face};
  return r;
}

// Contracts every matched edge and deletes every non-root unmatched edge.
void build_reduced_complex(const LineField& field, const InducedMatching& induced, ReducedField& r) {
  const CellComplex& k = field.complex();
  std::vector<int> root_index(k.edge_count(), -1);
  for (std::size_t i = 0; i < induced.critical_edges.size(); ++i) root_index[induced.critical_edges[i]] = static_cast<int>(i);
  std::vector<int> vertex_index(k.vertex_count(), -1);
  for (std::size_t i = 0; i < r.critical_vertices.size(); ++i) vertex_index[r.critical_vertices[i]] = static_cast<int>(i);

  auto survives = [&](Dart d) { return root_index[edge_of(d)] != -1; };
  auto reduced_dart = [&](Dart d) { return dart_of(root_index[edge_of(d)], is_reversed(d)); };
  auto next_surviving = [&](Dart s) {
    Dart x = k.rotate(s);
    while (!survives(x)) x = field.edge_matched(edge_of(x)) ? k.rotate(opposite(x)) : k.rotate(x);
    return x;
  };

  std::vector<Edge> edges;
  for (EdgeId e : induced.critical_edges) {
    edges.push_back({vertex_index[field.flow_target(k.edge(e).tail)], vertex_index[field.flow_target(k.edge(e).head)]});
  }
  std::vector<std::vector<Dart>> around(r.critical_vertices.size());
  std::vector<char> seen(k.dart_count(), 0);
  for (Dart s = 0; s < k.dart_count(); ++s) {
    if (!survives(s) || seen[s]) continue;
    auto& cycle = around[vertex_index[field.flow_target(k.tail(s))]];
    if (!cycle.empty()) throw std::logic_error("reduced vertex has more than one rotation cycle");
    for (Dart x = s; !seen[x]; x = next_surviving(x)) {
      seen[x] = 1;
      cycle.push_back(reduced_dart(x));
    }
  }
  const CellComplex traced =
      faces_from_rotation(static_cast<int>(r.critical_vertices.size()), edges, RotationSystem(std::move(around)));

  // Faces merged through deleted edges form one reduced face each.
  UnionFind merged(k.face_count());
  for (EdgeId e = 0; e < k.edge_count(); ++e) {
    if (!field.edge_matched(e) && root_index[e] == -1) merged.unite(k.face_of(dart_of(e)), k.face_of(dart_of(e, true)));
  }
  std::vector<FaceId> critical_of_class(k.face_count(), -1);
  for (const CriticalFace& cf : r.critical_faces) {
    int& slot = critical_of_class[merged.find(cf.face)];
    if (slot != -1) throw std::logic_error("two critical faces merged into one reduced face");
    slot = cf.face;
  }
  std::vector<std::pair<FaceId, BoundaryWalk>> faces;
  for (const BoundaryWalk& w : traced.faces()) {
    const Dart original = dart_of(induced.critical_edges[edge_of(w.front())], is_reversed(w.front()));
    faces.emplace_back(critical_of_class[merged.find(k.face_of(original))], w);
  }
  std::sort(faces.begin(), faces.end());
  std::vector<BoundaryWalk> walks;
  for (auto& [origin, w] : faces) {
    r.face_origin.push_back(origin);
    walks.push_back(std::move(w));
  }
  r.complex = build_complex(static_cast<int>(r.critical_vertices.size()), std::move(edges), std::move(walks));
  r.vertex_origin = r.critical_vertices;
  r.edge_origin = induced.critical_edges;
}

}  // namespace

ReducedField reduce(const LineField& field, TreePolicy policy) {
  if (auto deg = detect_degenerate(field)) return canonical_sphere(field, *deg, policy);

  const CellComplex& k = field.complex();
  const InducedMatching induced = induce(field, policy);
  ReducedField r;
  r.policy = policy;
  r.induced = induced.matching;
  r.reduced_hasse = forman_reduce(hasse_diagram(k), induced.matching);
  for (int n = 0; n < r.reduced_hasse.node_count(); ++n) {
    const Cell c = r.reduced_hasse.node(n);
    if (c.dim == 0) r.critical_vertices.push_back(c.id);
    if (c.dim == 1) r.critical_edges.push_back(c.id);
    if (c.dim == 2) {
      const int reduced_c = static_cast<int>(r.reduced_hasse.down_edges(n).size());
      r.critical_faces.push_back(
          {c.id, face_c_value(field, c.id), reduced_c, HalfInteger(1) - HalfInteger::from_twice(reduced_c)});
    }
  }
  r.paths = dimension0_paths(field);
  build_reduced_complex(field, induced, r);
  return r;
}

}  // namespace dlf
