#include "dlf/generators.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace dlf {

int uniform_below(Rng& rng, int n) {
  if (n <= 0) throw std::invalid_argument("uniform_below: empty range");
  return static_cast<int>(rng() % static_cast<std::uint64_t>(n));
}

CellComplex polygon_complex(int vertex_count, const std::vector<std::vector<VertexId>>& polygons) {
  std::set<std::pair<VertexId, VertexId>> pairs;
  for (const auto& poly : polygons) {
    for (std::size_t i = 0; i < poly.size(); ++i) {
      VertexId a = poly[i], b = poly[(i + 1) % poly.size()];
      pairs.emplace(std::min(a, b), std::max(a, b));
    }
  }
  std::map<std::pair<VertexId, VertexId>, EdgeId> index;
  std::vector<Edge> edges;
  for (const auto& p : pairs) {
    index[p] = static_cast<EdgeId>(edges.size());
    edges.push_back({p.first, p.second});
  }
  std::vector<BoundaryWalk> faces;
  for (const auto& poly : polygons) {
    BoundaryWalk w;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      VertexId a = poly[i], b = poly[(i + 1) % poly.size()];
      w.push_back(dart_of(index.at({std::min(a, b), std::max(a, b)}), a > b));
    }
    faces.push_back(std::move(w));
  }
  return build_complex(vertex_count, std::move(edges), std::move(faces));
}

CellComplex point_sphere() { return build_complex(1, {}, {BoundaryWalk{}}); }

CellComplex single_edge_sphere() { return build_complex(2, {{0, 1}}, {{0, 1}}); }

CellComplex doubled_triangle() {
  return build_complex(3, {{0, 1}, {1, 2}, {2, 0}}, {{0, 2, 4}, {5, 3, 1}});
}

CellComplex tetrahedron() { return polygon_complex(4, {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}}); }

CellComplex cube() {
  // Vertex index x + 2y + 4z, faces counterclockwise seen from outside.
  return polygon_complex(8, {{0, 2, 3, 1}, {4, 5, 7, 6}, {0, 1, 5, 4}, {2, 6, 7, 3}, {0, 4, 6, 2}, {1, 3, 7, 5}});
}

CellComplex octahedron() {
  // 0:+x 1:-x 2:+y 3:-y 4:+z 5:-z
  return polygon_complex(6, {{0, 2, 4}, {2, 1, 4}, {1, 3, 4}, {3, 0, 4}, {2, 0, 5}, {1, 2, 5}, {3, 1, 5}, {0, 3, 5}});
}

CellComplex torus_square() { return build_complex(1, {{0, 0}, {0, 0}}, {{0, 2, 1, 3}}); }

CellComplex genus2_octagon() {
  return build_complex(1, {{0, 0}, {0, 0}, {0, 0}, {0, 0}}, {{0, 2, 1, 3, 4, 6, 5, 7}});
}

CellComplex torus_grid(int rows, int cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("torus_grid: empty grid");
  auto vid = [&](int i, int j) { return ((i % rows + rows) % rows) * cols + ((j % cols + cols) % cols); };
  // Horizontal edge h(i,j) = (i,j)->(i,j+1), vertical v(i,j) = (i,j)->(i+1,j).
  auto h = [&](int i, int j) { return 2 * vid(i, j); };
  auto v = [&](int i, int j) { return 2 * vid(i, j) + 1; };
  std::vector<Edge> edges(2 * rows * cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      edges[h(i, j)] = {vid(i, j), vid(i, j + 1)};
      edges[v(i, j)] = {vid(i, j), vid(i + 1, j)};
    }
  }
  std::vector<BoundaryWalk> faces;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      faces.push_back({dart_of(v(i, j)), dart_of(h(i + 1, j)), dart_of(v(i, j + 1), true), dart_of(h(i, j), true)});
    }
  }
  return build_complex(rows * cols, std::move(edges), std::move(faces));
}

CellComplex stellar_subdivision(const CellComplex& k) {
  if (k.is_point_sphere()) return k;
  std::vector<Edge> edges = k.edges();
  const int base = k.edge_count();
  // Spoke for dart d joins tail(d) to the centre of face_of(d).
  for (Dart d = 0; d < k.dart_count(); ++d) edges.push_back({k.tail(d), k.vertex_count() + k.face_of(d)});
  auto spoke = [&](Dart d) { return base + d; };
  std::vector<BoundaryWalk> faces;
  for (const BoundaryWalk& w : k.faces()) {
    for (Dart d : w) faces.push_back({d, dart_of(spoke(k.next_in_face(d))), dart_of(spoke(d), true)});
  }
  return build_complex(k.vertex_count() + k.face_count(), std::move(edges), std::move(faces));
}

CellComplex edge_subdivision(const CellComplex& k) {
  if (k.is_point_sphere()) return k;
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < k.edge_count(); ++e) {
    const VertexId mid = k.vertex_count() + e;
    edges.push_back({k.edge(e).tail, mid});
    edges.push_back({mid, k.edge(e).head});
  }
  std::vector<BoundaryWalk> faces;
  for (const BoundaryWalk& w : k.faces()) {
    BoundaryWalk out;
    for (Dart d : w) {
      const EdgeId e = edge_of(d);
      if (!is_reversed(d)) {
        out.push_back(dart_of(2 * e));
        out.push_back(dart_of(2 * e + 1));
      } else {
        out.push_back(dart_of(2 * e + 1, true));
        out.push_back(dart_of(2 * e, true));
      }
    }
    faces.push_back(std::move(out));
  }
  return build_complex(k.vertex_count() + k.edge_count(), std::move(edges), std::move(faces));
}

CellComplex random_sphere_triangulation(int max_faces, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::array<VertexId, 3>> tris{{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}};
  int vertex_count = 4;
  const int target = 4 + 2 * uniform_below(rng, std::max(1, (max_faces - 4) / 2 + 1));

  auto edge_exists = [&](VertexId a, VertexId b) {
    for (const auto& t : tris) {
      for (int i = 0; i < 3; ++i) {
        if ((t[i] == a && t[(i + 1) % 3] == b) || (t[i] == b && t[(i + 1) % 3] == a)) return true;
      }
    }
    return false;
  };
  auto random_flip = [&] {
    const int ti = uniform_below(rng, static_cast<int>(tris.size()));
    const int side = uniform_below(rng, 3);
    const VertexId a = tris[ti][side], b = tris[ti][(side + 1) % 3], c = tris[ti][(side + 2) % 3];
    for (std::size_t tj = 0; tj < tris.size(); ++tj) {
      for (int s = 0; s < 3; ++s) {
        if (tris[tj][s] == b && tris[tj][(s + 1) % 3] == a) {
          const VertexId d = tris[tj][(s + 2) % 3];
          if (c == d || edge_exists(c, d)) return;
          tris[ti] = {a, d, c};
          tris[tj] = {b, c, d};
          return;
        }
      }
    }
  };

  while (static_cast<int>(tris.size()) < target) {
    const int ti = uniform_below(rng, static_cast<int>(tris.size()));
    const auto [a, b, c] = tris[ti];
    const VertexId x = vertex_count++;
    tris[ti] = {a, b, x};
    tris.push_back({b, c, x});
    tris.push_back({c, a, x});
    for (int flips = uniform_below(rng, 3); flips > 0; --flips) random_flip();
  }
  std::vector<std::vector<VertexId>> polys;
  for (const auto& t : tris) polys.push_back({t[0], t[1], t[2]});
  return polygon_complex(vertex_count, polys);
}

CellComplex relabel(const CellComplex& k, std::uint64_t seed) { return relabel_tracked(k, seed).complex; }

Relabelled relabel_tracked(const CellComplex& k, std::uint64_t seed) {
  if (k.is_point_sphere()) return {k, {0}, {}, {0}};
  Rng rng(seed);
  std::vector<int> vperm(k.vertex_count()), eperm(k.edge_count()), fperm(k.face_count());
  std::iota(vperm.begin(), vperm.end(), 0);
  std::iota(eperm.begin(), eperm.end(), 0);
  std::iota(fperm.begin(), fperm.end(), 0);
  std::shuffle(vperm.begin(), vperm.end(), rng);
  std::shuffle(eperm.begin(), eperm.end(), rng);
  std::shuffle(fperm.begin(), fperm.end(), rng);
  std::vector<char> flip(k.edge_count());
  for (auto& f : flip) f = static_cast<char>(uniform_below(rng, 2));

  std::vector<Edge> edges(k.edge_count());
  for (EdgeId e = 0; e < k.edge_count(); ++e) {
    Edge out{vperm[k.edge(e).tail], vperm[k.edge(e).head]};
    if (flip[e]) std::swap(out.tail, out.head);
    edges[eperm[e]] = out;
  }
  auto map_dart = [&](Dart d) { return dart_of(eperm[edge_of(d)], is_reversed(d) != static_cast<bool>(flip[edge_of(d)])); };
  std::vector<BoundaryWalk> faces(k.face_count());
  for (FaceId f = 0; f < k.face_count(); ++f) {
    BoundaryWalk w;
    for (Dart d : k.walk(f)) w.push_back(map_dart(d));
    std::rotate(w.begin(), w.begin() + uniform_below(rng, static_cast<int>(w.size())), w.end());
    faces[fperm[f]] = std::move(w);
  }
  return {build_complex(k.vertex_count(), std::move(edges), std::move(faces)), vperm, eperm, fperm};
}

RotationGraph random_rotation_graph(int max_vertices, std::uint64_t seed) {
  Rng rng(seed);
  RotationGraph g;
  g.vertex_count = 1 + uniform_below(rng, std::max(1, max_vertices));
  for (VertexId v = 1; v < g.vertex_count; ++v) g.edges.push_back({uniform_below(rng, v), v});
  const int extra = (g.vertex_count == 1 ? 1 : 0) + uniform_below(rng, g.vertex_count + 3);
  for (int i = 0; i < extra; ++i) {
    g.edges.push_back({uniform_below(rng, g.vertex_count), uniform_below(rng, g.vertex_count)});
  }
  std::vector<std::vector<Dart>> around(g.vertex_count);
  for (EdgeId e = 0; e < static_cast<EdgeId>(g.edges.size()); ++e) {
    around[g.edges[e].tail].push_back(dart_of(e));
    around[g.edges[e].head].push_back(dart_of(e, true));
  }
  for (auto& cycle : around) std::shuffle(cycle.begin(), cycle.end(), rng);
  g.rotation = RotationSystem(std::move(around));
  return g;
}

}  // namespace dlf
