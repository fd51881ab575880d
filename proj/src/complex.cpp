#include "dlf/complex.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dlf {

const char* to_string(ComplexErrc code) {
  switch (code) {
    case ComplexErrc::EmptyComplex: return "EmptyComplex";
    case ComplexErrc::UnknownCell: return "UnknownCell";
    case ComplexErrc::EmptyWalk: return "EmptyWalk";
    case ComplexErrc::NonClosedWalk: return "NonClosedWalk";
    case ComplexErrc::EdgeSideReused: return "EdgeSideReused";
    case ComplexErrc::EdgeSideMissing: return "EdgeSideMissing";
    case ComplexErrc::OrientationInconsistent: return "OrientationInconsistent";
    case ComplexErrc::DisconnectedGraph: return "DisconnectedGraph";
    case ComplexErrc::NonManifoldVertex: return "NonManifoldVertex";
    case ComplexErrc::IncompleteRotation: return "IncompleteRotation";
  }
  return "Unknown";
}

ComplexError::ComplexError(ComplexErrc code, int cell, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), cell_(cell) {}

namespace {

void rotate_to_min(std::vector<Dart>& cycle) {
  if (cycle.empty()) return;
  std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
}

bool cyclically_equal(std::vector<Dart> a, std::vector<Dart> b) {
  rotate_to_min(a);
  rotate_to_min(b);
  return a == b;
}

std::string describe(const char* what, int id) {
  std::ostringstream os;
  os << what << ' ' << id;
  return os.str();
}

void check_edges(int vertex_count, const std::vector<Edge>& edges) {
  if (vertex_count < 1) throw ComplexError(ComplexErrc::EmptyComplex, -1, "a complex needs at least one vertex");
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const Edge& edge = edges[e];
    if (edge.tail < 0 || edge.tail >= vertex_count || edge.head < 0 || edge.head >= vertex_count) {
      throw ComplexError(ComplexErrc::UnknownCell, static_cast<int>(e),
                         describe("edge", static_cast<int>(e)) + " references a vertex out of range");
    }
  }
}

void check_connected(int vertex_count, const std::vector<Edge>& edges) {
  std::vector<int> parent(vertex_count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = vertex_count;
  for (const Edge& e : edges) {
    int a = find(e.tail), b = find(e.head);
    if (a != b) {
      parent[std::max(a, b)] = std::min(a, b);
      --components;
    }
  }
  if (components != 1) {
    for (VertexId v = 0; v < vertex_count; ++v) {
      if (find(v) != find(0)) {
        throw ComplexError(ComplexErrc::DisconnectedGraph, v,
                           describe("vertex", v) + " is not connected to vertex 0");
      }
    }
  }
}

}  // namespace

RotationSystem::RotationSystem(std::vector<std::vector<Dart>> around) : around_(std::move(around)) {}

RotationSystem RotationSystem::reversed() const {
  std::vector<std::vector<Dart>> out = around_;
  for (auto& cycle : out) {
    std::reverse(cycle.begin(), cycle.end());
    rotate_to_min(cycle);
  }
  return RotationSystem(std::move(out));
}

bool operator==(const RotationSystem& a, const RotationSystem& b) {
  if (a.around_.size() != b.around_.size()) return false;
  for (std::size_t v = 0; v < a.around_.size(); ++v) {
    if (!cyclically_equal(a.around_[v], b.around_[v])) return false;
  }
  return true;
}

Dart CellComplex::next_in_face(Dart d) const {
  const BoundaryWalk& w = faces_[face_of_[d]];
  return w[(position_of_[d] + 1) % w.size()];
}

Dart CellComplex::prev_in_face(Dart d) const {
  const BoundaryWalk& w = faces_[face_of_[d]];
  return w[(position_of_[d] + w.size() - 1) % w.size()];
}

bool operator==(const CellComplex& a, const CellComplex& b) {
  return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_ && a.faces_ == b.faces_;
}

CellComplex build_complex(int vertex_count, std::vector<Edge> edges, std::vector<BoundaryWalk> faces) {
  check_edges(vertex_count, edges);
  const int dart_count = 2 * static_cast<int>(edges.size());

  if (edges.empty()) {
    if (vertex_count != 1) {
      throw ComplexError(ComplexErrc::DisconnectedGraph, 1, "a complex without edges has a single vertex");
    }
    if (faces.size() != 1 || !faces[0].empty()) {
      throw ComplexError(ComplexErrc::EmptyComplex, -1,
                         "a complex without edges must be the point sphere (one face, empty walk)");
    }
    CellComplex k;
    k.vertex_count_ = 1;
    k.faces_ = std::move(faces);
    k.rotation_ = RotationSystem(std::vector<std::vector<Dart>>(1));
    return k;
  }

  auto tail = [&](Dart d) { return is_reversed(d) ? edges[edge_of(d)].head : edges[edge_of(d)].tail; };
  auto head = [&](Dart d) { return tail(opposite(d)); };

  for (std::size_t f = 0; f < faces.size(); ++f) {
    const FaceId fid = static_cast<FaceId>(f);
    const BoundaryWalk& w = faces[f];
    if (w.empty()) throw ComplexError(ComplexErrc::EmptyWalk, fid, describe("face", fid) + " has an empty walk");
    for (Dart d : w) {
      if (d < 0 || d >= dart_count) {
        throw ComplexError(ComplexErrc::UnknownCell, fid, describe("face", fid) + " references an unknown edge");
      }
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (head(w[i]) != tail(w[(i + 1) % w.size()])) {
        throw ComplexError(ComplexErrc::NonClosedWalk, fid,
                           describe("face", fid) + " walk breaks after position " + std::to_string(i));
      }
    }
  }

  std::vector<int> uses(edges.size(), 0);
  std::vector<int> dart_uses(dart_count, 0);
  for (std::size_t f = 0; f < faces.size(); ++f) {
    for (Dart d : faces[f]) {
      if (++uses[edge_of(d)] > 2) {
        throw ComplexError(ComplexErrc::EdgeSideReused, static_cast<int>(f),
                           describe("face", static_cast<int>(f)) + " traverses edge " +
                               std::to_string(edge_of(d)) + " a third time");
      }
      ++dart_uses[d];
    }
  }
  for (EdgeId e = 0; e < static_cast<EdgeId>(edges.size()); ++e) {
    if (uses[e] < 2) {
      throw ComplexError(ComplexErrc::EdgeSideMissing, e,
                         describe("edge", e) + " is traversed " + std::to_string(uses[e]) + " time(s)");
    }
    if (dart_uses[dart_of(e)] != 1) {
      throw ComplexError(ComplexErrc::OrientationInconsistent, e,
                         describe("edge", e) + " is traversed twice in the same direction");
    }
  }

  check_connected(vertex_count, edges);

  CellComplex k;
  k.vertex_count_ = vertex_count;
  k.edges_ = std::move(edges);
  k.faces_ = std::move(faces);
  k.face_of_.assign(dart_count, -1);
  k.position_of_.assign(dart_count, -1);
  for (std::size_t f = 0; f < k.faces_.size(); ++f) {
    for (std::size_t i = 0; i < k.faces_[f].size(); ++i) {
      k.face_of_[k.faces_[f][i]] = static_cast<FaceId>(f);
      k.position_of_[k.faces_[f][i]] = static_cast<int>(i);
    }
  }

  k.rotate_.resize(dart_count);
  k.rotate_back_.resize(dart_count);
  for (Dart d = 0; d < dart_count; ++d) {
    Dart next = k.next_in_face(opposite(d));
    k.rotate_[d] = next;
    k.rotate_back_[next] = d;
  }

  std::vector<std::vector<Dart>> around(vertex_count);
  std::vector<char> seen(dart_count, 0);
  for (Dart d = 0; d < dart_count; ++d) {
    if (seen[d]) continue;
    const VertexId v = k.tail(d);
    if (!around[v].empty()) {
      throw ComplexError(ComplexErrc::NonManifoldVertex, v,
                         describe("vertex", v) + " has more than one cycle of incident edges");
    }
    for (Dart x = d; !seen[x]; x = k.rotate_[x]) {
      seen[x] = 1;
      around[v].push_back(x);
    }
  }
  k.rotation_ = RotationSystem(std::move(around));
  return k;
}

CellComplex faces_from_rotation(int vertex_count, std::vector<Edge> edges, const RotationSystem& rotation) {
  check_edges(vertex_count, edges);
  if (rotation.vertex_count() != vertex_count) {
    throw ComplexError(ComplexErrc::IncompleteRotation, -1, "rotation does not cover every vertex");
  }
  const int dart_count = 2 * static_cast<int>(edges.size());
  auto tail = [&](Dart d) { return is_reversed(d) ? edges[edge_of(d)].head : edges[edge_of(d)].tail; };

  std::vector<Dart> successor(dart_count, -1);
  for (VertexId v = 0; v < vertex_count; ++v) {
    auto cycle = rotation.around(v);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Dart d = cycle[i];
      if (d < 0 || d >= dart_count) {
        throw ComplexError(ComplexErrc::IncompleteRotation, v, describe("vertex", v) + " lists an unknown edge end");
      }
      if (tail(d) != v) {
        throw ComplexError(ComplexErrc::IncompleteRotation, v,
                           describe("vertex", v) + " lists an edge end belonging to another vertex");
      }
      if (successor[d] != -1) {
        throw ComplexError(ComplexErrc::IncompleteRotation, v, describe("vertex", v) + " repeats an edge end");
      }
      successor[d] = cycle[(i + 1) % cycle.size()];
    }
  }
  for (Dart d = 0; d < dart_count; ++d) {
    if (successor[d] == -1) {
      throw ComplexError(ComplexErrc::IncompleteRotation, tail(d),
                         describe("edge", edge_of(d)) + " has an end missing from the rotation");
    }
  }
  check_connected(vertex_count, edges);

  if (edges.empty()) return build_complex(vertex_count, std::move(edges), {BoundaryWalk{}});

  std::vector<BoundaryWalk> faces;
  std::vector<char> seen(dart_count, 0);
  for (Dart d = 0; d < dart_count; ++d) {
    if (seen[d]) continue;
    BoundaryWalk w;
    for (Dart x = d; !seen[x]; x = successor[opposite(x)]) {
      seen[x] = 1;
      w.push_back(x);
    }
    faces.push_back(std::move(w));
  }
  return build_complex(vertex_count, std::move(edges), std::move(faces));
}

namespace {

// Tries to extend d0 -> t to a dart bijection commuting with `opposite` and
// with the rotation (or its inverse when `reverse`).
bool propagate(const CellComplex& a, std::span<const int> la, const CellComplex& b, std::span<const int> lb, Dart t,
               bool reverse, std::vector<Dart>& fwd, std::vector<Dart>& bwd) {
  std::fill(fwd.begin(), fwd.end(), -1);
  std::fill(bwd.begin(), bwd.end(), -1);
  std::vector<std::pair<Dart, Dart>> stack{{0, t}};
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    if (fwd[x] != -1) {
      if (fwd[x] != y) return false;
      continue;
    }
    if (bwd[y] != -1) return false;
    if (la[a.tail(x)] != lb[b.tail(y)]) return false;
    fwd[x] = y;
    bwd[y] = x;
    stack.emplace_back(opposite(x), opposite(y));
    stack.emplace_back(a.rotate(x), reverse ? b.rotate_back(y) : b.rotate(y));
  }
  return true;
}

}  // namespace

bool equivalent_labelled_embeddings(const CellComplex& a, std::span<const int> labels_a, const CellComplex& b,
                                    std::span<const int> labels_b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() ||
      a.face_count() != b.face_count()) {
    return false;
  }
  if (static_cast<int>(labels_a.size()) != a.vertex_count() || static_cast<int>(labels_b.size()) != b.vertex_count()) {
    throw std::invalid_argument("label count does not match vertex count");
  }
  if (a.is_point_sphere()) return labels_a[0] == labels_b[0];

  std::vector<Dart> fwd(a.dart_count()), bwd(b.dart_count());
  for (bool reverse : {false, true}) {
    for (Dart t = 0; t < b.dart_count(); ++t) {
      if (propagate(a, labels_a, b, labels_b, t, reverse, fwd, bwd)) return true;
    }
  }
  return false;
}

bool equivalent_embeddings(const CellComplex& a, const CellComplex& b) {
  std::vector<int> la(a.vertex_count(), 0), lb(b.vertex_count(), 0);
  return equivalent_labelled_embeddings(a, la, b, lb);
}

CellComplex mirror(const CellComplex& k) {
  std::vector<BoundaryWalk> faces;
  faces.reserve(k.face_count());
  for (const BoundaryWalk& w : k.faces()) {
    BoundaryWalk r;
    r.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(opposite(*it));
    faces.push_back(std::move(r));
  }
  return build_complex(k.vertex_count(), k.edges(), std::move(faces));
}

std::vector<BoundaryWalk> normalized_faces(const CellComplex& k) {
  std::vector<BoundaryWalk> out = k.faces();
  for (auto& w : out) rotate_to_min(w);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dlf
