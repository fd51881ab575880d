#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dlf {

using VertexId = int;
using EdgeId = int;
using FaceId = int;

// A dart is one side of an edge: dart 2e runs tail -> head, dart 2e+1 runs
// head -> tail. Boundary walks and rotations are sequences of darts.
using Dart = int;

constexpr Dart dart_of(EdgeId e, bool reversed = false) { return 2 * e + (reversed ? 1 : 0); }
constexpr EdgeId edge_of(Dart d) { return d / 2; }
constexpr Dart opposite(Dart d) { return d ^ 1; }
constexpr bool is_reversed(Dart d) { return (d & 1) != 0; }

struct Edge {
  VertexId tail = 0;
  VertexId head = 0;

  bool is_loop() const { return tail == head; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

using BoundaryWalk = std::vector<Dart>;

enum class ComplexErrc {
  EmptyComplex,
  UnknownCell,
  EmptyWalk,
  NonClosedWalk,
  EdgeSideReused,
  EdgeSideMissing,
  OrientationInconsistent,
  DisconnectedGraph,
  NonManifoldVertex,
  IncompleteRotation,
};

const char* to_string(ComplexErrc code);

class ComplexError : public std::runtime_error {
 public:
  // `cell` is the face, edge or vertex the failure was detected at, or -1.
  ComplexError(ComplexErrc code, int cell, const std::string& what);

  ComplexErrc code() const { return code_; }
  int cell() const { return cell_; }

 private:
  ComplexErrc code_;
  int cell_;
};

/// Cyclic order of outgoing darts around every vertex. A degree-1 vertex has
/// a single dart which is its own successor.
class RotationSystem {
 public:
  RotationSystem() = default;
  explicit RotationSystem(std::vector<std::vector<Dart>> around);

  int vertex_count() const { return static_cast<int>(around_.size()); }
  std::span<const Dart> around(VertexId v) const { return around_[v]; }
  const std::vector<std::vector<Dart>>& cycles() const { return around_; }

  RotationSystem reversed() const;

  // Cyclic equality: each vertex's cycle compared up to rotation.
  friend bool operator==(const RotationSystem& a, const RotationSystem& b);

 private:
  std::vector<std::vector<Dart>> around_;
};

/// A 2-cell decomposition of a closed oriented surface.
///
/// Faces are closed walks of darts; every dart appears in exactly one walk,
/// so each edge is traversed once in each direction. The rotation system is
/// derived from the walks (successor of d around tail(d) is the dart that
/// follows opposite(d) in its face), and the face walks are exactly the
/// orbits of that rotation composed with `opposite`.
///
/// The only complex without edges is the point sphere: one vertex and one
/// face with an empty walk.
class CellComplex {
 public:
  CellComplex() = default;

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int face_count() const { return static_cast<int>(faces_.size()); }
  int dart_count() const { return 2 * edge_count(); }
  int cell_count() const { return vertex_count() + edge_count() + face_count(); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  VertexId tail(Dart d) const { return is_reversed(d) ? edges_[edge_of(d)].head : edges_[edge_of(d)].tail; }
  VertexId head(Dart d) const { return tail(opposite(d)); }

  const std::vector<BoundaryWalk>& faces() const { return faces_; }
  std::span<const Dart> walk(FaceId f) const { return faces_[f]; }
  FaceId face_of(Dart d) const { return face_of_[d]; }
  int position_of(Dart d) const { return position_of_[d]; }

  // Successor of d in its face walk.
  Dart next_in_face(Dart d) const;
  Dart prev_in_face(Dart d) const;
  // Successor / predecessor of d in the rotation around tail(d).
  Dart rotate(Dart d) const { return rotate_[d]; }
  Dart rotate_back(Dart d) const { return rotate_back_[d]; }

  const RotationSystem& rotation() const { return rotation_; }
  int degree(VertexId v) const { return static_cast<int>(rotation_.around(v).size()); }

  int euler_characteristic() const { return vertex_count() - edge_count() + face_count(); }

  bool is_point_sphere() const { return edges_.empty(); }

  friend bool operator==(const CellComplex& a, const CellComplex& b);

 private:
  friend CellComplex build_complex(int, std::vector<Edge>, std::vector<BoundaryWalk>);

  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<BoundaryWalk> faces_;
  std::vector<FaceId> face_of_;
  std::vector<int> position_of_;
  std::vector<Dart> rotate_;
  std::vector<Dart> rotate_back_;
  RotationSystem rotation_;
};

/// Validates and builds a complex from face walks. Throws ComplexError.
CellComplex build_complex(int vertex_count, std::vector<Edge> edges, std::vector<BoundaryWalk> faces);

/// Traces the faces of the embedding induced by `rotation`: the walk leaving
/// along d continues with the rotation-successor of opposite(d). Faces are
/// numbered by their smallest dart, and each walk starts at its smallest dart.
CellComplex faces_from_rotation(int vertex_count, std::vector<Edge> edges, const RotationSystem& rotation);

/// True iff some graph isomorphism carries the rotation of `a` onto that of
/// `b`, preserving all cyclic orders or reversing all of them.
bool equivalent_embeddings(const CellComplex& a, const CellComplex& b);

/// Same as equivalent_embeddings, restricted to isomorphisms that preserve
/// the given per-vertex labels.
bool equivalent_labelled_embeddings(const CellComplex& a, std::span<const int> labels_a, const CellComplex& b,
                                    std::span<const int> labels_b);

/// Same surface with every rotation reversed (faces walked backwards).
CellComplex mirror(const CellComplex& k);

/// Face walks rotated to start at their smallest dart, sorted. Two complexes
/// over the same edges have the same faces iff these agree.
std::vector<BoundaryWalk> normalized_faces(const CellComplex& k);

}  // namespace dlf
