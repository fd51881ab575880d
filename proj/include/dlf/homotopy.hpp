#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dlf/complex.hpp"
#include "dlf/hasse.hpp"
#include "dlf/linefield.hpp"

namespace dlf {

/// A face with exactly two unmatched traversals, joining the nodes of the
/// two edges it traverses.
struct AuxLink {
  FaceId face = 0;
  int a = 0;  // node of edge_of(dart_a)
  int b = 0;  // node of edge_of(dart_b)
  Dart dart_a = 0;
  Dart dart_b = 0;
};

/// Auxiliary graph of a line field: one node per unmatched edge, one link
/// per face with C = 2. Every node has at most two links, one per side.
struct AuxGraph {
  std::vector<EdgeId> nodes;       // ascending
  std::vector<int> node_of_edge;   // -1 for matched edges
  std::vector<AuxLink> links;      // ascending by face
  std::vector<int> component;      // per node; components numbered by smallest node
  int component_count = 0;

  std::vector<int> links_of(int node) const;
};

AuxGraph build_aux_graph(const LineField& field);

struct Degeneracy {
  enum class Kind { IndexOneFace, CycleInG };
  Kind kind = Kind::IndexOneFace;
  FaceId face = -1;     // the C = 0 face, or the smallest link face of the cyclic component
  int component = -1;   // cyclic component of G, -1 for IndexOneFace
};

const char* to_string(Degeneracy::Kind kind);

enum class HomotopyErrc { Degenerate, DegenerateOnNonSphere };

class HomotopyError : public std::runtime_error {
 public:
  HomotopyError(HomotopyErrc code, const std::string& what);
  HomotopyErrc code() const { return code_; }

 private:
  HomotopyErrc code_;
};

/// Smallest face with C = 0, else the first component of G containing a
/// cycle (a self-loop or parallel links count). Both force a sphere; a
/// witness on a complex with Euler characteristic other than 2 throws
/// DegenerateOnNonSphere.
std::optional<Degeneracy> detect_degenerate(const LineField& field);

enum class TreePolicy {
  BfsFromSmallest,  // root each component at its smallest edge id
  BfsFromLargest,
};

struct InducedMatching {
  Matching matching;                 // M_V together with the face-level pairs
  std::vector<EdgeId> critical_edges;  // one root per component of G, ascending
};

/// Extends the field's matching to the whole Hasse diagram: each component of
/// G is rooted per `policy` and every other node is matched with the link
/// through which BFS reached it. Throws Degenerate.
InducedMatching induce(const LineField& field, TreePolicy policy = TreePolicy::BfsFromSmallest);

inline Matching induced_matching(const LineField& field, TreePolicy policy = TreePolicy::BfsFromSmallest) {
  return induce(field, policy).matching;
}

/// Dimension-0 gradient path from one corner of a critical face.
struct PathEntry {
  VertexId target = 0;         // terminal critical vertex
  FaceId face = 0;
  int position = 0;            // walk position; the path starts at tail(walk[position])
  std::vector<VertexId> path;  // start ... target
};

/// One entry for every corner of every critical face (C != 2), in face then
/// walk order.
std::vector<PathEntry> dimension0_paths(const LineField& field);

/// Position of every dart within the tour of its basin: starting at the
/// smallest dart of the basin's critical vertex, turn with the rotation and
/// cross each matched edge to continue around its far end. Darts leaving a
/// basin's vertices are listed exactly once.
struct BasinTour {
  std::vector<int> position;        // per dart
  std::vector<VertexId> basin_of;   // per dart: critical vertex of its tail's basin
};

BasinTour basin_tour(const LineField& field);

struct CriticalFace {
  FaceId face = 0;
  int c_value = 0;          // C in the original field
  int reduced_c_value = 0;  // incidences with critical edges after reduction
  HalfInteger index;        // 1 - reduced_c_value / 2
};

struct ReducedField {
  std::optional<Degeneracy> degeneracy;
  TreePolicy policy = TreePolicy::BfsFromSmallest;
  Matching induced;                      // empty when degenerate
  HasseDiagram reduced_hasse;
  std::vector<VertexId> critical_vertices;
  std::vector<EdgeId> critical_edges;
  std::vector<CriticalFace> critical_faces;
  std::vector<PathEntry> paths;

  // The reduced decomposition as a complex. Its vertices, edges and faces
  // are numbered by ascending origin in the input complex.
  CellComplex complex;
  std::vector<VertexId> vertex_origin;
  std::vector<EdgeId> edge_origin;
  std::vector<FaceId> face_origin;

  HalfInteger index_sum() const;
};

/// Reduces the field along its induced matching. Degenerate fields reduce to
/// the point sphere: their smallest critical vertex and the witness face,
/// both of index 1, with `degeneracy` set.
ReducedField reduce(const LineField& field, TreePolicy policy = TreePolicy::BfsFromSmallest);

}  // namespace dlf
