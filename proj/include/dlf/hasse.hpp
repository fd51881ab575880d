#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dlf/complex.hpp"

namespace dlf {

struct Cell {
  int dim = 0;
  int id = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// "v3", "e0", "f12"
std::string to_string(Cell c);

/// One incidence between a cell and a cofacet. Parallel incidences (a loop at
/// a vertex, an edge traversed twice by a face) are separate Hasse edges.
struct HasseEdge {
  int lower = 0;  // node index
  int upper = 0;  // node index

  friend bool operator==(const HasseEdge&, const HasseEdge&) = default;
};

class HasseDiagram {
 public:
  HasseDiagram() = default;
  // Every edge must join nodes whose dimensions differ by one.
  HasseDiagram(std::vector<Cell> nodes, std::vector<HasseEdge> edges);

  int node_count() const { return static_cast<int>(nodes_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Cell>& nodes() const { return nodes_; }
  const std::vector<HasseEdge>& edges() const { return edges_; }
  const Cell& node(int n) const { return nodes_[n]; }
  const HasseEdge& edge(int h) const { return edges_[h]; }
  int dim(int n) const { return nodes_[n].dim; }
  // Dimension of the lower end; the "level" an edge lives on.
  int level(int h) const { return nodes_[edges_[h].lower].dim; }

  // Hasse edge ids, ascending.
  std::span<const int> up_edges(int n) const { return up_[n]; }
  std::span<const int> down_edges(int n) const { return down_[n]; }

  // Node index of a cell, or -1.
  int find(Cell c) const;

  // Alternating count of nodes by dimension.
  int euler_characteristic() const;

  friend bool operator==(const HasseDiagram& a, const HasseDiagram& b) {
    return a.nodes_ == b.nodes_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<Cell> nodes_;
  std::vector<HasseEdge> edges_;
  std::vector<std::vector<int>> up_;
  std::vector<std::vector<int>> down_;
};

/// Incidence diagram of a complex. Node layout: vertices, then edges, then
/// faces. Hasse edge d (d < 2|E|) joins tail(d) to edge_of(d); Hasse edge
/// 2|E| + d joins edge_of(d) to face_of(d).
HasseDiagram hasse_diagram(const CellComplex& k);

inline int vertex_node(const CellComplex&, VertexId v) { return v; }
inline int edge_node(const CellComplex& k, EdgeId e) { return k.vertex_count() + e; }
inline int face_node(const CellComplex& k, FaceId f) { return k.vertex_count() + k.edge_count() + f; }
inline int vertex_level_edge(Dart d) { return d; }
inline int face_level_edge(const CellComplex& k, Dart d) { return k.dart_count() + d; }

/// A set of Hasse edge ids, kept sorted.
class Matching {
 public:
  Matching() = default;
  explicit Matching(std::vector<int> hasse_edges);

  const std::vector<int>& edges() const { return edges_; }
  int size() const { return static_cast<int>(edges_.size()); }
  bool empty() const { return edges_.empty(); }
  bool contains(int h) const;

  Matching united(const Matching& other) const;

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::vector<int> edges_;
};

enum class MatchingErrc { UnknownEdge, NotAMatching, NotMorse, DimensionMismatch };

const char* to_string(MatchingErrc code);

class MatchingError : public std::runtime_error {
 public:
  MatchingError(MatchingErrc code, const std::string& what);
  MatchingErrc code() const { return code_; }

 private:
  MatchingErrc code_;
};

/// Matched Hasse edge at every node, or -1. Throws NotAMatching if two
/// selected edges share a cell.
std::vector<int> partners(const HasseDiagram& h, const Matching& m);

/// A closed gradient path on any level, as the Hasse edges it uses (matched
/// edges upward, unmatched downward). Empty when the matching is acyclic.
/// With `level` >= 0 only edges of that level are considered.
std::vector<int> find_gradient_cycle(const HasseDiagram& h, const Matching& m, int level = -1);

/// True iff no level contains a closed alternating cycle.
bool is_morse_matching(const HasseDiagram& h, const Matching& m);

/// Unmatched cells, in node order. Throws NotMorse.
std::vector<Cell> critical_cells(const HasseDiagram& h, const Matching& m);

struct FormanEuler {
  int m0 = 0;
  int m1 = 0;
  int m2 = 0;
  int chi = 0;
  bool holds = false;
};

/// Counts critical cells by dimension and compares m0 - m1 + m2 with the
/// Euler characteristic of the diagram. Throws NotMorse.
FormanEuler forman_euler_check(const HasseDiagram& h, const Matching& m);

struct GradientPath {
  int dim = 0;
  std::vector<int> cells;       // node indices, all of dimension `dim`
  std::vector<int> witnesses;   // node index of the (dim+1)-cell between cells[i] and cells[i+1]
  std::vector<int> descents;    // Hasse edge taken from witnesses[i] down to cells[i+1]
  bool ends_critical = false;
};

/// All maximal gradient paths of dimension p starting at node `from`,
/// branching in ascending node order. Throws NotMorse, DimensionMismatch.
std::vector<GradientPath> gradient_paths(const HasseDiagram& h, const Matching& m, int p, int from);

/// Diagram whose nodes are the critical cells. For every Hasse edge from a
/// p-cell to a critical (p+1)-cell, each gradient path from that p-cell that
/// ends at a critical p-cell contributes one edge. Edges are emitted in the
/// order of the originating Hasse edge. Throws NotMorse.
HasseDiagram forman_reduce(const HasseDiagram& h, const Matching& m);

/// Random matching over all levels, then repaired by dropping the smallest
/// matched edge of each closed path found until acyclic.
Matching random_morse_matching(const HasseDiagram& h, std::uint64_t seed);

/// Removes matched edges until acyclic, smallest id on each found cycle first.
Matching repair_to_acyclic(const HasseDiagram& h, Matching m);

}  // namespace dlf
