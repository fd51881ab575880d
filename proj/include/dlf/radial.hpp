#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dlf/complex.hpp"
#include "dlf/linefield.hpp"

namespace dlf {

/// A bipartite graph embedded by a rotation system. Nodes of part 0 stand
/// for vertex-cells, nodes of part 1 for face-cells.
struct EmbeddedBipartiteGraph {
  CellComplex embedding;
  std::vector<int> part;    // per node
  std::vector<int> origin;  // per node: vertex or face id in the source complex

  int node_count() const { return embedding.vertex_count(); }
  int edge_count() const { return embedding.edge_count(); }
};

enum class RadialErrc { NotQuadFaces, NotBipartite };

class RadialError : public std::runtime_error {
 public:
  RadialError(RadialErrc code, const std::string& what);
  RadialErrc code() const { return code_; }

 private:
  RadialErrc code_;
};

bool is_bipartite(const EmbeddedBipartiteGraph& g);

/// Every traced face has a walk of length 4, or there is a single face
/// whose walk runs along one edge and back.
bool has_quad_faces(const EmbeddedBipartiteGraph& g);

/// Radial graph of a complex: nodes are its vertices followed by its faces,
/// with one edge per corner (radial edge d joins tail(d) to face_of(d)).
/// The rotation at a vertex follows the complex; around a face node the
/// corners are taken against the walk, which makes every face a quad.
EmbeddedBipartiteGraph radial_graph(const CellComplex& k);

/// Radial graph of the reduced decomposition, built from dimension-0
/// gradient paths without reducing: one edge per unmatched traversal of a
/// critical face, joining the face to the critical vertex its corner flows
/// to. Corners are ordered around a critical vertex by their position in
/// the basin tour. Degenerate fields give the two-node sphere graph.
EmbeddedBipartiteGraph radial_of_reduced(const LineField& field);

struct Decompositions {
  CellComplex first;   // vertices from part 0, one face per part-1 node
  CellComplex second;  // the dual choice
};

/// The two decompositions whose radial graph is `g`: one diagonal per quad
/// joins its two nodes of the chosen part. Throws NotBipartite, NotQuadFaces.
Decompositions derive_decompositions(const EmbeddedBipartiteGraph& g);

/// Part-preserving isomorphism preserving or reversing every rotation.
bool radial_equivalent(const EmbeddedBipartiteGraph& a, const EmbeddedBipartiteGraph& b);

/// Smallest breadth-first dart encoding over every starting dart and both
/// orientations; equal exactly for equivalent labelled embeddings.
std::vector<std::uint8_t> canonical_form(const CellComplex& k, std::span<const int> labels);
std::vector<std::uint8_t> canonical_form(const EmbeddedBipartiteGraph& g);

std::string to_hex(std::span<const std::uint8_t> bytes);

EmbeddedBipartiteGraph relabel(const EmbeddedBipartiteGraph& g, std::uint64_t seed);
EmbeddedBipartiteGraph mirror(const EmbeddedBipartiteGraph& g);

}  // namespace dlf
