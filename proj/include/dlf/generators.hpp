#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "dlf/complex.hpp"

// Standard decompositions and seeded random inputs.
namespace dlf {

using Rng = std::mt19937_64;

// Uniform integer in [0, n).
int uniform_below(Rng& rng, int n);

/// Builds a complex whose faces are given as vertex cycles. The graph must be
/// simple; edges are created in lexicographic order of their endpoint pairs,
/// oriented from the smaller to the larger vertex.
CellComplex polygon_complex(int vertex_count, const std::vector<std::vector<VertexId>>& polygons);

CellComplex point_sphere();
CellComplex single_edge_sphere();
CellComplex doubled_triangle();
CellComplex tetrahedron();
CellComplex cube();
CellComplex octahedron();
// One vertex, loops a and b, face a b a^-1 b^-1.
CellComplex torus_square();
// One vertex, four loops, face a b a^-1 b^-1 c d c^-1 d^-1.
CellComplex genus2_octagon();
// Quadrangulated torus with rows x cols vertices.
CellComplex torus_grid(int rows, int cols);

// Adds a vertex inside every face joined to each of its corners.
CellComplex stellar_subdivision(const CellComplex& k);
// Splits every edge at a new midpoint vertex.
CellComplex edge_subdivision(const CellComplex& k);

/// Random triangulated sphere with at most `max_faces` faces (at least 4),
/// grown by vertex insertions and edge flips.
CellComplex random_sphere_triangulation(int max_faces, std::uint64_t seed);

/// Same complex with vertex, edge and face ids permuted, edge directions
/// flipped at random and face walks cyclically shifted.
CellComplex relabel(const CellComplex& k, std::uint64_t seed);

struct Relabelled {
  CellComplex complex;
  std::vector<int> vertex_map;  // old id -> new id
  std::vector<int> edge_map;
  std::vector<int> face_map;
};

Relabelled relabel_tracked(const CellComplex& k, std::uint64_t seed);

struct RotationGraph {
  int vertex_count = 0;
  std::vector<Edge> edges;
  RotationSystem rotation;
};

/// Random connected multigraph (loops and parallel edges allowed) on 1 to
/// `max_vertices` vertices, with an independently shuffled rotation at every
/// vertex. Always has at least one edge.
RotationGraph random_rotation_graph(int max_vertices, std::uint64_t seed);

}  // namespace dlf
