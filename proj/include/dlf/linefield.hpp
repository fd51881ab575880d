#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dlf/complex.hpp"
#include "dlf/hasse.hpp"

namespace dlf {

/// Exact multiple of 1/2, stored doubled.
class HalfInteger {
 public:
  constexpr HalfInteger() = default;
  constexpr explicit HalfInteger(int whole) : twice_(2 * whole) {}
  static constexpr HalfInteger from_twice(int twice) {
    HalfInteger h;
    h.twice_ = twice;
    return h;
  }

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }

  constexpr HalfInteger operator+(HalfInteger o) const { return from_twice(twice_ + o.twice_); }
  constexpr HalfInteger operator-(HalfInteger o) const { return from_twice(twice_ - o.twice_); }
  constexpr HalfInteger& operator+=(HalfInteger o) {
    twice_ += o.twice_;
    return *this;
  }
  friend constexpr auto operator<=>(HalfInteger, HalfInteger) = default;

 private:
  int twice_ = 0;
};

// "1", "-3/2"
std::string to_string(HalfInteger h);

enum class FieldErrc { NotVertexLevel, NotIncident, NotAMatching, NotAcyclic, UnknownVertex, UnknownEdge, UnknownFace };

const char* to_string(FieldErrc code);

class FieldError : public std::runtime_error {
 public:
  FieldError(FieldErrc code, int cell, const std::string& what);
  FieldErrc code() const { return code_; }
  int cell() const { return cell_; }

 private:
  FieldErrc code_;
  int cell_;
};

/// A discrete gradient line field: a complex and an acyclic matching of
/// vertices with incident edges. The matching is held as vertex-level Hasse
/// edges, i.e. darts: dart d pairs tail(d) with edge_of(d).
class LineField {
 public:
  // Throws FieldError (NotVertexLevel, NotAMatching, NotAcyclic).
  LineField(CellComplex complex, Matching mv);

  // Pairs are (vertex, incident edge). A loop is matched through its forward dart.
  static LineField from_pairs(CellComplex complex, const std::vector<std::pair<VertexId, EdgeId>>& pairs);

  const CellComplex& complex() const { return complex_; }
  const Matching& matching() const { return mv_; }

  // Dart the vertex is matched through, or -1.
  Dart matched_dart(VertexId v) const { return vertex_dart_[v]; }
  bool vertex_matched(VertexId v) const { return vertex_dart_[v] != -1; }
  bool edge_matched(EdgeId e) const { return edge_matched_[e] != 0; }

  // Where a vertex flows to in one step along its matched edge, or -1 if critical.
  VertexId flow_step(VertexId v) const;
  // Terminal critical vertex of the dimension-0 gradient path from v.
  VertexId flow_target(VertexId v) const;

  std::vector<std::pair<VertexId, EdgeId>> pairs() const;

 private:
  CellComplex complex_;
  Matching mv_;
  std::vector<Dart> vertex_dart_;
  std::vector<char> edge_matched_;
};

/// 1 if v is unmatched, 0 otherwise.
int vertex_index(const LineField& field, VertexId v);

/// Number of boundary-walk traversals of f whose edge is unmatched; an edge
/// traversed twice by f counts twice.
int face_c_value(const LineField& field, FaceId f);

/// 1 - C(f)/2.
HalfInteger face_index(const LineField& field, FaceId f);

bool is_critical_face(const LineField& field, FaceId f);

struct IndexReport {
  std::vector<int> vertex_indices;
  std::vector<HalfInteger> face_indices;
  std::vector<int> c_values;
};

IndexReport index_report(const LineField& field);

struct LineFieldEuler {
  int vertex_sum = 0;
  HalfInteger face_sum;
  int chi = 0;
  bool holds = false;
};

/// Compares the total vertex and face index with the Euler characteristic.
LineFieldEuler euler_check(const LineField& field);

/// Matches every non-root vertex with its edge toward `root` in a BFS
/// spanning tree (neighbours taken in ascending dart order).
LineField spanning_tree_field(const CellComplex& k, VertexId root);

/// Random vertex-level matching made acyclic by dropping, on each closed
/// path found, its smallest dart. Deterministic for a given seed.
LineField random_field(const CellComplex& k, std::uint64_t seed);

}  // namespace dlf
