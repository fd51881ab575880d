#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "dlf/complex.hpp"

// Brute-force reference implementations used only by the tests. They read a
// complex through its edge list and face walks and nothing else.
namespace oracle {

using dlf::CellComplex;
using dlf::Dart;
using dlf::Edge;

// Orbits of d -> successor(opposite(d)), where successor is read off the
// per-vertex lists by linear search.
std::vector<std::vector<Dart>> trace_faces(const std::vector<Edge>& edges, const std::vector<std::vector<Dart>>& rotation);

std::multiset<int> face_sizes(const std::vector<std::vector<Dart>>& walks);
std::multiset<int> face_sizes(const CellComplex& k);
std::multiset<int> degrees(const CellComplex& k);

// Number of cells of each kind counted from the raw lists.
int euler(const CellComplex& k);

// Face containing dart d, found by scanning the walks.
int face_containing(const CellComplex& k, Dart d);

// Hasse incidences with multiplicity: vertex level from edge endpoints,
// face level from walks. Ids follow the documented layout.
struct Incidence {
  int id;
  int lower;  // global cell index: vertices, then edges, then faces
  int upper;
};
std::vector<Incidence> incidences(const CellComplex& k);

bool is_matching(const CellComplex& k, const std::set<int>& hasse_edges);

// Counts simple closed paths (matched incidences upward, the rest downward)
// on either level by exhaustive enumeration. Each cycle is counted once, from
// its smallest node.
long count_alternating_cycles(const CellComplex& k, const std::set<int>& hasse_edges);

// Calls `visit` for every matching of the Hasse diagram until it returns
// false. Returns the number visited.
long for_each_matching(const CellComplex& k, const std::function<bool(const std::set<int>&)>& visit);

// C-value of every face for a set of matched edges.
std::vector<int> c_values(const CellComplex& k, const std::set<int>& matched_edges);

// Vertex reached by repeatedly crossing matched edges from v; pairs map a
// vertex to its matched edge.
int flow_target(const CellComplex& k, const std::map<int, int>& pairs, int v);

// Sum of vertex and face indices, doubled.
int twice_index_sum(const CellComplex& k, const std::map<int, int>& pairs);

}  // namespace oracle
