#include <gtest/gtest.h>

#include "dlf/generators.hpp"
#include "dlf/hasse.hpp"
#include "dlf/homotopy.hpp"
#include "dlf/linefield.hpp"
#include "oracle.hpp"

using namespace dlf;

namespace {

// Two poles joined by n meridians; the faces are the n digons between
// consecutive meridians.
CellComplex beach_ball(int n) {
  std::vector<Edge> edges(n, Edge{0, 1});
  std::vector<BoundaryWalk> faces;
  for (int i = 0; i < n; ++i) faces.push_back({dart_of(i), dart_of((i + 1) % n, true)});
  return build_complex(2, edges, faces);
}

// Beach ball with every meridian split at a midpoint 2 + i; edge 2i is the
// upper half (pole 0 to midpoint), edge 2i+1 the lower half.
CellComplex split_beach_ball(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    edges.push_back({0, 2 + i});
    edges.push_back({2 + i, 1});
  }
  std::vector<BoundaryWalk> faces;
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    faces.push_back({dart_of(2 * i), dart_of(2 * i + 1), dart_of(2 * j + 1, true), dart_of(2 * j, true)});
  }
  return build_complex(2 + n, edges, faces);
}

CellComplex path_sphere() {
  return faces_from_rotation(3, {{0, 1}, {1, 2}}, RotationSystem({{0}, {1, 2}, {3}}));
}

EdgeId edge_between(const CellComplex& k, VertexId a, VertexId b) {
  for (EdgeId e = 0; e < k.edge_count(); ++e) {
    const Edge& x = k.edge(e);
    if ((x.tail == a && x.head == b) || (x.tail == b && x.head == a)) return e;
  }
  return -1;
}

// Cube field with critical vertices 0 and 4: bottom vertices 1, 2, 3 flow up
// their vertical edges, the top ring flows 6 -> 7 -> 5 -> 4.
LineField two_critical_cube() {
  const CellComplex k = cube();
  return LineField::from_pairs(k, {{1, edge_between(k, 1, 5)},
                                   {2, edge_between(k, 2, 6)},
                                   {3, edge_between(k, 3, 7)},
                                   {5, edge_between(k, 5, 4)},
                                   {7, edge_between(k, 7, 5)},
                                   {6, edge_between(k, 6, 7)}});
}

std::set<VertexId> critical_vertex_set(const LineField& f) {
  std::set<VertexId> s;
  for (VertexId v = 0; v < f.complex().vertex_count(); ++v) {
    if (!f.vertex_matched(v)) s.insert(v);
  }
  return s;
}

std::map<FaceId, HalfInteger> critical_face_map(const LineField& f) {
  std::map<FaceId, HalfInteger> m;
  for (FaceId g = 0; g < f.complex().face_count(); ++g) {
    if (is_critical_face(f, g)) m[g] = face_index(f, g);
  }
  return m;
}

void expect_preserved(const LineField& f, const ReducedField& r) {
  EXPECT_EQ(std::set<VertexId>(r.critical_vertices.begin(), r.critical_vertices.end()), critical_vertex_set(f));
  std::map<FaceId, HalfInteger> faces;
  for (const CriticalFace& c : r.critical_faces) {
    faces[c.face] = c.index;
    EXPECT_EQ(c.reduced_c_value, c.c_value);
  }
  EXPECT_EQ(faces, critical_face_map(f));
  EXPECT_EQ(r.complex.euler_characteristic(), f.complex().euler_characteristic());
  EXPECT_EQ(r.index_sum(), HalfInteger(f.complex().euler_characteristic()));
}

}  // namespace

TEST(AuxGraph, EmptyFieldOnTetrahedron) {
  const AuxGraph g = build_aux_graph(LineField(tetrahedron(), {}));
  EXPECT_EQ(g.nodes.size(), 6u);
  EXPECT_TRUE(g.links.empty());
  EXPECT_EQ(g.component_count, 6);
}

TEST(AuxGraph, LinksAreTheCTwoFaces) {
  for (const LineField& f : {spanning_tree_field(tetrahedron(), 0), two_critical_cube(), random_field(torus_grid(3, 3), 5)}) {
    const AuxGraph g = build_aux_graph(f);
    std::set<int> matched;
    for (auto [v, e] : f.pairs()) matched.insert(e);
    const auto c = oracle::c_values(f.complex(), matched);
    std::set<FaceId> expected;
    for (FaceId x = 0; x < static_cast<FaceId>(c.size()); ++x) {
      if (c[x] == 2) expected.insert(x);
    }
    std::set<FaceId> got;
    for (const AuxLink& l : g.links) got.insert(l.face);
    EXPECT_EQ(got, expected);
    EXPECT_EQ(g.nodes.size(), static_cast<std::size_t>(f.complex().edge_count() - f.matching().size()));
    for (const AuxLink& l : g.links) {
      EXPECT_FALSE(f.edge_matched(edge_of(l.dart_a)));
      EXPECT_FALSE(f.edge_matched(edge_of(l.dart_b)));
    }
  }
}

TEST(AuxGraph, AllFacesCritical) {
  const AuxGraph g = build_aux_graph(LineField(cube(), {}));
  EXPECT_TRUE(g.links.empty());
  EXPECT_EQ(g.component_count, static_cast<int>(g.nodes.size()));
}

TEST(Degenerate, IndexOneFace) {
  for (const LineField& f : {LineField::from_pairs(single_edge_sphere(), {{0, 0}}), spanning_tree_field(path_sphere(), 0)}) {
    const auto d = detect_degenerate(f);
    ASSERT_TRUE(d);
    EXPECT_EQ(d->kind, Degeneracy::Kind::IndexOneFace);
    EXPECT_EQ(face_c_value(f, d->face), 0);
    EXPECT_EQ(f.complex().euler_characteristic(), 2);
  }
}

TEST(Degenerate, EquatorialBand) {
  for (const LineField& f : {LineField(beach_ball(4), {}),
                             LineField::from_pairs(split_beach_ball(5), {{2, 1}, {3, 3}, {4, 5}, {5, 7}, {6, 9}})}) {
    const auto d = detect_degenerate(f);
    ASSERT_TRUE(d);
    EXPECT_EQ(d->kind, Degeneracy::Kind::CycleInG);
    EXPECT_EQ(f.complex().euler_characteristic(), 2);
  }
}

TEST(Degenerate, SelfLoopInG) {
  const auto d = detect_degenerate(LineField(single_edge_sphere(), {}));
  ASSERT_TRUE(d);
  EXPECT_EQ(d->kind, Degeneracy::Kind::CycleInG);
  EXPECT_EQ(d->face, 0);
}

TEST(Degenerate, NoneForTrees) {
  EXPECT_FALSE(detect_degenerate(spanning_tree_field(tetrahedron(), 0)));
  EXPECT_FALSE(detect_degenerate(two_critical_cube()));
}

TEST(Degenerate, NeverOnTorusOrGenusTwo) {
  for (const CellComplex& k : {torus_square(), torus_grid(3, 3), stellar_subdivision(genus2_octagon())}) {
    for (std::uint64_t seed = 0; seed < 300; ++seed) EXPECT_FALSE(detect_degenerate(random_field(k, seed)));
  }
}

TEST(Degenerate, AlwaysOnSphere) {
  int found = 0;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const CellComplex k = random_sphere_triangulation(12, seed);
    const LineField f = random_field(k, seed);
    if (detect_degenerate(f)) {
      ++found;
      EXPECT_EQ(k.euler_characteristic(), 2);
    }
  }
  EXPECT_GT(found, 0);
}

TEST(Induce, SingletonComponents) {
  const LineField f = spanning_tree_field(tetrahedron(), 0);
  const InducedMatching m = induce(f);
  EXPECT_EQ(m.matching, f.matching());
  EXPECT_EQ(m.critical_edges, (std::vector<EdgeId>{3, 4, 5}));
  const HasseDiagram h = hasse_diagram(f.complex());
  EXPECT_TRUE(is_morse_matching(h, m.matching));
  EXPECT_TRUE(forman_euler_check(h, m.matching).holds);
}

TEST(Induce, SingleLinkPath) {
  // Pole 0 matched with meridian 0: the digon between meridians 1 and 2 is
  // the only C = 2 face.
  const LineField f = LineField::from_pairs(beach_ball(3), {{0, 0}});
  const AuxGraph g = build_aux_graph(f);
  ASSERT_EQ(g.links.size(), 1u);
  EXPECT_EQ(g.links[0].face, 1);
  const InducedMatching smallest = induce(f, TreePolicy::BfsFromSmallest);
  EXPECT_EQ(smallest.critical_edges, (std::vector<EdgeId>{1}));
  const CellComplex& k = f.complex();
  EXPECT_TRUE(smallest.matching.contains(face_level_edge(k, dart_of(2, true))));
  const InducedMatching largest = induce(f, TreePolicy::BfsFromLargest);
  EXPECT_EQ(largest.critical_edges, (std::vector<EdgeId>{2}));
}

TEST(Induce, DegenerateThrows) { EXPECT_THROW(induce(LineField(beach_ball(3), {})), HomotopyError); }

TEST(Induce, OneRootPerComponent) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const CellComplex k = seed % 2 ? cube() : torus_grid(3, 4);
    const LineField f = random_field(k, seed);
    if (detect_degenerate(f)) continue;
    const InducedMatching m = induce(f);
    EXPECT_EQ(static_cast<int>(m.critical_edges.size()), build_aux_graph(f).component_count);
    const HasseDiagram h = hasse_diagram(k);
    EXPECT_TRUE(is_morse_matching(h, m.matching));
    EXPECT_EQ(oracle::count_alternating_cycles(k, {m.matching.edges().begin(), m.matching.edges().end()}), 0);
  }
}

TEST(Reduce, TetrahedronSpanningTree) {
  const LineField f = spanning_tree_field(tetrahedron(), 0);
  const ReducedField r = reduce(f);
  EXPECT_FALSE(r.degeneracy);
  EXPECT_EQ(r.critical_vertices, std::vector<VertexId>{0});
  EXPECT_EQ(r.critical_faces.size(), 4u);
  HalfInteger faces;
  for (const CriticalFace& c : r.critical_faces) faces += c.index;
  EXPECT_EQ(faces, HalfInteger(1));
  EXPECT_EQ(r.complex.euler_characteristic(), 2);
  EXPECT_EQ(r.complex.vertex_count(), 1);
  EXPECT_EQ(r.complex.edge_count(), 3);
  expect_preserved(f, r);
}

TEST(Reduce, TwoCriticalVerticesOnCube) {
  const LineField f = two_critical_cube();
  const ReducedField r = reduce(f);
  ASSERT_FALSE(r.degeneracy);
  EXPECT_EQ(r.complex.vertex_count(), 2);
  EXPECT_EQ(r.critical_vertices, (std::vector<VertexId>{0, 4}));
  const auto bottom = std::find_if(r.critical_faces.begin(), r.critical_faces.end(), [](const CriticalFace& c) { return c.face == 0; });
  ASSERT_NE(bottom, r.critical_faces.end());
  EXPECT_EQ(bottom->c_value, 4);
  EXPECT_EQ(bottom->index, HalfInteger(-1));
  expect_preserved(f, r);
  // Walk lengths of the reduced complex are the reduced C-values.
  for (std::size_t i = 0; i < r.critical_faces.size(); ++i) {
    EXPECT_EQ(static_cast<int>(r.complex.walk(static_cast<FaceId>(i)).size()), r.critical_faces[i].reduced_c_value);
  }
}

TEST(Reduce, EmptyFieldWithoutLinksKeepsComplex) {
  const LineField f(tetrahedron(), {});
  const ReducedField r = reduce(f);
  EXPECT_TRUE(equivalent_embeddings(r.complex, f.complex()));
  expect_preserved(f, r);
}

TEST(Reduce, DegenerateGivesPointSphere) {
  const LineField f(beach_ball(4), {});
  const ReducedField r = reduce(f);
  ASSERT_TRUE(r.degeneracy);
  EXPECT_TRUE(r.complex.is_point_sphere());
  EXPECT_EQ(r.critical_vertices, std::vector<VertexId>{0});
  ASSERT_EQ(r.critical_faces.size(), 1u);
  EXPECT_EQ(r.critical_faces[0].index, HalfInteger(1));
  EXPECT_EQ(r.index_sum(), HalfInteger(2));
}

TEST(Reduce, PreservesCriticalDataOnRandomFields) {
  const std::vector<CellComplex> ks = {tetrahedron(), cube(), octahedron(), torus_square(), genus2_octagon(),
                                       torus_grid(3, 3), random_sphere_triangulation(20, 3)};
  for (const CellComplex& k : ks) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const LineField f = random_field(k, seed);
      if (detect_degenerate(f)) continue;
      const ReducedField a = reduce(f, TreePolicy::BfsFromSmallest);
      const ReducedField b = reduce(f, TreePolicy::BfsFromLargest);
      expect_preserved(f, a);
      expect_preserved(f, b);
      EXPECT_EQ(a.critical_vertices, b.critical_vertices);
      ASSERT_EQ(a.critical_faces.size(), b.critical_faces.size());
      for (std::size_t i = 0; i < a.critical_faces.size(); ++i) EXPECT_EQ(a.critical_faces[i].index, b.critical_faces[i].index);
      EXPECT_EQ(a.reduced_hasse.euler_characteristic(), k.euler_characteristic());
    }
  }
}

TEST(Paths, EmptyFieldMapsToItself) {
  const LineField f(cube(), {});
  for (const PathEntry& p : dimension0_paths(f)) {
    EXPECT_EQ(p.path.size(), 1u);
    EXPECT_EQ(p.target, f.complex().tail(f.complex().walk(p.face)[p.position]));
  }
  EXPECT_EQ(dimension0_paths(f).size(), 24u);
}

TEST(Paths, SpanningTreeEndsAtRoot) {
  const LineField f = spanning_tree_field(octahedron(), 3);
  for (const PathEntry& p : dimension0_paths(f)) EXPECT_EQ(p.target, 3);
}

TEST(Paths, TwoCriticalVerticesFollowOracle) {
  const LineField f = two_critical_cube();
  std::map<int, int> pairs;
  for (auto [v, e] : f.pairs()) pairs[v] = e;
  for (const PathEntry& p : dimension0_paths(f)) {
    const VertexId start = f.complex().tail(f.complex().walk(p.face)[p.position]);
    EXPECT_EQ(p.path.front(), start);
    EXPECT_EQ(p.path.back(), p.target);
    EXPECT_EQ(p.target, oracle::flow_target(f.complex(), pairs, start));
    EXPECT_TRUE(p.target == 0 || p.target == 4);
    EXPECT_LE(static_cast<int>(p.path.size()), f.complex().vertex_count());
  }
}

TEST(BasinTour, EveryDartOnce) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const LineField f = random_field(random_sphere_triangulation(20, seed), seed);
    const BasinTour t = basin_tour(f);
    std::map<VertexId, std::set<int>> seen;
    for (Dart d = 0; d < f.complex().dart_count(); ++d) {
      EXPECT_EQ(t.basin_of[d], f.flow_target(f.complex().tail(d)));
      EXPECT_TRUE(seen[t.basin_of[d]].insert(t.position[d]).second);
    }
  }
}
