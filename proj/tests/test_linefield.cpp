#include <gtest/gtest.h>

#include "dlf/generators.hpp"
#include "dlf/linefield.hpp"
#include "oracle.hpp"

using namespace dlf;

namespace {

std::map<int, int> pair_map(const LineField& f) {
  std::map<int, int> m;
  for (auto [v, e] : f.pairs()) m[v] = e;
  return m;
}

std::set<int> matched_edges(const LineField& f) {
  std::set<int> s;
  for (auto [v, e] : f.pairs()) s.insert(e);
  return s;
}

// Pentagon doubled into a sphere.
CellComplex doubled_pentagon() { return polygon_complex(5, {{0, 1, 2, 3, 4}, {4, 3, 2, 1, 0}}); }

}  // namespace

TEST(HalfInteger, Printing) {
  EXPECT_EQ(to_string(HalfInteger(1)), "1");
  EXPECT_EQ(to_string(HalfInteger::from_twice(-3)), "-3/2");
  EXPECT_EQ(to_string(HalfInteger::from_twice(1)), "1/2");
  EXPECT_EQ(to_string(HalfInteger(-2)), "-2");
  EXPECT_EQ(HalfInteger::from_twice(1) + HalfInteger::from_twice(1), HalfInteger(1));
}

TEST(LineField, EmptyOnTetrahedron) {
  const LineField f(tetrahedron(), Matching{});
  for (VertexId v = 0; v < 4; ++v) EXPECT_EQ(vertex_index(f, v), 1);
}

TEST(LineField, DoubledTriangleOneCritical) {
  const LineField f = LineField::from_pairs(doubled_triangle(), {{0, 2}, {1, 1}});
  EXPECT_EQ(vertex_index(f, 0), 0);
  EXPECT_EQ(vertex_index(f, 1), 0);
  EXPECT_EQ(vertex_index(f, 2), 1);
  EXPECT_EQ(f.flow_target(0), 2);
  EXPECT_EQ(f.flow_target(1), 2);
}

TEST(LineField, CyclicPairingRejected) {
  try {
    LineField::from_pairs(doubled_triangle(), {{0, 0}, {1, 1}, {2, 2}});
    FAIL();
  } catch (const FieldError& e) {
    EXPECT_EQ(e.code(), FieldErrc::NotAcyclic);
  }
}

TEST(LineField, ConstructionErrors) {
  const CellComplex k = doubled_triangle();
  auto code = [&](auto make) {
    try {
      make();
    } catch (const FieldError& e) {
      return e.code();
    }
    ADD_FAILURE();
    return FieldErrc::UnknownFace;
  };
  EXPECT_EQ(code([&] { LineField(k, Matching({face_level_edge(k, 0)})); }), FieldErrc::NotVertexLevel);
  EXPECT_EQ(code([&] { LineField(k, Matching({0, 5})); }), FieldErrc::NotAMatching);
  EXPECT_EQ(code([&] { LineField::from_pairs(k, {{0, 1}}); }), FieldErrc::NotIncident);
  EXPECT_EQ(code([&] { LineField::from_pairs(k, {{7, 1}}); }), FieldErrc::UnknownVertex);
  EXPECT_EQ(code([&] { LineField::from_pairs(k, {{0, 9}}); }), FieldErrc::UnknownEdge);
  const LineField f(k, Matching{});
  EXPECT_EQ(code([&] { vertex_index(f, 3); }), FieldErrc::UnknownVertex);
  EXPECT_EQ(code([&] { face_c_value(f, 2); }), FieldErrc::UnknownFace);
}

TEST(LineField, LoopMatchedToItsVertexIsCyclic) {
  EXPECT_THROW(LineField::from_pairs(torus_square(), {{0, 0}}), FieldError);
}

TEST(LineField, CValues) {
  EXPECT_EQ(face_c_value(LineField(tetrahedron(), {}), 0), 3);
  EXPECT_EQ(face_c_value(LineField(torus_square(), {}), 0), 4);
  // Square face 0 2 3 1 of the cube: match 0 with edge (0,2) and 1 with (1,3).
  const CellComplex c = cube();
  auto edge_between = [&](int a, int b) {
    for (EdgeId e = 0; e < c.edge_count(); ++e) {
      if ((c.edge(e).tail == a && c.edge(e).head == b) || (c.edge(e).tail == b && c.edge(e).head == a)) return e;
    }
    return -1;
  };
  const LineField f = LineField::from_pairs(c, {{0, edge_between(0, 2)}, {1, edge_between(1, 3)}});
  EXPECT_EQ(face_c_value(f, 0), 2);
  EXPECT_EQ(face_c_value(f, 0), oracle::c_values(c, matched_edges(f))[0]);
}

TEST(LineField, FaceIndices) {
  const LineField a = spanning_tree_field(doubled_triangle(), 2);  // every edge but one matched
  // C = 0 is impossible here; use the single-edge sphere instead.
  const LineField s = LineField::from_pairs(single_edge_sphere(), {{0, 0}});
  EXPECT_EQ(face_c_value(s, 0), 0);
  EXPECT_EQ(face_index(s, 0), HalfInteger(1));
  EXPECT_TRUE(is_critical_face(s, 0));
  for (FaceId f = 0; f < 2; ++f) {
    EXPECT_EQ(face_c_value(a, f), 1);
    EXPECT_EQ(face_index(a, f), HalfInteger::from_twice(1));
  }
  const LineField p(doubled_pentagon(), {});
  EXPECT_EQ(face_c_value(p, 0), 5);
  EXPECT_EQ(face_index(p, 0), HalfInteger::from_twice(-3));
  EXPECT_TRUE(is_critical_face(p, 0));
  const LineField q = LineField::from_pairs(doubled_pentagon(), {{1, 2}, {2, 3}, {3, 4}});
  EXPECT_EQ(face_c_value(q, 0), 2);
  EXPECT_EQ(face_index(q, 0), HalfInteger(0));
  EXPECT_FALSE(is_critical_face(q, 0));
}

TEST(LineField, EulerExamples) {
  const LineFieldEuler t = euler_check(LineField(tetrahedron(), {}));
  EXPECT_EQ(t.vertex_sum, 4);
  EXPECT_EQ(t.face_sum, HalfInteger(-2));
  EXPECT_TRUE(t.holds);
  const LineFieldEuler c = euler_check(LineField(cube(), {}));
  EXPECT_EQ(c.vertex_sum, 8);
  EXPECT_EQ(c.face_sum, HalfInteger(-6));
  EXPECT_TRUE(c.holds);
  const LineFieldEuler s = euler_check(LineField(torus_square(), {}));
  EXPECT_EQ(s.vertex_sum, 1);
  EXPECT_EQ(s.face_sum, HalfInteger(-1));
  EXPECT_EQ(s.chi, 0);
  EXPECT_TRUE(s.holds);
}

TEST(LineField, SpanningTreeFields) {
  const LineField t = spanning_tree_field(tetrahedron(), 0);
  EXPECT_EQ(vertex_index(t, 0), 1);
  for (VertexId v = 1; v < 4; ++v) EXPECT_EQ(vertex_index(t, v), 0);

  const CellComplex path = faces_from_rotation(4, {{0, 1}, {1, 2}, {2, 3}}, RotationSystem({{0}, {1, 2}, {3, 4}, {5}}));
  const LineField p = spanning_tree_field(path, 0);
  EXPECT_EQ(p.matching().size(), 3);
  EXPECT_EQ(p.flow_target(3), 0);

  const LineField torus = spanning_tree_field(torus_square(), 0);
  EXPECT_TRUE(torus.matching().empty());
  EXPECT_EQ(vertex_index(torus, 0), 1);

  EXPECT_THROW(spanning_tree_field(tetrahedron(), 4), FieldError);
}

TEST(LineField, SpanningTreeAlwaysOneCritical) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const CellComplex k = random_sphere_triangulation(20, seed);
    for (VertexId root = 0; root < k.vertex_count(); ++root) {
      const LineField f = spanning_tree_field(k, root);
      int critical = 0;
      for (VertexId v = 0; v < k.vertex_count(); ++v) critical += vertex_index(f, v);
      EXPECT_EQ(critical, 1);
    }
  }
}

TEST(LineField, RandomFieldDeterministic) {
  const CellComplex k = cube();
  EXPECT_EQ(random_field(k, 42).matching(), random_field(k, 42).matching());
  EXPECT_TRUE(random_field(torus_square(), 3).matching().empty());
  EXPECT_TRUE(random_field(genus2_octagon(), 3).matching().empty());
}

TEST(LineField, RandomFieldsOnTetrahedronSatisfyEuler) {
  const CellComplex k = tetrahedron();
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const LineField f = random_field(k, seed);
    const LineFieldEuler e = euler_check(f);
    EXPECT_TRUE(e.holds);
    EXPECT_EQ(2 * e.vertex_sum + e.face_sum.twice(), oracle::twice_index_sum(k, pair_map(f)));
  }
}

TEST(LineField, CSumCountsSidesOfUnmatchedEdges) {
  for (const CellComplex& k : {cube(), torus_grid(3, 3), stellar_subdivision(genus2_octagon())}) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const LineField f = random_field(k, seed);
      int sum = 0;
      for (FaceId g = 0; g < k.face_count(); ++g) {
        sum += face_c_value(f, g);
        EXPECT_LE(face_index(f, g), HalfInteger(1));
        if (face_index(f, g) == HalfInteger(1)) {
          for (Dart d : k.walk(g)) EXPECT_TRUE(f.edge_matched(edge_of(d)));
        }
      }
      EXPECT_EQ(sum, 2 * (k.edge_count() - f.matching().size()));
      const auto oracle_c = oracle::c_values(k, matched_edges(f));
      for (FaceId g = 0; g < k.face_count(); ++g) EXPECT_EQ(face_c_value(f, g), oracle_c[g]);
      for (VertexId v = 0; v < k.vertex_count(); ++v) EXPECT_EQ(f.flow_target(v), oracle::flow_target(k, pair_map(f), v));
    }
  }
}

TEST(LineField, IndexReport) {
  const IndexReport r = index_report(LineField(torus_square(), {}));
  EXPECT_EQ(r.vertex_indices, std::vector<int>{1});
  EXPECT_EQ(r.c_values, std::vector<int>{4});
  EXPECT_EQ(r.face_indices, std::vector<HalfInteger>{HalfInteger(-1)});
}
