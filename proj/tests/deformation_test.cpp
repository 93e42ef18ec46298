#include "coxcone/deformation.hpp"

#include <algorithm>

#include <gtest/gtest.h>

#include "coxcone/error.hpp"
#include "coxcone/system.hpp"

namespace coxcone {
namespace {

std::vector<Vector> sorted(std::vector<Vector> v) {
  std::sort(v.begin(), v.end(), [](const Vector& a, const Vector& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  return v;
}

std::vector<Vector> cube() {
  std::vector<Vector> out;
  for (int m = 0; m < 8; ++m) out.push_back({m & 1, (m >> 1) & 1, (m >> 2) & 1});
  return out;
}

TEST(VerticesTest, WeightPolytopeVerticesAreTheOrbit) {
  for (const auto& s : {System::build({Family::B, 3, 0}), System::build({Family::H3, 3, 0})}) {
    for (int i = 0; i < 3; ++i) {
      const Vector& lambda = s->rs.fundamental_weight(i);
      const VertexSet vs = vertices(s->cone, support_weight_polytope(s->fan, lambda));
      EXPECT_EQ(sorted(vs.vertices), sorted(s->W.orbit(lambda))) << s->rs.name() << " " << i;
      EXPECT_EQ(vs.chamber_map.size(), s->W.order());
      EXPECT_EQ(vs.vertices[vs.chamber_map[0]], lambda);
    }
  }
}

TEST(VerticesTest, ZonotopeOfAllRootsIsThePermutohedron) {
  const auto s = System::build({Family::A, 3, 0});
  const SupportFunction z = support_zonotope(s->fan, s->rs.positive_roots(), true);
  EXPECT_EQ(z, support_weight_polytope(s->fan, s->rs.rho()));
  EXPECT_EQ(vertices(s->cone, z).vertices.size(), 24u);
  EXPECT_THROW(support_zonotope(s->fan, {s->rs.rho()}, true), InputError);
}

TEST(VerticesTest, NonMembersAreRejected) {
  const auto s = System::build({Family::A, 2, 0});
  SupportFunction h = support_weight_polytope(s->fan, s->rs.rho());
  h[0] = h[0] + Scalar(5);
  EXPECT_THROW(vertices(s->cone, h), PreconditionError);
  EXPECT_THROW(support_weight_polytope(s->fan, {Scalar(-1), Scalar(1)}), PreconditionError);
}

TEST(VerticesTest, LatticeCheck) {
  const auto a2 = System::build({Family::A, 2, 0});
  EXPECT_TRUE(lattice_check(a2->cone, support_weight_polytope(a2->fan, a2->rs.rho())));
  // λ_1 of A2 has vertices outside the root lattice.
  EXPECT_FALSE(lattice_check(a2->cone, support_weight_polytope(a2->fan, a2->rs.fundamental_weight(0))));
}

TEST(SymmetricConeTest, FundamentalCoweightsGenerate) {
  const auto s = System::build({Family::F4, 4, 0});
  for (int k = 0; k < 4; ++k) {
    const SymmetricVerdict v = symmetric_membership(s->rs, s->rs.inverse_cartan().row(k));
    EXPECT_TRUE(v.member);
    Vector e(4);
    e[k] = 1;
    EXPECT_EQ(v.coeffs, e);
  }
  const SymmetricVerdict bad = symmetric_membership(s->rs, {Scalar(-1), Scalar(0), Scalar(0), Scalar(0)});
  EXPECT_FALSE(bad.member);
  EXPECT_TRUE(bad.outside.has_value());
}

TEST(IndecomposabilityTest, NefDimensions) {
  const auto a3 = System::build({Family::A, 3, 0});
  // The octahedron P(λ_2) is indecomposable, the permutohedron is not.
  EXPECT_EQ(nef_dimension_at(a3->cone, support_weight_polytope(a3->fan, a3->rs.fundamental_weight(1))), 1);
  // A simple polytope varies freely: one parameter per ray, modulo translations.
  EXPECT_EQ(nef_dimension_at(a3->cone, support_weight_polytope(a3->fan, a3->rs.rho())), 14 - 3);
  const auto c3 = System::build({Family::C, 3, 0});
  EXPECT_FALSE(is_indecomposable(c3->cone, support_weight_polytope(c3->fan, c3->rs.fundamental_weight(2))));
  EXPECT_TRUE(predict_indecomposable_weight(c3->rs, 0));
  EXPECT_FALSE(predict_indecomposable_weight(c3->rs, 1));
  EXPECT_THROW(predict_indecomposable_weight(System::build({Family::H3, 3, 0})->rs, 0), InputError);
}

TEST(IndecomposabilityTest, HullOracle) {
  EXPECT_EQ(hull_nef_dimension(cube()), 3);
  const std::vector<Vector> octahedron = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0},
                                          {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  EXPECT_EQ(hull_nef_dimension(octahedron), 1);
  const std::vector<Vector> simplex = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  EXPECT_EQ(hull_nef_dimension(simplex), 1);
}

TEST(FaceOrbitTest, Hexagon) {
  const RootSystem a2 = RootSystem::build({Family::A, 2, 0});
  // Vertex, two edge orbits, and the polygon.
  EXPECT_EQ(face_orbits(a2, 0).size(), 4u);
  // The triangle: vertex, edge, polygon.
  const auto tri = face_orbits(a2, node_set({1}));
  EXPECT_EQ(tri.size(), 3u);
  EXPECT_EQ(tri.back().dim, 2);
}

TEST(MatroidTest, OrbitIsAMatroidAndAPairIsNot) {
  const auto s = System::build({Family::A, 2, 0});
  std::vector<ElemId> all(s->W.order());
  for (ElemId w = 0; w < s->W.order(); ++w) all[w] = w;
  const MatroidVerdict full = coxeter_matroid_check(s->rs, s->W, 0, all);
  EXPECT_TRUE(full.matroid);
  EXPECT_EQ(full.edges.size(), 6u);
  const ElemId s1s2 = s->W.from_word(std::vector<int>{0, 1});
  const MatroidVerdict pair = coxeter_matroid_check(s->rs, s->W, 0, {s->W.identity(), s1s2});
  EXPECT_FALSE(pair.matroid);
  ASSERT_TRUE(pair.violating_edge.has_value());
}

TEST(MatroidTest, BruhatIntervalsGiveMatroids) {
  const auto s = System::build({Family::B, 3, 0});
  const ElemId u = s->W.from_word(std::vector<int>{1});
  const ElemId v = s->W.from_word(std::vector<int>{0, 1, 2, 1});
  const auto pts = bruhat_interval_polytope(s->rs, s->W, u, v, 0);
  std::vector<ElemId> members;
  for (ElemId z = 0; z < s->W.order(); ++z) {
    if (s->W.bruhat_leq(u, z) && s->W.bruhat_leq(z, v)) members.push_back(z);
  }
  EXPECT_EQ(pts.size(), members.size());
  EXPECT_TRUE(coxeter_matroid_check(s->rs, s->W, 0, members).matroid);
}

TEST(MatroidTest, EdgeTest) {
  const auto pts = cube();
  EXPECT_TRUE(is_edge(pts, 0, 1));
  EXPECT_FALSE(is_edge(pts, 0, 3));
  EXPECT_FALSE(is_edge(pts, 0, 7));
}

}  // namespace
}  // namespace coxcone
