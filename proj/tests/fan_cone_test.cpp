#include <map>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "coxcone/deformation.hpp"
#include "coxcone/error.hpp"
#include "coxcone/system.hpp"

namespace coxcone {
namespace {

std::unique_ptr<System> make(Family f, int rank, int m = 0) { return System::build({f, rank, m}); }

TEST(CoxeterFanTest, RayAndWallCounts) {
  struct Case {
    Family f;
    int rank;
    std::size_t rays;
  };
  for (const Case c : {Case{Family::A, 3, 14}, Case{Family::B, 3, 26}, Case{Family::H3, 3, 62},
                       Case{Family::I2, 2, 10}}) {
    const auto s = make(c.f, c.rank, c.f == Family::I2 ? 5 : 0);
    EXPECT_EQ(s->fan.num_rays(), c.rays) << s->rs.name();
    EXPECT_EQ(s->fan.walls().size(), s->W.order() * c.rank / 2) << s->rs.name();
  }
}

TEST(CoxeterFanTest, RaysAreConjugatesOfTheirOwner) {
  const auto s = make(Family::B, 3);
  for (RayId r = 0; r < s->fan.num_rays(); ++r) {
    const Ray& ray = s->fan.ray(r);
    EXPECT_EQ(s->W.apply(ray.witness, s->rs.fundamental_weight(ray.owner)), ray.coords);
    EXPECT_EQ(s->fan.find_ray(ray.coords), std::optional<RayId>(r));
  }
  EXPECT_FALSE(s->fan.find_ray(s->rs.rho()).has_value());
}

TEST(CoxeterFanTest, WallRelationsVanishOnLinearFunctions) {
  for (const auto& s : {make(Family::C, 3), make(Family::H3, 3), make(Family::G2, 2)}) {
    const SupportFunction lin = linear_support(s->fan, s->rs.simple_root(0));
    const SupportFunction strict = support_weight_polytope(s->fan, s->rs.rho());
    for (const Wall& wall : s->fan.walls()) {
      EXPECT_TRUE(apply_functional(wall.relation, lin.values()).is_zero()) << s->rs.name();
      EXPECT_GT(apply_functional(wall.relation, strict.values()), Scalar(0)) << s->rs.name();
      EXPECT_EQ(s->W.right_mul(wall.coset_rep, wall.gen), wall.other);
    }
  }
}

TEST(CoxeterFanTest, PointLocationAndEvaluation) {
  const auto s = make(Family::H3, 3);
  const Vector v = {Scalar(1), Scalar::golden(), Scalar::fraction(-2, 3)};
  const SupportFunction lin = linear_support(s->fan, v);
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coord(-5, 5);
  for (int trial = 0; trial < 100; ++trial) {
    const Vector x = {coord(rng), coord(rng), coord(rng)};
    const DominantRep loc = s->fan.dominant_rep(x, &rng);
    Vector y(3);
    for (int i = 0; i < 3; ++i) {
      EXPECT_GE(loc.coeffs[i], Scalar(0));
      y = add(y, scale(loc.coeffs[i], s->rs.fundamental_weight(i)));
    }
    EXPECT_EQ(s->W.apply(loc.w, y), x);
    EXPECT_EQ(s->fan.eval_pl(lin.values(), x), s->rs.pair(x, v));
  }
}

TEST(CoxeterFanTest, SpanFace) {
  const auto s = make(Family::B, 3);
  const RayId r = s->fan.chamber_ray(0, 0);
  const RayId t = s->fan.chamber_ray(0, 2);
  EXPECT_TRUE(s->fan.span_face(r, r));
  EXPECT_TRUE(s->fan.span_face(r, t));
  const auto opposite = s->fan.find_ray(scale(Scalar(-1), s->fan.ray(r).coords));
  ASSERT_TRUE(opposite.has_value());
  EXPECT_FALSE(s->fan.span_face(r, *opposite));
}

TEST(SubmodularConeTest, FacetCountsMatchFormulas) {
  EXPECT_EQ(facet_count_formula(ClassicalType::A, 4), 24u);
  EXPECT_EQ(facet_count_formula(ClassicalType::BC, 3), 48u);
  EXPECT_EQ(facet_count_formula(ClassicalType::D, 4), 168u);
  EXPECT_EQ(facet_count_formula(ClassicalType::BC, 5), 1160u);
  EXPECT_EQ(facet_count_formula(ClassicalType::D, 5), 920u);
  EXPECT_THROW(facet_count_formula(ClassicalType::D, 2), InputError);
  EXPECT_EQ(make(Family::A, 3)->cone.facets().size(), 24u);
  EXPECT_EQ(make(Family::C, 3)->cone.facets().size(), 48u);
  EXPECT_EQ(make(Family::D, 4)->cone.facets().size(), 168u);
}

TEST(SubmodularConeTest, FacetsAreTheDistinctWallFunctionals) {
  for (const auto& s : {make(Family::A, 3), make(Family::B, 3), make(Family::H3, 3)}) {
    std::set<RayFunctional> walls;
    for (const Wall& w : s->fan.walls()) walls.insert(w.relation);
    std::set<RayFunctional> facets;
    for (const auto& f : s->cone.facets()) facets.insert(f.functional);
    EXPECT_EQ(facets.size(), s->cone.facets().size()) << s->rs.name();
    EXPECT_EQ(facets, walls) << s->rs.name();
  }
}

TEST(SubmodularConeTest, MembersAndCertificates) {
  const auto s = make(Family::C, 3);
  const SupportFunction rho = support_weight_polytope(s->fan, s->rs.rho());
  EXPECT_TRUE(s->cone.check_local(rho).member);
  EXPECT_TRUE(s->cone.check_global(rho).member);
  const SupportFunction lin = linear_support(s->fan, {Scalar(1), Scalar(-2), Scalar(3)});
  EXPECT_TRUE(s->cone.check_local(minkowski(rho, lin, Scalar(1), Scalar(1))).member);
  EXPECT_TRUE(s->cone.check_local(linear_support(s->fan, {Scalar(-1), Scalar(2), Scalar(-3)})).member);
  EXPECT_THROW(minkowski(lin, lin, Scalar(-1), Scalar(0)), InputError);

  SupportFunction bad = rho;
  bad[5] = bad[5] + Scalar(100);
  const LocalVerdict local = s->cone.check_local(bad);
  ASSERT_FALSE(local.member);
  ASSERT_TRUE(local.violated.has_value());
  EXPECT_LT(apply_functional(s->cone.facets()[*local.violated].functional, bad.values()), Scalar(0));
  const GlobalVerdict global = s->cone.check_global(bad);
  ASSERT_FALSE(global.member);
  const auto [r, t] = *global.violated_pair;
  const Scalar rhs = s->fan.eval_pl(bad.values(), add(s->fan.ray(r).coords, s->fan.ray(t).coords));
  EXPECT_LT(bad[r] + bad[t], rhs);
}

TEST(SubmodularConeTest, ConeIsClosedUnderPositiveCombinations) {
  const auto s = make(Family::H3, 3);
  const SupportFunction a = support_coweight_polytope(s->fan, 1);
  const SupportFunction b = support_zonotope(s->fan, {s->rs.positive_roots()[4]}, false);
  const SupportFunction c = minkowski(a, b, Scalar::golden(), Scalar::fraction(2, 7));
  EXPECT_TRUE(s->cone.check_local(c).member);
  EXPECT_TRUE(s->cone.check_global(c).member);
}

TEST(SubmodularConeTest, MissingRaysAreReported) {
  const auto s = make(Family::A, 2);
  std::vector<std::pair<Vector, Scalar>> entries;
  for (RayId r = 1; r < s->fan.num_rays(); ++r) entries.emplace_back(s->fan.ray(r).coords, Scalar(0));
  EXPECT_THROW(SupportFunction::from_entries(s->fan, entries), InputError);
  entries.emplace_back(s->fan.ray(0).coords, Scalar(0));
  EXPECT_EQ(SupportFunction::from_entries(s->fan, entries), SupportFunction::zero(6));
  entries.emplace_back(s->rs.rho(), Scalar(0));
  EXPECT_THROW(SupportFunction::from_entries(s->fan, entries), InputError);
}

TEST(SubmodularConeTest, DiscretenessIsCrystallographicOnly) {
  const auto b3 = make(Family::B, 3);
  EXPECT_TRUE(is_discrete(b3->rs, linear_support(b3->fan, b3->rs.simple_coroot(2))));
  EXPECT_FALSE(is_discrete(b3->rs, support_coweight_polytope(b3->fan, 0)));
  const auto h3 = make(Family::H3, 3);
  EXPECT_THROW(is_discrete(h3->rs, SupportFunction::zero(h3->fan.num_rays())), InputError);
}

}  // namespace
}  // namespace coxcone
