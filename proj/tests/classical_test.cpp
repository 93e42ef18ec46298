#include "coxcone/classical.hpp"

#include <random>

#include <gtest/gtest.h>

#include "coxcone/deformation.hpp"
#include "coxcone/error.hpp"
#include "coxcone/system.hpp"

namespace coxcone {
namespace {

SignedSet ss(std::uint32_t pos, std::uint32_t neg) { return SignedSet{pos, neg}; }

TEST(SignedSetTest, MeetAndJoin) {
  // S = {+1, -2}, T = {+2, +3}.
  const SignedSet s = ss(0b001, 0b010);
  const SignedSet t = ss(0b110, 0b000);
  EXPECT_EQ(signed_meet(s, t), ss(0, 0));
  EXPECT_EQ(signed_join(s, t), ss(0b101, 0));
  EXPECT_EQ(signed_meet(s, s), s);
  EXPECT_EQ(signed_join(s, ss(0, 0)), s);
  EXPECT_EQ(s.size(), 2);
}

TEST(SignedSetTest, EnumeratesAllAdmissibleSets) {
  for (int d = 1; d <= 5; ++d) {
    const auto all = all_signed_sets(d);
    std::size_t expected = 1;
    for (int k = 0; k < d; ++k) expected *= 3;
    EXPECT_EQ(all.size(), expected);
    for (const auto& s : all) EXPECT_TRUE(s.admissible());
  }
}

TEST(TypeATest, EncodeDecodeRoundTrip) {
  const auto s = System::build({Family::A, 3, 0});
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> val(-9, 9);
  SetFunction f(4);
  f.set(0, Scalar(0));
  f.set(0b1111, Scalar(0));
  for (Subset x = 1; x < 0b1111; ++x) f.set(x, Scalar(val(rng)));
  const SupportFunction h = encode_typeA(s->fan, f);
  const SetFunction back = decode_typeA(s->fan, h);
  for (Subset x = 0; x < 16; ++x) EXPECT_EQ(back(x), f(x));
  // Rays of A_{d-1} are exactly the 2^d - 2 proper nonempty subsets.
  EXPECT_EQ(s->fan.num_rays(), 14u);
  for (Subset x = 1; x < 0b1111; ++x) EXPECT_TRUE(s->fan.find_ray(typeA_ray(s->rs, x)).has_value());
}

TEST(TypeATest, ClassicalSystemsAgreeWithTheCone) {
  const auto s = System::build({Family::A, 3, 0});
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> val(0, 4);
  const SupportFunction rho = support_weight_polytope(s->fan, s->rs.rho());
  for (int trial = 0; trial < 200; ++trial) {
    SupportFunction h = rho;
    for (int k = 0; k < 3; ++k) {
      const RayId r = static_cast<RayId>(rng() % h.size());
      h[r] = h[r] + Scalar(val(rng) - 2);
    }
    const SetFunction f = decode_typeA(s->fan, h);
    const bool member = s->cone.check_local(h).member;
    EXPECT_EQ(submodular_local_classical(f), member);
    EXPECT_EQ(submodular_global_classical(f), member);
  }
}

TEST(TypeATest, PreconditionsAreChecked) {
  const auto s = System::build({Family::A, 2, 0});
  SetFunction f(3);
  for (Subset x = 0; x < 8; ++x) f.set(x, Scalar(0));
  EXPECT_NO_THROW(encode_typeA(s->fan, f));
  f.set(0, Scalar(1));
  EXPECT_THROW(encode_typeA(s->fan, f), PreconditionError);
  SetFunction partial(3);
  partial.set(0, Scalar(0));
  partial.set(7, Scalar(0));
  EXPECT_THROW(encode_typeA(s->fan, partial), InputError);
  const auto b2 = System::build({Family::B, 2, 0});
  EXPECT_THROW(encode_typeA(b2->fan, f), InputError);
}

TEST(TypeBCTest, EncodeDecodeRoundTripOnBothFamilies) {
  for (Family fam : {Family::B, Family::C}) {
    const auto s = System::build({fam, 3, 0});
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> val(-6, 6);
    SignedSetFunction f(3);
    for (const auto& x : all_signed_sets(3)) f.set(x, x.empty() ? Scalar(0) : Scalar(val(rng)));
    const SupportFunction h = encode_typeBC(s->fan, f);
    const SignedSetFunction back = decode_typeBC(s->fan, h);
    for (const auto& x : all_signed_sets(3)) EXPECT_EQ(back(x), f(x));
    EXPECT_EQ(bisubmodular_local_displayed(f), s->cone.check_local(h).member);
    EXPECT_EQ(bisubmodular_global_displayed(f), s->cone.check_local(h).member);
  }
}

TEST(TypeDTest, EncodingUsesHalfVectorsAtFullSize) {
  const auto s = System::build({Family::D, 4, 0});
  SignedSetFunction f(4);
  SignedSetFunction g(4);
  for (const auto& x : all_signed_sets(4)) {
    if (x.size() <= 2) f.set(x, Scalar(x.size()));
    if (x.size() == 4) g.set(x, Scalar(2));
  }
  const SupportFunction h = encode_typeD(s->fan, f, g);
  const SignedSet full{0b1111, 0};
  const auto ray = s->fan.find_ray(scale(Scalar::fraction(1, 2), signed_ray(s->rs, full)));
  EXPECT_FALSE(ray.has_value());
  const auto half = s->fan.find_ray(signed_ray(s->rs, full));
  ASSERT_TRUE(half.has_value());
  EXPECT_EQ(h[*half], Scalar(2));
  const SignedSetFunction bridge = disubmodular_bridge(f, g);
  EXPECT_EQ(bridge(SignedSet{0b0111, 0}), Scalar(4));
  EXPECT_EQ(bridge(full), Scalar(4));
}

}  // namespace
}  // namespace coxcone
