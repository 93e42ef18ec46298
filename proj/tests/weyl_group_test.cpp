#include "coxcone/weyl_group.hpp"

#include <set>

#include <gtest/gtest.h>

#include "coxcone/error.hpp"

namespace coxcone {
namespace {

struct Fixture {
  explicit Fixture(RootSystemSpec spec) : rs(RootSystem::build(spec)), W(WeylGroup::enumerate(rs)) {}
  RootSystem rs;
  WeylGroup W;
};

// Every element expressible as a subword of the chosen reduced word of v.
std::set<ElemId> subword_products(const WeylGroup& W, ElemId v) {
  std::set<ElemId> out = {W.identity()};
  for (int g : W.element(v).word) {
    std::set<ElemId> next = out;
    for (ElemId u : out) next.insert(W.right_mul(u, g));
    out = std::move(next);
  }
  return out;
}

// Everything reachable from u by length-increasing right multiplications.
std::set<ElemId> weak_upset(const WeylGroup& W, ElemId u) {
  std::set<ElemId> seen = {u};
  std::vector<ElemId> stack = {u};
  while (!stack.empty()) {
    const ElemId x = stack.back();
    stack.pop_back();
    for (int i = 0; i < W.rank(); ++i) {
      const ElemId y = W.right_mul(x, i);
      if (W.length(y) > W.length(x) && seen.insert(y).second) stack.push_back(y);
    }
  }
  return seen;
}

TEST(WeylGroupTest, Orders) {
  struct Case {
    RootSystemSpec spec;
    std::size_t order;
  };
  const Case cases[] = {{{Family::A, 3, 0}, 24},   {{Family::B, 3, 0}, 48}, {{Family::D, 4, 0}, 192},
                        {{Family::F4, 4, 0}, 1152}, {{Family::G2, 2, 0}, 12}, {{Family::H3, 3, 0}, 120},
                        {{Family::I2, 2, 5}, 10},  {{Family::A, 1, 0}, 2}};
  for (const auto& c : cases) {
    const Fixture f(c.spec);
    EXPECT_EQ(f.W.order(), c.order) << f.rs.name();
    EXPECT_EQ(static_cast<std::size_t>(f.W.length(f.W.longest())), f.rs.positive_roots().size());
  }
}

TEST(WeylGroupTest, CapIsEnforced) {
  const RootSystem rs = RootSystem::build({Family::B, 4, 0});
  try {
    WeylGroup::enumerate(rs, 100);
    FAIL() << "expected CapExceeded";
  } catch (const CapExceeded& e) {
    EXPECT_EQ(e.cap(), 100u);
    EXPECT_GE(e.partial(), 100u);
  }
}

TEST(WeylGroupTest, GroupStructure) {
  const Fixture f({Family::H3, 3, 0});
  const WeylGroup& W = f.W;
  for (ElemId w = 0; w < W.order(); ++w) {
    EXPECT_EQ(W.multiply(w, W.inverse(w)), W.identity());
    EXPECT_EQ(W.from_word(W.element(w).word), w);
    EXPECT_EQ(static_cast<int>(W.element(w).word.size()), W.length(w));
    EXPECT_EQ(W.find(W.element(w).matrix), std::optional<ElemId>(w));
  }
  const ElemId u = 17;
  const ElemId v = 93;
  EXPECT_EQ(W.element(W.multiply(u, v)).matrix, W.element(u).matrix * W.element(v).matrix);
  // The longest element is an involution sending the positive chamber to its negative.
  const ElemId w0 = W.longest();
  EXPECT_EQ(W.multiply(w0, w0), W.identity());
  EXPECT_EQ(W.apply(w0, f.rs.rho()), scale(Scalar(-1), f.rs.rho()));
}

TEST(WeylGroupTest, BruhatMatchesSubwordOracle) {
  for (const RootSystemSpec spec :
       {RootSystemSpec{Family::A, 3, 0}, RootSystemSpec{Family::B, 3, 0},
        RootSystemSpec{Family::H3, 3, 0}, RootSystemSpec{Family::G2, 2, 0}}) {
    const Fixture f(spec);
    for (ElemId v = 0; v < f.W.order(); ++v) {
      const std::set<ElemId> below = subword_products(f.W, v);
      for (ElemId u = 0; u < f.W.order(); ++u) {
        ASSERT_EQ(f.W.bruhat_leq(u, v), below.count(u) == 1)
            << f.rs.name() << " u=" << u << " v=" << v;
      }
    }
  }
}

TEST(WeylGroupTest, WeakOrderMatchesReachability) {
  const Fixture f({Family::B, 3, 0});
  for (ElemId u = 0; u < f.W.order(); ++u) {
    const std::set<ElemId> above = weak_upset(f.W, u);
    for (ElemId v = 0; v < f.W.order(); ++v) {
      ASSERT_EQ(f.W.weak_leq(u, v), above.count(v) == 1) << "u=" << u << " v=" << v;
    }
  }
}

TEST(WeylGroupTest, ParabolicCosets) {
  const Fixture f({Family::A, 3, 0});
  const NodeSet I = node_set({0, 2});
  EXPECT_EQ(f.W.parabolic(I).size(), 4u);
  EXPECT_EQ(f.W.parabolic(all_nodes(3)).size(), 24u);
  std::set<ElemId> reps;
  for (ElemId w = 0; w < f.W.order(); ++w) {
    const ElemId c = f.W.coset_canonical(w, I);
    reps.insert(c);
    EXPECT_LE(f.W.length(c), f.W.length(w));
    // c lies in w·W_I.
    const ElemId q = f.W.multiply(f.W.inverse(w), c);
    const auto sub = f.W.parabolic(I);
    EXPECT_NE(std::find(sub.begin(), sub.end(), q), sub.end());
  }
  EXPECT_EQ(reps.size(), 6u);
}

TEST(WeylGroupTest, Orbits) {
  const Fixture f({Family::C, 3, 0});
  EXPECT_EQ(f.W.orbit(f.rs.fundamental_weight(0)).size(), 6u);
  EXPECT_EQ(f.W.orbit(f.rs.fundamental_weight(1)).size(), 12u);
  EXPECT_EQ(f.W.orbit(f.rs.fundamental_weight(2)).size(), 8u);
  EXPECT_EQ(f.W.orbit(f.rs.rho()).size(), 48u);
}

}  // namespace
}  // namespace coxcone
