#include "support.hpp"

#include "skewquiver/errors.hpp"

#include <gtest/gtest.h>

using namespace skq;

namespace {

json z2_swap_doc() {
  return json::parse(R"({
    "name": "swap",
    "group": {"generators": [{"name": "s", "perm": [1, 0]}]},
    "vertices": 2,
    "arrows": [{"label": "a", "source": 0, "target": 1},
               {"label": "b", "source": 1, "target": 0}],
    "arrow_action": {"s": {"a": "b", "b": "a"}},
    "potential": [{"cycle": ["a", "b"], "coeff": 1}]
  })");
}

} // namespace

TEST(ArrowAction, HomomorphismOnEveryFixture) {
  for (const auto &name : test::all_fixtures()) {
    const Setting &S = *test::load(name).S;
    const Group &G = S.group();
    for (Side side : {Side::M, Side::Dual}) {
      const ArrowSpace &M = S.space(side);
      EXPECT_EQ(action_matrix(M, 0),
                CycMatrix::identity(M.quiver.num_arrows()));
      for (Elem g = 0; g < G.order(); ++g)
        for (Elem h = 0; h < G.order(); ++h)
          EXPECT_EQ(action_matrix(M, G.mul(g, h)),
                    action_matrix(M, g) * action_matrix(M, h))
              << name;
    }
  }
}

TEST(ArrowAction, DualIsInverseTranspose) {
  for (const auto &name : test::all_fixtures()) {
    const Setting &S = *test::load(name).S;
    const ArrowSpace &M = S.space(Side::M), &D = S.space(Side::Dual);
    for (int a = 0; a < M.quiver.num_arrows(); ++a) {
      EXPECT_EQ(D.quiver.arrows[a].source, M.quiver.arrows[a].target);
      EXPECT_EQ(D.quiver.arrows[a].target, M.quiver.arrows[a].source);
    }
    // <g a*, g b> = <a*, b>
    for (Elem g = 0; g < S.group().order(); ++g)
      EXPECT_EQ(action_matrix(D, g).transpose() * action_matrix(M, g),
                CycMatrix::identity(M.quiver.num_arrows()))
          << name;
  }
}

TEST(ArrowAction, EndpointsFollowVertices) {
  for (const auto &name : test::all_fixtures()) {
    const Setting &S = *test::load(name).S;
    const ArrowSpace &M = S.space(Side::M);
    for (Elem g = 0; g < S.group().order(); ++g)
      for (int a = 0; a < M.quiver.num_arrows(); ++a)
        for (const auto &[b, c] : M.image[g][a]) {
          EXPECT_FALSE(c.is_zero());
          EXPECT_EQ(M.quiver.arrows[b].source,
                    M.vact[g][M.quiver.arrows[a].source]);
          EXPECT_EQ(M.quiver.arrows[b].target,
                    M.vact[g][M.quiver.arrows[a].target]);
        }
  }
}

TEST(ArrowAction, MonomialFlag) {
  EXPECT_TRUE(test::load("dihedral10").S->space(Side::M).monomial);
  EXPECT_TRUE(test::load("z6_twist").S->space(Side::M).monomial);
  EXPECT_FALSE(test::load("z3_rotation").S->space(Side::M).monomial);
}

TEST(ArrowAction, InconsistentActionRejected) {
  json doc = z2_swap_doc();
  doc["arrow_action"]["s"]["a"] = "a"; // a: 0->1 cannot map to 0->1
  EXPECT_THROW(instance_from_json(doc), ValidationError);
  doc = z2_swap_doc();
  doc["arrow_action"]["s"]["a"] = json::array({2, "b"}); // s^2 a = 2a
  EXPECT_THROW(instance_from_json(doc), ValidationError);
}

TEST(Potential, Invariance) {
  const Setting &S = *test::load("dihedral10").S;
  const Potential &W = *S.instance().potential;
  EXPECT_TRUE(check_invariance(S.group(), S.space(Side::M), W).invariant);

  json doc = z2_swap_doc();
  doc["potential"] = json::array({{{"cycle", {"a", "b"}}, {"coeff", 1}},
                                  {{"cycle", {"b", "a"}}, {"coeff", 2}}});
  // Cyclically ab and ba agree, so this is 3ab and stays invariant.
  const Instance inst = instance_from_json(doc);
  EXPECT_TRUE(
      check_invariance(inst.group, inst.M, *inst.potential).invariant);

  doc = z2_swap_doc();
  doc["arrow_action"]["s"] = {{"a", json::array({-1, "b"})},
                              {"b", json::array({-1, "a"})}};
  const Instance flip = instance_from_json(doc);
  EXPECT_TRUE(check_invariance(flip.group, flip.M, *flip.potential).invariant);

  // One orientation of the pentagon alone is not preserved by the reflection.
  json d10 = load_json_file(test::fixture("dihedral10"));
  d10["potential"].erase(1);
  const Instance half = instance_from_json(d10);
  const InvarianceReport r =
      check_invariance(half.group, half.M, *half.potential);
  EXPECT_FALSE(r.invariant);
  EXPECT_EQ(half.group.name(r.first_violation), "t");
}

TEST(Potential, CyclicNormalForm) {
  const PathTermList terms{{{0, 1}, Cyc(1)}, {{1, 0}, Cyc(2)}, {{0, 1, 0, 1}, Cyc(1)}};
  const auto nf = cyclic_normal_form(terms);
  ASSERT_EQ(nf.size(), 2u);
  EXPECT_EQ(nf.at({0, 1}), Cyc(3));
  EXPECT_EQ(nf.at({0, 1, 0, 1}), Cyc(1));
  EXPECT_TRUE(cyclic_normal_form({{{0, 1}, Cyc(1)}, {{1, 0}, Cyc(-1)}}).empty());
}

TEST(Potential, NonCycleRejected) {
  json doc = z2_swap_doc();
  doc["potential"] = json::array({{{"cycle", {"a"}}, {"coeff", 1}}});
  EXPECT_THROW(instance_from_json(doc), ValidationError);
}
