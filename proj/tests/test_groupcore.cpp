#include "support.hpp"

#include "skewquiver/errors.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace skq;

namespace {

Group dihedral10() {
  return Group::from_generators(
      {{"c", {1, 2, 3, 4, 0}}, {"t", {0, 4, 3, 2, 1}}});
}

std::vector<std::vector<int>> cyclic_table(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      t[a][b] = (a + b) % n;
  return t;
}

VertexAction perm_action(const Group &G,
                         const std::vector<std::vector<int>> &gens) {
  // Recompute the action independently from the generator words.
  VertexAction act(G.order());
  const int nv = static_cast<int>(gens[0].size());
  act[0].resize(nv);
  for (int v = 0; v < nv; ++v)
    act[0][v] = v;
  for (Elem g : G.bfs_order()) {
    if (g == 0)
      continue;
    auto [p, k] = G.parents()[g];
    act[g].resize(nv);
    for (int v = 0; v < nv; ++v)
      act[g][v] = act[p][gens[k][v]];
  }
  return act;
}

} // namespace

TEST(Group, DihedralFromGenerators) {
  const Group G = dihedral10();
  EXPECT_EQ(G.order(), 10);
  EXPECT_EQ(G.exponent(), 10);
  const Elem c = G.parse("c"), t = G.parse("t");
  EXPECT_EQ(G.element_order(c), 5);
  EXPECT_EQ(G.element_order(t), 2);
  // t c t = c^{-1}
  EXPECT_EQ(G.mul({t, c, t}), G.inv(c));
  EXPECT_EQ(G.parse("c*c*c*c*c"), G.identity());
  EXPECT_EQ(G.name(G.identity()), "e");
}

TEST(Group, TableAxioms) {
  const Group G = dihedral10();
  for (Elem a = 0; a < G.order(); ++a) {
    for (Elem b = 0; b < G.order(); ++b) {
      EXPECT_EQ(G.mul(a, G.inv(a)), 0);
      for (Elem c = 0; c < G.order(); ++c)
        EXPECT_EQ(G.mul(G.mul(a, b), c), G.mul(a, G.mul(b, c)));
    }
  }
}

TEST(Group, TableWithIdentityElsewhereIsRelabeled) {
  // Z3 with the identity stored at index 2.
  const std::vector<std::vector<int>> mul{{1, 2, 0}, {2, 0, 1}, {0, 1, 2}};
  const Group G = Group::from_table(mul, {"a", "b", "e"});
  EXPECT_EQ(G.to_input(G.identity()), 2);
  EXPECT_EQ(G.parse("e"), 0);
  const Elem a = G.parse("a");
  EXPECT_EQ(G.to_input(G.mul(a, a)), 1);
  EXPECT_EQ(G.from_input(0), a);
}

TEST(Group, InvalidTablesRejected) {
  auto bad = cyclic_table(4);
  bad[1][1] = 1; // row 1 no longer a permutation
  EXPECT_THROW(Group::from_table(bad), ValidationError);

  // Latin square without associativity.
  const std::vector<std::vector<int>> quasi{
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3},
      {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  EXPECT_THROW(Group::from_table(quasi), ValidationError);
  EXPECT_THROW(Group::from_table({{0, 1}, {1}}), ValidationError);
}

TEST(Group, ParseRejectsUnknownNames) {
  const Group G = dihedral10();
  EXPECT_THROW(G.parse("q"), ValidationError);
  EXPECT_THROW(G.parse("99"), ValidationError);
}

TEST(Orbits, OrbitStabilizerCounts) {
  const Group G = dihedral10();
  const VertexAction act = perm_action(G, {{1, 2, 3, 4, 0}, {0, 4, 3, 2, 1}});
  validate_vertex_action(G, act);
  const OrbitData O = compute_orbits(G, act);
  ASSERT_EQ(O.num_orbits(), 1);
  const Stabilizer &H = O.stabilizers[0];
  EXPECT_EQ(H.order(), 2);
  EXPECT_EQ(H.order() * static_cast<int>(H.coset_reps.size()), G.order());
  for (Elem g = 0; g < G.order(); ++g) {
    auto [y, h] = H.factorize(G, g);
    EXPECT_EQ(G.mul(y, h), g);
    EXPECT_TRUE(H.contains(h));
    EXPECT_EQ(std::count(H.coset_reps.begin(), H.coset_reps.end(), y), 1);
  }
  for (int v = 0; v < 5; ++v)
    EXPECT_EQ(act[O.witness[v]][0], v);
}

TEST(Orbits, AllFixtures) {
  for (const auto &name : test::all_fixtures()) {
    const Setting &S = *test::load(name).S;
    const Group &G = S.group();
    const auto &act = S.space(Side::M).vact;
    std::set<int> seen;
    for (int o = 0; o < S.orbits().num_orbits(); ++o) {
      const int rep = S.orbits().reps[o];
      std::set<int> orbit;
      for (Elem g = 0; g < G.order(); ++g)
        orbit.insert(act[g][rep]);
      int fix = 0;
      for (Elem g = 0; g < G.order(); ++g)
        fix += act[g][rep] == rep;
      EXPECT_EQ(static_cast<int>(orbit.size()) * fix, G.order()) << name;
      EXPECT_EQ(S.orbits().stabilizers[o].order(), fix) << name;
      for (int v : orbit)
        EXPECT_TRUE(seen.insert(v).second) << name;
    }
    EXPECT_EQ(static_cast<int>(seen.size()), S.quiver().num_vertices) << name;
  }
}

TEST(Orbits, CosetRepOverride) {
  const Group G = dihedral10();
  const VertexAction act = perm_action(G, {{1, 2, 3, 4, 0}, {0, 4, 3, 2, 1}});
  OrbitData O = compute_orbits(G, act);
  std::vector<Elem> reps;
  for (const char *w : {"e", "c", "c*c", "c*c*c", "c*c*c*c"})
    reps.push_back(G.parse(w));
  set_coset_reps(G, act, O, 0, reps);
  for (Elem y : reps)
    EXPECT_EQ(std::count(O.stabilizers[0].coset_reps.begin(),
                         O.stabilizers[0].coset_reps.end(), y),
              1);
  // c and c*t lie in the same coset.
  std::vector<Elem> dup = reps;
  dup[2] = G.mul(G.parse("c"), G.parse("t"));
  EXPECT_THROW(set_coset_reps(G, act, O, 0, dup), ValidationError);
  std::vector<Elem> no_id = reps;
  no_id[0] = G.parse("t");
  EXPECT_THROW(set_coset_reps(G, act, O, 0, no_id), ValidationError);
}

TEST(Orbits, ChainFactorization) {
  const Setting &S = *test::load("c2xs3").S;
  const Group &G = S.group();
  const OrbitData &O = S.orbits();
  const Stabilizer &H = O.stabilizers[0];
  // Single orbit: every y_t ranges over the representatives of G/G_0.
  for (Elem y1 : H.coset_reps)
    for (Elem y2 : H.coset_reps)
      for (Elem y3 : H.coset_reps) {
        const ChainFactor cf = chain_factorize(G, O, {0, 0, 0, 0}, {y1, y2, y3});
        Elem prod = cf.h0;
        for (auto it = cf.x.rbegin(); it != cf.x.rend(); ++it)
          prod = G.mul(*it, prod);
        EXPECT_EQ(prod, G.inv(G.mul({y1, y2, y3})));
        EXPECT_TRUE(H.contains(cf.h0));
        for (Elem x : cf.x)
          EXPECT_EQ(std::count(H.coset_reps.begin(), H.coset_reps.end(), x), 1);
      }
}

TEST(VertexAction, InvalidActionsRejected) {
  const Group G = Group::from_table(cyclic_table(2));
  EXPECT_THROW(validate_vertex_action(G, {{0, 1}, {0, 0}}), ValidationError);
  EXPECT_THROW(validate_vertex_action(G, {{1, 0}, {1, 0}}), ValidationError);
  const Group Z3 = Group::from_table(cyclic_table(3));
  // The swap is not an action of Z3.
  EXPECT_THROW(validate_vertex_action(Z3, {{0, 1}, {1, 0}, {1, 0}}),
               ValidationError);
  EXPECT_NO_THROW(validate_vertex_action(Z3, {{0, 1}, {0, 1}, {0, 1}}));
}
