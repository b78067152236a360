#include "support.hpp"

#include "skewquiver/errors.hpp"

#include <gtest/gtest.h>

using namespace skq;

namespace {

SkewElement path_term(const Quiver &Q, int start,
                      const std::vector<std::string> &labels, Elem g = 0) {
  Path p{start, {}};
  for (const auto &l : labels)
    p.arrows.push_back(*Q.find(l));
  SkewElement x;
  x.add(SkewKey{p, g}, Cyc(1));
  return x;
}

TransportResult run(const QG &qg, const SkewElement &x,
                    PairingMode mode = PairingMode::Auto, int threads = 0) {
  TransportOptions opt;
  opt.mode = mode;
  opt.threads = threads;
  return transport(qg, x, opt);
}

} // namespace

TEST(Transport, TrivialGroupIsIdentity) {
  // With G trivial every path of Q is its own image in Q_G.
  const auto &L = test::load("trivial_cycle");
  const Quiver &Q = L.S->quiver();
  const QG &qg = *L.qg;
  auto qg_arrow = [&](int a) {
    for (const auto &x : qg.arrows())
      if (L.S->vertex(x.source).rep_vertex == Q.arrows[a].source &&
          L.S->vertex(x.target).rep_vertex == Q.arrows[a].target)
        return x.id;
    return -1;
  };
  for (int n = 0; n <= 4; ++n)
    for (int v = 0; v < Q.num_vertices; ++v) {
      Path p{v, {}};
      Path image{v, {}};
      int at = v;
      for (int k = 0; k < n; ++k) {
        const int a = Q.out[at][0];
        p.arrows.push_back(a);
        image.arrows.push_back(qg_arrow(a));
        at = Q.arrows[a].target;
      }
      SkewElement x;
      x.add(SkewKey{p, 0}, Cyc(1));
      const PathComb c = run(qg, x).comb;
      ASSERT_EQ(c.size(), 1u);
      EXPECT_EQ(c.begin()->first, image);
      EXPECT_EQ(c.begin()->second, Cyc(1));
    }
}

TEST(Transport, SwapLoopByHand) {
  // Q_G has one loop f with f(e) = lambda a*s, so ab*e = lambda^{-2} f f.
  const auto &L = test::load("z2_swap");
  const Setting &S = *L.S;
  const Quiver &Q = S.quiver();
  const Elem s = S.group().parse("s");
  ASSERT_EQ(L.qg->num_arrows(), 1);
  const SkewElement &v = L.qg->arrow_value(0);
  ASSERT_EQ(v.size(), 1u);
  const auto &[key, lambda] = *v.terms().begin();
  EXPECT_EQ(key, (SkewKey{Path{0, {*Q.find("a")}}, s}));
  const PathComb c = run(*L.qg, path_term(Q, 0, {"a", "b"})).comb;
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c.begin()->first, (Path{0, {0, 0}}));
  EXPECT_EQ(c.begin()->second * lambda * lambda, Cyc(1));
}

TEST(Transport, DihedralPotential) {
  const auto &L = test::load("dihedral10");
  const PathComb c =
      transport_potential(*L.qg, *L.S->instance().potential).comb;
  EXPECT_EQ(c.size(), 32u);
  for (const auto &p : L.qg->paths(5)) {
    const int r = L.S->vertex(p.start).irrep;
    const int w = L.S->vertex(L.qg->path_end(p)).irrep;
    auto it = c.find(p);
    const Cyc got = it == c.end() ? Cyc(0) : it->second;
    EXPECT_EQ(got, Cyc((r + w) % 2 == 0 ? -2 : 0)) << render_path(*L.qg, p);
  }
}

TEST(Transport, LinearAndGraded) {
  std::mt19937_64 rng(21);
  for (const auto &name : test::all_fixtures()) {
    const auto &L = test::load(name);
    for (int deg = 0; deg <= 3; ++deg) {
      const SkewElement x = random_element(*L.S, deg, rng);
      const SkewElement y = random_element(*L.S, deg, rng);
      const Cyc k = random_scalar(rng, L.S->group().exponent());
      const PathComb cx = run(*L.qg, x).comb, cy = run(*L.qg, y).comb;
      PathComb want = cx;
      for (const auto &[p, c] : cy)
        comb_add(want, p, k * c);
      EXPECT_EQ(run(*L.qg, x + k * y).comb, want) << name;
      for (const auto &[p, c] : cx)
        EXPECT_EQ(p.length(), deg) << name;
      EXPECT_TRUE(verify_roundtrip(*L.qg, x, cx).ok) << name;
    }
  }
}

TEST(Transport, Multiplicative) {
  std::mt19937_64 rng(22);
  for (const auto &name : {"z6_twist", "c2xs3", "dihedral10"}) {
    const auto &L = test::load(name);
    const SkewElement x = random_element(*L.S, 1, rng);
    const SkewElement y = random_element(*L.S, 2, rng);
    EXPECT_EQ(run(*L.qg, L.S->mul(x, y)).comb,
              comb_product(*L.qg, run(*L.qg, x).comb, run(*L.qg, y).comb))
        << name;
  }
}

TEST(Transport, ModesAndThreadsAgree) {
  std::mt19937_64 rng(23);
  for (const auto &name : {"z6_twist", "dihedral10", "z2_mixed"}) {
    const auto &L = test::load(name);
    const SkewElement x = random_element(*L.S, 3, rng);
    const PathComb fast = run(*L.qg, x, PairingMode::Fast, 1).comb;
    EXPECT_EQ(run(*L.qg, x, PairingMode::Slow, 4).comb, fast);
    EXPECT_EQ(run(*L.qg, x, PairingMode::Both, 3).comb, fast);
  }
}

TEST(Transport, FastFallsBackWithNotice) {
  std::mt19937_64 rng(24);
  const auto &L = test::load("z3_rotation");
  const TransportResult r =
      run(*L.qg, random_element(*L.S, 2, rng), PairingMode::Fast);
  EXPECT_FALSE(r.notices.empty());
}

TEST(Transport, RequiresProjectedElement) {
  const auto &L = test::load("dihedral10");
  SkewElement x;
  x.add(SkewKey{Path{1, {}}, 0}, Cyc(1)); // vertex 1 is not an orbit rep
  ASSERT_NE(L.S->project(x), x);
  EXPECT_THROW(run(*L.qg, x), PreconditionError);
}

TEST(Roundtrip, DetectsWrongCoefficients) {
  const auto &L = test::load("dihedral10");
  const SkewElement theta =
      L.S->project(potential_element(*L.S, *L.S->instance().potential));
  PathComb c = transport(*L.qg, theta).comb;
  ASSERT_TRUE(verify_roundtrip(*L.qg, theta, c).ok);
  c.begin()->second = Cyc(-3);
  const RoundtripReport r = verify_roundtrip(*L.qg, theta, c);
  EXPECT_FALSE(r.ok);
  EXPECT_TRUE(r.first_difference.has_value());
  EXPECT_NE(r.expected, r.actual);
  EXPECT_FALSE(r.message.empty());
}

TEST(Transport, NonInvariantPotentialNotice) {
  json doc = load_json_file(test::fixture("dihedral10"));
  doc["potential"].erase(1);
  const Setting S(instance_from_json(doc));
  const QG qg(S);
  const TransportResult r = transport_potential(qg, *S.instance().potential);
  ASSERT_FALSE(r.notices.empty());
  EXPECT_NE(r.notices[0].find("not invariant"), std::string::npos);
}

TEST(Transport, Rendering) {
  const auto &L = test::load("z2_swap");
  EXPECT_EQ(render_comb(*L.qg, {}), "0");
  PathComb c;
  comb_add(c, Path{0, {0}}, Cyc(-2));
  EXPECT_EQ(render_comb(*L.qg, c), "-2 · " + L.qg->arrow(0).label);
  comb_add(c, Path{0, {0}}, Cyc(2));
  EXPECT_TRUE(c.empty());
}
