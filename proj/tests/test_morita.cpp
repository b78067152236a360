#include "support.hpp"

#include <gtest/gtest.h>

using namespace skq;
using test::near;
using test::to_complex;

namespace {

// dim Hom_{G_i}(U, M(i,j;V)) from characters: h acts on the block
// iM(y.j) (x) yV only when h y G_j = y G_j, with trace
// tr(h | iM(y.j)) * chi_V(y^{-1} h y).
int character_multiplicity(const Setting &S, int u, int v) {
  const Group &G = S.group();
  const ArrowSpace &M = S.space(Side::M);
  const QGVertex &U = S.vertex(u), &V = S.vertex(v);
  const Stabilizer &Hi = S.orbits().stabilizers[U.orbit];
  const Stabilizer &Hj = S.orbits().stabilizers[V.orbit];
  const int i = U.rep_vertex, j = V.rep_vertex;
  std::complex<double> sum = 0;
  for (Elem h : Hi.elements) {
    std::complex<double> chi = 0;
    for (Elem y : Hj.coset_reps) {
      const Elem conj = G.mul({G.inv(y), h, y});
      if (!Hj.contains(conj))
        continue;
      const int w = M.vact[y][j];
      std::complex<double> tr = 0;
      for (int a = 0; a < M.quiver.num_arrows(); ++a) {
        const Arrow &arr = M.quiver.arrows[a];
        if (arr.source != i || arr.target != w)
          continue;
        for (const auto &[b, c] : M.image[h][a])
          if (b == a)
            tr += to_complex(c);
      }
      chi += tr * to_complex(V.rho.character[Hj.position[conj]]);
    }
    sum += std::conj(to_complex(U.rho.character[Hi.position[h]])) * chi;
  }
  const std::complex<double> m = sum / static_cast<double>(Hi.order());
  EXPECT_TRUE(near(m, std::round(m.real())));
  return static_cast<int>(std::lround(m.real()));
}

} // namespace

TEST(ReducedQuiver, MultiplicitiesMatchCharacterFormula) {
  for (const auto &name : test::all_fixtures()) {
    const auto &L = test::load(name);
    for (int u = 0; u < L.S->num_vertices(); ++u)
      for (int v = 0; v < L.S->num_vertices(); ++v) {
        int n = 0;
        for (const auto &a : L.qg->arrows())
          n += a.source == u && a.target == v;
        EXPECT_EQ(n, character_multiplicity(*L.S, u, v))
            << name << " " << L.qg->vertex_label(u) << " -> "
            << L.qg->vertex_label(v);
      }
  }
}

TEST(ReducedQuiver, KnownShapes) {
  const QG &d10 = *test::load("dihedral10").qg;
  EXPECT_EQ(d10.num_vertices(), 2);
  EXPECT_EQ(d10.num_arrows(), 4);
  const QG &triv = *test::load("trivial_cycle").qg;
  // Trivial group: Q_G is Q itself.
  EXPECT_EQ(triv.num_vertices(), 3);
  EXPECT_EQ(triv.num_arrows(), 3);
  const QG &c2xs3 = *test::load("c2xs3").qg;
  EXPECT_EQ(c2xs3.num_vertices(), 3);
  EXPECT_EQ(c2xs3.num_arrows(), 8);
  EXPECT_EQ(c2xs3.vertex_label(2), "(0,std)");
}

TEST(ReducedQuiver, ArrowsAreEquivariantAndBiorthogonal) {
  for (const auto &name : test::all_fixtures()) {
    const auto &L = test::load(name);
    for (const auto &a : L.qg->arrows()) {
      EXPECT_TRUE(is_equivariant(*L.S, a.f)) << name << " " << a.label;
      EXPECT_TRUE(is_equivariant(*L.S, a.dual)) << name << " " << a.label;
      for (const auto &b : L.qg->arrows())
        if (a.source == b.source && a.target == b.target)
          EXPECT_EQ(pairing(*L.S, a.f, b.dual), Cyc(a.id == b.id ? 1 : 0))
              << name << " " << a.label << " " << b.label;
    }
  }
}

TEST(ReducedQuiver, PathEnumeration) {
  for (const auto &name : test::all_fixtures()) {
    const QG &qg = *test::load(name).qg;
    for (int n = 0; n <= 4; ++n) {
      const auto ps = qg.paths(n);
      EXPECT_EQ(ps.size(), qg.count_paths(n)) << name;
      EXPECT_TRUE(std::is_sorted(ps.begin(), ps.end(), [](auto &x, auto &y) {
        return std::tie(x.start, x.arrows) < std::tie(y.start, y.arrows);
      })) << name;
      for (const auto &p : ps)
        EXPECT_EQ(p.length(), n);
      for (int s = 0; s < qg.num_vertices(); ++s)
        for (int t = 0; t < qg.num_vertices(); ++t)
          for (const auto &p : qg.paths(n, s, t)) {
            EXPECT_EQ(p.start, s);
            EXPECT_EQ(qg.path_end(p), t);
          }
    }
  }
}

TEST(ReducedQuiver, PathValueIsProductOfArrowValues) {
  for (const auto &name : test::all_fixtures()) {
    const auto &L = test::load(name);
    for (const auto &p : L.qg->paths(3)) {
      SkewElement prod = L.S->vertex_idempotent(p.start);
      for (int a : p.arrows)
        prod = L.S->mul(prod, L.qg->arrow_value(a));
      EXPECT_EQ(L.qg->path_value(p), prod) << name;
      EXPECT_EQ(value_at_idempotent(*L.S, L.qg->f_gamma(p)), prod) << name;
    }
  }
}

TEST(Intertwiners, CircledastAssociative) {
  for (const auto &name : {"z6_twist", "c2xs3", "z3_rotation"}) {
    const auto &L = test::load(name);
    const Setting &S = *L.S;
    for (const auto &p : L.qg->paths(3)) {
      const auto &f1 = L.qg->arrow(p.arrows[0]).f;
      const auto &f2 = L.qg->arrow(p.arrows[1]).f;
      const auto &f3 = L.qg->arrow(p.arrows[2]).f;
      const auto l = circledast(S, f3, circledast(S, f2, f1));
      const auto r = circledast(S, circledast(S, f3, f2), f1);
      EXPECT_EQ(l.coords, r.coords) << name;
      EXPECT_TRUE(is_equivariant(S, l)) << name;
      EXPECT_EQ(l.coords, L.qg->f_gamma(p).coords) << name;
    }
  }
}

TEST(Intertwiners, UnitIsNeutral) {
  const auto &L = test::load("c2xs3");
  for (const auto &a : L.qg->arrows()) {
    const auto u0 = unit_intertwiner(*L.S, Side::M, a.source);
    const auto u1 = unit_intertwiner(*L.S, Side::M, a.target);
    EXPECT_EQ(circledast(*L.S, a.f, u0).coords, a.f.coords);
    EXPECT_EQ(circledast(*L.S, u1, a.f).coords, a.f.coords);
  }
}

TEST(Intertwiners, PairingOfProducts) {
  // (f2 (*) f1 | phi1 (*) phi2) = (f1 | phi1)(f2 | phi2) on arrow bases.
  for (const auto &name : test::all_fixtures()) {
    const auto &L = test::load(name);
    const Setting &S = *L.S;
    for (const auto &a : L.qg->arrows())
      for (const auto &b : L.qg->arrows()) {
        if (a.target != b.source)
          continue;
        for (const auto &a2 : L.qg->arrows())
          for (const auto &b2 : L.qg->arrows()) {
            if (a2.source != a.source || a2.target != a.target ||
                b2.source != b.source || b2.target != b.target)
              continue;
            const Cyc lhs = pairing(S, circledast(S, b.f, a.f),
                                    circledast(S, a2.dual, b2.dual));
            EXPECT_EQ(lhs, pairing(S, a.f, a2.dual) * pairing(S, b.f, b2.dual))
                << name;
          }
      }
  }
}

TEST(Intertwiners, FastPairingAgreesOnPaths) {
  for (const auto &name : test::all_fixtures()) {
    const auto &L = test::load(name);
    if (!L.S->monomial_abelian())
      continue;
    for (const auto &p : L.qg->paths(2))
      for (const auto &q : L.qg->paths(2, p.start, L.qg->path_end(p))) {
        if (L.qg->orbit_seq(q) != L.qg->orbit_seq(p))
          continue;
        bool fell_back = true;
        const Cyc fast = pairing_fast(*L.S, L.qg->f_gamma(p),
                                      L.qg->phi_gamma(q), &fell_back);
        EXPECT_FALSE(fell_back);
        EXPECT_EQ(fast, Cyc(p == q ? 1 : 0)) << name;
      }
  }
}

TEST(Intertwiners, MismatchedShapesRejected) {
  const auto &L = test::load("z2_mixed");
  const auto &a = L.qg->arrow(0);
  EXPECT_THROW(pairing(*L.S, a.f, a.f), std::invalid_argument);
  for (const auto &b : L.qg->arrows())
    if (b.source != a.target)
      EXPECT_THROW(circledast(*L.S, b.f, a.f), std::invalid_argument);
}
