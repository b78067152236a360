#include "support.hpp"

#include "skewquiver/errors.hpp"

#include <gtest/gtest.h>

using namespace skq;

namespace {

SkewElement term(const Quiver &Q, int start, std::vector<std::string> labels,
                 Elem g, const Cyc &c = Cyc(1)) {
  Path p{start, {}};
  for (const auto &l : labels)
    p.arrows.push_back(*Q.find(l));
  SkewElement x;
  x.add(SkewKey{p, g}, c);
  return x;
}

// Random combination of p * g over all paths of length <= 2.
SkewElement random_skew(const Setting &S, std::mt19937_64 &rng) {
  const Quiver &Q = S.quiver();
  std::uniform_int_distribution<int> coin(0, 3), val(-2, 2);
  std::uniform_int_distribution<int> grp(0, S.group().order() - 1);
  SkewElement x;
  for (int v = 0; v < Q.num_vertices; ++v) {
    if (coin(rng) == 0)
      x.add(SkewKey{Path{v, {}}, grp(rng)}, Cyc(val(rng)));
    for (int a : Q.out[v]) {
      if (coin(rng) == 0)
        x.add(SkewKey{Path{v, {a}}, grp(rng)}, Cyc(val(rng)));
      for (int b : Q.out[Q.arrows[a].target])
        if (coin(rng) == 0)
          x.add(SkewKey{Path{v, {a, b}}, grp(rng)}, Cyc(val(rng)));
    }
  }
  return x;
}

// Rank over C by Gaussian elimination with partial pivoting.
std::size_t numeric_rank(std::vector<std::vector<std::complex<double>>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    for (std::size_t r = rank; r < m.size(); ++r)
      if (std::abs(m[r][c]) > std::abs(m[piv][c]))
        piv = r;
    if (std::abs(m[piv][c]) < 1e-8)
      continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      const auto f = m[r][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j)
        m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

void all_paths(const Quiver &Q, int n, std::vector<Path> &out) {
  std::vector<Path> cur;
  for (int v = 0; v < Q.num_vertices; ++v)
    cur.push_back(Path{v, {}});
  for (int k = 0; k < n; ++k) {
    std::vector<Path> next;
    for (const auto &p : cur)
      for (int a : Q.out[path_end(Q, p)]) {
        Path q = p;
        q.arrows.push_back(a);
        next.push_back(q);
      }
    cur = std::move(next);
  }
  out = std::move(cur);
}

} // namespace

TEST(SkewProduct, HandComputedSwap) {
  const Setting &S = *test::load("z2_swap").S;
  const Group &G = S.group();
  const Quiver &Q = S.quiver();
  const Elem s = G.parse("s");
  // (a * s)(a * e) = a . ^s a * s = ab * s
  EXPECT_EQ(S.mul(term(Q, 0, {"a"}, s), term(Q, 0, {"a"}, 0)),
            term(Q, 0, {"a", "b"}, s));
  // a . a is not a path.
  EXPECT_TRUE(S.mul(term(Q, 0, {"a"}, 0), term(Q, 0, {"a"}, 0)).is_zero());
  // (e_1 * s)(a * e) = b * s, (e_0 * s)(a * e) = 0
  EXPECT_EQ(S.mul(term(Q, 1, {}, s), term(Q, 0, {"a"}, 0)),
            term(Q, 1, {"b"}, s));
  EXPECT_TRUE(S.mul(term(Q, 0, {}, s), term(Q, 0, {"a"}, 0)).is_zero());
  // (e_0 * s)(e_1 * s) = e_0 * e
  EXPECT_EQ(S.mul(term(Q, 0, {}, s), term(Q, 1, {}, s)), term(Q, 0, {}, 0));
}

TEST(SkewProduct, ScalarsFromTheAction) {
  const Setting &S = *test::load("dihedral10").S;
  const Group &G = S.group();
  const Quiver &Q = S.quiver();
  const Elem t = G.parse("t");
  // ^t x01 = -x04
  EXPECT_EQ(S.mul(term(Q, 0, {}, t), term(Q, 0, {"x01"}, 0)),
            term(Q, 0, {"x04"}, t, Cyc(-1)));
}

TEST(SkewProduct, Associative) {
  std::mt19937_64 rng(5);
  for (const auto &name : test::all_fixtures()) {
    const Setting &S = *test::load(name).S;
    for (int trial = 0; trial < 10; ++trial) {
      const SkewElement a = random_skew(S, rng), b = random_skew(S, rng),
                        c = random_skew(S, rng);
      EXPECT_EQ(S.mul(S.mul(a, b), c), S.mul(a, S.mul(b, c))) << name;
      EXPECT_EQ(S.mul(a, b + c), S.mul(a, b) + S.mul(a, c)) << name;
    }
  }
}

TEST(Idempotents, ETildeAndProjection) {
  std::mt19937_64 rng(6);
  for (const auto &name : test::all_fixtures()) {
    const Setting &S = *test::load(name).S;
    const SkewElement &e = S.e_tilde();
    EXPECT_EQ(S.mul(e, e), e) << name;
    for (int v = 0; v < S.num_vertices(); ++v) {
      const SkewElement ev = S.vertex_idempotent(v);
      EXPECT_EQ(S.mul(ev, ev), ev) << name;
      for (int w = 0; w < S.num_vertices(); ++w)
        if (w != v)
          EXPECT_TRUE(S.mul(ev, S.vertex_idempotent(w)).is_zero()) << name;
    }
    const SkewElement x = random_skew(S, rng);
    const SkewElement px = S.project(x);
    EXPECT_EQ(S.project(px), px) << name;
    EXPECT_EQ(px, S.mul(S.mul(e, x), e)) << name;
  }
}

TEST(Canonical, ExpandInvertsCanonicalize) {
  std::mt19937_64 rng(8);
  for (const auto &name : test::all_fixtures()) {
    const Setting &S = *test::load(name).S;
    for (int trial = 0; trial < 5; ++trial) {
      SkewElement x = S.project(random_skew(S, rng));
      const auto terms = canonicalize(S.group(), S.orbits(), S.quiver(), x);
      EXPECT_EQ(expand(S.group(), terms), x) << name;
    }
  }
}

TEST(GradedDimension, NumericRankOracle) {
  // dim e~ A_n e~ from the products e~ (p * g) e~, ranked in floating point.
  for (const auto &name : test::all_fixtures()) {
    const Setting &S = *test::load(name).S;
    for (int n = 0; n <= 2; ++n) {
      std::vector<Path> paths;
      all_paths(S.quiver(), n, paths);
      std::vector<SkewElement> vals;
      std::map<SkewKey, std::size_t> index;
      for (const auto &p : paths)
        for (Elem g = 0; g < S.group().order(); ++g) {
          SkewElement x;
          x.add(SkewKey{p, g}, Cyc(1));
          vals.push_back(S.project(x));
          for (const auto &[k, c] : vals.back().terms())
            index.emplace(k, index.size());
        }
      std::vector<std::vector<std::complex<double>>> m(
          vals.size(), std::vector<std::complex<double>>(index.size()));
      for (std::size_t r = 0; r < vals.size(); ++r)
        for (const auto &[k, c] : vals[r].terms())
          m[r][index[k]] = test::to_complex(c);
      const std::size_t r = numeric_rank(m);
      EXPECT_EQ(r, graded_dimension(S, n)) << name << " n=" << n;
      EXPECT_EQ(r, test::load(name).qg->count_paths(n)) << name << " n=" << n;
    }
  }
}
