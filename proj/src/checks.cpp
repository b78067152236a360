#include "skewquiver/checks.hpp"

#include "skewquiver/errors.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <ostream>
#include <sstream>

namespace skq {

namespace {

template <class T> T pick(Rng &rng, const std::vector<T> &v) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

int uniform(Rng &rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

void fail_once(CheckResult &r, const std::string &msg) {
  if (r.passed)
    r.detail = msg;
  r.passed = false;
}

IntPoly poly_mul(const IntPoly &a, const IntPoly &b) {
  IntPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] += a[i] * b[j];
  return r;
}

/// Random walk of length n in Q_G from `source`; false at a dead end.
bool random_walk(const QG &qg, int source, int n, Rng &rng, Path &walk) {
  walk = Path{source, {}};
  int v = source;
  for (int t = 0; t < n; ++t) {
    if (qg.out(v).empty())
      return false;
    const int a = pick(rng, qg.out(v));
    walk.arrows.push_back(a);
    v = qg.arrow(a).target;
  }
  return true;
}

/// Random combination over all paths parallel to `walk` (same endpoints
/// and orbit sequence).
Intertwiner combination_over(const QG &qg, Side side, const Path &walk,
                             Rng &rng) {
  const Setting &S = qg.setting();
  const int end = qg.path_end(walk);
  const std::vector<int> seq = qg.orbit_seq(walk);
  const int exponent = S.group().exponent();
  Intertwiner out;
  bool first = true;
  for (const Path &p : qg.paths(walk.length(), walk.start, end)) {
    if (qg.orbit_seq(p) != seq)
      continue;
    Intertwiner g = side == Side::M ? qg.f_gamma(p) : qg.phi_gamma(p);
    if (first) {
      out = g;
      out.coords = random_scalar(rng, exponent) * out.coords;
      first = false;
    } else {
      out = add_scaled(std::move(out), g, random_scalar(rng, exponent));
    }
  }
  return out;
}

std::string path_labels(const Quiver &Q, const std::vector<int> &arrows) {
  std::string s;
  for (int a : arrows)
    s += (s.empty() ? "" : " ") + Q.arrows[a].label;
  return s;
}

} // namespace

Cyc random_scalar(Rng &rng, int exponent) {
  Cyc c(uniform(rng, -3, 3));
  if (exponent > 2 && uniform(rng, 0, 2) == 0)
    c += Cyc(uniform(rng, -2, 2)) * Cyc::zeta(exponent, uniform(rng, 1, exponent - 1));
  if (c.is_zero())
    c = Cyc(1);
  return c;
}

SkewElement random_element(const Setting &S, int degree, Rng &rng, int terms) {
  const Group &G = S.group();
  const Quiver &Q = S.quiver();
  const OrbitData &O = S.orbits();
  SkewElement x;
  for (int k = 0; k < terms; ++k) {
    for (int attempt = 0; attempt < 20; ++attempt) {
      Path p{pick(rng, O.reps), {}};
      int v = p.start;
      bool ok = true;
      for (int t = 0; t < degree && ok; ++t) {
        if (Q.out[v].empty()) {
          ok = false;
          break;
        }
        const int a = pick(rng, Q.out[v]);
        p.arrows.push_back(a);
        v = Q.arrows[a].target;
      }
      if (!ok)
        continue;
      const Stabilizer &H = O.stabilizers[O.orbit_of[v]];
      const Elem g = G.mul(O.witness[v], pick(rng, H.elements));
      x.add(SkewKey{p, g}, random_scalar(rng, G.exponent()));
      break;
    }
  }
  return S.project(x);
}

bool random_intertwiner(const QG &qg, Side side, int source, int n, Rng &rng,
                        Intertwiner &out, Path *walk) {
  Path w;
  if (!random_walk(qg, source, n, rng, w))
    return false;
  out = combination_over(qg, side, w, rng);
  if (walk)
    *walk = w;
  return true;
}

std::size_t graded_dimension(const Setting &S, int n) {
  const Group &G = S.group();
  const Quiver &Q = S.quiver();
  const OrbitData &O = S.orbits();
  std::vector<SkewElement> span;
  Path cur;
  std::function<void(int, int)> dfs = [&](int v, int left) {
    if (left == 0) {
      const Stabilizer &H = O.stabilizers[O.orbit_of[v]];
      for (Elem h : H.elements) {
        SkewElement x;
        x.add(SkewKey{cur, G.mul(O.witness[v], h)}, Cyc(1));
        SkewElement y = S.project(x);
        if (!y.is_zero())
          span.push_back(std::move(y));
      }
      return;
    }
    for (int a : Q.out[v]) {
      cur.arrows.push_back(a);
      dfs(Q.arrows[a].target, left - 1);
      cur.arrows.pop_back();
    }
  };
  for (int rep : O.reps) {
    cur = Path{rep, {}};
    dfs(rep, n);
  }
  std::map<SkewKey, std::size_t> col;
  for (const auto &x : span)
    for (const auto &[k, c] : x.terms())
      col.emplace(k, col.size());
  if (span.empty())
    return 0;
  CycMatrix m(span.size(), col.size());
  for (std::size_t r = 0; r < span.size(); ++r)
    for (const auto &[k, c] : span[r].terms())
      m(r, col[k]) = c;
  return rank(m);
}

CheckResult check_field_axioms(Rng &rng, int samples) {
  CheckResult r;
  r.name = "field axioms";
  const std::vector<int> conductors{1, 3, 4, 5, 7, 8, 9, 12, 15};
  auto rnd = [&] {
    const int n = pick(rng, conductors);
    std::vector<Rational> c(std::max(1, euler_phi(n)));
    for (auto &q : c) {
      q = Rational(uniform(rng, -5, 5), uniform(rng, 1, 4));
      q.canonicalize();
    }
    return Cyc::from_poly(n, c);
  };
  for (int i = 0; i < samples; ++i) {
    const Cyc a = rnd(), b = rnd(), c = rnd();
    ++r.cases;
    if (!((a + b) + c == a + (b + c)))
      fail_once(r, "addition not associative for " + a.to_string() + ", " +
                       b.to_string() + ", " + c.to_string());
    if (!((a * b) * c == a * (b * c)))
      fail_once(r, "multiplication not associative for " + a.to_string() +
                       ", " + b.to_string() + ", " + c.to_string());
    if (!(a * b == b * a) || !(a + b == b + a))
      fail_once(r, "not commutative for " + a.to_string() + ", " + b.to_string());
    if (!(a * (b + c) == a * b + a * c))
      fail_once(r, "not distributive for " + a.to_string());
    if (!(a - a).is_zero() || !(a + Cyc() == a) || !(a * Cyc(1) == a))
      fail_once(r, "identity laws fail for " + a.to_string());
    if (!a.is_zero() && !(a * a.inverse()).is_one())
      fail_once(r, "inverse fails for " + a.to_string());
    const int m = lcm_int(a.conductor(), b.conductor()) * 2;
    if (!((a * b).embed(m) == a.embed(m) * b.embed(m)) ||
        !((a + b).embed(m) == a.embed(m) + b.embed(m)))
      fail_once(r, "embedding into conductor " + std::to_string(m) +
                       " is not a homomorphism");
  }
  return r;
}

CheckResult check_cyclotomic_polynomials(int max_n) {
  CheckResult r;
  r.name = "cyclotomic polynomials";
  for (int n = 1; n <= max_n; ++n) {
    ++r.cases;
    IntPoly prod{Integer(1)};
    for (int d = 1; d <= n; ++d)
      if (n % d == 0)
        prod = poly_mul(prod, cyclotomic_polynomial(d));
    IntPoly want(n + 1, Integer(0));
    want[0] = -1;
    want[n] = 1;
    if (prod != want)
      fail_once(r, "product of Phi_d over d | " + std::to_string(n) +
                       " is not x^n - 1");
    if (static_cast<int>(cyclotomic_polynomial(n).size()) - 1 != euler_phi(n))
      fail_once(r, "deg Phi_" + std::to_string(n) + " != phi(n)");
    Cyc sum;
    for (int k = 0; k < n; ++k)
      sum += Cyc::zeta(n, k);
    if (n > 1 && !sum.is_zero())
      fail_once(r, "sum of the " + std::to_string(n) + "-th roots of unity is " +
                       sum.to_string());
    if (!Cyc::zeta(n, n).is_one())
      fail_once(r, "zeta_" + std::to_string(n) + "^n != 1");
  }
  return r;
}

CheckResult check_group(const Setting &S) {
  CheckResult r;
  r.name = "group and orbits";
  const Group &G = S.group();
  const int n = G.order();
  Rng rng(7);
  const bool full = n <= 64;
  const int triples = full ? n * n * n : 200000;
  for (int i = 0; i < triples; ++i) {
    const Elem a = full ? i / (n * n) : uniform(rng, 0, n - 1);
    const Elem b = full ? (i / n) % n : uniform(rng, 0, n - 1);
    const Elem c = full ? i % n : uniform(rng, 0, n - 1);
    ++r.cases;
    if (G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c))) {
      fail_once(r, "(" + G.name(a) + "*" + G.name(b) + ")*" + G.name(c) +
                       " differs from " + G.name(a) + "*(" + G.name(b) + "*" +
                       G.name(c) + ")");
      break;
    }
  }
  for (Elem g = 0; g < n; ++g)
    if (G.mul(g, G.inv(g)) != 0 || G.mul(0, g) != g || G.mul(g, 0) != g)
      fail_once(r, "identity or inverse law fails at " + G.name(g));
  const OrbitData &O = S.orbits();
  for (int o = 0; o < O.num_orbits(); ++o) {
    const Stabilizer &H = O.stabilizers[o];
    const auto size =
        std::count(O.orbit_of.begin(), O.orbit_of.end(), o);
    ++r.cases;
    if (size * H.order() != n || static_cast<long>(H.coset_reps.size()) != size)
      fail_once(r, "orbit of vertex " + std::to_string(O.reps[o]) + " has " +
                       std::to_string(size) + " vertices, stabilizer order " +
                       std::to_string(H.order()));
    for (Elem g = 0; g < n; ++g) {
      auto [y, h] = H.factorize(G, g);
      if (G.mul(y, h) != g || !H.contains(h))
        fail_once(r, "coset factorization fails for " + G.name(g));
    }
  }
  return r;
}

CheckResult check_idempotents(const Setting &S) {
  CheckResult r;
  r.name = "primitive idempotents";
  const Group &G = S.group();
  for (int v = 0; v < S.num_vertices(); ++v) {
    const QGVertex &x = S.vertex(v);
    const Stabilizer &H = S.stabilizer_of(v);
    ++r.cases;
    if (ga_mul(G, x.eps, x.eps) != x.eps)
      fail_once(r, "e_" + x.label + " is not an idempotent");
    const std::size_t d = left_mult_rank(G, H, x.eps);
    if (static_cast<int>(d) != x.rho.dim || x.module.module.dim != x.rho.dim)
      fail_once(r, "dim kH.e_" + x.label + " = " + std::to_string(d) +
                       ", expected " + std::to_string(x.rho.dim));
  }
  if (!(S.mul(S.e_tilde(), S.e_tilde()) == S.e_tilde()))
    fail_once(r, "e~ is not an idempotent");
  return r;
}

CheckResult check_dual_bases(const QG &qg) {
  CheckResult r;
  r.name = "dual bases";
  const Setting &S = qg.setting();
  for (int s = 0; s < qg.num_vertices(); ++s)
    for (int t = 0; t < qg.num_vertices(); ++t) {
      const std::vector<int> seq{S.vertex(s).orbit, S.vertex(t).orbit};
      const auto m_side = hom_intertwiners(S, Side::M, seq, s, t).size();
      const auto d_side =
          hom_intertwiners(S, Side::Dual, {seq[1], seq[0]}, t, s).size();
      std::vector<const QGArrow *> between;
      for (const auto &a : qg.arrows())
        if (a.source == s && a.target == t)
          between.push_back(&a);
      ++r.cases;
      if (m_side != d_side || between.size() != m_side)
        fail_once(r, "arrow count " + std::to_string(between.size()) +
                         " for " + qg.vertex_label(s) + " -> " +
                         qg.vertex_label(t) + ", hom dimensions " +
                         std::to_string(m_side) + " and " +
                         std::to_string(d_side));
      for (const QGArrow *a : between) {
        if (!is_equivariant(S, a->f) || !is_equivariant(S, a->dual))
          fail_once(r, a->label + " is not equivariant");
        for (const QGArrow *b : between) {
          const Cyc p = pairing(S, a->f, b->dual);
          if (p != Cyc(a->index == b->index ? 1 : 0))
            fail_once(r, "(" + a->label + " | dual of " + b->label +
                             ") = " + p.to_string());
        }
      }
    }
  return r;
}

CheckResult check_eq12(const QG &qg) {
  CheckResult r;
  r.name = "product of arrow values";
  const Setting &S = qg.setting();
  for (const auto &a : qg.arrows())
    for (int bid : qg.out(a.target)) {
      const QGArrow &b = qg.arrow(bid);
      ++r.cases;
      const SkewElement lhs = value_at_idempotent(S, circledast(S, b.f, a.f));
      const SkewElement rhs = S.mul(qg.arrow_value(a.id), qg.arrow_value(b.id));
      if (!(lhs == rhs))
        fail_once(r, "(" + b.label + " (*) " + a.label +
                         ")(e) differs from the product of the values");
      const SkewElement dl =
          value_at_idempotent(S, circledast(S, a.dual, b.dual));
      const SkewElement dr =
          S.mul(value_at_idempotent(S, b.dual), value_at_idempotent(S, a.dual),
                Side::Dual);
      if (!(dl == dr))
        fail_once(r, "dual of " + a.label + " (*) dual of " + b.label +
                         " fails on the dual side");
    }
  return r;
}

CheckResult check_associativity(const QG &qg, Rng &rng, int count) {
  CheckResult r;
  r.name = "circledast associativity";
  const Setting &S = qg.setting();
  if (qg.num_arrows() == 0) {
    r.detail = "no arrows";
    return r;
  }
  for (int attempts = 0;
       static_cast<int>(r.cases) < count && attempts < 50 * count; ++attempts) {
    Path w[3];
    int v = uniform(rng, 0, qg.num_vertices() - 1);
    bool ok = true;
    for (auto &wi : w) {
      ok = ok && random_walk(qg, v, uniform(rng, 0, 2), rng, wi);
      if (ok)
        v = qg.path_end(wi);
    }
    if (!ok)
      continue;
    const Side side = uniform(rng, 0, 1) ? Side::M : Side::Dual;
    // A dual intertwiner starts where its path ends, so the order flips.
    const int i1 = side == Side::M ? 0 : 2, i3 = 2 - i1;
    const Intertwiner f1 = combination_over(qg, side, w[i1], rng);
    const Intertwiner f2 = combination_over(qg, side, w[1], rng);
    const Intertwiner f3 = combination_over(qg, side, w[i3], rng);
    ++r.cases;
    const Intertwiner lhs = circledast(S, circledast(S, f3, f2), f1);
    const Intertwiner rhs = circledast(S, f3, circledast(S, f2, f1));
    if (!(lhs.coords == rhs.coords) || lhs.orbit_seq != rhs.orbit_seq)
      fail_once(r, "(f3 (*) f2) (*) f1 != f3 (*) (f2 (*) f1) for degrees " +
                       std::to_string(f1.degree()) + ", " +
                       std::to_string(f2.degree()) + ", " +
                       std::to_string(f3.degree()));
    if (!is_equivariant(S, lhs))
      fail_once(r, "triple product is not equivariant");
  }
  if (static_cast<int>(r.cases) < count)
    fail_once(r, "only " + std::to_string(r.cases) + " composable triples found");
  return r;
}

CheckResult check_pairing_compat(const QG &qg, Rng &rng, int count) {
  CheckResult r;
  r.name = "pairing of products";
  const Setting &S = qg.setting();
  if (qg.num_arrows() == 0) {
    r.detail = "no arrows";
    return r;
  }
  for (int attempts = 0;
       static_cast<int>(r.cases) < count && attempts < 50 * count; ++attempts) {
    Path w1, w2;
    const int s = uniform(rng, 0, qg.num_vertices() - 1);
    if (!random_walk(qg, s, uniform(rng, 0, 2), rng, w1))
      continue;
    if (!random_walk(qg, qg.path_end(w1), uniform(rng, 0, 2), rng, w2))
      continue;
    const Intertwiner f1 = combination_over(qg, Side::M, w1, rng);
    const Intertwiner f2 = combination_over(qg, Side::M, w2, rng);
    const Intertwiner p1 = combination_over(qg, Side::Dual, w1, rng);
    const Intertwiner p2 = combination_over(qg, Side::Dual, w2, rng);
    ++r.cases;
    const Cyc lhs = pairing(S, circledast(S, f2, f1), circledast(S, p1, p2));
    const Cyc rhs = pairing(S, f2, p2) * pairing(S, f1, p1);
    if (lhs != rhs)
      fail_once(r, "(f2 (*) f1 | p1 (*) p2) = " + lhs.to_string() +
                       " but (f2|p2)(f1|p1) = " + rhs.to_string() +
                       " on paths " + render_path(qg, w1) + " / " +
                       render_path(qg, w2));
  }
  if (static_cast<int>(r.cases) < count)
    fail_once(r, "only " + std::to_string(r.cases) + " quadruples found");
  return r;
}

CheckResult check_biorthogonality(const QG &qg, int max_len) {
  CheckResult r;
  r.name = "biorthogonality";
  const Setting &S = qg.setting();
  for (int n = 0; n <= max_len; ++n) {
    std::map<std::tuple<int, int, std::vector<int>>, std::vector<Path>> groups;
    for (Path &p : qg.paths(n))
      groups[{p.start, qg.path_end(p), qg.orbit_seq(p)}].push_back(p);
    for (const auto &[key, ps] : groups)
      for (const Path &g : ps) {
        const Intertwiner f = qg.f_gamma(g);
        for (const Path &h : ps) {
          ++r.cases;
          const Cyc v = pairing(S, f, qg.phi_gamma(h));
          if (v != Cyc(g == h ? 1 : 0))
            fail_once(r, "(f_gamma | phi_gamma') = " + v.to_string() +
                             " for gamma = " + render_path(qg, g) +
                             ", gamma' = " + render_path(qg, h));
        }
      }
  }
  return r;
}

CheckResult check_graded_dimension(const QG &qg, int max_deg) {
  CheckResult r;
  r.name = "graded dimension";
  std::ostringstream dims;
  for (int n = 0; n <= max_deg; ++n) {
    ++r.cases;
    const std::size_t want = graded_dimension(qg.setting(), n);
    const std::size_t got = qg.count_paths(n);
    dims << (n ? ", " : "") << got;
    if (want != got)
      fail_once(r, "degree " + std::to_string(n) + ": " + std::to_string(got) +
                       " paths but dimension " + std::to_string(want));
  }
  if (r.passed)
    r.detail = "path counts " + dims.str();
  return r;
}

CheckResult check_fast_slow(const QG &qg, Rng &rng, int samples) {
  CheckResult r;
  r.name = "fast and general pairing";
  const Setting &S = qg.setting();
  if (!S.monomial_abelian()) {
    r.applicable = false;
    r.detail = "not applicable: " + S.monomial_abelian_failure();
    return r;
  }
  for (const auto &a : qg.arrows())
    for (const auto &b : qg.arrows()) {
      if (a.source != b.source || a.target != b.target)
        continue;
      ++r.cases;
      const Cyc fast = pairing_fast(S, a.f, b.dual);
      const Cyc slow = pairing(S, a.f, b.dual);
      if (fast != slow)
        fail_once(r, "(" + a.label + " | dual of " + b.label + "): fast " +
                         fast.to_string() + ", general " + slow.to_string());
    }
  std::vector<SkewElement> elems;
  if (S.instance().potential)
    elems.push_back(S.project(potential_element(S, *S.instance().potential)));
  for (int i = 0; i < samples; ++i)
    elems.push_back(random_element(S, uniform(rng, 1, 3), rng));
  TransportOptions opt;
  opt.mode = PairingMode::Both;
  for (const auto &x : elems) {
    try {
      const auto res = transport(qg, x, opt);
      r.cases += res.comb.size();
    } catch (const ConsistencyError &e) {
      fail_once(r, e.what());
    }
  }
  return r;
}

CheckResult check_roundtrip(const QG &qg, Rng &rng, int per_degree,
                            int max_deg) {
  CheckResult r;
  r.name = "round trip";
  const Setting &S = qg.setting();
  std::size_t nonzero = 0;
  for (int n = 0; n <= max_deg; ++n)
    for (int i = 0; i < per_degree; ++i) {
      const SkewElement x = random_element(S, n, rng);
      ++r.cases;
      if (!x.is_zero())
        ++nonzero;
      const TransportResult t = transport(qg, x);
      for (const auto &[p, c] : t.comb)
        if (p.length() != n)
          fail_once(r, "degree " + std::to_string(n) + " element produced " +
                           render_path(qg, p));
      const RoundtripReport rep = verify_roundtrip(qg, x, t.comb);
      if (!rep.ok)
        fail_once(r, "degree " + std::to_string(n) + ": " + rep.message);
    }
  // Linearity on a few pairs.
  for (int i = 0; i < 3; ++i) {
    const int n = uniform(rng, 0, std::min(2, max_deg));
    const SkewElement a = random_element(S, n, rng), b = random_element(S, n, rng);
    const Cyc c = random_scalar(rng, S.group().exponent());
    PathComb sum = transport(qg, a).comb;
    for (const auto &[p, x] : transport(qg, b).comb)
      comb_add(sum, p, c * x);
    ++r.cases;
    if (sum != transport(qg, a + c * b).comb)
      fail_once(r, "transport is not linear");
  }
  r.detail = std::to_string(nonzero) + " nonzero elements";
  return r;
}

CheckResult check_algebra_map(const QG &qg, Rng &rng, int count) {
  CheckResult r;
  r.name = "multiplicativity";
  const Setting &S = qg.setting();
  for (int i = 0; i < count; ++i) {
    const int n1 = uniform(rng, 0, 2), n2 = uniform(rng, 0, 3 - n1);
    const SkewElement a = random_element(S, n1, rng);
    const SkewElement b = random_element(S, n2, rng);
    ++r.cases;
    const PathComb lhs = transport(qg, S.mul(a, b)).comb;
    const PathComb rhs =
        comb_product(qg, transport(qg, a).comb, transport(qg, b).comb);
    if (lhs != rhs)
      fail_once(r, "transport of a product of degrees " + std::to_string(n1) +
                       " and " + std::to_string(n2) +
                       " differs from the product of transports");
  }
  return r;
}

CheckResult check_golden(const QG &qg, const json &golden) {
  CheckResult r;
  r.name = "golden values";
  const Setting &S = qg.setting();
  const Group &G = S.group();
  const Quiver &Q = S.quiver();
  auto expect = [&](const std::string &what, const Cyc &want, const Cyc &got) {
    ++r.cases;
    if (want != got)
      fail_once(r, what + ": expected " + want.to_string() + ", got " +
                       got.to_string());
  };
  auto expect_int = [&](const std::string &what, long want, long got) {
    expect(what, Cyc(want), Cyc(got));
  };
  auto vertex_by_label = [&](const std::string &label) {
    for (int v = 0; v < S.num_vertices(); ++v)
      if (S.vertex(v).label == label)
        return v;
    throw ValidationError("golden: unknown irrep '" + label + "'");
  };
  try {
    if (golden.contains("qg")) {
      const json &g = golden.at("qg");
      expect_int("qg.vertices", g.at("vertices").get<long>(), qg.num_vertices());
      expect_int("qg.arrows", g.at("arrows").get<long>(), qg.num_arrows());
      if (g.contains("multiplicities"))
        for (const auto &m : g.at("multiplicities")) {
          const int s = vertex_by_label(m.at("source"));
          const int t = vertex_by_label(m.at("target"));
          long n = 0;
          for (const auto &a : qg.arrows())
            n += a.source == s && a.target == t;
          expect_int("qg.multiplicity[" + m.at("source").get<std::string>() +
                         "->" + m.at("target").get<std::string>() + "]",
                     m.at("count").get<long>(), n);
        }
    }
    if (golden.contains("idempotents"))
      for (const auto &[label, terms] : golden.at("idempotents").items()) {
        const QGVertex &x = S.vertex(vertex_by_label(label));
        GroupAlgElem want;
        for (const auto &t : terms)
          ga_add(want, G.parse(t.at(0).get<std::string>()), cyc_from_json(t.at(1)));
        for (Elem g = 0; g < G.order(); ++g) {
          auto wi = want.find(g);
          auto gi = x.eps.find(g);
          expect("idempotent[" + label + "]." + G.name(g),
                 wi == want.end() ? Cyc() : wi->second,
                 gi == x.eps.end() ? Cyc() : gi->second);
        }
      }
    if (golden.contains("transport_potential")) {
      const json &t = golden.at("transport_potential");
      if (!S.instance().potential)
        throw ValidationError("golden: instance has no potential");
      const PathComb comb =
          transport_potential(qg, *S.instance().potential).comb;
      expect_int("transport.nonzero_terms", t.at("nonzero_terms").get<long>(),
                 static_cast<long>(comb.size()));
      const int len = t.at("length").get<int>();
      for (const auto &[key, val] : t.at("coefficient_by_endpoints").items()) {
        const auto comma = key.find(',');
        const int s = vertex_by_label(key.substr(0, comma));
        const int e = vertex_by_label(key.substr(comma + 1));
        const Cyc want = cyc_from_json(val);
        for (const Path &p : qg.paths(len, s, e)) {
          auto it = comb.find(p);
          expect("transport[" + render_path(qg, p) + "]", want,
                 it == comb.end() ? Cyc() : it->second);
        }
      }
      for (const auto &[p, c] : comb)
        if (p.length() != len)
          fail_once(r, "transport has a path of length " +
                           std::to_string(p.length()));
    }
    if (golden.contains("fast_pairing_terms")) {
      const json &ft = golden.at("fast_pairing_terms");
      const SkewElement theta =
          S.project(potential_element(S, *S.instance().potential));
      const IntwElement X = xi(S, theta);
      for (const auto &rec : ft) {
        const int s = vertex_by_label(rec.at("source"));
        const int e = vertex_by_label(rec.at("target"));
        std::vector<int> gamma;
        for (const auto &l : rec.at("gamma"))
          gamma.push_back(*Q.find(l.get<std::string>()));
        const std::string where = "table[" + S.vertex(s).label + "->" +
                                  S.vertex(e).label + ", " +
                                  path_labels(Q, gamma) + "]";
        std::vector<int> seq(gamma.size() + 1, S.vertex(s).orbit);
        for (std::size_t t = 0; t < gamma.size(); ++t)
          seq[t + 1] = S.orbits().orbit_of[Q.arrows[gamma[t]].target];
        auto it = X.comps.find({seq, s, e});
        const Intertwiner f = it != X.comps.end()
                                  ? it->second
                                  : zero_intertwiner(S, Side::M, seq, s, e);
        // The record must hold for every path of Q_G with these endpoints.
        for (const Path &p : qg.paths(static_cast<int>(gamma.size()), s, e)) {
          std::vector<FastPairingTerm> terms;
          pairing_fast(S, f, qg.phi_gamma(p), nullptr, &terms);
          const FastPairingTerm *hit = nullptr;
          for (const auto &t : terms)
            if (t.gamma.arrows == gamma)
              hit = &t;
          if (!hit) {
            fail_once(r, where + ": path not found");
            continue;
          }
          const std::string w = where + " via " + render_path(qg, p);
          if (rec.contains("y")) {
            std::string ys, want;
            for (Elem y : hit->y)
              ys += (ys.empty() ? "" : ",") + G.name(y);
            for (const auto &y : rec.at("y"))
              want += (want.empty() ? "" : ",") +
                      G.name(G.parse(y.get<std::string>()));
            ++r.cases;
            if (ys != want)
              fail_once(r, w + ".y: expected " + want + ", got " + ys);
          }
          expect(w + ".alpha", cyc_from_json(rec.at("alpha")), hit->alpha);
          expect(w + ".chi", cyc_from_json(rec.at("chi")), hit->chi);
          expect(w + ".beta", cyc_from_json(rec.at("beta")), hit->beta);
          ++r.cases;
          if (hit->h0 != G.parse(rec.at("h0").get<std::string>()))
            fail_once(r, w + ".h0: expected " + rec.at("h0").get<std::string>() +
                             ", got " + G.name(hit->h0));
          expect(w + ".chi_u", cyc_from_json(rec.at("chi_u")), hit->chi_u);
        }
      }
    }
  } catch (const json::exception &e) {
    fail_once(r, std::string("malformed golden file: ") + e.what());
  }
  return r;
}

namespace {

void report(std::ostream &out, SelftestReport &rep, const CheckResult &r,
            const std::string &fixture, double secs) {
  ++rep.suites;
  if (!r.passed) {
    ++rep.failures;
    rep.passed = false;
  }
  out << (r.passed ? "PASS  " : "FAIL  ") << r.name;
  if (!fixture.empty())
    out << " [" << fixture << "]";
  out << " (" << r.cases << " cases, " << std::fixed;
  out.precision(2);
  out << secs << " s)";
  if (!r.detail.empty())
    out << ": " << r.detail;
  out << "\n";
}

} // namespace

SelftestReport run_selftest(const std::string &fixtures,
                            const std::string &golden, std::ostream &out,
                            std::uint64_t seed) {
  namespace fs = std::filesystem;
  SelftestReport rep;
  Rng rng(seed);
  using clock = std::chrono::steady_clock;
  auto timed = [&](const std::string &fixture, auto &&fn) {
    const auto t0 = clock::now();
    CheckResult r;
    try {
      r = fn();
    } catch (const std::exception &e) {
      r.name = r.name.empty() ? "suite" : r.name;
      fail_once(r, e.what());
    }
    report(out, rep, r, fixture,
           std::chrono::duration<double>(clock::now() - t0).count());
  };
  timed("", [&] { return check_field_axioms(rng, 200); });
  timed("", [&] { return check_cyclotomic_polynomials(60); });

  std::vector<fs::path> files;
  if (fs::is_directory(fixtures))
    for (const auto &e : fs::directory_iterator(fixtures))
      if (e.path().extension() == ".json")
        files.push_back(e.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    out << "notice: no instance files in '" << fixtures
        << "'; instance suites skipped\n";
  }
  for (const auto &file : files) {
    const std::string name = file.stem().string();
    std::unique_ptr<Setting> S;
    std::unique_ptr<QG> qg;
    try {
      S = std::make_unique<Setting>(load_instance(file.string()));
      qg = std::make_unique<QG>(*S);
    } catch (const std::exception &e) {
      CheckResult r;
      r.name = "load";
      fail_once(r, e.what());
      report(out, rep, r, name, 0);
      continue;
    }
    timed(name, [&] { return check_group(*S); });
    timed(name, [&] { return check_idempotents(*S); });
    timed(name, [&] { return check_dual_bases(*qg); });
    timed(name, [&] { return check_eq12(*qg); });
    timed(name, [&] { return check_associativity(*qg, rng, 20); });
    timed(name, [&] { return check_pairing_compat(*qg, rng, 20); });
    timed(name, [&] { return check_biorthogonality(*qg, 2); });
    timed(name, [&] { return check_graded_dimension(*qg, 3); });
    timed(name, [&] { return check_fast_slow(*qg, rng, 3); });
    timed(name, [&] { return check_roundtrip(*qg, rng, 5, 3); });
    timed(name, [&] { return check_algebra_map(*qg, rng, 5); });
    const fs::path g = fs::path(golden) / (name + ".golden.json");
    if (fs::exists(g))
      timed(name, [&] { return check_golden(*qg, load_json_file(g.string())); });
  }
  out << (rep.passed ? "selftest passed" : "selftest FAILED") << ": "
      << rep.suites - rep.failures << "/" << rep.suites << " suites\n";
  return rep;
}

} // namespace skq
