#include "skewquiver/intertwiner.hpp"

#include "skewquiver/errors.hpp"

#include <algorithm>

namespace skq {

const InducedModule &module_of(const Setting &S, const Intertwiner &f) {
  return S.induced(f.side, f.orbit_seq, f.target);
}

Intertwiner zero_intertwiner(const Setting &S, Side side,
                             std::vector<int> orbit_seq, int source,
                             int target) {
  Intertwiner f;
  f.side = side;
  f.orbit_seq = std::move(orbit_seq);
  f.source = source;
  f.target = target;
  const InducedModule &M = module_of(S, f);
  f.coords = CycMatrix(M.dim(), S.vertex(source).rho.dim);
  return f;
}

Intertwiner unit_intertwiner(const Setting &S, Side side, int vertex) {
  Intertwiner f =
      zero_intertwiner(S, side, {S.vertex(vertex).orbit}, vertex, vertex);
  f.coords = CycMatrix::identity(S.vertex(vertex).rho.dim);
  return f;
}

bool is_equivariant(const Setting &S, const Intertwiner &f) {
  const InducedModule &M = module_of(S, f);
  const ModuleRep &U = S.vertex(f.source).module.module;
  const Stabilizer &H = S.stabilizer_of(f.source);
  for (int p = 0; p < H.order(); ++p)
    if (!(M.action(p) * f.coords == f.coords * U.action[p]))
      return false;
  return true;
}

std::vector<Intertwiner> hom_intertwiners(const Setting &S, Side side,
                                          const std::vector<int> &orbit_seq,
                                          int source, int target) {
  const InducedModule &M = S.induced(side, orbit_seq, target);
  std::vector<Intertwiner> out;
  for (auto &F : hom_basis(S.vertex(source).module.module, M.as_module())) {
    Intertwiner f;
    f.side = side;
    f.orbit_seq = orbit_seq;
    f.source = source;
    f.target = target;
    f.coords = std::move(F);
    out.push_back(std::move(f));
  }
  return out;
}

Intertwiner add_scaled(Intertwiner a, const Intertwiner &b, const Cyc &c) {
  if (a.side != b.side || a.orbit_seq != b.orbit_seq || a.source != b.source ||
      a.target != b.target)
    throw std::invalid_argument("add_scaled: intertwiners of different shape");
  a.coords = a.coords + c * b.coords;
  return a;
}

Intertwiner circledast(const Setting &S, const Intertwiner &f2,
                       const Intertwiner &f1) {
  if (f1.side != f2.side || f1.target != f2.source ||
      f1.orbit_seq.back() != f2.orbit_seq.front())
    throw PreconditionError("circledast: endpoint mismatch");
  const Group &G = S.group();
  const ArrowSpace &space = S.space(f1.side);
  std::vector<int> seq = f1.orbit_seq;
  seq.insert(seq.end(), f2.orbit_seq.begin() + 1, f2.orbit_seq.end());
  Intertwiner r = zero_intertwiner(S, f1.side, seq, f1.source, f2.target);
  const InducedModule &M1 = module_of(S, f1);
  const InducedModule &M2 = module_of(S, f2);
  const InducedModule &MR = module_of(S, r);
  const int dv = M1.dim_v(), dw = M2.dim_v();
  const int du = static_cast<int>(f1.coords.cols());
  for (int k = 0; k < du; ++k)
    for (int pi = 0; pi < M1.num_paths(); ++pi)
      for (int l = 0; l < dv; ++l) {
        const Cyc &c = f1.coords(pi * dv + l, k);
        if (c.is_zero())
          continue;
        const InducedPath &p = M1.paths()[pi];
        for (int pj = 0; pj < M2.num_paths(); ++pj) {
          const InducedPath &q = M2.paths()[pj];
          bool have = false;
          PathTermList terms;
          for (int m = 0; m < dw; ++m) {
            const Cyc &c2 = f2.coords(pj * dw + m, l);
            if (c2.is_zero())
              continue;
            if (!have) {
              terms = space.act(p.Y, q.path.arrows);
              have = true;
            }
            for (const auto &[arrows, chi] : terms) {
              std::vector<int> joined = p.path.arrows;
              joined.insert(joined.end(), arrows.begin(), arrows.end());
              const int idx = MR.find_path(joined);
              if (idx < 0 || MR.paths()[idx].Y != G.mul(p.Y, q.Y))
                throw ConsistencyError("circledast: concatenated path not in "
                                       "the target module");
              r.coords(idx * dw + m, k) += c * c2 * chi;
            }
          }
        }
      }
  return r;
}

Elem pairing_twist(const Group &G, Elem h0) { return G.inv(h0); }

namespace {

void check_pairable(const Intertwiner &f, const Intertwiner &phi) {
  std::vector<int> rev(f.orbit_seq.rbegin(), f.orbit_seq.rend());
  if (f.side != Side::M || phi.side != Side::Dual || phi.orbit_seq != rev ||
      phi.source != f.target || phi.target != f.source)
    throw PreconditionError("pairing: intertwiners do not match");
}

std::vector<int> reversed(const std::vector<int> &v) {
  return {v.rbegin(), v.rend()};
}

} // namespace

Cyc pairing(const Setting &S, const Intertwiner &f, const Intertwiner &phi) {
  check_pairable(f, phi);
  const Group &G = S.group();
  const ArrowSpace &M = S.space(Side::M);
  const InducedModule &Mf = module_of(S, f);
  const InducedModule &Mp = module_of(S, phi);
  const Stabilizer &H0 = S.stabilizer_of(f.source);
  const ModuleRep &U = S.vertex(f.source).module.module;
  const int du = U.dim, dv = Mf.dim_v();
  CycMatrix R(du, du);
  for (int k = 0; k < du; ++k)
    for (int pi = 0; pi < Mf.num_paths(); ++pi) {
      const InducedPath &p = Mf.paths()[pi];
      PathTermList moved;
      bool have = false;
      for (int l = 0; l < dv; ++l) {
        const Cyc &c = f.coords(pi * dv + l, k);
        if (c.is_zero())
          continue;
        if (!have) {
          moved = M.act(G.inv(p.Y), p.path.arrows);
          have = true;
        }
        for (const auto &[arrows, chi] : moved) {
          const int qi = Mp.find_path(reversed(arrows));
          if (qi < 0)
            throw ConsistencyError("pairing: dual path missing from module");
          const Elem h0 = G.mul(G.inv(Mp.paths()[qi].Y), G.inv(p.Y));
          if (!H0.contains(h0))
            throw ConsistencyError("pairing: h0 outside the stabilizer");
          const CycMatrix &tw = U.action[H0.position[pairing_twist(G, h0)]];
          for (int j = 0; j < du; ++j) {
            const Cyc &d = phi.coords(qi * du + j, l);
            if (d.is_zero())
              continue;
            const Cyc s = c * chi * d;
            for (int r = 0; r < du; ++r)
              if (!tw(r, j).is_zero())
                R(r, k) += s * tw(r, j);
          }
        }
      }
    }
  const Cyc s = R(0, 0);
  if (!(R == s * CycMatrix::identity(du)))
    throw ConsistencyError("pairing: result is not a multiple of the input "
                           "vector");
  return s;
}

Cyc pairing_fast(const Setting &S, const Intertwiner &f,
                 const Intertwiner &phi, bool *fell_back,
                 std::vector<FastPairingTerm> *terms) {
  if (fell_back)
    *fell_back = false;
  if (!S.monomial_abelian()) {
    if (fell_back)
      *fell_back = true;
    return pairing(S, f, phi);
  }
  check_pairable(f, phi);
  const Group &G = S.group();
  const ArrowSpace &M = S.space(Side::M);
  const InducedModule &Mf = module_of(S, f);
  const InducedModule &Mp = module_of(S, phi);
  const QGVertex &U = S.vertex(f.source);
  const QGVertex &V = S.vertex(f.target);
  const Stabilizer &H0 = S.stabilizer_of(f.source);
  // Coordinates relative to e_U and e_V instead of the echelon basis vectors.
  const Cyc cu = U.module.idem_coords[0];
  const Cyc cv = V.module.idem_coords[0];
  const Cyc a_scale = cu / cv, b_scale = cv / cu;
  Cyc sum;
  for (int pi = 0; pi < Mf.num_paths(); ++pi) {
    const Cyc &fc = f.coords(pi, 0);
    if (fc.is_zero() && !terms)
      continue;
    const InducedPath &p = Mf.paths()[pi];
    const Elem Yinv = G.inv(p.Y);
    Cyc chi(1);
    std::vector<int> moved;
    for (int a : p.path.arrows) {
      auto [x, b] = M.act_monomial(Yinv, a);
      chi *= x;
      moved.push_back(b);
    }
    const int qi = Mp.find_path(reversed(moved));
    if (qi < 0)
      throw ConsistencyError("pairing_fast: dual path missing from module");
    const ChainFactor cf =
        chain_factorize(G, S.orbits(), f.orbit_seq, p.y);
    FastPairingTerm t;
    t.gamma = p.path;
    t.y = p.y;
    t.alpha = fc * a_scale;
    t.beta = phi.coords(qi, 0) * b_scale;
    t.chi = chi;
    t.h0 = cf.h0;
    t.chi_u = U.rho.character[H0.position[pairing_twist(G, cf.h0)]];
    if (!fc.is_zero())
      sum += t.alpha * t.beta * t.chi * t.chi_u;
    if (terms)
      terms->push_back(std::move(t));
  }
  return sum;
}

SkewElement value_on_basis(const Setting &S, const Intertwiner &f, int k) {
  const InducedModule &M = module_of(S, f);
  const QGVertex &V = S.vertex(f.target);
  const Stabilizer &Hn = S.stabilizer_of(f.target);
  const Group &G = S.group();
  const int dv = M.dim_v();
  SkewElement r;
  for (int pi = 0; pi < M.num_paths(); ++pi) {
    const InducedPath &p = M.paths()[pi];
    for (int l = 0; l < dv; ++l) {
      const Cyc &c = f.coords(pi * dv + l, k);
      if (c.is_zero())
        continue;
      for (int pos = 0; pos < Hn.order(); ++pos) {
        const Cyc &b = V.module.basis(l, pos);
        if (!b.is_zero())
          r.add(SkewKey{p.path, G.mul(p.Y, Hn.elements[pos])}, c * b);
      }
    }
  }
  return r;
}

SkewElement value_at_idempotent(const Setting &S, const Intertwiner &f) {
  const QGVertex &U = S.vertex(f.source);
  SkewElement r;
  for (int k = 0; k < U.rho.dim; ++k)
    if (!U.module.idem_coords[k].is_zero())
      r.add(value_on_basis(S, f, k), U.module.idem_coords[k]);
  return r;
}

std::optional<CycMatrix> coords_of_value(const Setting &S, Side side,
                                         const std::vector<int> &orbit_seq,
                                         int target, const SkewElement &x) {
  const InducedModule &M = S.induced(side, orbit_seq, target);
  const Stabilizer &Hn = S.stabilizer_of(target);
  const QGVertex &V = S.vertex(target);
  const Group &G = S.group();
  std::vector<std::vector<Cyc>> blocks(M.num_paths(),
                                       std::vector<Cyc>(Hn.order()));
  for (const auto &[key, c] : x.terms()) {
    const int pi = key.path.start == S.orbits().reps[orbit_seq[0]]
                       ? M.find_path(key.path.arrows)
                       : -1;
    if (pi < 0)
      return std::nullopt;
    const Elem h = G.mul(G.inv(M.paths()[pi].Y), key.g);
    if (!Hn.contains(h))
      return std::nullopt;
    blocks[pi][Hn.position[h]] += c;
  }
  const int dv = M.dim_v();
  CycMatrix out(M.dim(), 1);
  for (int pi = 0; pi < M.num_paths(); ++pi) {
    auto c = V.module.coords(blocks[pi]);
    if (!c)
      return std::nullopt;
    for (int l = 0; l < dv; ++l)
      out(pi * dv + l, 0) = (*c)[l];
  }
  return out;
}

} // namespace skq
