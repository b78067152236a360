#include "skewquiver/reduce.hpp"

#include "skewquiver/errors.hpp"
#include "skewquiver/parallel.hpp"

#include <sstream>

namespace skq {

IntwElement xi(const Setting &S, const SkewElement &theta) {
  if (!(S.project(theta) == theta))
    throw PreconditionError("element is not of the form e~ x e~");
  const Group &G = S.group();
  const Quiver &Q = S.quiver();
  std::map<std::vector<int>, SkewElement> by_seq;
  for (const auto &t : canonicalize(G, S.orbits(), Q, theta))
    by_seq[t.orbit_seq].add(expand(G, std::vector<CanonicalTerm>{t}));
  IntwElement out;
  for (const auto &[seq, part] : by_seq) {
    for (int s : S.vertices_at(seq.front())) {
      const QGVertex &U = S.vertex(s);
      const Stabilizer &H0 = S.stabilizer_of(s);
      for (int t : S.vertices_at(seq.back())) {
        Intertwiner f = zero_intertwiner(S, Side::M, seq, s, t);
        const SkewElement right = S.mul(part, S.vertex_idempotent(t));
        if (right.is_zero())
          continue;
        for (int k = 0; k < U.rho.dim; ++k) {
          const SkewElement left = skew_from_group_alg(
              U.rep_vertex, U.module.basis_element(H0, k));
          const SkewElement val = S.mul(left, right);
          auto col = coords_of_value(S, Side::M, seq, t, val);
          if (!col)
            throw ConsistencyError("component of the element does not lie in "
                                   "the induced module");
          for (std::size_t r = 0; r < col->rows(); ++r)
            f.coords(r, k) = (*col)(r, 0);
        }
        if (!f.is_zero())
          out.comps.emplace(IntwElement::Key{seq, s, t}, std::move(f));
      }
    }
  }
  return out;
}

SkewElement xi_value(const Setting &S, const IntwElement &x) {
  SkewElement r;
  for (const auto &[key, f] : x.comps)
    r.add(value_at_idempotent(S, f));
  return r;
}

void comb_add(PathComb &c, const Path &p, const Cyc &x) {
  if (x.is_zero())
    return;
  auto [it, inserted] = c.emplace(p, x);
  if (!inserted) {
    it->second += x;
    if (it->second.is_zero())
      c.erase(it);
  }
}

TransportResult transport(const QG &qg, const SkewElement &theta,
                          const TransportOptions &opt) {
  const Setting &S = qg.setting();
  TransportResult res;
  const IntwElement X = xi(S, theta);

  struct Job {
    const Intertwiner *f;
    Path gamma;
  };
  std::vector<Job> jobs;
  for (const auto &[key, f] : X.comps) {
    const auto &[seq, s, t] = key;
    for (Path &p : qg.paths(static_cast<int>(seq.size()) - 1, s, t))
      if (qg.orbit_seq(p) == seq)
        jobs.push_back({&f, std::move(p)});
  }

  const bool fast_ok = S.monomial_abelian();
  if (!fast_ok && (opt.mode == PairingMode::Fast || opt.mode == PairingMode::Both))
    res.notices.push_back("combinatorial pairing unavailable (" +
                          S.monomial_abelian_failure() +
                          "); using the general pairing");
  std::vector<Cyc> coeffs(jobs.size());
  parallel_for(
      jobs.size(),
      [&](std::size_t i) {
        const Intertwiner phi = qg.phi_gamma(jobs[i].gamma);
        const Intertwiner &f = *jobs[i].f;
        switch (opt.mode) {
        case PairingMode::Slow:
          coeffs[i] = pairing(S, f, phi);
          break;
        case PairingMode::Auto:
        case PairingMode::Fast:
          coeffs[i] = fast_ok ? pairing_fast(S, f, phi) : pairing(S, f, phi);
          break;
        case PairingMode::Both: {
          const Cyc slow = pairing(S, f, phi);
          if (fast_ok) {
            const Cyc fast = pairing_fast(S, f, phi);
            if (fast != slow)
              throw ConsistencyError(
                  "pairings disagree on " + render_path(qg, jobs[i].gamma) +
                  ": fast " + fast.to_string() + ", general " +
                  slow.to_string());
          }
          coeffs[i] = slow;
          break;
        }
        }
      },
      opt.threads);
  for (std::size_t i = 0; i < jobs.size(); ++i)
    comb_add(res.comb, jobs[i].gamma, coeffs[i]);
  return res;
}

SkewElement potential_element(const Setting &S, const Potential &W) {
  SkewElement x;
  const Quiver &Q = S.quiver();
  for (const auto &[cycle, c] : W.terms)
    x.add(SkewKey{Path{Q.arrows[cycle.front()].source, cycle}, 0}, c);
  return x;
}

TransportResult transport_potential(const QG &qg, const Potential &W,
                                    const TransportOptions &opt) {
  const Setting &S = qg.setting();
  const InvarianceReport inv =
      check_invariance(S.group(), S.space(Side::M), W);
  const SkewElement theta = S.project(potential_element(S, W));
  TransportResult r = transport(qg, theta, opt);
  if (!inv.invariant)
    r.notices.insert(r.notices.begin(),
                     "potential is not invariant under element " +
                         S.group().name(inv.first_violation));
  return r;
}

SkewElement evaluate_comb(const QG &qg, const PathComb &c) {
  SkewElement r;
  for (const auto &[p, x] : c)
    r.add(qg.path_value(p), x);
  return r;
}

RoundtripReport verify_roundtrip(const QG &qg, const SkewElement &theta,
                                 const PathComb &c) {
  RoundtripReport rep;
  const SkewElement diff = theta - evaluate_comb(qg, c);
  if (diff.is_zero())
    return rep;
  rep.ok = false;
  const auto &[key, d] = *diff.terms().begin();
  rep.first_difference = key;
  auto it = theta.terms().find(key);
  rep.expected = it == theta.terms().end() ? Cyc() : it->second;
  rep.actual = rep.expected - d;
  SkewElement one;
  one.add(key, Cyc(1));
  std::string term = render(qg.setting().group(), qg.setting().quiver(), one);
  while (!term.empty() && term.back() == '\n')
    term.pop_back();
  rep.message = "round trip differs at " + term + ": expected " +
                rep.expected.to_string() + ", got " + rep.actual.to_string();
  return rep;
}

PathComb comb_product(const QG &qg, const PathComb &a, const PathComb &b) {
  PathComb r;
  for (const auto &[p, x] : a)
    for (const auto &[q, y] : b) {
      if (qg.path_end(p) != q.start)
        continue;
      Path pq = p;
      pq.arrows.insert(pq.arrows.end(), q.arrows.begin(), q.arrows.end());
      comb_add(r, pq, x * y);
    }
  return r;
}

std::string render_comb(const QG &qg, const PathComb &c) {
  if (c.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[p, x] : c) {
    std::string s = x.to_string();
    const bool simple = s.find_first_of("+ ") == std::string::npos ||
                        (s[0] == '-' && s.find_first_of("+ ", 1) ==
                                            std::string::npos);
    if (!simple)
      s = "(" + s + ")";
    if (!first) {
      if (s[0] == '-') {
        os << " - ";
        s.erase(0, 1);
      } else {
        os << " + ";
      }
    }
    os << s << " · " << render_path(qg, p);
    first = false;
  }
  return os.str();
}

} // namespace skq
