#include "skewquiver/induced.hpp"

#include "skewquiver/errors.hpp"

#include <functional>

namespace skq {

InducedModule::InducedModule(const Group &G, const OrbitData &O,
                             const ArrowSpace &space,
                             std::vector<int> orbit_seq, const ModuleRep &V)
    : orbit_seq_(std::move(orbit_seq)), dim_v_(V.dim) {
  const Quiver &Q = space.quiver;
  const int n = degree();
  const int i0 = O.reps[orbit_seq_[0]];

  InducedPath cur;
  cur.path.start = i0;
  std::function<void(int, int)> dfs = [&](int t, int v) {
    if (t == n) {
      index_[cur.path.arrows] = static_cast<int>(paths_.size());
      paths_.push_back(cur);
      return;
    }
    const int want = orbit_seq_[t + 1];
    const Stabilizer &S = O.stabilizers[want];
    for (int a : Q.out[v]) {
      const int w = Q.arrows[a].target;
      if (O.orbit_of[w] != want)
        continue;
      const Elem z = G.mul(G.inv(cur.Y), O.witness[w]);
      const Elem yt = S.coset_reps[S.coset_of[z]];
      const Elem saved = cur.Y;
      cur.path.arrows.push_back(a);
      cur.y.push_back(yt);
      cur.Y = G.mul(saved, yt);
      dfs(t + 1, w);
      cur.path.arrows.pop_back();
      cur.y.pop_back();
      cur.Y = saved;
    }
  };
  dfs(0, i0);

  const Stabilizer &H0 = O.stabilizers[orbit_seq_[0]];
  const Stabilizer &Hn = O.stabilizers[orbit_seq_.back()];
  const int d = dim();
  for (Elem g : H0.elements) {
    CycMatrix A(d, d);
    for (int pi = 0; pi < num_paths(); ++pi) {
      const InducedPath &p = paths_[pi];
      for (const auto &[q, chi] : space.act(g, p.path.arrows)) {
        const int qi = find_path(q);
        if (qi < 0)
          throw ConsistencyError("induced module not stable under the "
                                 "stabilizer action");
        const Elem h = G.mul({G.inv(paths_[qi].Y), g, p.Y});
        if (!Hn.contains(h))
          throw ConsistencyError("induced module: tail element outside the "
                                 "stabilizer");
        const CycMatrix &rv = V.of(Hn, h);
        for (int l = 0; l < dim_v_; ++l)
          for (int m = 0; m < dim_v_; ++m)
            if (!rv(m, l).is_zero())
              A(qi * dim_v_ + m, pi * dim_v_ + l) += chi * rv(m, l);
      }
    }
    action_.push_back(std::move(A));
  }
}

int InducedModule::find_path(const std::vector<int> &arrows) const {
  auto it = index_.find(arrows);
  return it == index_.end() ? -1 : it->second;
}

ModuleRep InducedModule::as_module() const {
  ModuleRep m;
  m.dim = dim();
  m.action = action_;
  return m;
}

} // namespace skq
