#include "skewquiver/setting.hpp"

#include "skewquiver/errors.hpp"

namespace skq {

Setting::Setting(Instance inst) : inst_(std::move(inst)) {
  const Group &G = inst_.group;
  orbits_ = compute_orbits(G, inst_.M.vact);
  for (const auto &[v, reps] : inst_.coset_reps)
    set_coset_reps(G, inst_.M.vact, orbits_, orbits_.orbit_of[v], reps);
  dual_ = dualize(G, inst_.M);
  by_orbit_.resize(orbits_.num_orbits());
  for (int o = 0; o < orbits_.num_orbits(); ++o) {
    const Stabilizer &H = orbits_.stabilizers[o];
    const int rep = orbits_.reps[o];
    std::vector<Irrep> irreps;
    if (auto it = inst_.irreps.find(rep); it != inst_.irreps.end()) {
      irreps = it->second;
      validate_irreps(G, H, irreps);
    } else {
      irreps = abelian_irreps(G, H);
    }
    if (!H.is_abelian(G))
      setting21_reason_ = "stabilizer of vertex " + std::to_string(rep) +
                          " is not abelian";
    for (int u = 0; u < static_cast<int>(irreps.size()); ++u) {
      QGVertex v;
      v.orbit = o;
      v.rep_vertex = rep;
      v.irrep = u;
      v.label = irreps[u].label;
      v.rho = irreps[u];
      v.eps = primitive_idempotent(G, H, v.rho);
      v.module = module_of_cyclic_idempotent(G, H, v.eps);
      if (v.module.module.dim != v.rho.dim)
        throw ConsistencyError("module of the idempotent of '" + v.label +
                               "' has the wrong dimension");
      if (v.rho.dim != 1 && setting21_reason_.empty())
        setting21_reason_ = "irrep '" + v.label + "' is not one-dimensional";
      by_orbit_[o].push_back(num_vertices());
      vertices_.push_back(std::move(v));
    }
  }
  if (setting21_reason_.empty() && !inst_.M.monomial)
    setting21_reason_ = "arrow action is not monomial";

  for (const auto &v : vertices_)
    e_tilde_.add(skew_from_group_alg(v.rep_vertex, v.eps));
  for (int rep : orbits_.reps)
    e_hat_.add(SkewKey{Path{rep, {}}, 0}, Cyc(1));
  if (!(mul(e_tilde_, e_tilde_) == e_tilde_))
    throw ConsistencyError("e~ is not an idempotent");
}

const InducedModule &Setting::induced(Side s, const std::vector<int> &orbit_seq,
                                      int target) const {
  CacheKey key{static_cast<int>(s), orbit_seq, target};
  {
    std::lock_guard<std::mutex> lock(cache_mu_);
    auto it = cache_.find(key);
    if (it != cache_.end())
      return *it->second;
  }
  if (orbit_seq.empty() || vertices_[target].orbit != orbit_seq.back())
    throw std::invalid_argument("induced: target vertex does not lie over the "
                                "last orbit of the sequence");
  auto mod = std::make_unique<InducedModule>(group(), orbits_, space(s),
                                             orbit_seq,
                                             vertices_[target].module.module);
  std::lock_guard<std::mutex> lock(cache_mu_);
  auto [it, inserted] = cache_.emplace(std::move(key), std::move(mod));
  return *it->second;
}

SkewElement Setting::project(const SkewElement &x) const {
  return mul(mul(e_tilde_, x), e_tilde_);
}

SkewElement Setting::vertex_idempotent(int qg_vertex) const {
  const QGVertex &v = vertices_[qg_vertex];
  return skew_from_group_alg(v.rep_vertex, v.eps);
}

} // namespace skq
