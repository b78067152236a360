#include "skewquiver/morita.hpp"

#include "skewquiver/errors.hpp"
#include "skewquiver/parallel.hpp"

namespace skq {

namespace {

std::vector<QGArrow> arrows_between(const Setting &S, int s, int t) {
  const std::vector<int> seq{S.vertex(s).orbit, S.vertex(t).orbit};
  const std::vector<int> rev{seq[1], seq[0]};
  auto fs = hom_intertwiners(S, Side::M, seq, s, t);
  auto phis = hom_intertwiners(S, Side::Dual, rev, t, s);
  if (fs.size() != phis.size())
    throw ConsistencyError("hom spaces for " + S.vertex(s).label + " -> " +
                           S.vertex(t).label + " have dimensions " +
                           std::to_string(fs.size()) + " and " +
                           std::to_string(phis.size()) + " on the two sides");
  const std::size_t m = fs.size();
  std::vector<QGArrow> out;
  if (m == 0)
    return out;
  CycMatrix gram(m, m);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t l = 0; l < m; ++l)
      gram(k, l) = pairing(S, fs[k], phis[l]);
  CycMatrix C;
  try {
    C = inverse(gram);
  } catch (const ArithmeticError &) {
    throw ConsistencyError("singular Gram matrix for " + S.vertex(s).label +
                           " -> " + S.vertex(t).label);
  }
  const QGVertex &U = S.vertex(s), &V = S.vertex(t);
  for (std::size_t i = 0; i < m; ++i) {
    QGArrow a;
    a.source = s;
    a.target = t;
    a.index = static_cast<int>(i);
    a.label = "f[" + std::to_string(U.rep_vertex) + "," + U.label + "->" +
              std::to_string(V.rep_vertex) + "," + V.label + "]#" +
              std::to_string(i);
    a.f = zero_intertwiner(S, Side::M, seq, s, t);
    for (std::size_t k = 0; k < m; ++k)
      if (!C(i, k).is_zero())
        a.f = add_scaled(std::move(a.f), fs[k], C(i, k));
    a.dual = phis[i];
    out.push_back(std::move(a));
  }
  for (const auto &a : out)
    for (const auto &b : out)
      if (pairing(S, a.f, b.dual) != Cyc(a.index == b.index ? 1 : 0))
        throw ConsistencyError("dual basis normalization failed for " +
                               a.label);
  return out;
}

} // namespace

QG::QG(const Setting &S) : S_(&S) {
  const int nv = S.num_vertices();
  std::vector<std::vector<QGArrow>> blocks(static_cast<std::size_t>(nv) * nv);
  parallel_for(blocks.size(), [&](std::size_t b) {
    blocks[b] = arrows_between(S, static_cast<int>(b / nv),
                               static_cast<int>(b % nv));
  });
  out_.resize(nv);
  for (auto &blk : blocks)
    for (auto &a : blk) {
      a.id = num_arrows();
      out_[a.source].push_back(a.id);
      arrows_.push_back(std::move(a));
    }
  values_.resize(arrows_.size());
  parallel_for(arrows_.size(), [&](std::size_t i) {
    values_[i] = value_at_idempotent(S, arrows_[i].f);
  });
}

std::string QG::vertex_label(int v) const {
  const QGVertex &x = S_->vertex(v);
  return "(" + std::to_string(x.rep_vertex) + "," + x.label + ")";
}

int QG::path_end(const Path &p) const {
  return p.arrows.empty() ? p.start : arrows_[p.arrows.back()].target;
}

std::vector<int> QG::orbit_seq(const Path &p) const {
  std::vector<int> seq{S_->vertex(p.start).orbit};
  for (int a : p.arrows)
    seq.push_back(S_->vertex(arrows_[a].target).orbit);
  return seq;
}

std::vector<Path> QG::paths(int n, int source, int target) const {
  std::vector<Path> out;
  Path cur;
  auto dfs = [&](auto &&self, int v, int left) -> void {
    if (left == 0) {
      if (target < 0 || v == target)
        out.push_back(cur);
      return;
    }
    for (int a : out_[v]) {
      cur.arrows.push_back(a);
      self(self, arrows_[a].target, left - 1);
      cur.arrows.pop_back();
    }
  };
  for (int v = 0; v < num_vertices(); ++v) {
    if (source >= 0 && v != source)
      continue;
    cur.start = v;
    dfs(dfs, v, n);
  }
  return out;
}

std::size_t QG::count_paths(int n, int source, int target) const {
  // Transfer-matrix count so that long paths need not be listed.
  const int nv = num_vertices();
  std::size_t total = 0;
  for (int s = 0; s < nv; ++s) {
    if (source >= 0 && s != source)
      continue;
    std::vector<std::size_t> cur(nv, 0), next(nv);
    cur[s] = 1;
    for (int t = 0; t < n; ++t) {
      std::fill(next.begin(), next.end(), 0);
      for (int v = 0; v < nv; ++v)
        for (int a : out_[v])
          next[arrows_[a].target] += cur[v];
      cur.swap(next);
    }
    for (int v = 0; v < nv; ++v)
      if (target < 0 || v == target)
        total += cur[v];
  }
  return total;
}

Intertwiner QG::f_gamma(const Path &p) const {
  if (p.arrows.empty())
    return unit_intertwiner(*S_, Side::M, p.start);
  Intertwiner f = arrows_[p.arrows[0]].f;
  for (std::size_t t = 1; t < p.arrows.size(); ++t) {
    const QGArrow &a = arrows_[p.arrows[t]];
    if (a.source != f.target)
      throw PreconditionError("f_gamma: path is not composable");
    f = circledast(*S_, a.f, f);
  }
  return f;
}

Intertwiner QG::phi_gamma(const Path &p) const {
  {
    std::lock_guard<std::mutex> lock(phi_mu_);
    auto it = phi_cache_.find(p);
    if (it != phi_cache_.end())
      return it->second;
  }
  Intertwiner r;
  if (p.arrows.empty()) {
    r = unit_intertwiner(*S_, Side::Dual, p.start);
  } else {
    const QGArrow &first = arrows_[p.arrows[0]];
    if (first.source != p.start)
      throw PreconditionError("phi_gamma: path is not composable");
    if (p.arrows.size() == 1) {
      r = first.dual;
    } else {
      Path rest{first.target, {p.arrows.begin() + 1, p.arrows.end()}};
      r = circledast(*S_, first.dual, phi_gamma(rest));
    }
  }
  std::lock_guard<std::mutex> lock(phi_mu_);
  return phi_cache_.emplace(p, std::move(r)).first->second;
}

SkewElement QG::path_value(const Path &p) const {
  if (p.arrows.empty())
    return S_->vertex_idempotent(p.start);
  SkewElement x = values_[p.arrows[0]];
  for (std::size_t t = 1; t < p.arrows.size(); ++t)
    x = S_->mul(x, values_[p.arrows[t]]);
  return x;
}

std::string render_path(const QG &qg, const Path &p) {
  if (p.arrows.empty())
    return "e" + qg.vertex_label(p.start);
  std::string s;
  for (int a : p.arrows) {
    if (!s.empty())
      s += ' ';
    s += qg.arrow(a).label;
  }
  return s;
}

} // namespace skq
