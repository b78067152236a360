#include "skewquiver/quiver.hpp"

#include "skewquiver/errors.hpp"

#include <algorithm>
#include <set>

namespace skq {

void Quiver::index() {
  out.assign(num_vertices, {});
  std::set<std::string> labels;
  for (int a = 0; a < num_arrows(); ++a) {
    const Arrow &x = arrows[a];
    if (x.source < 0 || x.source >= num_vertices || x.target < 0 ||
        x.target >= num_vertices)
      throw ValidationError("arrow '" + x.label + "' has an invalid endpoint");
    if (x.label.empty() || !labels.insert(x.label).second)
      throw ValidationError("arrow label '" + x.label +
                            "' is empty or repeated");
    out[x.source].push_back(a);
  }
}

std::optional<int> Quiver::find(const std::string &label) const {
  for (int a = 0; a < num_arrows(); ++a)
    if (arrows[a].label == label)
      return a;
  return std::nullopt;
}

int path_end(const Quiver &Q, const Path &p) {
  return p.arrows.empty() ? p.start : Q.arrows[p.arrows.back()].target;
}

bool is_composable(const Quiver &Q, const Path &p) {
  int v = p.start;
  for (int a : p.arrows) {
    if (Q.arrows[a].source != v)
      return false;
    v = Q.arrows[a].target;
  }
  return true;
}

PathTermList ArrowSpace::act(Elem g, const std::vector<int> &arrows) const {
  PathTermList cur{{{}, Cyc(1)}};
  for (int a : arrows) {
    const ArrowComb &img = image[g][a];
    PathTermList next;
    next.reserve(cur.size() * img.size());
    for (const auto &[p, c] : cur)
      for (const auto &[b, d] : img) {
        auto q = p;
        q.push_back(b);
        next.emplace_back(std::move(q), c * d);
      }
    cur = std::move(next);
  }
  return cur;
}

std::pair<Cyc, int> ArrowSpace::act_monomial(Elem g, int arrow) const {
  const ArrowComb &img = image[g][arrow];
  if (img.size() != 1)
    throw PreconditionError("arrow action is not monomial");
  return {img[0].second, img[0].first};
}

CycMatrix action_matrix(const ArrowSpace &M, Elem g) {
  const int n = M.quiver.num_arrows();
  CycMatrix m(n, n);
  for (int a = 0; a < n; ++a)
    for (const auto &[b, c] : M.image[g][a])
      m(b, a) += c;
  return m;
}

namespace {

std::map<int, Cyc> to_map(const ArrowComb &c) {
  std::map<int, Cyc> m;
  for (const auto &[a, x] : c) {
    m[a] += x;
    if (m[a].is_zero())
      m.erase(a);
  }
  return m;
}

} // namespace

void validate_arrow_action(const Group &G, ArrowSpace &M) {
  const Quiver &Q = M.quiver;
  const int n = G.order();
  if (static_cast<int>(M.image.size()) != n)
    throw ValidationError("arrow_action: expected data for every element");
  M.monomial = true;
  for (Elem g = 0; g < n; ++g) {
    if (static_cast<int>(M.image[g].size()) != Q.num_arrows())
      throw ValidationError("arrow_action: wrong arrow count for '" +
                            G.name(g) + "'");
    for (int a = 0; a < Q.num_arrows(); ++a) {
      M.image[g][a] = [&] {
        ArrowComb c;
        for (const auto &[b, x] : to_map(M.image[g][a]))
          c.emplace_back(b, x);
        return c;
      }();
      const ArrowComb &img = M.image[g][a];
      if (img.empty())
        throw ValidationError("arrow_action: ^" + G.name(g) + " " +
                              Q.arrows[a].label + " is zero");
      if (img.size() != 1)
        M.monomial = false;
      const int s = M.vact[g][Q.arrows[a].source];
      const int t = M.vact[g][Q.arrows[a].target];
      for (const auto &[b, x] : img)
        if (Q.arrows[b].source != s || Q.arrows[b].target != t)
          throw ValidationError("arrow_action: ^" + G.name(g) + " " +
                                Q.arrows[a].label + " involves " +
                                Q.arrows[b].label +
                                ", which does not join g.source to g.target");
    }
  }
  for (int a = 0; a < Q.num_arrows(); ++a)
    if (M.image[0][a].size() != 1 || M.image[0][a][0].first != a ||
        !M.image[0][a][0].second.is_one())
      throw ValidationError("arrow_action: identity moves arrow " +
                            Q.arrows[a].label);
  for (Elem g = 0; g < n; ++g)
    for (Elem h = 0; h < n; ++h)
      for (int a = 0; a < Q.num_arrows(); ++a) {
        std::map<int, Cyc> two;
        for (const auto &[b, x] : M.image[h][a])
          for (const auto &[c, y] : M.image[g][b]) {
            two[c] += x * y;
            if (two[c].is_zero())
              two.erase(c);
          }
        if (two != to_map(M.image[G.mul(g, h)][a]))
          throw ValidationError("arrow_action: ^(gh) != ^g ^h for g = '" +
                                G.name(g) + "', h = '" + G.name(h) +
                                "' on arrow " + Q.arrows[a].label);
      }
}

ArrowSpace dualize(const Group &G, const ArrowSpace &M) {
  ArrowSpace D;
  D.quiver.num_vertices = M.quiver.num_vertices;
  for (const auto &a : M.quiver.arrows)
    D.quiver.arrows.push_back({a.label + "*", a.target, a.source});
  D.quiver.index();
  D.vact = M.vact;
  D.monomial = true;
  const int n = M.quiver.num_arrows();
  D.image.assign(G.order(), std::vector<ArrowComb>(n));
  for (Elem g = 0; g < G.order(); ++g) {
    CycMatrix a = action_matrix(M, g);
    CycMatrix d = inverse(a).transpose();
    if (!(d == action_matrix(M, G.inv(g)).transpose()))
      throw ConsistencyError("dualize: inverse transpose differs from the "
                             "transposed action of g^{-1}");
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y)
        if (!d(y, x).is_zero())
          D.image[g][x].emplace_back(y, d(y, x));
      if (D.image[g][x].size() != 1)
        D.monomial = false;
    }
  }
  return D;
}

void validate_potential(const Quiver &Q, const Potential &W) {
  for (const auto &[cycle, c] : W.terms) {
    if (cycle.empty())
      throw ValidationError("potential: empty cycle");
    Path p{Q.arrows[cycle[0]].source, cycle};
    if (!is_composable(Q, p) || path_end(Q, p) != p.start)
      throw ValidationError("potential: term starting with '" +
                            Q.arrows[cycle[0]].label + "' is not a cycle");
  }
}

std::map<std::vector<int>, Cyc> cyclic_normal_form(const PathTermList &terms) {
  std::map<std::vector<int>, Cyc> out;
  for (const auto &[cycle, c] : terms) {
    std::vector<int> best = cycle;
    std::vector<int> rot = cycle;
    for (std::size_t k = 1; k < cycle.size(); ++k) {
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      if (rot < best)
        best = rot;
    }
    out[best] += c;
    if (out[best].is_zero())
      out.erase(best);
  }
  return out;
}

InvarianceReport check_invariance(const Group &G, const ArrowSpace &M,
                                  const Potential &W) {
  PathTermList base(W.terms.begin(), W.terms.end());
  const auto reference = cyclic_normal_form(base);
  for (Elem g = 0; g < G.order(); ++g) {
    PathTermList moved;
    for (const auto &[cycle, c] : W.terms)
      for (auto &[p, x] : M.act(g, cycle))
        moved.emplace_back(std::move(p), c * x);
    if (cyclic_normal_form(moved) != reference)
      return {false, g};
  }
  return {};
}

} // namespace skq
