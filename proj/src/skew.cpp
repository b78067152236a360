#include "skewquiver/skew.hpp"

#include "skewquiver/errors.hpp"

#include <set>
#include <sstream>

namespace skq {

void SkewElement::add(const SkewKey &k, const Cyc &c) {
  if (c.is_zero())
    return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero())
    terms_.erase(it);
}

void SkewElement::add(const SkewElement &o, const Cyc &scale) {
  for (const auto &[k, c] : o.terms_)
    add(k, scale * c);
}

SkewElement operator*(const Cyc &s, SkewElement a) {
  if (s.is_zero())
    return {};
  for (auto &[k, c] : a.terms_)
    c *= s;
  return a;
}

std::vector<int> SkewElement::degrees() const {
  std::set<int> d;
  for (const auto &[k, c] : terms_)
    d.insert(k.path.length());
  return {d.begin(), d.end()};
}

SkewElement SkewElement::homogeneous_part(int degree) const {
  SkewElement r;
  for (const auto &[k, c] : terms_)
    if (k.path.length() == degree)
      r.terms_.emplace(k, c);
  return r;
}

SkewElement skew_from_group_alg(int vertex, const GroupAlgElem &x) {
  SkewElement r;
  for (const auto &[g, c] : x)
    r.add(SkewKey{Path{vertex, {}}, g}, c);
  return r;
}

SkewElement skew_mul(const Group &G, const ArrowSpace &M, const SkewElement &a,
                     const SkewElement &b) {
  const Quiver &Q = M.quiver;
  SkewElement r;
  for (const auto &[ka, ca] : a.terms()) {
    const int end_a = path_end(Q, ka.path);
    for (const auto &[kb, cb] : b.terms()) {
      if (M.vact[ka.g][kb.path.start] != end_a)
        continue;
      const Elem g = G.mul(ka.g, kb.g);
      const Cyc c = ca * cb;
      for (const auto &[p, x] : M.act(ka.g, kb.path.arrows)) {
        Path q = ka.path;
        q.arrows.insert(q.arrows.end(), p.begin(), p.end());
        r.add(SkewKey{std::move(q), g}, c * x);
      }
    }
  }
  return r;
}

std::string render(const Group &G, const Quiver &Q, const SkewElement &x) {
  std::ostringstream os;
  for (const auto &[k, c] : x.terms()) {
    os << c.to_string() << " \xC2\xB7 ";
    if (k.path.arrows.empty()) {
      os << "e_" << k.path.start;
    } else {
      for (std::size_t t = 0; t < k.path.arrows.size(); ++t)
        os << (t ? " " : "") << Q.arrows[k.path.arrows[t]].label;
    }
    os << " * " << G.name(k.g) << "\n";
  }
  return os.str();
}

bool path_coset_data(const Group &G, const OrbitData &O, const Quiver &Q,
                     const Path &p, std::vector<int> &orbit_seq,
                     std::vector<Elem> &y, Elem &Y) {
  orbit_seq.clear();
  y.clear();
  Y = 0;
  const int i0 = O.orbit_of[p.start];
  if (O.reps[i0] != p.start)
    return false;
  orbit_seq.push_back(i0);
  // Vertex t of the path is (y_1...y_t).i_t.
  for (int a : p.arrows) {
    const int v = Q.arrows[a].target;
    const int it = O.orbit_of[v];
    const Stabilizer &S = O.stabilizers[it];
    // y_t is the representative of the coset of Y^{-1} w, w.i_t = v.
    const Elem z = G.mul(G.inv(Y), O.witness[v]);
    const Elem yt = S.coset_reps[S.coset_of[z]];
    orbit_seq.push_back(it);
    y.push_back(yt);
    Y = G.mul(Y, yt);
  }
  return true;
}

std::vector<CanonicalTerm> canonicalize(const Group &G, const OrbitData &O,
                                        const Quiver &Q, const SkewElement &x) {
  std::vector<CanonicalTerm> out;
  for (const auto &[k, c] : x.terms()) {
    CanonicalTerm t;
    Elem Y = 0;
    if (!path_coset_data(G, O, Q, k.path, t.orbit_seq, t.y, Y))
      throw PreconditionError("canonicalize: term does not start at an orbit "
                              "representative");
    const int in = t.orbit_seq.back();
    t.h = G.mul(G.inv(Y), k.g);
    if (!O.stabilizers[in].contains(t.h))
      throw PreconditionError("canonicalize: group element does not carry the "
                              "end vertex to an orbit representative");
    t.path = k.path;
    t.coeff = c;
    out.push_back(std::move(t));
  }
  return out;
}

SkewElement expand(const Group &G, const std::vector<CanonicalTerm> &terms) {
  SkewElement r;
  for (const auto &t : terms) {
    Elem Y = 0;
    for (Elem yt : t.y)
      Y = G.mul(Y, yt);
    r.add(SkewKey{t.path, G.mul(Y, t.h)}, t.coeff);
  }
  return r;
}

} // namespace skq
