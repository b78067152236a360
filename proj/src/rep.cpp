#include "skewquiver/rep.hpp"

#include "skewquiver/errors.hpp"

#include <deque>

namespace skq {

void ga_add(GroupAlgElem &acc, Elem g, const Cyc &c) {
  if (c.is_zero())
    return;
  auto it = acc.find(g);
  if (it == acc.end()) {
    acc.emplace(g, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero())
    acc.erase(it);
}

GroupAlgElem ga_mul(const Group &G, const GroupAlgElem &a,
                    const GroupAlgElem &b) {
  GroupAlgElem r;
  for (const auto &[g, x] : a)
    for (const auto &[h, y] : b)
      ga_add(r, G.mul(g, h), x * y);
  return r;
}

ModuleRep Irrep::as_module() const {
  ModuleRep m;
  m.dim = dim;
  m.action = matrices;
  for (int k = 0; k < dim; ++k)
    m.basis_labels.push_back(label + "[" + std::to_string(k) + "]");
  return m;
}

void compute_character(Irrep &rho) {
  rho.character.clear();
  for (const auto &m : rho.matrices) {
    Cyc tr;
    for (std::size_t k = 0; k < m.rows(); ++k)
      tr += m(k, k);
    rho.character.push_back(tr);
  }
}

namespace {

// Order of g modulo the subgroup with membership table `in_k`.
int quotient_order(const Group &G, Elem g, const std::vector<char> &in_k) {
  int k = 1;
  for (Elem x = g; !in_k[x]; x = G.mul(x, g))
    ++k;
  return k;
}

Elem power(const Group &G, Elem g, int k) {
  Elem r = 0;
  for (int i = 0; i < k; ++i)
    r = G.mul(r, g);
  return r;
}

} // namespace

std::vector<Elem> abelian_cyclic_generators(const Group &G,
                                            const Stabilizer &H) {
  if (!H.is_abelian(G))
    throw PreconditionError("stabilizer of vertex " + std::to_string(H.vertex) +
                            " is not abelian; irreps must be supplied");
  std::vector<char> in_k(G.order(), 0);
  in_k[0] = 1;
  int k_size = 1;
  std::vector<Elem> gens;
  while (k_size < H.order()) {
    int best = 1;
    for (Elem g : H.elements)
      best = std::max(best, quotient_order(G, g, in_k));
    Elem chosen = -1;
    for (Elem g : H.elements)
      if (quotient_order(G, g, in_k) == best && G.element_order(g) == best) {
        chosen = g;
        break;
      }
    if (chosen < 0)
      throw ConsistencyError("abelian_irreps: no lift of a maximal coset");
    gens.push_back(chosen);
    // K <- K x <chosen>
    std::vector<Elem> members;
    for (Elem g : H.elements)
      if (in_k[g])
        members.push_back(g);
    for (Elem m : members)
      for (int e = 1; e < best; ++e)
        in_k[G.mul(m, power(G, chosen, e))] = 1;
    k_size *= best;
  }
  return gens;
}

std::vector<Irrep> abelian_irreps(const Group &G, const Stabilizer &H) {
  std::vector<Elem> gens = abelian_cyclic_generators(G, H);
  std::vector<int> orders;
  for (Elem g : gens)
    orders.push_back(G.element_order(g));
  int total = 1;
  for (int o : orders)
    total *= o;
  auto decode = [&](int idx) {
    std::vector<int> v(orders.size());
    for (std::size_t j = orders.size(); j-- > 0;) {
      v[j] = idx % orders[j];
      idx /= orders[j];
    }
    return v;
  };
  // Exponent vector of every element.
  std::vector<std::vector<int>> expo(H.order());
  for (int idx = 0; idx < total; ++idx) {
    std::vector<int> e = decode(idx);
    Elem h = 0;
    for (std::size_t j = 0; j < gens.size(); ++j)
      h = G.mul(h, power(G, gens[j], e[j]));
    expo[H.position[h]] = e;
  }
  std::vector<Irrep> out;
  for (int idx = 0; idx < total; ++idx) {
    std::vector<int> k = decode(idx);
    Irrep rho;
    rho.label = "chi" + std::to_string(idx);
    rho.dim = 1;
    for (int p = 0; p < H.order(); ++p) {
      Cyc v(1);
      for (std::size_t j = 0; j < gens.size(); ++j)
        v *= Cyc::zeta(orders[j], static_cast<long>(k[j]) * expo[p][j]);
      CycMatrix m(1, 1);
      m(0, 0) = v;
      rho.matrices.push_back(m);
    }
    compute_character(rho);
    out.push_back(std::move(rho));
  }
  return out;
}

Irrep irrep_from_generators(const Group &G, const Stabilizer &H,
                            std::string label, int dim,
                            const std::map<Elem, CycMatrix> &gens) {
  for (const auto &[g, m] : gens) {
    if (!H.contains(g))
      throw ValidationError("irrep '" + label + "': element '" + G.name(g) +
                            "' is not in the stabilizer of vertex " +
                            std::to_string(H.vertex));
    if (m.rows() != static_cast<std::size_t>(dim) ||
        m.cols() != static_cast<std::size_t>(dim))
      throw ValidationError("irrep '" + label + "': matrix for '" +
                            G.name(g) + "' has the wrong shape");
  }
  std::vector<std::optional<CycMatrix>> mats(H.order());
  mats[H.position[0]] = CycMatrix::identity(dim);
  std::deque<Elem> queue{0};
  while (!queue.empty()) {
    Elem x = queue.front();
    queue.pop_front();
    for (const auto &[s, ms] : gens) {
      Elem y = G.mul(x, s);
      CycMatrix my = *mats[H.position[x]] * ms;
      auto &slot = mats[H.position[y]];
      if (!slot) {
        slot = std::move(my);
        queue.push_back(y);
      } else if (!(*slot == my)) {
        throw ValidationError("irrep '" + label +
                              "': not a homomorphism, conflicting values at '" +
                              G.name(y) + "'");
      }
    }
  }
  Irrep rho;
  rho.label = std::move(label);
  rho.dim = dim;
  for (Elem h : H.elements) {
    if (!mats[H.position[h]])
      throw ValidationError("irrep '" + rho.label +
                            "': given elements do not generate the stabilizer");
    rho.matrices.push_back(*mats[H.position[h]]);
  }
  compute_character(rho);
  return rho;
}

void validate_irreps(const Group &G, const Stabilizer &H,
                     const std::vector<Irrep> &irreps) {
  int sum = 0;
  for (const auto &rho : irreps) {
    if (static_cast<int>(rho.matrices.size()) != H.order())
      throw ValidationError("irrep '" + rho.label +
                            "': expected one matrix per stabilizer element");
    if (!(rho.matrices[H.position[0]] == CycMatrix::identity(rho.dim)))
      throw ValidationError("irrep '" + rho.label +
                            "': identity does not act as the identity matrix");
    for (Elem a : H.elements)
      for (Elem b : H.elements)
        if (!(rho.of(H, a) * rho.of(H, b) == rho.of(H, G.mul(a, b))))
          throw ValidationError("irrep '" + rho.label +
                                "': not a homomorphism at ('" + G.name(a) +
                                "', '" + G.name(b) + "')");
    ModuleRep m = rho.as_module();
    if (hom_basis(m, m).size() != 1)
      throw ValidationError("irrep '" + rho.label + "': not irreducible");
    sum += rho.dim * rho.dim;
  }
  for (std::size_t a = 0; a < irreps.size(); ++a)
    for (std::size_t b = a + 1; b < irreps.size(); ++b)
      if (irreps[a].dim == irreps[b].dim &&
          !hom_basis(irreps[a].as_module(), irreps[b].as_module()).empty())
        throw ValidationError("irreps '" + irreps[a].label + "' and '" +
                              irreps[b].label + "' are isomorphic");
  if (sum != H.order())
    throw ValidationError("irreps of the stabilizer of vertex " +
                          std::to_string(H.vertex) +
                          ": sum of squared dimensions is " +
                          std::to_string(sum) + ", expected " +
                          std::to_string(H.order()));
}

std::size_t left_mult_rank(const Group &G, const Stabilizer &H,
                           const GroupAlgElem &a) {
  CycMatrix m(H.order(), H.order());
  for (int p = 0; p < H.order(); ++p)
    for (const auto &[g, c] : a)
      m(H.position[G.mul(g, H.elements[p])], p) += c;
  return rank(m);
}

GroupAlgElem primitive_idempotent(const Group &G, const Stabilizer &H,
                                  const Irrep &rho) {
  GroupAlgElem e;
  Rational q(rho.dim, H.order());
  q.canonicalize();
  const Cyc scale(q);
  for (Elem h : H.elements)
    ga_add(e, h, scale * rho.of(H, G.inv(h))(0, 0));
  if (ga_mul(G, e, e) != e)
    throw ConsistencyError("primitive idempotent of '" + rho.label +
                           "' is not idempotent");
  if (left_mult_rank(G, H, e) != static_cast<std::size_t>(rho.dim))
    throw ConsistencyError("primitive idempotent of '" + rho.label +
                           "' generates a module of the wrong dimension");
  return e;
}

std::optional<std::vector<Cyc>>
CyclicModule::coords(const std::vector<Cyc> &v) const {
  std::vector<Cyc> c(pivots.size());
  for (std::size_t k = 0; k < pivots.size(); ++k)
    c[k] = v[pivots[k]];
  for (std::size_t j = 0; j < v.size(); ++j) {
    Cyc s;
    for (std::size_t k = 0; k < pivots.size(); ++k)
      if (!c[k].is_zero() && !basis(k, j).is_zero())
        s += c[k] * basis(k, j);
    if (s != v[j])
      return std::nullopt;
  }
  return c;
}

GroupAlgElem CyclicModule::basis_element(const Stabilizer &H, int k) const {
  GroupAlgElem r;
  for (int p = 0; p < H.order(); ++p)
    ga_add(r, H.elements[p], basis(k, p));
  return r;
}

CyclicModule module_of_cyclic_idempotent(const Group &G, const Stabilizer &H,
                                         const GroupAlgElem &e) {
  for (const auto &[g, c] : e)
    if (!H.contains(g))
      throw PreconditionError("idempotent has support outside the stabilizer");
  if (ga_mul(G, e, e) != e)
    throw PreconditionError("element is not an idempotent");
  const int n = H.order();
  CycMatrix span(n, n);
  for (int p = 0; p < n; ++p)
    for (const auto &[g, c] : e)
      span(p, H.position[G.mul(H.elements[p], g)]) += c;
  Echelon ech = row_echelon(std::move(span));
  CyclicModule cm;
  const int d = static_cast<int>(ech.pivots.size());
  cm.basis = CycMatrix(d, n);
  for (int k = 0; k < d; ++k)
    for (int j = 0; j < n; ++j)
      cm.basis(k, j) = ech.rref(k, j);
  cm.pivots = ech.pivots;
  cm.module.dim = d;
  for (int p = 0; p < n; ++p) {
    CycMatrix act(d, d);
    for (int k = 0; k < d; ++k) {
      std::vector<Cyc> v(n);
      for (int j = 0; j < n; ++j)
        if (!cm.basis(k, j).is_zero())
          v[H.position[G.mul(H.elements[p], H.elements[j])]] += cm.basis(k, j);
      auto c = cm.coords(v);
      if (!c)
        throw ConsistencyError("cyclic module is not stable under the group");
      for (int r = 0; r < d; ++r)
        act(r, k) = (*c)[r];
    }
    cm.module.action.push_back(std::move(act));
  }
  std::vector<Cyc> ev(n);
  for (const auto &[g, c] : e)
    ev[H.position[g]] = c;
  auto ec = cm.coords(ev);
  if (!ec)
    throw ConsistencyError("idempotent not in its own cyclic module");
  cm.idem_coords = *ec;
  for (int k = 0; k < d; ++k)
    cm.module.basis_labels.push_back("b" + std::to_string(k));
  return cm;
}

std::vector<CycMatrix> hom_basis(const ModuleRep &U, const ModuleRep &W) {
  if (U.action.size() != W.action.size())
    throw std::invalid_argument("hom_basis: modules over different groups");
  const std::size_t du = U.dim, dw = W.dim;
  const std::size_t unknowns = du * dw;
  if (unknowns == 0)
    return {};
  CycMatrix sys(U.action.size() * unknowns, unknowns);
  std::size_t row = 0;
  for (std::size_t p = 0; p < U.action.size(); ++p) {
    const CycMatrix &a = W.action[p];
    const CycMatrix &b = U.action[p];
    for (std::size_t r = 0; r < dw; ++r)
      for (std::size_t k = 0; k < du; ++k, ++row) {
        for (std::size_t s = 0; s < dw; ++s)
          if (!a(r, s).is_zero())
            sys(row, s * du + k) += a(r, s);
        for (std::size_t s = 0; s < du; ++s)
          if (!b(s, k).is_zero())
            sys(row, r * du + s) -= b(s, k);
      }
  }
  std::vector<CycMatrix> out;
  for (const auto &v : kernel_basis(sys)) {
    CycMatrix f(dw, du);
    for (std::size_t r = 0; r < dw; ++r)
      for (std::size_t k = 0; k < du; ++k)
        f(r, k) = v(r * du + k, 0);
    out.push_back(std::move(f));
  }
  return out;
}

} // namespace skq
