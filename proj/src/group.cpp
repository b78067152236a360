#include "skewquiver/group.hpp"

#include "skewquiver/cyclotomic.hpp"
#include "skewquiver/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace skq {

namespace {

constexpr int kExhaustiveAssociativity = 64;
constexpr int kMaxGroupOrder = 20000;

std::string elem_str(int i) { return std::to_string(i); }

bool all_digits(const std::string &s) {
  return !s.empty() && std::all_of(s.begin(), s.end(),
                                   [](char c) { return c >= '0' && c <= '9'; });
}

std::string trim(const std::string &s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos)
    return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

} // namespace

Group Group::from_table(const std::vector<std::vector<int>> &mul,
                        std::vector<std::string> names) {
  const int n = static_cast<int>(mul.size());
  if (n == 0)
    throw ValidationError("group: empty multiplication table");
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(mul[a].size()) != n)
      throw ValidationError("group: row " + elem_str(a) + " has length " +
                            elem_str(static_cast<int>(mul[a].size())) +
                            ", expected " + elem_str(n));
    for (int b = 0; b < n; ++b)
      if (mul[a][b] < 0 || mul[a][b] >= n)
        throw ValidationError("group: entry (" + elem_str(a) + ", " +
                              elem_str(b) + ") out of range");
  }
  if (!names.empty() && static_cast<int>(names.size()) != n)
    throw ValidationError("group: names list has wrong length");

  // Identity.
  int e = -1;
  for (int c = 0; c < n && e < 0; ++c) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = mul[c][x] == x && mul[x][c] == x;
    if (ok)
      e = c;
  }
  if (e < 0)
    throw ValidationError("group: identity axiom fails, no two-sided identity");
  // Latin square gives unique solvability; together with the identity and
  // associativity this yields inverses.
  for (int a = 0; a < n; ++a) {
    std::vector<char> seen_row(n, 0), seen_col(n, 0);
    for (int b = 0; b < n; ++b) {
      if (seen_row[mul[a][b]]++)
        throw ValidationError("group: inverse axiom fails, row " +
                              elem_str(a) + " repeats an entry");
      if (seen_col[mul[b][a]]++)
        throw ValidationError("group: inverse axiom fails, column " +
                              elem_str(a) + " repeats an entry");
    }
  }

  Group G;
  G.n_ = n;
  G.new_to_input_.resize(n);
  G.input_to_new_.resize(n);
  std::iota(G.new_to_input_.begin(), G.new_to_input_.end(), 0);
  if (e != 0)
    std::swap(G.new_to_input_[0], G.new_to_input_[e]);
  for (int k = 0; k < n; ++k)
    G.input_to_new_[G.new_to_input_[k]] = k;
  G.mul_.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      G.mul_[a * n + b] =
          G.input_to_new_[mul[G.new_to_input_[a]][G.new_to_input_[b]]];
  G.inv_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (G.mul(a, b) == 0)
        G.inv_[a] = b;
  G.names_.resize(n);
  for (int k = 0; k < n; ++k)
    G.names_[k] = names.empty() ? elem_str(G.new_to_input_[k])
                                : names[G.new_to_input_[k]];

  // Greedy generating set in index order.
  std::vector<char> in_sub(n, 0);
  in_sub[0] = 1;
  for (int g = 1; g < n; ++g) {
    if (in_sub[g])
      continue;
    G.gens_.push_back(g);
    G.gen_names_.push_back(G.names_[g]);
    std::deque<int> q;
    std::vector<int> sub;
    for (int x = 0; x < n; ++x)
      if (in_sub[x])
        sub.push_back(x);
    for (int x : sub)
      q.push_back(x);
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      for (int s : G.gens_) {
        int y = G.mul(x, s);
        if (!in_sub[y]) {
          in_sub[y] = 1;
          q.push_back(y);
        }
      }
    }
  }

  // Associativity.
  auto check = [&](int a, int b, int c) {
    if (G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c)))
      throw ValidationError("group: associativity fails at (" +
                            elem_str(G.new_to_input_[a]) + ", " +
                            elem_str(G.new_to_input_[b]) + ", " +
                            elem_str(G.new_to_input_[c]) + ")");
  };
  if (n <= kExhaustiveAssociativity) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          check(a, b, c);
  } else {
    // Light's test over the generating set.
    for (int s : G.gens_)
      for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c)
          check(a, s, c);
  }
  G.build_words();
  return G;
}

Group Group::from_generators(const std::vector<Generator> &gens) {
  if (gens.empty())
    throw ValidationError("group: generator list is empty");
  const std::size_t deg = gens[0].perm.size();
  for (const auto &g : gens) {
    if (g.perm.size() != deg)
      throw ValidationError("group: generator '" + g.name +
                            "' has a different degree");
    std::vector<char> seen(deg, 0);
    for (int v : g.perm) {
      if (v < 0 || static_cast<std::size_t>(v) >= deg || seen[v]++)
        throw ValidationError("group: generator '" + g.name +
                              "' is not a permutation");
    }
    if (g.name.empty() || g.name.find('*') != std::string::npos ||
        all_digits(g.name) || g.name == "e")
      throw ValidationError("group: invalid generator name '" + g.name + "'");
  }
  std::vector<int> id(deg);
  std::iota(id.begin(), id.end(), 0);
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> perms{id};
  std::vector<std::string> names{"e"};
  index[id] = 0;
  for (std::size_t k = 0; k < perms.size(); ++k) {
    for (const auto &s : gens) {
      std::vector<int> p(deg);
      for (std::size_t v = 0; v < deg; ++v)
        p[v] = perms[k][s.perm[v]];
      if (index.count(p))
        continue;
      if (static_cast<int>(perms.size()) >= kMaxGroupOrder)
        throw ValidationError("group: generated group exceeds order " +
                              elem_str(kMaxGroupOrder));
      index[p] = static_cast<int>(perms.size());
      names.push_back(k == 0 ? s.name : names[k] + "*" + s.name);
      perms.push_back(std::move(p));
    }
  }
  const int n = static_cast<int>(perms.size());
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  std::vector<int> p(deg);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (std::size_t v = 0; v < deg; ++v)
        p[v] = perms[a][perms[b][v]];
      mul[a][b] = index.at(p);
    }
  Group G = from_table(mul, names);
  G.gens_.clear();
  G.gen_names_.clear();
  for (const auto &s : gens) {
    G.gens_.push_back(index.at(s.perm));
    G.gen_names_.push_back(s.name);
  }
  G.build_words();
  return G;
}

void Group::build_words() {
  parent_.assign(n_, {-1, -1});
  bfs_.assign(1, 0);
  std::vector<char> seen(n_, 0);
  seen[0] = 1;
  for (std::size_t k = 0; k < bfs_.size(); ++k)
    for (std::size_t s = 0; s < gens_.size(); ++s) {
      Elem h = mul(bfs_[k], gens_[s]);
      if (seen[h])
        continue;
      seen[h] = 1;
      parent_[h] = {bfs_[k], static_cast<int>(s)};
      bfs_.push_back(h);
    }
}

Elem Group::mul(std::initializer_list<Elem> xs) const {
  Elem r = 0;
  for (Elem x : xs)
    r = mul(r, x);
  return r;
}

Elem Group::from_input(int idx) const {
  if (idx < 0 || idx >= n_)
    throw ValidationError("group: element index " + elem_str(idx) +
                          " out of range");
  return input_to_new_[idx];
}

Elem Group::parse(const std::string &ref_in) const {
  const std::string ref = trim(ref_in);
  for (int g = 0; g < n_; ++g)
    if (names_[g] == ref)
      return g;
  if (all_digits(ref))
    return from_input(std::stoi(ref));
  if (ref == "e" || ref == "id" || ref == "1")
    return 0;
  if (ref.find('*') != std::string::npos) {
    Elem r = 0;
    std::size_t pos = 0;
    while (pos <= ref.size()) {
      std::size_t next = ref.find('*', pos);
      if (next == std::string::npos)
        next = ref.size();
      std::string tok = trim(ref.substr(pos, next - pos));
      if (tok.empty())
        throw ValidationError("group: malformed element word '" + ref + "'");
      r = mul(r, parse(tok));
      pos = next + 1;
    }
    return r;
  }
  throw ValidationError("group: unknown element '" + ref + "'");
}

int Group::element_order(Elem g) const {
  int k = 1;
  for (Elem x = g; x != 0; x = mul(x, g))
    ++k;
  return k;
}

int Group::exponent() const {
  int e = 1;
  for (int g = 0; g < n_; ++g)
    e = lcm_int(e, element_order(g));
  return e;
}

void validate_vertex_action(const Group &G, const VertexAction &act) {
  const int n = G.order();
  if (static_cast<int>(act.size()) != n)
    throw ValidationError("vertex_action: expected one row per group element");
  const std::size_t nv = act[0].size();
  for (int g = 0; g < n; ++g) {
    if (act[g].size() != nv)
      throw ValidationError("vertex_action: row for '" + G.name(g) +
                            "' has the wrong length");
    std::vector<char> seen(nv, 0);
    for (int v : act[g])
      if (v < 0 || static_cast<std::size_t>(v) >= nv || seen[v]++)
        throw ValidationError("vertex_action: '" + G.name(g) +
                              "' does not act by a permutation");
  }
  for (std::size_t v = 0; v < nv; ++v)
    if (act[0][v] != static_cast<int>(v))
      throw ValidationError("vertex_action: identity moves vertex " +
                            elem_str(static_cast<int>(v)));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (std::size_t v = 0; v < nv; ++v)
        if (act[G.mul(g, h)][v] != act[g][act[h][v]])
          throw ValidationError("vertex_action: (gh).v != g.(h.v) for g = '" +
                                G.name(g) + "', h = '" + G.name(h) +
                                "', v = " + elem_str(static_cast<int>(v)));
}

std::pair<Elem, Elem> Stabilizer::factorize(const Group &G, Elem g) const {
  Elem y = coset_reps[coset_of[g]];
  return {y, G.mul(G.inv(y), g)};
}

bool Stabilizer::is_abelian(const Group &G) const {
  for (Elem a : elements)
    for (Elem b : elements)
      if (!G.commute(a, b))
        return false;
  return true;
}

Stabilizer make_stabilizer(const Group &G, const VertexAction &act,
                           int vertex) {
  const int n = G.order();
  const int nv = static_cast<int>(act[0].size());
  Stabilizer S;
  S.vertex = vertex;
  S.member.assign(n, 0);
  S.position.assign(n, -1);
  S.coset_of.assign(n, -1);
  S.coset_of_vertex.assign(nv, -1);
  for (Elem g = 0; g < n; ++g) {
    int w = act[g][vertex];
    if (w == vertex) {
      S.member[g] = 1;
      S.position[g] = static_cast<int>(S.elements.size());
      S.elements.push_back(g);
    }
    if (S.coset_of_vertex[w] < 0) {
      S.coset_of_vertex[w] = static_cast<int>(S.coset_reps.size());
      S.coset_reps.push_back(g);
    }
    S.coset_of[g] = S.coset_of_vertex[w];
  }
  return S;
}

OrbitData compute_orbits(const Group &G, const VertexAction &act) {
  const int nv = static_cast<int>(act[0].size());
  OrbitData O;
  O.orbit_of.assign(nv, -1);
  O.witness.assign(nv, -1);
  for (int v = 0; v < nv; ++v) {
    if (O.orbit_of[v] >= 0)
      continue;
    const int idx = O.num_orbits();
    O.reps.push_back(v);
    O.stabilizers.push_back(make_stabilizer(G, act, v));
    const Stabilizer &S = O.stabilizers.back();
    for (Elem y : S.coset_reps) {
      int w = act[y][v];
      O.orbit_of[w] = idx;
      O.witness[w] = y;
    }
  }
  return O;
}

void set_coset_reps(const Group &G, const VertexAction &act, OrbitData &O,
                    int orbit, const std::vector<Elem> &reps) {
  Stabilizer &S = O.stabilizers[orbit];
  const std::string where =
      "coset representatives for vertex " + std::to_string(S.vertex);
  if (reps.size() != S.coset_reps.size())
    throw ValidationError(where + ": expected " +
                          std::to_string(S.coset_reps.size()) + " elements");
  std::vector<Elem> chosen(S.coset_reps.size(), -1);
  for (Elem y : reps) {
    const int idx = S.coset_of[y];
    if (chosen[idx] >= 0)
      throw ValidationError(where + ": '" + G.name(chosen[idx]) + "' and '" +
                            G.name(y) + "' lie in the same coset");
    chosen[idx] = y;
  }
  if (chosen[S.coset_of[0]] != 0)
    throw ValidationError(where + ": the identity must represent the "
                                  "stabilizer itself");
  S.coset_reps = chosen;
  for (Elem y : chosen)
    O.witness[act[y][S.vertex]] = y;
}

ChainFactor chain_factorize(const Group &G, const OrbitData &orbits,
                            const std::vector<int> &orbit_seq,
                            const std::vector<Elem> &y) {
  const std::size_t n = y.size();
  if (orbit_seq.size() != n + 1)
    throw std::invalid_argument("chain_factorize: sequence lengths differ");
  ChainFactor out;
  if (n == 0)
    return out;
  // h_n plays the role of the identity: y_n^{-1} = x_{n-1} h_{n-1}.
  Elem h = 0;
  for (std::size_t t = n; t >= 1; --t) {
    Elem g = G.mul(h, G.inv(y[t - 1]));
    auto [x, ht] = orbits.stabilizers[orbit_seq[t - 1]].factorize(G, g);
    out.x.push_back(x);
    h = ht;
  }
  out.h0 = h;
  return out;
}

} // namespace skq
