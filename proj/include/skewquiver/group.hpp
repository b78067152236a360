#pragma once

#include <string>
#include <utility>
#include <vector>

namespace skq {

using Elem = int;

/// Finite group stored as a full multiplication table. Element 0 is the
/// identity. Tables given with the identity elsewhere are relabeled, and the
/// original labels remain available through from_input()/to_input().
class Group {
public:
  struct Generator {
    std::string name;
    std::vector<int> perm;
  };

  /// Throws ValidationError naming the first violated axiom.
  static Group from_table(const std::vector<std::vector<int>> &mul,
                          std::vector<std::string> names = {});
  /// Closes the permutations under composition, (g*h)(v) = g(h(v)).
  /// Elements are named by the generator words found breadth-first.
  static Group from_generators(const std::vector<Generator> &gens);

  int order() const { return n_; }
  Elem mul(Elem a, Elem b) const { return mul_[a * n_ + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  Elem identity() const { return 0; }
  Elem mul(std::initializer_list<Elem> xs) const;

  const std::string &name(Elem g) const { return names_[g]; }
  /// Accepts an input index, an element name, or a word "a*b*c" of names.
  Elem parse(const std::string &ref) const;
  Elem from_input(int idx) const;
  int to_input(Elem g) const { return new_to_input_[g]; }

  int element_order(Elem g) const;
  /// lcm of the element orders.
  int exponent() const;
  bool commute(Elem a, Elem b) const { return mul(a, b) == mul(b, a); }

  /// Generating set: the named generators for permutation input, a greedy
  /// choice in index order for table input.
  const std::vector<Elem> &generators() const { return gens_; }
  const std::vector<std::string> &generator_names() const { return gen_names_; }
  /// Every non-identity g equals parent(g).first * generators()[parent(g).second],
  /// with parents earlier in breadth-first order. Used to extend actions
  /// given on generators.
  const std::vector<std::pair<Elem, int>> &parents() const { return parent_; }
  /// Elements in breadth-first order from the identity.
  const std::vector<Elem> &bfs_order() const { return bfs_; }

private:
  void build_words();

  int n_ = 0;
  std::vector<Elem> mul_;
  std::vector<Elem> inv_;
  std::vector<std::string> names_;
  std::vector<int> new_to_input_;
  std::vector<Elem> input_to_new_;
  std::vector<Elem> gens_;
  std::vector<std::string> gen_names_;
  std::vector<std::pair<Elem, int>> parent_;
  std::vector<Elem> bfs_;
};

/// Action on a finite vertex set: act[g][v] = g.v
using VertexAction = std::vector<std::vector<int>>;

/// Checks that each row is a permutation, the identity acts trivially and
/// (gh).v = g.(h.v). Throws ValidationError naming the violating pair.
void validate_vertex_action(const Group &g, const VertexAction &act);

/// Stabilizer G_i of a vertex with the canonical coset representatives.
struct Stabilizer {
  int vertex = 0;
  std::vector<Elem> elements;     // increasing
  std::vector<char> member;       // indexed by G
  std::vector<int> position;      // g -> index in elements, or -1
  std::vector<Elem> coset_reps;   // least element of each left coset yG_i
  std::vector<int> coset_of;      // g -> index into coset_reps of gG_i
  std::vector<int> coset_of_vertex; // w -> index of the coset sending vertex to w, or -1

  int order() const { return static_cast<int>(elements.size()); }
  bool contains(Elem g) const { return member[g] != 0; }
  /// (y, h) with g = y*h, y a listed representative and h in G_i.
  std::pair<Elem, Elem> factorize(const Group &G, Elem g) const;
  bool is_abelian(const Group &G) const;
};

Stabilizer make_stabilizer(const Group &G, const VertexAction &act, int vertex);

struct OrbitData {
  std::vector<int> reps;      // least vertex of each orbit, increasing
  std::vector<int> orbit_of;  // vertex -> index into reps
  std::vector<Elem> witness;  // vertex -> coset representative y, y.rep = vertex
  std::vector<Stabilizer> stabilizers; // per orbit index

  int num_orbits() const { return static_cast<int>(reps.size()); }
};

OrbitData compute_orbits(const Group &G, const VertexAction &act);

/// Replaces the default representatives of [G/G_i] for one orbit. `reps`
/// must contain the identity and one element of every coset. Throws
/// ValidationError.
void set_coset_reps(const Group &G, const VertexAction &act, OrbitData &O,
                    int orbit, const std::vector<Elem> &reps);

struct ChainFactor {
  std::vector<Elem> x; // x_{n-1}, ..., x_0
  Elem h0 = 0;
};

/// Given orbit indices i_0..i_n and representatives y_1..y_n with
/// y_t in [G/G_{i_t}], returns the unique x_{n-1}..x_0 and h_0 in G_{i_0} with
/// (y_1...y_n)^{-1} = x_{n-1}...x_0 h_0, obtained from y_n^{-1} = x_{n-1}h_{n-1}
/// and h_t y_t^{-1} = x_{t-1}h_{t-1}.
ChainFactor chain_factorize(const Group &G, const OrbitData &orbits,
                            const std::vector<int> &orbit_seq,
                            const std::vector<Elem> &y);

} // namespace skq
