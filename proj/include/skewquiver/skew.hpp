#pragma once

#include "skewquiver/quiver.hpp"
#include "skewquiver/rep.hpp"

#include <map>
#include <string>
#include <vector>

namespace skq {

/// Term p * g of the skew group algebra.
struct SkewKey {
  Path path;
  Elem g = 0;

  auto operator<=>(const SkewKey &) const = default;
  bool operator==(const SkewKey &) const = default;
};

/// Sparse element of T_S(M)*G; zero coefficients are never stored.
class SkewElement {
public:
  SkewElement() = default;

  void add(const SkewKey &k, const Cyc &c);
  void add(const SkewElement &o, const Cyc &scale = Cyc(1));
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<SkewKey, Cyc> &terms() const { return terms_; }
  /// Degrees present.
  std::vector<int> degrees() const;
  SkewElement homogeneous_part(int degree) const;

  friend bool operator==(const SkewElement &a, const SkewElement &b) {
    return a.terms_ == b.terms_;
  }
  friend SkewElement operator+(SkewElement a, const SkewElement &b) {
    a.add(b);
    return a;
  }
  friend SkewElement operator-(SkewElement a, const SkewElement &b) {
    a.add(b, Cyc(-1));
    return a;
  }
  friend SkewElement operator*(const Cyc &s, SkewElement a);

private:
  std::map<SkewKey, Cyc> terms_;
};

/// e_i * x for x in kG.
SkewElement skew_from_group_alg(int vertex, const GroupAlgElem &x);

/// (u*g)(u'*g') = (u . ^g u') * gg'
SkewElement skew_mul(const Group &G, const ArrowSpace &M, const SkewElement &a,
                     const SkewElement &b);

/// Lines "coeff . a1 a2 ... * g" (or "coeff . e_i * g" in degree 0).
std::string render(const Group &G, const Quiver &Q, const SkewElement &x);

/// Term rewritten as in the decomposition p in (iM(y1.i1) x ... ) * y1...yn G_{i_n}.
struct CanonicalTerm {
  std::vector<int> orbit_seq; // orbit indices i_0..i_n
  std::vector<Elem> y;        // y_1..y_n
  Elem h = 0;                 // tail in G_{i_n}
  Path path;
  Cyc coeff;
};

/// Product y_1...y_t for the path vertices, or nullopt when the path does not
/// start at an orbit representative. Fills orbit_seq and y.
bool path_coset_data(const Group &G, const OrbitData &O, const Quiver &Q,
                     const Path &p, std::vector<int> &orbit_seq,
                     std::vector<Elem> &y, Elem &Y);

/// Throws PreconditionError for a term whose endpoints are not orbit
/// representatives matching the group element.
std::vector<CanonicalTerm> canonicalize(const Group &G, const OrbitData &O,
                                        const Quiver &Q, const SkewElement &x);
SkewElement expand(const Group &G, const std::vector<CanonicalTerm> &terms);

} // namespace skq
