#pragma once

#include "skewquiver/setting.hpp"

#include <optional>
#include <vector>

namespace skq {

/// Morphism U -> M(i_0..i_n; V) of kG_{i_0}-modules in coordinates. Column k
/// is the image of the k-th basis vector of U in the basis of the induced
/// module. On the dual side the same shape describes V -> M*(i_n..i_0; U);
/// `source` is always the vertex the morphism starts from.
struct Intertwiner {
  Side side = Side::M;
  std::vector<int> orbit_seq;
  int source = 0; // reduced-quiver vertex over orbit_seq.front()
  int target = 0; // reduced-quiver vertex over orbit_seq.back()
  CycMatrix coords;

  int degree() const { return static_cast<int>(orbit_seq.size()) - 1; }
  bool is_zero() const { return coords.is_zero(); }
};

const InducedModule &module_of(const Setting &S, const Intertwiner &f);

Intertwiner zero_intertwiner(const Setting &S, Side side,
                             std::vector<int> orbit_seq, int source,
                             int target);
/// Identity of the module of a vertex, the unit e_{i,U} of the algebra.
Intertwiner unit_intertwiner(const Setting &S, Side side, int vertex);

/// f(g u) = g f(u) for every g in the stabilizer.
bool is_equivariant(const Setting &S, const Intertwiner &f);

/// Basis of Hom(U, M(i_0..i_n; V)) from hom_basis.
std::vector<Intertwiner> hom_intertwiners(const Setting &S, Side side,
                                          const std::vector<int> &orbit_seq,
                                          int source, int target);

/// a + c*b for intertwiners of the same shape.
Intertwiner add_scaled(Intertwiner a, const Intertwiner &b, const Cyc &c);

/// f2 (*) f1, defined when f1.target == f2.source.
Intertwiner circledast(const Setting &S, const Intertwiner &f2,
                       const Intertwiner &f1);

/// The element of G_{i_0} that acts on the U-component in the pairing,
/// as a function of h_0.
Elem pairing_twist(const Group &G, Elem h0);

/// (f | phi) for f on the M side and phi on the dual side with reversed
/// orbit sequence and swapped endpoints. Throws ConsistencyError when the
/// computed element of U is not a multiple of the input vector.
Cyc pairing(const Setting &S, const Intertwiner &f, const Intertwiner &phi);

/// One summand of the combinatorial pairing.
struct FastPairingTerm {
  Path gamma;      // path of Q in the decomposition of f
  std::vector<Elem> y;
  Cyc alpha;       // coefficient of gamma (x) Y e_V in f(e_U)
  Cyc beta;        // coefficient of the matching dual path in phi(e_V)
  Cyc chi;         // ^{Y^{-1}} gamma = chi . Y^{-1}(gamma)
  Elem h0 = 0;
  Cyc chi_u;       // character of U at the twisted h0
};

/// Combinatorial pairing for abelian stabilizers and monomial actions.
/// Outside that setting it returns the general pairing and sets *fell_back.
/// `terms` receives one entry per path of the induced module, including
/// paths with alpha = 0.
Cyc pairing_fast(const Setting &S, const Intertwiner &f,
                 const Intertwiner &phi, bool *fell_back = nullptr,
                 std::vector<FastPairingTerm> *terms = nullptr);

/// f(b_k) as an element of the skew group algebra on the intertwiner's side.
SkewElement value_on_basis(const Setting &S, const Intertwiner &f, int k);
/// f(e_U), which identifies the intertwiner with an element of e~ A e~.
SkewElement value_at_idempotent(const Setting &S, const Intertwiner &f);

/// Coordinates of a skew element in M(i_0..i_n; V), or nullopt when it does
/// not lie in that module.
std::optional<CycMatrix> coords_of_value(const Setting &S, Side side,
                                         const std::vector<int> &orbit_seq,
                                         int target, const SkewElement &x);

} // namespace skq
