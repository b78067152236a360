#pragma once

#include "skewquiver/group.hpp"
#include "skewquiver/linalg.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace skq {

/// Sparse element of the group algebra kG; keys are elements of the ambient G.
using GroupAlgElem = std::map<Elem, Cyc>;

GroupAlgElem ga_mul(const Group &G, const GroupAlgElem &a,
                    const GroupAlgElem &b);
void ga_add(GroupAlgElem &acc, Elem g, const Cyc &c);

/// Linear representation of a stabilizer H. Matrices are indexed by the
/// position of the element in Stabilizer::elements.
struct ModuleRep {
  int dim = 0;
  std::vector<CycMatrix> action;
  std::vector<std::string> basis_labels;

  const CycMatrix &of(const Stabilizer &H, Elem h) const {
    return action[H.position[h]];
  }
};

struct Irrep {
  std::string label;
  int dim = 0;
  std::vector<CycMatrix> matrices; // by position in Stabilizer::elements
  std::vector<Cyc> character;

  const CycMatrix &of(const Stabilizer &H, Elem h) const {
    return matrices[H.position[h]];
  }
  ModuleRep as_module() const;
};

/// Fills the character from the matrices.
void compute_character(Irrep &rho);

/// All characters of an abelian H, ordered lexicographically in the exponent
/// vectors of a greedy cyclic decomposition (trivial character first).
/// Throws PreconditionError when H is not abelian.
std::vector<Irrep> abelian_irreps(const Group &G, const Stabilizer &H);

/// Cyclic factors used by abelian_irreps, in order of choice.
std::vector<Elem> abelian_cyclic_generators(const Group &G,
                                            const Stabilizer &H);

/// Extends matrices given on a generating subset of H to all of H.
/// Throws ValidationError when the data is not a homomorphism or does not
/// generate H.
Irrep irrep_from_generators(const Group &G, const Stabilizer &H,
                            std::string label, int dim,
                            const std::map<Elem, CycMatrix> &gens);

/// Homomorphism, identity, Schur, sum of squared dimensions, and pairwise
/// non-isomorphism checks. Throws ValidationError.
void validate_irreps(const Group &G, const Stabilizer &H,
                     const std::vector<Irrep> &irreps);

/// (d/|H|) sum_h [rho(h^{-1})]_{11} h, checked to be an idempotent with
/// dim kH.e = d. Throws ConsistencyError on failure.
GroupAlgElem primitive_idempotent(const Group &G, const Stabilizer &H,
                                  const Irrep &rho);

/// kH.e with its reduced echelon basis. Vectors of kH are coordinate rows
/// indexed by position in Stabilizer::elements.
struct CyclicModule {
  ModuleRep module;
  CycMatrix basis;                 // dim x |H|
  std::vector<std::size_t> pivots; // pivot column of each basis row
  std::vector<Cyc> idem_coords;    // coordinates of the idempotent itself

  /// Coordinates of a vector of kH lying in the module, else nullopt.
  std::optional<std::vector<Cyc>> coords(const std::vector<Cyc> &v) const;
  /// The group algebra element of basis vector k.
  GroupAlgElem basis_element(const Stabilizer &H, int k) const;
};

/// Throws PreconditionError when e is not an idempotent of kH.
CyclicModule module_of_cyclic_idempotent(const Group &G, const Stabilizer &H,
                                         const GroupAlgElem &e);

/// Basis of {F : W(h) F = F U(h) for all h}, each F of shape dim W x dim U.
std::vector<CycMatrix> hom_basis(const ModuleRep &U, const ModuleRep &W);

/// rank of left multiplication by a on kH.
std::size_t left_mult_rank(const Group &G, const Stabilizer &H,
                           const GroupAlgElem &a);

} // namespace skq
