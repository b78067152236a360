#pragma once

#include "skewquiver/group.hpp"
#include "skewquiver/linalg.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace skq {

struct Arrow {
  std::string label;
  int source = 0;
  int target = 0;
};

struct Quiver {
  int num_vertices = 0;
  std::vector<Arrow> arrows;
  std::vector<std::vector<int>> out; // arrow ids leaving each vertex, increasing

  /// Rebuilds `out`; throws ValidationError on bad endpoints or labels.
  void index();
  int num_arrows() const { return static_cast<int>(arrows.size()); }
  std::optional<int> find(const std::string &label) const;
};

/// Path given by its start vertex and arrow ids. Length-0 paths are the
/// vertex idempotents.
struct Path {
  int start = 0;
  std::vector<int> arrows;

  auto operator<=>(const Path &) const = default;
  bool operator==(const Path &) const = default;
  int length() const { return static_cast<int>(arrows.size()); }
};

int path_end(const Quiver &Q, const Path &p);
bool is_composable(const Quiver &Q, const Path &p);

using ArrowComb = std::vector<std::pair<int, Cyc>>;        // arrow id -> coeff
using PathTermList = std::vector<std::pair<std::vector<int>, Cyc>>;

/// The bimodule spanned by the arrows of a quiver with a G-action on
/// vertices and arrows: image[g][a] is ^g a.
struct ArrowSpace {
  Quiver quiver;
  VertexAction vact;
  std::vector<std::vector<ArrowComb>> image;
  bool monomial = true;

  /// ^g(a_1 ... a_n), expanded.
  PathTermList act(Elem g, const std::vector<int> &arrows) const;
  /// Monomial case: the single (scalar, arrow) image.
  std::pair<Cyc, int> act_monomial(Elem g, int arrow) const;
};

/// Block matrix of g on the arrow basis: column a holds ^g a.
CycMatrix action_matrix(const ArrowSpace &M, Elem g);

/// Checks ^e a = a, ^g(iMj) in (g.i)M(g.j), and ^{gh}a = ^g(^h a) for all
/// pairs. Sets the monomial flag. Throws ValidationError naming (g, arrow).
void validate_arrow_action(const Group &G, ArrowSpace &M);

/// The dual bimodule: arrow a* : target(a) -> source(a) keeps the id of a,
/// and g acts by the inverse transpose of its action on M.
ArrowSpace dualize(const Group &G, const ArrowSpace &M);

/// Linear combination of cycles of Q.
struct Potential {
  std::vector<std::pair<std::vector<int>, Cyc>> terms;
};

/// Throws ValidationError when a term is not a closed path.
void validate_potential(const Quiver &Q, const Potential &W);

/// Cycles modulo rotation: each cycle keyed by its least rotation.
std::map<std::vector<int>, Cyc> cyclic_normal_form(const PathTermList &terms);

struct InvarianceReport {
  bool invariant = true;
  Elem first_violation = -1;
};

InvarianceReport check_invariance(const Group &G, const ArrowSpace &M,
                                  const Potential &W);

} // namespace skq
