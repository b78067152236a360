#pragma once

#include "skewquiver/intertwiner.hpp"

#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace skq {

/// Arrow (i,U) -> (j,V) of the reduced quiver: f is an intertwiner
/// U -> M(i,j;V) and dual the dual-side intertwiner V -> M*(j,i;U) with
/// (f_m | dual_l) = delta_{ml} among the arrows of the same vertex pair.
struct QGArrow {
  int id = 0;
  int source = 0;
  int target = 0;
  int index = 0; // position among the arrows source -> target
  std::string label;
  Intertwiner f;
  Intertwiner dual;
};

/// The reduced quiver Q_G. Paths are Path values whose start is a vertex of
/// Q_G and whose arrows are ids of QGArrow. Composition is left to right:
/// the path (f_1, ..., f_n) goes through f_1 first and corresponds to
/// f_n (*) ... (*) f_1 and to the product f_1(e) ... f_n(e).
class QG {
public:
  /// Throws ConsistencyError when the two sides disagree on a hom-space
  /// dimension or a Gram matrix is singular.
  explicit QG(const Setting &S);

  const Setting &setting() const { return *S_; }
  int num_vertices() const { return S_->num_vertices(); }
  int num_arrows() const { return static_cast<int>(arrows_.size()); }
  const std::vector<QGArrow> &arrows() const { return arrows_; }
  const QGArrow &arrow(int id) const { return arrows_[id]; }
  const std::vector<int> &out(int v) const { return out_[v]; }
  std::string vertex_label(int v) const;

  int path_end(const Path &p) const;
  /// Orbit indices of the vertices along the path.
  std::vector<int> orbit_seq(const Path &p) const;

  /// Paths of length n in lexicographic order of arrow ids, optionally
  /// restricted to the given start and end vertices (-1 for any).
  std::vector<Path> paths(int n, int source = -1, int target = -1) const;
  std::size_t count_paths(int n, int source = -1, int target = -1) const;

  /// f_n (*) ... (*) f_1, the unit intertwiner for a lazy path.
  Intertwiner f_gamma(const Path &p) const;
  /// f_1^v (*) ... (*) f_n^v on the dual side. Cached.
  Intertwiner phi_gamma(const Path &p) const;

  /// f(e_U) for an arrow, e_i * e_U for a vertex.
  const SkewElement &arrow_value(int id) const { return values_[id]; }
  SkewElement path_value(const Path &p) const;

private:
  const Setting *S_;
  std::vector<QGArrow> arrows_;
  std::vector<std::vector<int>> out_;
  std::vector<SkewElement> values_;
  mutable std::mutex phi_mu_;
  mutable std::map<Path, Intertwiner> phi_cache_;
};

std::string render_path(const QG &qg, const Path &p);

} // namespace skq
