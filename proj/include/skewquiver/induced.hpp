#pragma once

#include "skewquiver/quiver.hpp"
#include "skewquiver/rep.hpp"

#include <map>
#include <vector>

namespace skq {

/// A path i_0 -> y_1.i_1 -> ... -> (y_1...y_n).i_n indexing one block of an
/// induced module.
struct InducedPath {
  Path path;
  std::vector<Elem> y; // y_1..y_n
  Elem Y = 0;          // y_1...y_n
};

/// The kG_{i_0}-module M(i_0,...,i_n; V) over the bimodule `space`. Basis
/// vector path * dim_v() + l stands for path (x) Y v_l. Paths are enumerated
/// depth first with increasing arrow ids; for n = 0 the single lazy path
/// makes the module equal to V.
class InducedModule {
public:
  InducedModule(const Group &G, const OrbitData &O, const ArrowSpace &space,
                std::vector<int> orbit_seq, const ModuleRep &V);

  int degree() const { return static_cast<int>(orbit_seq_.size()) - 1; }
  const std::vector<int> &orbit_seq() const { return orbit_seq_; }
  int dim_v() const { return dim_v_; }
  int dim() const { return static_cast<int>(paths_.size()) * dim_v_; }
  int num_paths() const { return static_cast<int>(paths_.size()); }
  const std::vector<InducedPath> &paths() const { return paths_; }
  /// Index of the path with these arrows, or -1.
  int find_path(const std::vector<int> &arrows) const;
  /// Action of the element at this position of the stabilizer of i_0.
  const CycMatrix &action(int position) const { return action_[position]; }
  ModuleRep as_module() const;

private:
  std::vector<int> orbit_seq_;
  int dim_v_ = 0;
  std::vector<InducedPath> paths_;
  std::map<std::vector<int>, int> index_;
  std::vector<CycMatrix> action_;
};

} // namespace skq
