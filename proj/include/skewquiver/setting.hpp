#pragma once

#include "skewquiver/induced.hpp"
#include "skewquiver/skew.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace skq {

/// Validated problem data as read from an instance document.
struct Instance {
  std::string name;
  Group group;
  ArrowSpace M;
  std::map<int, std::vector<Irrep>> irreps; // supplied, keyed by orbit rep vertex
  std::map<int, std::vector<Elem>> coset_reps; // supplied, keyed by orbit rep vertex
  std::optional<Potential> potential;
  int conductor = 1;
};

enum class Side { M, Dual };

/// Vertex (i, U) of the reduced quiver with U realized as kG_i.e_U.
struct QGVertex {
  int orbit = 0;
  int rep_vertex = 0;
  int irrep = 0;
  std::string label; // label of U
  Irrep rho;
  GroupAlgElem eps;
  CyclicModule module;
};

/// Everything derived from an instance that the intertwiner calculus needs:
/// orbits, stabilizers, irreps with their idempotents, the dual bimodule, and
/// a cache of induced modules. Shared read-only between threads; the cache
/// is internally locked.
class Setting {
public:
  explicit Setting(Instance inst);

  const Instance &instance() const { return inst_; }
  const Group &group() const { return inst_.group; }
  const ArrowSpace &space(Side s) const { return s == Side::M ? inst_.M : dual_; }
  const Quiver &quiver() const { return inst_.M.quiver; }
  const OrbitData &orbits() const { return orbits_; }
  const std::vector<QGVertex> &vertices() const { return vertices_; }
  const QGVertex &vertex(int v) const { return vertices_[v]; }
  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  const std::vector<int> &vertices_at(int orbit) const { return by_orbit_[orbit]; }
  const Stabilizer &stabilizer_of(int qg_vertex) const {
    return orbits_.stabilizers[vertices_[qg_vertex].orbit];
  }

  /// Abelian stabilizers, one-dimensional irreps, monomial action.
  bool monomial_abelian() const { return setting21_reason_.empty(); }
  const std::string &monomial_abelian_failure() const { return setting21_reason_; }

  /// M(i_0..i_n; V) on the chosen side, V the module of `target`.
  const InducedModule &induced(Side s, const std::vector<int> &orbit_seq,
                               int target) const;

  const SkewElement &e_tilde() const { return e_tilde_; }
  const SkewElement &e_hat() const { return e_hat_; }
  SkewElement mul(const SkewElement &a, const SkewElement &b,
                  Side s = Side::M) const {
    return skew_mul(group(), space(s), a, b);
  }
  /// e~ x e~
  SkewElement project(const SkewElement &x) const;
  /// e_i * e_U for a vertex of the reduced quiver.
  SkewElement vertex_idempotent(int qg_vertex) const;

private:
  Instance inst_;
  ArrowSpace dual_;
  OrbitData orbits_;
  std::vector<QGVertex> vertices_;
  std::vector<std::vector<int>> by_orbit_;
  std::string setting21_reason_;
  SkewElement e_tilde_;
  SkewElement e_hat_;

  using CacheKey = std::tuple<int, std::vector<int>, int>;
  mutable std::mutex cache_mu_;
  mutable std::map<CacheKey, std::unique_ptr<InducedModule>> cache_;
};

} // namespace skq
