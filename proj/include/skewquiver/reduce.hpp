#pragma once

#include "skewquiver/morita.hpp"

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace skq {

/// Xi(theta): the family of intertwiners u -> u.theta.e_V, one per
/// (orbit sequence, source vertex, target vertex) with a nonzero component.
struct IntwElement {
  using Key = std::tuple<std::vector<int>, int, int>;
  std::map<Key, Intertwiner> comps;
};

/// Throws PreconditionError unless theta = e~ theta e~.
IntwElement xi(const Setting &S, const SkewElement &theta);
/// Sum of the values at the idempotents; inverse of xi.
SkewElement xi_value(const Setting &S, const IntwElement &x);

/// Linear combination of paths of Q_G; zero coefficients are not stored.
using PathComb = std::map<Path, Cyc>;

void comb_add(PathComb &c, const Path &p, const Cyc &x);

enum class PairingMode { Auto, Fast, Slow, Both };

struct TransportOptions {
  PairingMode mode = PairingMode::Auto;
  int threads = 0; // 0: worker_count()
};

struct TransportResult {
  PathComb comb;
  std::vector<std::string> notices;
};

/// theta = sum over paths gamma of (Xi(theta) | phi_gamma) gamma.
/// Auto and Fast use the combinatorial pairing when the instance allows it.
/// Both computes the two pairings and throws ConsistencyError on mismatch.
TransportResult transport(const QG &qg, const SkewElement &theta,
                          const TransportOptions &opt = {});

/// W * e as an element of the skew group algebra.
SkewElement potential_element(const Setting &S, const Potential &W);
/// transport(e~ (W * e) e~), with a notice when W is not invariant.
TransportResult transport_potential(const QG &qg, const Potential &W,
                                    const TransportOptions &opt = {});

/// sum c_gamma f_1(e) ... f_n(e)
SkewElement evaluate_comb(const QG &qg, const PathComb &c);

struct RoundtripReport {
  bool ok = true;
  std::optional<SkewKey> first_difference;
  Cyc expected; // coefficient in theta
  Cyc actual;   // coefficient in the evaluated combination
  std::string message;
};
RoundtripReport verify_roundtrip(const QG &qg, const SkewElement &theta,
                                 const PathComb &c);

/// Concatenation product: paths of a followed by paths of b.
PathComb comb_product(const QG &qg, const PathComb &a, const PathComb &b);

/// "-2 · f... f... + ..." in path order; "0" for the empty combination.
std::string render_comb(const QG &qg, const PathComb &c);

} // namespace skq
