#pragma once

#include "skewquiver/io.hpp"

#include <iosfwd>
#include <random>
#include <string>

namespace skq {

struct CheckResult {
  std::string name;
  bool passed = true;
  bool applicable = true;
  std::size_t cases = 0;
  std::string detail; // first failure, or a note
};

using Rng = std::mt19937_64;

/// Small random scalar: an integer in [-3, 3], sometimes plus a multiple of
/// a root of unity of order dividing `exponent`.
Cyc random_scalar(Rng &rng, int exponent);
/// e~ x e~ for x a random combination of `terms` elements p * g with p of
/// the given length.
SkewElement random_element(const Setting &S, int degree, Rng &rng,
                           int terms = 3);

/// Random intertwiner of degree n starting at `source`: a random combination
/// of f_gamma (M side) or phi_gamma (dual side) over all paths of Q_G with the
/// endpoints and orbit sequence of a random walk. Returns false when no
/// walk of that length exists.
bool random_intertwiner(const QG &qg, Side side, int source, int n, Rng &rng,
                        Intertwiner &out, Path *walk = nullptr);

/// dim of the degree-n part of e~ (T_S(M)*G) e~ as the rank of the
/// elements e~ (p * g) e~.
std::size_t graded_dimension(const Setting &S, int n);

CheckResult check_field_axioms(Rng &rng, int samples);
CheckResult check_cyclotomic_polynomials(int max_n);
CheckResult check_group(const Setting &S);
CheckResult check_idempotents(const Setting &S);
CheckResult check_dual_bases(const QG &qg);
CheckResult check_eq12(const QG &qg);
CheckResult check_associativity(const QG &qg, Rng &rng, int count);
CheckResult check_pairing_compat(const QG &qg, Rng &rng, int count);
CheckResult check_biorthogonality(const QG &qg, int max_len);
CheckResult check_graded_dimension(const QG &qg, int max_deg);
/// Not applicable (and passing) outside abelian stabilizers with a monomial
/// action.
CheckResult check_fast_slow(const QG &qg, Rng &rng, int samples);
CheckResult check_roundtrip(const QG &qg, Rng &rng, int per_degree,
                            int max_deg);
CheckResult check_algebra_map(const QG &qg, Rng &rng, int count);
/// Compares against a golden document; failures quote the exact scalar.
CheckResult check_golden(const QG &qg, const json &golden);

struct SelftestReport {
  bool passed = true;
  int suites = 0;
  int failures = 0;
};

/// Runs every suite on every *.json instance in `fixtures`, plus the golden
/// comparison for each <name>.golden.json in `golden`.
SelftestReport run_selftest(const std::string &fixtures,
                            const std::string &golden, std::ostream &out,
                            std::uint64_t seed = 1);

} // namespace skq
