#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace skq {

using Rational = mpq_class;
using Integer = mpz_class;

/// Integer polynomial, coefficient k multiplies x^k.
using IntPoly = std::vector<Integer>;

class ArithmeticError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

int euler_phi(int n);
int gcd_int(int a, int b);
int lcm_int(int a, int b);

/// Phi_n, obtained by dividing x^n - 1 by Phi_d for every proper divisor d.
IntPoly cyclotomic_polynomial(int n);

/// Exact element of Q(zeta_n), stored in the power basis 1, z, ..., z^{phi(n)-1}
/// of Q[x]/Phi_n. Conductor 1 holds the rationals.
///
/// Binary operations on operands with different conductors embed both into
/// the lcm conductor first. Equality is decided the same way, so zeta_3 and
/// zeta_6^2 compare equal. Arithmetic results that happen to be rational are
/// stored with conductor 1; embed() is the one operation that keeps the
/// requested conductor.
class Cyc {
public:
  Cyc() : n_(1), c_(1) {}
  Cyc(long v) : n_(1), c_{Rational(v)} {}
  Cyc(const Rational &q) : n_(1), c_{q} {}

  /// zeta_n^k
  static Cyc zeta(int n, long k = 1);
  /// Takes a coefficient vector of any length and reduces it modulo Phi_n.
  static Cyc from_poly(int n, std::vector<Rational> coeffs);

  int conductor() const { return n_; }
  const std::vector<Rational> &coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Only valid when is_rational().
  Rational rational_value() const;

  /// Image under zeta_m -> zeta_n^{n/m}. Requires conductor() | n.
  Cyc embed(int n) const;
  Cyc inverse() const;

  Cyc &operator+=(const Cyc &o);
  Cyc &operator-=(const Cyc &o);
  Cyc &operator*=(const Cyc &o);
  Cyc &operator/=(const Cyc &o);

  friend Cyc operator+(Cyc a, const Cyc &b) { return a += b; }
  friend Cyc operator-(Cyc a, const Cyc &b) { return a -= b; }
  friend Cyc operator*(Cyc a, const Cyc &b) { return a *= b; }
  friend Cyc operator/(Cyc a, const Cyc &b) { return a /= b; }
  Cyc operator-() const;

  friend bool operator==(const Cyc &a, const Cyc &b);
  friend bool operator!=(const Cyc &a, const Cyc &b) { return !(a == b); }

  /// Human readable, e.g. "1/2 - 3*z12^2".
  std::string to_string() const;

private:
  Cyc(int n, std::vector<Rational> c) : n_(n), c_(std::move(c)) {}
  void reduce();
  // Rational values always carry conductor 1.
  void demote();

  int n_;
  std::vector<Rational> c_;
};

enum class ArithOp { Add, Sub, Mul, Div };

Cyc cyc_arith(const Cyc &a, const Cyc &b, ArithOp op);

inline std::ostream &operator<<(std::ostream &os, const Cyc &c) {
  return os << c.to_string();
}

} // namespace skq
