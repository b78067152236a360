#include "skewquiver/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace skq {

int gcd_int(int a, int b) { return std::gcd(a, b); }

int lcm_int(int a, int b) { return a / std::gcd(a, b) * b; }

int euler_phi(int n) {
  if (n < 1)
    throw std::invalid_argument("euler_phi: n must be positive");
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0)
        m /= p;
      result -= result / p;
    }
  }
  if (m > 1)
    result -= result / m;
  return result;
}

namespace {

// Exact division of a by the monic polynomial b; the remainder must vanish.
IntPoly divide_exact(IntPoly a, const IntPoly &b) {
  const std::size_t db = b.size() - 1;
  IntPoly q(a.size() - db, 0);
  for (std::size_t k = a.size(); k-- > db;) {
    Integer c = a[k];
    if (c == 0)
      continue;
    q[k - db] = c;
    for (std::size_t j = 0; j <= db; ++j)
      a[k - db + j] -= c * b[j];
  }
  for (const auto &r : a)
    if (r != 0)
      throw std::logic_error("cyclotomic_polynomial: inexact division");
  return q;
}

const IntPoly &cached_phi(int n) {
  static std::mutex mu;
  static std::map<int, IntPoly> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end())
    return it->second;
  // Build recursively without re-entering the lock.
  std::map<int, IntPoly> local;
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0)
      continue;
    if (auto c = cache.find(d); c != cache.end()) {
      local[d] = c->second;
      continue;
    }
    IntPoly p(d + 1, 0);
    p[0] = -1;
    p[d] = 1;
    for (auto &[e, phi_e] : local)
      if (e < d && d % e == 0)
        p = divide_exact(std::move(p), phi_e);
    local[d] = p;
    cache[d] = p;
  }
  return cache.at(n);
}

// Gaussian elimination over Q for a square nonsingular system M x = rhs.
std::vector<Rational> solve_rational(std::vector<std::vector<Rational>> m,
                                     std::vector<Rational> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0)
      ++piv;
    if (piv == n)
      throw ArithmeticError("division by zero in cyclotomic field");
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    Rational inv = 1 / m[col][col];
    for (std::size_t j = col; j < n; ++j)
      m[col][j] *= inv;
    rhs[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0)
        continue;
      Rational f = m[r][col];
      for (std::size_t j = col; j < n; ++j)
        m[r][j] -= f * m[col][j];
      rhs[r] -= f * rhs[col];
    }
  }
  return rhs;
}

} // namespace

IntPoly cyclotomic_polynomial(int n) {
  if (n < 1)
    throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  return cached_phi(n);
}

void Cyc::reduce() {
  const IntPoly &phi = cached_phi(n_);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t k = c_.size(); k-- > deg;) {
    if (c_[k] == 0)
      continue;
    Rational c = c_[k];
    for (std::size_t j = 0; j <= deg; ++j)
      if (phi[j] != 0)
        c_[k - deg + j] -= c * phi[j];
  }
  c_.resize(deg, Rational(0));
}

void Cyc::demote() {
  if (n_ != 1 && is_rational()) {
    n_ = 1;
    c_.resize(1);
  }
}

Cyc Cyc::zeta(int n, long k) {
  if (n < 1)
    throw std::invalid_argument("zeta: conductor must be positive");
  long e = ((k % n) + n) % n;
  std::vector<Rational> c(static_cast<std::size_t>(e) + 1, Rational(0));
  c[e] = 1;
  return from_poly(n, std::move(c));
}

Cyc Cyc::from_poly(int n, std::vector<Rational> coeffs) {
  if (n < 1)
    throw std::invalid_argument("Cyc: conductor must be positive");
  Cyc r(n, std::move(coeffs));
  if (r.c_.empty())
    r.c_.push_back(0);
  for (auto &q : r.c_)
    q.canonicalize();
  r.reduce();
  r.demote();
  return r;
}

bool Cyc::is_zero() const {
  for (const auto &q : c_)
    if (q != 0)
      return false;
  return true;
}

bool Cyc::is_rational() const {
  for (std::size_t k = 1; k < c_.size(); ++k)
    if (c_[k] != 0)
      return false;
  return true;
}

bool Cyc::is_one() const { return is_rational() && c_[0] == 1; }

Rational Cyc::rational_value() const {
  if (!is_rational())
    throw std::logic_error("Cyc::rational_value on irrational element");
  return c_[0];
}

Cyc Cyc::embed(int n) const {
  if (n < 1 || n % n_ != 0)
    throw std::invalid_argument("embed: conductor " + std::to_string(n_) +
                                " does not divide " + std::to_string(n));
  if (n == n_)
    return *this;
  const std::size_t step = static_cast<std::size_t>(n / n_);
  std::vector<Rational> c((c_.size() - 1) * step + 1, Rational(0));
  for (std::size_t k = 0; k < c_.size(); ++k)
    c[k * step] = c_[k];
  Cyc r(n, std::move(c));
  r.reduce();
  return r;
}

Cyc Cyc::operator-() const {
  Cyc r = *this;
  for (auto &q : r.c_)
    q = -q;
  return r;
}

Cyc &Cyc::operator+=(const Cyc &o) {
  if (o.n_ == n_) {
    for (std::size_t k = 0; k < c_.size(); ++k)
      c_[k] += o.c_[k];
    demote();
    return *this;
  }
  if (o.n_ == 1) {
    c_[0] += o.c_[0];
    return *this;
  }
  int m = lcm_int(n_, o.n_);
  *this = embed(m);
  Cyc b = o.embed(m);
  for (std::size_t k = 0; k < c_.size(); ++k)
    c_[k] += b.c_[k];
  demote();
  return *this;
}

Cyc &Cyc::operator-=(const Cyc &o) { return *this += -o; }

Cyc &Cyc::operator*=(const Cyc &o) {
  if (o.n_ == 1) {
    for (auto &q : c_)
      q *= o.c_[0];
    demote();
    return *this;
  }
  if (n_ == 1) {
    Rational s = c_[0];
    *this = o;
    for (auto &q : c_)
      q *= s;
    demote();
    return *this;
  }
  int m = lcm_int(n_, o.n_);
  const Cyc a = embed(m);
  const Cyc b = o.embed(m);
  std::vector<Rational> prod(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0)
      continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      if (b.c_[j] != 0)
        prod[i + j] += a.c_[i] * b.c_[j];
  }
  n_ = m;
  c_ = std::move(prod);
  reduce();
  demote();
  return *this;
}

Cyc Cyc::inverse() const {
  if (is_zero())
    throw ArithmeticError("division by zero in cyclotomic field");
  if (n_ == 1 || is_rational()) {
    return Cyc(Rational(1 / c_[0]));
  }
  // Column j of the multiplication-by-a matrix is x^j * a mod Phi_n.
  const std::size_t d = c_.size();
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d));
  Cyc col = *this;
  const Cyc x = zeta(n_, 1);
  for (std::size_t j = 0; j < d; ++j) {
    const Cyc full = col.embed(n_);
    for (std::size_t i = 0; i < d; ++i)
      m[i][j] = full.c_[i];
    col *= x;
  }
  std::vector<Rational> rhs(d, Rational(0));
  rhs[0] = 1;
  return Cyc(n_, solve_rational(std::move(m), std::move(rhs)));
}

Cyc &Cyc::operator/=(const Cyc &o) { return *this *= o.inverse(); }

bool operator==(const Cyc &a, const Cyc &b) {
  if (a.n_ == b.n_)
    return a.c_ == b.c_;
  int m = lcm_int(a.n_, b.n_);
  return a.embed(m).c_ == b.embed(m).c_;
}

Cyc cyc_arith(const Cyc &a, const Cyc &b, ArithOp op) {
  switch (op) {
  case ArithOp::Add:
    return a + b;
  case ArithOp::Sub:
    return a - b;
  case ArithOp::Mul:
    return a * b;
  case ArithOp::Div:
    return a / b;
  }
  throw std::invalid_argument("cyc_arith: unknown operation");
}

std::string Cyc::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    const Rational &q = c_[k];
    if (q == 0)
      continue;
    Rational mag = abs(q);
    if (first) {
      if (q < 0)
        os << "-";
    } else {
      os << (q < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1)
      os << mag.get_str() << "*";
    os << "z" << n_;
    if (k > 1)
      os << "^" << k;
  }
  if (first)
    return "0";
  return os.str();
}

} // namespace skq
