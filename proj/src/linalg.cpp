#include "skewquiver/linalg.hpp"

#include <stdexcept>

namespace skq {

CycMatrix CycMatrix::identity(std::size_t n) {
  CycMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = Cyc(1);
  return m;
}

CycMatrix CycMatrix::column(std::vector<Cyc> entries) {
  CycMatrix m(entries.size(), 1);
  m.e_ = std::move(entries);
  return m;
}

bool CycMatrix::is_zero() const {
  for (const auto &x : e_)
    if (!x.is_zero())
      return false;
  return true;
}

CycMatrix CycMatrix::transpose() const {
  CycMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      t(c, r) = (*this)(r, c);
  return t;
}

CycMatrix CycMatrix::col(std::size_t c) const {
  CycMatrix v(rows_, 1);
  for (std::size_t r = 0; r < rows_; ++r)
    v(r, 0) = (*this)(r, c);
  return v;
}

int CycMatrix::conductor() const {
  int n = 1;
  for (const auto &x : e_)
    n = lcm_int(n, x.conductor());
  return n;
}

CycMatrix operator*(const CycMatrix &a, const CycMatrix &b) {
  if (a.cols_ != b.rows_)
    throw std::invalid_argument("CycMatrix: shape mismatch in product");
  CycMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Cyc &x = a(i, k);
      if (x.is_zero())
        continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Cyc &y = b(k, j);
        if (!y.is_zero())
          p(i, j) += x * y;
      }
    }
  return p;
}

CycMatrix operator+(const CycMatrix &a, const CycMatrix &b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("CycMatrix: shape mismatch in sum");
  CycMatrix s = a;
  for (std::size_t k = 0; k < s.e_.size(); ++k)
    s.e_[k] += b.e_[k];
  return s;
}

CycMatrix operator-(const CycMatrix &a, const CycMatrix &b) {
  return a + Cyc(-1) * b;
}

CycMatrix operator*(const Cyc &s, const CycMatrix &a) {
  CycMatrix r = a;
  for (auto &x : r.e_)
    x *= s;
  return r;
}

bool operator==(const CycMatrix &a, const CycMatrix &b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

Echelon row_echelon(CycMatrix a) {
  Echelon out;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a(piv, c).is_zero())
      ++piv;
    if (piv == rows)
      continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j)
        std::swap(a(piv, j), a(r, j));
    Cyc inv = a(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j)
      if (!a(r, j).is_zero())
        a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero())
        continue;
      Cyc f = a(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!a(r, j).is_zero())
          a(i, j) -= f * a(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rref = std::move(a);
  return out;
}

std::size_t rank(const CycMatrix &a) { return row_echelon(a).pivots.size(); }

std::vector<CycMatrix> kernel_basis(const CycMatrix &a) {
  const std::size_t cols = a.cols();
  Echelon e = row_echelon(a);
  std::vector<char> is_pivot(cols, 0);
  for (auto p : e.pivots)
    is_pivot[p] = 1;
  std::vector<std::vector<Cyc>> vecs;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f])
      continue;
    std::vector<Cyc> v(cols);
    v[f] = Cyc(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      v[e.pivots[r]] = -e.rref(r, f);
    vecs.push_back(std::move(v));
  }
  if (vecs.empty())
    return {};
  // Reduced echelon basis of the null space.
  CycMatrix stacked(vecs.size(), cols);
  for (std::size_t i = 0; i < vecs.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j)
      stacked(i, j) = vecs[i][j];
  Echelon k = row_echelon(std::move(stacked));
  std::vector<CycMatrix> basis;
  for (std::size_t i = 0; i < k.pivots.size(); ++i) {
    CycMatrix v(cols, 1);
    for (std::size_t j = 0; j < cols; ++j)
      v(j, 0) = k.rref(i, j);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<CycMatrix> solve_linear(const CycMatrix &a, const CycMatrix &b) {
  if (a.rows() != b.rows())
    throw std::invalid_argument("solve_linear: A and B row counts differ");
  const std::size_t n = a.cols(), m = b.cols();
  CycMatrix aug(a.rows(), n + m);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j)
      aug(i, j) = a(i, j);
    for (std::size_t j = 0; j < m; ++j)
      aug(i, n + j) = b(i, j);
  }
  Echelon e = row_echelon(std::move(aug));
  CycMatrix x(n, m);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] >= n)
      return std::nullopt;
    for (std::size_t j = 0; j < m; ++j)
      x(e.pivots[r], j) = e.rref(r, n + j);
  }
  return x;
}

CycMatrix inverse(const CycMatrix &a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("inverse: matrix is not square");
  auto x = solve_linear(a, CycMatrix::identity(a.rows()));
  if (!x || rank(a) != a.rows())
    throw ArithmeticError("inverse: matrix is singular");
  return *x;
}

} // namespace skq
