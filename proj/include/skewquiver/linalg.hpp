#pragma once

#include "skewquiver/cyclotomic.hpp"

#include <optional>
#include <vector>

namespace skq {

/// Dense row-major matrix over the cyclotomic numbers.
class CycMatrix {
public:
  CycMatrix() = default;
  CycMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}

  static CycMatrix identity(std::size_t n);
  static CycMatrix column(std::vector<Cyc> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Cyc &operator()(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const Cyc &operator()(std::size_t r, std::size_t c) const {
    return e_[r * cols_ + c];
  }

  bool is_zero() const;
  CycMatrix transpose() const;
  CycMatrix col(std::size_t c) const;
  /// lcm of the entry conductors.
  int conductor() const;

  friend CycMatrix operator*(const CycMatrix &a, const CycMatrix &b);
  friend CycMatrix operator+(const CycMatrix &a, const CycMatrix &b);
  friend CycMatrix operator-(const CycMatrix &a, const CycMatrix &b);
  friend CycMatrix operator*(const Cyc &s, const CycMatrix &a);
  friend bool operator==(const CycMatrix &a, const CycMatrix &b);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Cyc> e_;
};

struct Echelon {
  CycMatrix rref;
  std::vector<std::size_t> pivots; // pivot column of each nonzero row
};

/// Reduced row echelon form. The pivot for each column is the first nonzero
/// entry found scanning the remaining rows top-down.
Echelon row_echelon(CycMatrix a);

std::size_t rank(const CycMatrix &a);

/// Basis of the right null space as cols x 1 column matrices. The basis is
/// the reduced echelon basis of the null space, so each vector has leading
/// entry 1 and the list is independent of elimination details.
std::vector<CycMatrix> kernel_basis(const CycMatrix &a);

/// One X with A X = B, or nullopt when the system is inconsistent.
/// Throws std::invalid_argument on a row-count mismatch.
std::optional<CycMatrix> solve_linear(const CycMatrix &a, const CycMatrix &b);

/// Throws ArithmeticError when the matrix is singular.
CycMatrix inverse(const CycMatrix &a);

} // namespace skq
