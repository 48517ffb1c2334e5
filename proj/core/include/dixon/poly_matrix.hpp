#pragma once

#include <initializer_list>
#include <ostream>
#include <vector>

#include "dixon/bivar_poly.hpp"

namespace dixon {

// Square matrix with BivarPoly entries, stored row-major.
class PolyMatrix {
 public:
  // Symbolic determinants grow factorially; anything larger than this is
  // refused with a CapacityError.
  static constexpr int kDetSizeBound = 10;

  explicit PolyMatrix(int size);  // zero matrix; size >= 1
  static PolyMatrix identity(int size);
  static PolyMatrix from_rows(
      std::initializer_list<std::initializer_list<BivarPoly>> rows);

  int size() const { return size_; }
  const BivarPoly& at(int row, int col) const;
  BivarPoly& at(int row, int col);

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

  // Binary exponentiation; n = 0 gives the identity.
  PolyMatrix pow(unsigned long n) const;

  BivarPoly trace() const;

  // Cofactor expansion along the first column, skipping zero entries.
  BivarPoly det(int size_bound = kDetSizeBound) const;

  // n-th symmetric power of a 2x2 matrix: the (n+1)x(n+1) matrix acting on
  // degree-n binary forms. Row k holds the coefficients of
  // (m00*X + m01*Y)^(n-k) * (m10*X + m11*Y)^k in the basis
  // X^n, X^(n-1)Y, ..., Y^n. n = 0 gives the 1x1 identity.
  PolyMatrix sym_power(unsigned long n) const;

  friend std::ostream& operator<<(std::ostream& os, const PolyMatrix& m);

 private:
  int size_;
  std::vector<BivarPoly> entries_;
};

}  // namespace dixon
