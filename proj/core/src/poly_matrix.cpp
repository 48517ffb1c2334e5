#include "dixon/poly_matrix.hpp"

#include <stdexcept>
#include <string>

namespace dixon {

PolyMatrix::PolyMatrix(int size) : size_(size) {
  if (size < 1) throw std::invalid_argument("matrix size must be at least 1");
  entries_.resize(static_cast<std::size_t>(size) * size);
}

PolyMatrix PolyMatrix::identity(int size) {
  PolyMatrix m(size);
  for (int i = 0; i < size; ++i) m.at(i, i) = BivarPoly::constant(1);
  return m;
}

PolyMatrix PolyMatrix::from_rows(
    std::initializer_list<std::initializer_list<BivarPoly>> rows) {
  const int n = static_cast<int>(rows.size());
  PolyMatrix m(n);
  int r = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("matrix rows must all have length " +
                                  std::to_string(n));
    int c = 0;
    for (const auto& entry : row) m.at(r, c++) = entry;
    ++r;
  }
  return m;
}

const BivarPoly& PolyMatrix::at(int row, int col) const {
  return entries_[static_cast<std::size_t>(row) * size_ + col];
}

BivarPoly& PolyMatrix::at(int row, int col) {
  return entries_[static_cast<std::size_t>(row) * size_ + col];
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.size_ != b.size_)
    throw std::invalid_argument("matrix size mismatch: " +
                                std::to_string(a.size_) + " vs " +
                                std::to_string(b.size_));
  PolyMatrix r(a.size_);
  for (int i = 0; i < a.size_; ++i)
    for (int k = 0; k < a.size_; ++k) {
      const BivarPoly& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < a.size_; ++j) {
        const BivarPoly& bkj = b.at(k, j);
        if (bkj.is_zero()) continue;
        r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

PolyMatrix PolyMatrix::pow(unsigned long n) const {
  PolyMatrix result = identity(size_);
  if (n == 0) return result;
  PolyMatrix base = *this;
  while (n > 0) {
    if (n & 1UL) result = result * base;
    n >>= 1UL;
    if (n > 0) base = base * base;
  }
  return result;
}

BivarPoly PolyMatrix::trace() const {
  BivarPoly t;
  for (int i = 0; i < size_; ++i) t += at(i, i);
  return t;
}

BivarPoly PolyMatrix::det(int size_bound) const {
  if (size_ > size_bound)
    throw CapacityError("symbolic determinant limited to size " +
                        std::to_string(size_bound) + ", got " +
                        std::to_string(size_));
  if (size_ == 1) return at(0, 0);
  BivarPoly d;
  for (int i = 0; i < size_; ++i) {
    const BivarPoly& pivot = at(i, 0);
    if (pivot.is_zero()) continue;
    PolyMatrix minor(size_ - 1);
    for (int r = 0, mr = 0; r < size_; ++r) {
      if (r == i) continue;
      for (int c = 1; c < size_; ++c) minor.at(mr, c - 1) = at(r, c);
      ++mr;
    }
    BivarPoly term = pivot * minor.det(size_bound);
    if (i % 2 == 0)
      d += term;
    else
      d -= term;
  }
  return d;
}

PolyMatrix PolyMatrix::sym_power(unsigned long n) const {
  if (size_ != 2)
    throw std::invalid_argument("symmetric powers are defined here for 2x2 "
                                "matrices only");
  const int dim = static_cast<int>(n) + 1;
  // Coefficient vectors of (m00*X + m01*Y)^e and (m10*X + m11*Y)^e for every
  // e up to n, built by repeated convolution with the linear form. This is
  // the binomial expansion without ever writing a binomial coefficient.
  auto powers = [&](const BivarPoly& u0, const BivarPoly& u1) {
    std::vector<std::vector<BivarPoly>> table(n + 1);
    table[0] = {BivarPoly::constant(1)};
    for (unsigned long e = 1; e <= n; ++e) {
      std::vector<BivarPoly> next(e + 1);
      for (unsigned long t = 0; t <= e; ++t) {
        if (t < e && !table[e - 1][t].is_zero() && !u0.is_zero())
          next[t] += table[e - 1][t] * u0;
        if (t > 0 && !table[e - 1][t - 1].is_zero() && !u1.is_zero())
          next[t] += table[e - 1][t - 1] * u1;
      }
      table[e] = std::move(next);
    }
    return table;
  };
  const auto top = powers(at(0, 0), at(0, 1));
  const auto bottom = powers(at(1, 0), at(1, 1));

  PolyMatrix s(dim);
  for (int k = 0; k < dim; ++k) {
    const auto& a = top[n - static_cast<unsigned long>(k)];
    const auto& b = bottom[static_cast<unsigned long>(k)];
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (b[j].is_zero()) continue;
        s.at(k, static_cast<int>(i + j)) += a[i] * b[j];
      }
    }
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const PolyMatrix& m) {
  os << '[';
  for (int i = 0; i < m.size(); ++i) {
    os << (i == 0 ? "[" : " [");
    for (int j = 0; j < m.size(); ++j) {
      if (j > 0) os << ", ";
      os << m.at(i, j);
    }
    os << ']';
    if (i + 1 < m.size()) os << ";";
  }
  return os << ']';
}

}  // namespace dixon
