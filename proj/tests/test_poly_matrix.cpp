#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "dixon/bivar_poly.hpp"
#include "dixon/errors.hpp"
#include "dixon/poly_matrix.hpp"
#include "dixon/rng.hpp"
#include "test_util.hpp"

using dixon::BigInt;
using dixon::BivarPoly;
using dixon::PolyMatrix;

namespace {

const BivarPoly X = BivarPoly::x();
const BivarPoly Y = BivarPoly::y();

BivarPoly cst(long v) { return BivarPoly::constant(v); }
BivarPoly mono(int i, int j, long c) { return BivarPoly::monomial(i, j, c); }

// Generic companion [[x, y], [1, 0]], whose powers carry the regular
// second-kind polynomials.
PolyMatrix comp() {
  return PolyMatrix::from_rows({{X, Y}, {cst(1), BivarPoly()}});
}

PolyMatrix int2x2(long a, long b, long c, long d) {
  return PolyMatrix::from_rows({{cst(a), cst(b)}, {cst(c), cst(d)}});
}

PolyMatrix random_matrix(dixon::Rng& rng, int size, int max_deg, long cmax) {
  PolyMatrix m(size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j)
      m.at(i, j) = testutil::random_poly(rng, max_deg, cmax);
  return m;
}

}  // namespace

TEST_CASE("construction") {
  CHECK_THROWS_AS(PolyMatrix(0), std::invalid_argument);
  CHECK_THROWS_AS(PolyMatrix(-2), std::invalid_argument);
  const PolyMatrix z(2);
  CHECK(z.at(0, 0).is_zero());
  CHECK(PolyMatrix::identity(3).at(1, 1) == cst(1));
  CHECK(PolyMatrix::identity(3).at(0, 1).is_zero());
  CHECK_THROWS_AS(PolyMatrix::from_rows({{X, Y}, {X}}), std::invalid_argument);
  CHECK(comp().size() == 2);
}

TEST_CASE("multiplication") {
  const PolyMatrix m = comp();
  const PolyMatrix m2 = m * m;
  CHECK(m2.at(0, 0) == BivarPoly::from_terms({{2, 0, 1}, {0, 1, 1}}));
  CHECK(m2.at(0, 1) == mono(1, 1, 1));
  CHECK(m2.at(1, 0) == X);
  CHECK(m2.at(1, 1) == Y);
  CHECK(PolyMatrix::identity(2) * m == m);
  CHECK(m * PolyMatrix::identity(2) == m);
  CHECK_THROWS_AS(m * PolyMatrix::identity(3), std::invalid_argument);
}

TEST_CASE("powers of the generic companion match the recurrence tables") {
  const PolyMatrix m = comp();
  CHECK(m.pow(0) == PolyMatrix::identity(2));
  CHECK(m.pow(1) == m);

  const PolyMatrix m3 = PolyMatrix::from_rows(
      {{BivarPoly::from_terms({{3, 0, 1}, {1, 1, 2}}),
        BivarPoly::from_terms({{2, 1, 1}, {0, 2, 1}})},
       {BivarPoly::from_terms({{2, 0, 1}, {0, 1, 1}}), mono(1, 1, 1)}});
  CHECK(m.pow(3) == m3);

  const PolyMatrix m4 = PolyMatrix::from_rows(
      {{BivarPoly::from_terms({{4, 0, 1}, {2, 1, 3}, {0, 2, 1}}),
        BivarPoly::from_terms({{3, 1, 1}, {1, 2, 2}})},
       {BivarPoly::from_terms({{3, 0, 1}, {1, 1, 2}}),
        BivarPoly::from_terms({{2, 1, 1}, {0, 2, 1}})}});
  CHECK(m.pow(4) == m4);

  // Fifth power, forced by m4 * m. Some circulated tables misprint the
  // corner entries; the product below is what the recurrence demands.
  const PolyMatrix m5 = PolyMatrix::from_rows(
      {{BivarPoly::from_terms({{5, 0, 1}, {3, 1, 4}, {1, 2, 3}}),
        BivarPoly::from_terms({{4, 1, 1}, {2, 2, 3}, {0, 3, 1}})},
       {BivarPoly::from_terms({{4, 0, 1}, {2, 1, 3}, {0, 2, 1}}),
        BivarPoly::from_terms({{3, 1, 1}, {1, 2, 2}})}});
  CHECK(m.pow(5) == m5);
  CHECK(m.pow(5) == m4 * m);
}

TEST_CASE("trace") {
  CHECK(PolyMatrix::identity(4).trace() == cst(4));
  CHECK(comp().trace() == X);
  CHECK(comp().pow(2).trace() == BivarPoly::from_terms({{2, 0, 1}, {0, 1, 2}}));
  CHECK(PolyMatrix(3).trace().is_zero());
}

TEST_CASE("determinant") {
  CHECK(comp().det() == mono(0, 1, -1));
  const PolyMatrix neg =
      PolyMatrix::from_rows({{X, mono(0, 1, -1)}, {cst(1), BivarPoly()}});
  CHECK(neg.det() == Y);
  CHECK(PolyMatrix::identity(5).det() == cst(1));
  CHECK(int2x2(2, 7, 1, 4).det() == cst(1));
  // Lower triangular: product of the diagonal.
  const PolyMatrix tri = PolyMatrix::from_rows(
      {{X, BivarPoly(), BivarPoly()},
       {Y, X + cst(1), BivarPoly()},
       {cst(3), mono(0, 2, 1), X - cst(2)}});
  CHECK(tri.det() == X * (X + cst(1)) * (X - cst(2)));
  // 3x3 integer spot check: det = 1*(1*6-5*3) - 4*(2*6-5*0) + 7*(2*3-1*0)
  const PolyMatrix m3 = PolyMatrix::from_rows(
      {{cst(1), cst(2), cst(5)}, {cst(4), cst(1), cst(3)},
       {cst(7), cst(2), cst(6)}});
  CHECK(m3.det() == cst(1 * (1 * 6 - 3 * 2) - 2 * (4 * 6 - 3 * 7) +
                        5 * (4 * 2 - 1 * 7)));
}

TEST_CASE("determinant capacity") {
  CHECK_THROWS_AS(PolyMatrix::identity(11).det(), dixon::CapacityError);
  CHECK_THROWS_AS(PolyMatrix::identity(3).det(2), dixon::CapacityError);
  CHECK(PolyMatrix::identity(10).det() == cst(1));
}

TEST_CASE("symmetric powers of the generic companion") {
  const PolyMatrix m = comp();
  CHECK(m.sym_power(0) == PolyMatrix::identity(1));
  CHECK(m.sym_power(1) == m);

  const PolyMatrix s2 = PolyMatrix::from_rows(
      {{mono(2, 0, 1), mono(1, 1, 2), mono(0, 2, 1)},
       {X, Y, BivarPoly()},
       {cst(1), BivarPoly(), BivarPoly()}});
  CHECK(m.sym_power(2) == s2);

  const PolyMatrix s3 = PolyMatrix::from_rows(
      {{mono(3, 0, 1), mono(2, 1, 3), mono(1, 2, 3), mono(0, 3, 1)},
       {mono(2, 0, 1), mono(1, 1, 2), mono(0, 2, 1), BivarPoly()},
       {X, Y, BivarPoly(), BivarPoly()},
       {cst(1), BivarPoly(), BivarPoly(), BivarPoly()}});
  CHECK(m.sym_power(3) == s3);

  const PolyMatrix s4 = PolyMatrix::from_rows(
      {{mono(4, 0, 1), mono(3, 1, 4), mono(2, 2, 6), mono(1, 3, 4),
        mono(0, 4, 1)},
       {mono(3, 0, 1), mono(2, 1, 3), mono(1, 2, 3), mono(0, 3, 1),
        BivarPoly()},
       {mono(2, 0, 1), mono(1, 1, 2), mono(0, 2, 1), BivarPoly(),
        BivarPoly()},
       {X, Y, BivarPoly(), BivarPoly(), BivarPoly()},
       {cst(1), BivarPoly(), BivarPoly(), BivarPoly(), BivarPoly()}});
  CHECK(m.sym_power(4) == s4);

  // Traces are the regular second-kind polynomials.
  CHECK(m.sym_power(2).trace() ==
        BivarPoly::from_terms({{2, 0, 1}, {0, 1, 1}}));
  CHECK(m.sym_power(3).trace() ==
        BivarPoly::from_terms({{3, 0, 1}, {1, 1, 2}}));
  CHECK(m.sym_power(4).trace() ==
        BivarPoly::from_terms({{4, 0, 1}, {2, 1, 3}, {0, 2, 1}}));
}

TEST_CASE("symmetric power edge cases") {
  CHECK_THROWS_AS(PolyMatrix::identity(3).sym_power(2), std::invalid_argument);
  CHECK(PolyMatrix::identity(2).sym_power(5) == PolyMatrix::identity(6));
  const PolyMatrix a = int2x2(2, 0, 3, 5);
  CHECK(a.sym_power(3).trace() == cst(203));  // 2^3 + 2^2*5 + 2*5^2 + 5^3
  CHECK(int2x2(1, 1, 1, 0).sym_power(2).det() == cst(-1));
  // det of the companion's third symmetric power: (-y)^6.
  CHECK(comp().sym_power(3).det() == mono(0, 6, 1));
}

TEST_CASE("pascal triangle inside symmetric powers of the fibonacci matrix") {
  const PolyMatrix s3 = int2x2(1, 1, 1, 0).sym_power(3);
  const long expect[4][4] = {
      {1, 3, 3, 1}, {1, 2, 1, 0}, {1, 1, 0, 0}, {1, 0, 0, 0}};
  for (int k = 0; k < 4; ++k)
    for (int j = 0; j < 4; ++j) CHECK(s3.at(k, j) == cst(expect[k][j]));
}

TEST_CASE("property: power additivity") {
  dixon::Rng rng(0xADD17u);
  for (int it = 0; it < 40; ++it) {
    const PolyMatrix m = random_matrix(rng, 2, 1, 3);
    const auto a = static_cast<unsigned long>(rng.next_in(0, 10));
    const auto b = static_cast<unsigned long>(rng.next_in(0, 10));
    CHECK(m.pow(a) * m.pow(b) == m.pow(a + b));
  }
}

TEST_CASE("property: trace is cyclic") {
  dixon::Rng rng(0xC1C1E5u);
  for (int it = 0; it < 60; ++it) {
    const int size = static_cast<int>(rng.next_in(2, 4));
    const PolyMatrix a = random_matrix(rng, size, 2, 5);
    const PolyMatrix b = random_matrix(rng, size, 2, 5);
    CHECK((a * b).trace() == (b * a).trace());
  }
}

TEST_CASE("property: determinant is multiplicative") {
  dixon::Rng rng(0xDE7u);
  for (int it = 0; it < 40; ++it) {
    const int size = static_cast<int>(rng.next_in(2, 3));
    const PolyMatrix a = random_matrix(rng, size, 1, 3);
    const PolyMatrix b = random_matrix(rng, size, 1, 3);
    CHECK((a * b).det() == a.det() * b.det());
  }
}

TEST_CASE("property: trace product rule for 2x2 matrices") {
  dixon::Rng rng(0x7274CEu);
  for (int it = 0; it < 100; ++it) {
    const PolyMatrix a = int2x2(rng.next_in(-9, 9), rng.next_in(-9, 9),
                                rng.next_in(-9, 9), rng.next_in(-9, 9));
    const PolyMatrix b = int2x2(rng.next_in(-9, 9), rng.next_in(-9, 9),
                                rng.next_in(-9, 9), rng.next_in(-9, 9));
    const BivarPoly lhs = (a * a * b).trace();
    const BivarPoly rhs =
        a.trace() * (a * b).trace() - a.det() * b.trace();
    CHECK(lhs == rhs);
  }
}

TEST_CASE("property: symmetric powers are functorial") {
  dixon::Rng rng(0xF0C7u);
  for (int it = 0; it < 50; ++it) {
    const PolyMatrix a = int2x2(rng.next_in(-5, 5), rng.next_in(-5, 5),
                                rng.next_in(-5, 5), rng.next_in(-5, 5));
    const PolyMatrix b = int2x2(rng.next_in(-5, 5), rng.next_in(-5, 5),
                                rng.next_in(-5, 5), rng.next_in(-5, 5));
    const auto n = static_cast<unsigned long>(rng.next_in(0, 5));
    CHECK((a * b).sym_power(n) == a.sym_power(n) * b.sym_power(n));
  }
}

TEST_CASE("property: sym_power commutes with plain powers") {
  dixon::Rng rng(0x5CA13u);
  for (int it = 0; it < 30; ++it) {
    const PolyMatrix a = int2x2(rng.next_in(-4, 4), rng.next_in(-4, 4),
                                rng.next_in(-4, 4), rng.next_in(-4, 4));
    const auto k = static_cast<unsigned long>(rng.next_in(0, 3));
    const auto n = static_cast<unsigned long>(rng.next_in(0, 4));
    CHECK(a.pow(k).sym_power(n) == a.sym_power(n).pow(k));
  }
}
