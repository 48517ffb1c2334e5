#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <string>

#include "dixon/bivar_poly.hpp"
#include "dixon/errors.hpp"
#include "dixon/rng.hpp"
#include "test_util.hpp"

using dixon::BigInt;
using dixon::BivarPoly;

namespace {

// Regular first-kind polynomial of index 4, built by hand.
BivarPoly d4() {
  return BivarPoly::from_terms({{4, 0, 1}, {2, 1, 4}, {0, 2, 2}});
}

}  // namespace

TEST_CASE("construction and canonical form") {
  const BivarPoly zero;
  CHECK(zero.is_zero());
  CHECK(zero.term_count() == 0);
  CHECK(zero.degree_x() == -1);
  CHECK(zero.degree_y() == -1);
  CHECK(zero.is_constant());

  CHECK(BivarPoly::constant(0).is_zero());
  CHECK(BivarPoly::constant(5).coeff(0, 0) == 5);
  CHECK(BivarPoly::constant(5).is_constant());
  CHECK_FALSE(BivarPoly::x().is_constant());

  const BivarPoly merged = BivarPoly::from_terms({{1, 0, 2}, {1, 0, 3}});
  CHECK(merged == BivarPoly::monomial(1, 0, 5));

  const BivarPoly cancelled = BivarPoly::from_terms({{2, 1, 7}, {2, 1, -7}});
  CHECK(cancelled.is_zero());

  CHECK_THROWS_AS(BivarPoly::monomial(-1, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(BivarPoly::from_terms({{0, -2, 1}}), std::invalid_argument);

  CHECK(d4().degree_x() == 4);
  CHECK(d4().degree_y() == 2);
  CHECK(d4().coeff(2, 1) == 4);
  CHECK(d4().coeff(3, 0) == 0);
}

TEST_CASE("term order: decreasing x degree, then increasing y degree") {
  const BivarPoly p =
      BivarPoly::from_terms({{0, 0, 3}, {1, 2, 1}, {2, 0, 1}, {1, 1, 1}});
  std::vector<dixon::Exponents> seen;
  for (const auto& [e, c] : p.terms()) seen.push_back(e);
  const std::vector<dixon::Exponents> want = {
      {2, 0}, {1, 1}, {1, 2}, {0, 0}};
  CHECK(seen == want);
  CHECK(p.to_plain() == "x^2 + xy + xy^2 + 3");
}

TEST_CASE("addition and subtraction") {
  const BivarPoly a = BivarPoly::from_terms({{2, 0, 1}, {0, 1, 1}});
  const BivarPoly sum = a + BivarPoly::y();
  CHECK(sum == BivarPoly::from_terms({{2, 0, 1}, {0, 1, 2}}));
  CHECK(a + BivarPoly() == a);
  CHECK((a - a).is_zero());
  CHECK(-a == BivarPoly::from_terms({{2, 0, -1}, {0, 1, -1}}));
}

TEST_CASE("multiplication") {
  const BivarPoly x = BivarPoly::x();
  const BivarPoly p = BivarPoly::from_terms({{3, 0, 1}, {1, 1, 2}});
  CHECK(x * p == BivarPoly::from_terms({{4, 0, 1}, {2, 1, 2}}));
  CHECK((x + BivarPoly::y()) * (x - BivarPoly::y()) ==
        BivarPoly::from_terms({{2, 0, 1}, {0, 2, -1}}));
  CHECK(p * BivarPoly::constant(1) == p);
  CHECK((p * BivarPoly()).is_zero());
}

TEST_CASE("substitute_y") {
  // d4 at y = 1 is the fourth Lucas polynomial.
  CHECK(d4().substitute_y(1) ==
        BivarPoly::from_terms({{4, 0, 1}, {2, 0, 4}, {0, 0, 2}}));
  CHECK(d4().substitute_y(-1) ==
        BivarPoly::from_terms({{4, 0, 1}, {2, 0, -4}, {0, 0, 2}}));
  CHECK(d4().substitute_y(0) == BivarPoly::monomial(4, 0, 1));
  CHECK(BivarPoly().substitute_y(3).is_zero());
}

TEST_CASE("scale_x") {
  const BivarPoly rt2 = BivarPoly::from_terms({{2, 0, 1}, {0, 0, -2}});
  CHECK(rt2.scale_x(2) == BivarPoly::from_terms({{2, 0, 4}, {0, 0, -2}}));
  CHECK(rt2.scale_x(1) == rt2);
  CHECK(rt2.scale_x(0) == BivarPoly::constant(-2));
  CHECK(BivarPoly::x().scale_x(2) == BivarPoly::monomial(1, 0, 2));
}

TEST_CASE("halve_exact") {
  const BivarPoly doubled = BivarPoly::from_terms({{2, 0, 4}, {0, 0, -2}});
  CHECK(doubled.halve_exact() == BivarPoly::from_terms({{2, 0, 2}, {0, 0, -1}}));
  CHECK(BivarPoly().halve_exact().is_zero());
  CHECK(BivarPoly::monomial(1, 0, -6).halve_exact() ==
        BivarPoly::monomial(1, 0, -3));
  CHECK_THROWS_AS(BivarPoly::x().halve_exact(), dixon::ExactnessError);
  CHECK_THROWS_AS(BivarPoly::from_terms({{2, 0, 2}, {0, 0, 5}}).halve_exact(),
                  dixon::ExactnessError);
}

TEST_CASE("eval_int") {
  const BivarPoly l5 = BivarPoly::from_terms({{5, 0, 1}, {3, 0, 5}, {1, 0, 5}});
  CHECK(l5.eval_int(1, 0) == 11);
  const BivarPoly f5 = BivarPoly::from_terms({{5, 0, 1}, {3, 0, 4}, {1, 0, 3}});
  CHECK(f5.eval_int(1, 0) == 8);
  CHECK(BivarPoly::monomial(10, 0, 1).eval_int(3, 0) == 59049);
  // Standard first kind, index 3: x^3 - 3xy.
  const BivarPoly p3 = BivarPoly::from_terms({{3, 0, 1}, {1, 1, -3}});
  CHECK(p3.eval_int(5, 2) == 95);
  CHECK(d4().eval_int(0, 0) == 0);
  CHECK((d4() + BivarPoly::constant(7)).eval_int(0, 5) == 57);
  CHECK(BivarPoly().eval_int(9, 9) == 0);
  // Negative point, mixed signs.
  CHECK(p3.eval_int(-2, 3) == -8 + 18);
}

TEST_CASE("eval_float") {
  const BivarPoly t2 = BivarPoly::from_terms({{2, 0, 2}, {0, 0, -1}});
  const double c = std::cos(0.7);
  CHECK(std::abs(t2.eval_float(c, 0.0) - std::cos(1.4)) < 1e-12);
  const BivarPoly rt3 = BivarPoly::from_terms({{3, 0, 1}, {1, 0, -3}});
  CHECK(std::abs(rt3.eval_float(2 * std::cos(0.3), 0.0) - 2 * std::cos(0.9)) <
        1e-12);
  CHECK(BivarPoly::constant(2).eval_float(123.0, 4.0) == 2.0);
  CHECK(BivarPoly().eval_float(1.0, 1.0) == 0.0);
}

TEST_CASE("plain formatting") {
  const BivarPoly t5 = BivarPoly::from_terms({{5, 0, 16}, {3, 0, -20}, {1, 0, 5}});
  CHECK(t5.to_plain() == "16x^5 - 20x^3 + 5x");
  CHECK(BivarPoly().to_plain() == "0");
  CHECK(BivarPoly::constant(-7).to_plain() == "-7");
  CHECK(BivarPoly::from_terms({{2, 0, -1}, {0, 0, 3}}).to_plain() ==
        "-x^2 + 3");
  CHECK(BivarPoly::x().to_plain() == "x");
  CHECK(BivarPoly::monomial(1, 0, -1).to_plain() == "-x");
  CHECK(BivarPoly::monomial(0, 1, 2).to_plain() == "2y");
  CHECK(BivarPoly::monomial(1, 1, 1).to_plain() == "xy");
  CHECK(BivarPoly::from_terms({{1, 2, -1}, {0, 0, 4}}).to_plain() ==
        "-xy^2 + 4");
  CHECK(d4().to_plain() == "x^4 + 4x^2y + 2y^2");
}

TEST_CASE("latex formatting braces exponents of ten and above") {
  CHECK(d4().to_latex() == "x^4 + 4x^2y + 2y^2");
  CHECK(BivarPoly::monomial(12, 3, 1).to_latex() == "x^{12}y^3");
  CHECK(BivarPoly::monomial(2, 11, -5).to_latex() == "-5x^2y^{11}");
  CHECK(BivarPoly::monomial(10, 0, 1).to_plain() == "x^10");
}

TEST_CASE("json formatting and parsing") {
  const BivarPoly d2 = BivarPoly::from_terms({{2, 0, 1}, {0, 1, 1}});
  CHECK(d2.to_json() ==
        R"({"terms":[{"x":2,"y":0,"c":"1"},{"x":0,"y":1,"c":"1"}]})");
  CHECK(BivarPoly().to_json() == R"({"terms":[]})");
  CHECK(BivarPoly::from_json(d2.to_json()) == d2);
  CHECK(BivarPoly::from_json(R"({"terms":[]})").is_zero());
  // Duplicates are summed just like from_terms.
  CHECK(BivarPoly::from_json(
            R"({"terms":[{"x":1,"y":0,"c":"2"},{"x":1,"y":0,"c":"3"}]})") ==
        BivarPoly::monomial(1, 0, 5));
  CHECK_THROWS_AS(BivarPoly::from_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(BivarPoly::from_json(R"({"nope":1})"), std::invalid_argument);
  CHECK_THROWS_AS(BivarPoly::from_json(R"({"terms":[{"x":1,"y":0,"c":3}]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      BivarPoly::from_json(R"({"terms":[{"x":-1,"y":0,"c":"3"}]})"),
      std::invalid_argument);
  CHECK(BivarPoly::constant(-12).to_json() ==
        R"({"terms":[{"x":0,"y":0,"c":"-12"}]})");
}

TEST_CASE("csv formatting") {
  CHECK(d4().to_csv() == "x,y,c\n4,0,1\n2,1,4\n0,2,2\n");
  CHECK(BivarPoly().to_csv() == "x,y,c\n");
}

TEST_CASE("format dispatch matches the dedicated renderers") {
  const BivarPoly p = d4();
  CHECK(p.format(dixon::OutputStyle::plain) == p.to_plain());
  CHECK(p.format(dixon::OutputStyle::latex) == p.to_latex());
  CHECK(p.format(dixon::OutputStyle::json) == p.to_json());
  CHECK(p.format(dixon::OutputStyle::csv) == p.to_csv());
  CHECK(dixon::parse_style("plain") == dixon::OutputStyle::plain);
  CHECK(dixon::parse_style("latex") == dixon::OutputStyle::latex);
  CHECK(dixon::parse_style("json") == dixon::OutputStyle::json);
  CHECK(dixon::parse_style("csv") == dixon::OutputStyle::csv);
  CHECK_THROWS_AS(dixon::parse_style("yaml"), std::invalid_argument);
}

TEST_CASE("property: ring axioms on random polynomials") {
  dixon::Rng rng(0xDA11A5u);
  for (int it = 0; it < 200; ++it) {
    const BivarPoly a = testutil::random_poly(rng, 8, 50);
    const BivarPoly b = testutil::random_poly(rng, 8, 50);
    const BivarPoly c = testutil::random_poly(rng, 8, 50);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + (-a)).is_zero());
    CHECK((a * BivarPoly()).is_zero());
    CHECK(a * BivarPoly::constant(1) == a);
  }
}

TEST_CASE("property: eval_int is a ring homomorphism") {
  dixon::Rng rng(0xE7A1u);
  for (int it = 0; it < 200; ++it) {
    const BivarPoly a = testutil::random_poly(rng, 8, 50);
    const BivarPoly b = testutil::random_poly(rng, 8, 50);
    const BigInt x0 = rng.next_in(-20, 20);
    const BigInt y0 = rng.next_in(-20, 20);
    CHECK((a + b).eval_int(x0, y0) == a.eval_int(x0, y0) + b.eval_int(x0, y0));
    CHECK((a - b).eval_int(x0, y0) == a.eval_int(x0, y0) - b.eval_int(x0, y0));
    CHECK((a * b).eval_int(x0, y0) == a.eval_int(x0, y0) * b.eval_int(x0, y0));
    // Term-by-term power sum as an oracle for the Horner path.
    BigInt naive = 0;
    for (const auto& [e, coeff] : a.terms())
      naive += coeff *
               dixon::bigint_pow(x0, static_cast<unsigned long>(e.x)) *
               dixon::bigint_pow(y0, static_cast<unsigned long>(e.y));
    CHECK(a.eval_int(x0, y0) == naive);
  }
}

TEST_CASE("property: json round trip") {
  dixon::Rng rng(0x15EEDu);
  for (int it = 0; it < 200; ++it) {
    const BivarPoly a = testutil::random_poly(rng, 8, 50);
    CHECK(BivarPoly::from_json(a.to_json()) == a);
  }
}

TEST_CASE("property: halving is exact exactly when all coefficients are even") {
  dixon::Rng rng(0xA17Fu);
  for (int it = 0; it < 200; ++it) {
    const BivarPoly a = testutil::random_poly(rng, 8, 50);
    CHECK((a + a).halve_exact() == a);
    bool all_even = true;
    for (const auto& [e, c] : a.terms())
      all_even = all_even && dixon::bigint_is_even(c);
    if (all_even) {
      CHECK(a.halve_exact() + a.halve_exact() == a);
    } else {
      CHECK_THROWS_AS(a.halve_exact(), dixon::ExactnessError);
    }
  }
}

TEST_CASE("property: substitutions commute with evaluation") {
  dixon::Rng rng(0x5CA1Eu);
  for (int it = 0; it < 200; ++it) {
    const BivarPoly a = testutil::random_poly(rng, 8, 50);
    const BigInt k = rng.next_in(-9, 9);
    const BigInt x0 = rng.next_in(-9, 9);
    const BigInt y0 = rng.next_in(-9, 9);
    CHECK(a.substitute_y(k).eval_int(x0, 0) == a.eval_int(x0, k));
    CHECK(a.scale_x(k).eval_int(x0, y0) == a.eval_int(BigInt(k * x0), y0));
    CHECK(a.negate_y().eval_int(x0, y0) == a.eval_int(x0, BigInt(-y0)));
    CHECK(a.negate_y().negate_y() == a);
  }
}
