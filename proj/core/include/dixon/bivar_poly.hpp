#pragma once

#include <initializer_list>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "dixon/bigint.hpp"
#include "dixon/errors.hpp"

namespace dixon {

// Exponent pair of one monomial c * x^x_exp * y^y_exp.
struct Exponents {
  int x = 0;
  int y = 0;
  friend bool operator==(const Exponents&, const Exponents&) = default;
};

// Canonical term order, which is also the display order: decreasing degree
// in x, then increasing degree in y.
struct ExponentsOrder {
  bool operator()(const Exponents& a, const Exponents& b) const {
    if (a.x != b.x) return a.x > b.x;
    return a.y < b.y;
  }
};

enum class OutputStyle { plain, latex, json, csv };

// Parses "plain" / "latex" / "json" / "csv"; throws std::invalid_argument.
OutputStyle parse_style(std::string_view name);

struct TermSpec {
  int x_exp;
  int y_exp;
  BigInt coeff;
};

// Bivariate polynomial over the integers, stored sparsely. The map never
// holds a zero coefficient, so structural equality is polynomial equality.
class BivarPoly {
 public:
  using TermMap = std::map<Exponents, BigInt, ExponentsOrder>;

  BivarPoly() = default;  // the zero polynomial

  static BivarPoly constant(BigInt c);
  static BivarPoly x();
  static BivarPoly y();
  static BivarPoly monomial(int x_exp, int y_exp, BigInt coeff);

  // Builds from (x_exp, y_exp, coeff) triples. Duplicate exponent pairs are
  // summed; negative exponents throw std::invalid_argument.
  static BivarPoly from_terms(const std::vector<TermSpec>& terms);
  static BivarPoly from_terms(std::initializer_list<TermSpec> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int degree_x() const;  // -1 for the zero polynomial
  int degree_y() const;
  std::size_t term_count() const { return terms_.size(); }
  BigInt coeff(int x_exp, int y_exp) const;  // 0 if absent

  // Ref-qualified so that iterating terms() of a temporary polynomial, e.g.
  // `for (... : make_poly().terms())`, yields a value the range-for keeps
  // alive instead of a reference into a destroyed object.
  const TermMap& terms() const& { return terms_; }
  TermMap terms() && { return std::move(terms_); }

  BivarPoly operator-() const;
  BivarPoly& operator+=(const BivarPoly& o);
  BivarPoly& operator-=(const BivarPoly& o);
  BivarPoly& operator*=(const BivarPoly& o);
  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
  friend bool operator==(const BivarPoly&, const BivarPoly&) = default;

  BivarPoly scaled(const BigInt& k) const;  // k * p

  // p(x, k): collapses y, merging terms that land on the same x power.
  BivarPoly substitute_y(const BigInt& k) const;

  // p(k*x, y).
  BivarPoly scale_x(const BigInt& k) const;

  // p(x, -y).
  BivarPoly negate_y() const;

  // p/2 when every coefficient is even; throws ExactnessError otherwise.
  BivarPoly halve_exact() const;

  // Exact evaluation. Terms are grouped by y power; each group is folded
  // Horner-style along its sparse x exponents.
  BigInt eval_int(const BigInt& x0, const BigInt& y0) const;

  // Same scheme in floating point. Accumulates in long double so the
  // Horner rounding stays far below the library's trig tolerances.
  double eval_float(double x0, double y0) const;

  std::string format(OutputStyle style) const;
  std::string to_plain() const;
  std::string to_latex() const;
  std::string to_json() const;   // {"terms":[{"x":i,"y":j,"c":"<decimal>"},...]}
  std::string to_csv() const;    // header "x,y,c", one row per term

  // Inverse of to_json; throws std::invalid_argument on malformed input.
  static BivarPoly from_json(std::string_view text);

  friend std::ostream& operator<<(std::ostream& os, const BivarPoly& p);

 private:
  void add_term(int x_exp, int y_exp, const BigInt& coeff);
  std::string render(bool latex) const;

  TermMap terms_;
};

}  // namespace dixon
