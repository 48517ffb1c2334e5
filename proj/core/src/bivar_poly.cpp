#include "dixon/bivar_poly.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include <nlohmann/json.hpp>

namespace dixon {

namespace {

void check_exponents(int x_exp, int y_exp) {
  if (x_exp < 0 || y_exp < 0)
    throw std::invalid_argument("polynomial exponents must be non-negative");
}

}  // namespace

OutputStyle parse_style(std::string_view name) {
  if (name == "plain") return OutputStyle::plain;
  if (name == "latex") return OutputStyle::latex;
  if (name == "json") return OutputStyle::json;
  if (name == "csv") return OutputStyle::csv;
  throw std::invalid_argument("unknown output style: " + std::string(name));
}

void BivarPoly::add_term(int x_exp, int y_exp, const BigInt& coeff) {
  check_exponents(x_exp, y_exp);
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(Exponents{x_exp, y_exp}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

BivarPoly BivarPoly::constant(BigInt c) {
  BivarPoly p;
  p.add_term(0, 0, c);
  return p;
}

BivarPoly BivarPoly::x() { return monomial(1, 0, 1); }
BivarPoly BivarPoly::y() { return monomial(0, 1, 1); }

BivarPoly BivarPoly::monomial(int x_exp, int y_exp, BigInt coeff) {
  BivarPoly p;
  p.add_term(x_exp, y_exp, coeff);
  return p;
}

BivarPoly BivarPoly::from_terms(const std::vector<TermSpec>& terms) {
  BivarPoly p;
  for (const auto& t : terms) p.add_term(t.x_exp, t.y_exp, t.coeff);
  return p;
}

BivarPoly BivarPoly::from_terms(std::initializer_list<TermSpec> terms) {
  BivarPoly p;
  for (const auto& t : terms) p.add_term(t.x_exp, t.y_exp, t.coeff);
  return p;
}

bool BivarPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0});
}

int BivarPoly::degree_x() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.x);
  return d;
}

int BivarPoly::degree_y() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.y);
  return d;
}

BigInt BivarPoly::coeff(int x_exp, int y_exp) const {
  auto it = terms_.find(Exponents{x_exp, y_exp});
  return it == terms_.end() ? BigInt(0) : it->second;
}

BivarPoly BivarPoly::operator-() const {
  BivarPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.x, e.y, c);
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.x, e.y, -c);
  return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      r.add_term(ea.x + eb.x, ea.y + eb.y, ca * cb);
  return r;
}

BivarPoly& BivarPoly::operator*=(const BivarPoly& o) {
  *this = *this * o;
  return *this;
}

BivarPoly BivarPoly::scaled(const BigInt& k) const {
  BivarPoly r;
  if (k == 0) return r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, k * c);
  return r;
}

BivarPoly BivarPoly::substitute_y(const BigInt& k) const {
  BivarPoly r;
  for (const auto& [e, c] : terms_)
    r.add_term(e.x, 0, c * bigint_pow(k, static_cast<unsigned long>(e.y)));
  return r;
}

BivarPoly BivarPoly::scale_x(const BigInt& k) const {
  BivarPoly r;
  for (const auto& [e, c] : terms_)
    r.add_term(e.x, e.y, c * bigint_pow(k, static_cast<unsigned long>(e.x)));
  return r;
}

BivarPoly BivarPoly::negate_y() const {
  BivarPoly r;
  for (const auto& [e, c] : terms_)
    r.terms_.emplace(e, (e.y % 2 == 0) ? c : BigInt(-c));
  return r;
}

BivarPoly BivarPoly::halve_exact() const {
  BivarPoly r;
  for (const auto& [e, c] : terms_) {
    if (!bigint_is_even(c))
      throw ExactnessError("coefficient " + to_decimal(c) + " of x^" +
                           std::to_string(e.x) + " y^" + std::to_string(e.y) +
                           " is odd; halving would not be exact");
    r.terms_.emplace(e, BigInt(c / 2));
  }
  return r;
}

BigInt BivarPoly::eval_int(const BigInt& x0, const BigInt& y0) const {
  // One sparse Horner pass per y power. Map order is x-descending first, so
  // each stratum arrives with its x exponents already descending.
  std::map<int, std::vector<std::pair<int, const BigInt*>>> strata;
  for (const auto& [e, c] : terms_) strata[e.y].emplace_back(e.x, &c);
  BigInt total = 0;
  for (const auto& [y_exp, ts] : strata) {
    BigInt acc = *ts.front().second;
    int x_deg = ts.front().first;
    for (std::size_t k = 1; k < ts.size(); ++k) {
      acc *= bigint_pow(x0, static_cast<unsigned long>(x_deg - ts[k].first));
      acc += *ts[k].second;
      x_deg = ts[k].first;
    }
    acc *= bigint_pow(x0, static_cast<unsigned long>(x_deg));
    total += acc * bigint_pow(y0, static_cast<unsigned long>(y_exp));
  }
  return total;
}

double BivarPoly::eval_float(double x0, double y0) const {
  const long double xl = x0;
  const long double yl = y0;
  long double total = 0.0L;
  // Group terms by y power first; groups are small, so a flat scan per
  // distinct power is fine.
  std::map<int, std::vector<std::pair<int, const BigInt*>>> strata;
  for (const auto& [e, c] : terms_) strata[e.y].emplace_back(e.x, &c);
  for (const auto& [y_exp, ts] : strata) {
    long double acc = ts.front().second->get_d();
    int x_deg = ts.front().first;
    for (std::size_t k = 1; k < ts.size(); ++k) {
      acc *= std::pow(xl, x_deg - ts[k].first);
      acc += ts[k].second->get_d();
      x_deg = ts[k].first;
    }
    acc *= std::pow(xl, x_deg);
    total += acc * std::pow(yl, y_exp);
  }
  return static_cast<double>(total);
}

std::string BivarPoly::render(bool latex) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool neg = c < 0;
    if (first) {
      if (neg) out += '-';
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    BigInt a = abs(c);
    std::string mono;
    auto append_var = [&](char v, int exp) {
      if (exp == 0) return;
      mono += v;
      if (exp == 1) return;
      mono += '^';
      if (latex && exp >= 10)
        mono += '{' + std::to_string(exp) + '}';
      else
        mono += std::to_string(exp);
    };
    append_var('x', e.x);
    append_var('y', e.y);
    if (mono.empty()) {
      out += to_decimal(a);
    } else {
      if (a != 1) out += to_decimal(a);
      out += mono;
    }
  }
  return out;
}

std::string BivarPoly::to_plain() const { return render(false); }
std::string BivarPoly::to_latex() const { return render(true); }

std::string BivarPoly::to_json() const {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [e, c] : terms_) {
    nlohmann::ordered_json t;
    t["x"] = e.x;
    t["y"] = e.y;
    t["c"] = to_decimal(c);
    terms.push_back(std::move(t));
  }
  nlohmann::ordered_json root;
  root["terms"] = std::move(terms);
  return root.dump();
}

std::string BivarPoly::to_csv() const {
  std::string out = "x,y,c\n";
  for (const auto& [e, c] : terms_)
    out += std::to_string(e.x) + ',' + std::to_string(e.y) + ',' +
           to_decimal(c) + '\n';
  return out;
}

std::string BivarPoly::format(OutputStyle style) const {
  switch (style) {
    case OutputStyle::plain: return to_plain();
    case OutputStyle::latex: return to_latex();
    case OutputStyle::json: return to_json();
    case OutputStyle::csv: return to_csv();
  }
  throw std::invalid_argument("unknown output style");
}

BivarPoly BivarPoly::from_json(std::string_view text) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("bad polynomial JSON: ") + e.what());
  }
  if (!root.is_object() || !root.contains("terms") || !root["terms"].is_array())
    throw std::invalid_argument("polynomial JSON must be {\"terms\": [...]}");
  BivarPoly p;
  for (const auto& t : root["terms"]) {
    if (!t.is_object() || !t.contains("x") || !t.contains("y") ||
        !t.contains("c") || !t["x"].is_number_integer() ||
        !t["y"].is_number_integer() || !t["c"].is_string())
      throw std::invalid_argument(
          "each term must be {\"x\": int, \"y\": int, \"c\": \"decimal\"}");
    p.add_term(t["x"].get<int>(), t["y"].get<int>(),
               bigint_from_decimal(t["c"].get<std::string>()));
  }
  return p;
}

std::ostream& operator<<(std::ostream& os, const BivarPoly& p) {
  return os << p.to_plain();
}

}  // namespace dixon
