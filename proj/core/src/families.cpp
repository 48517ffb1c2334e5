#include "dixon/families.hpp"

#include <stdexcept>
#include <string>

#include "dixon/errors.hpp"

namespace dixon {

namespace {

constexpr FamilyTraits kTraits[] = {
    /* DicksonStd1 */ {2, -1, true, false, false},
    /* DicksonStd2 */ {1, -1, true, false, false},
    /* DicksonReg1 */ {2, +1, true, false, false},
    /* DicksonReg2 */ {1, +1, true, false, false},
    /* ChebyshevT  */ {2, -1, false, true, true},
    /* ChebyshevU  */ {1, -1, false, true, false},
    /* ReducedT    */ {2, -1, false, false, false},
    /* ReducedU    */ {1, -1, false, false, false},
    /* Lucas       */ {2, +1, false, false, false},
    /* Fibonacci   */ {1, +1, false, false, false},
};

constexpr std::string_view kNames[] = {
    "dickson-std-1", "dickson-std-2", "dickson-reg-1", "dickson-reg-2",
    "chebyshev-t",   "chebyshev-u",   "reduced-t",     "reduced-u",
    "lucas",         "fibonacci",
};

// P(n+1) = a*P(n) + b*P(n-1) from seeds p0, p1.
BivarPoly three_term(BivarPoly p0, BivarPoly p1, const BivarPoly& a,
                     const BivarPoly& b, int n) {
  if (n < 0) throw std::invalid_argument("polynomial index must be >= 0");
  if (n == 0) return p0;
  for (int k = 1; k < n; ++k) {
    BivarPoly next = a * p1 + b * p0;
    p0 = std::move(p1);
    p1 = std::move(next);
  }
  return p1;
}

BivarPoly step_second_term(const FamilyTraits& t) {
  return t.bivariate ? BivarPoly::monomial(0, 1, t.sign)
                     : BivarPoly::constant(t.sign);
}

BivarPoly step_first_term(const FamilyTraits& t) {
  return BivarPoly::monomial(1, 0, t.doubles_x ? 2 : 1);
}

}  // namespace

const FamilyTraits& traits(FamilyId f) {
  return kTraits[static_cast<int>(f)];
}

std::string_view family_name(FamilyId f) {
  return kNames[static_cast<int>(f)];
}

std::optional<FamilyId> family_from_name(std::string_view name) {
  for (FamilyId f : kAllFamilies)
    if (family_name(f) == name) return f;
  return std::nullopt;
}

BivarPoly dixon_recurrence(int c, int sign, int n) {
  if (c != 1 && c != 2)
    throw std::invalid_argument("kind constant must be 1 or 2, got " +
                                std::to_string(c));
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("sign must be +1 or -1, got " +
                                std::to_string(sign));
  return three_term(BivarPoly::constant(c), BivarPoly::x(), BivarPoly::x(),
                    BivarPoly::monomial(0, 1, sign), n);
}

BivarPoly family_recurrence(FamilyId f, int n) {
  const FamilyTraits& t = traits(f);
  // Chebyshev T seeds from (1, x) even though its companion trace is 2x:
  // the halving is baked into the seeds instead of applied afterwards.
  BivarPoly p0 = BivarPoly::constant(t.halve_trace ? 1 : t.c);
  BivarPoly p1 = t.halve_trace ? BivarPoly::x() : step_first_term(t);
  return three_term(std::move(p0), std::move(p1), step_first_term(t),
                    step_second_term(t), n);
}

PolyMatrix companion(FamilyId f) {
  const FamilyTraits& t = traits(f);
  return PolyMatrix::from_rows({{step_first_term(t), step_second_term(t)},
                                {BivarPoly::constant(1), BivarPoly()}});
}

BivarPoly family_trace(FamilyId f, int n) {
  if (n < 0) throw std::invalid_argument("polynomial index must be >= 0");
  const FamilyTraits& t = traits(f);
  const PolyMatrix m = companion(f);
  const auto un = static_cast<unsigned long>(n);
  BivarPoly tr =
      t.c == 2 ? m.pow(un).trace() : m.sym_power(un).trace();
  return t.halve_trace ? tr.halve_exact() : tr;
}

std::pair<BivarPoly, BivarPoly> relate_reduced(FamilyId f, int n) {
  if (f == FamilyId::ChebyshevT) {
    // 2*T(n, x) = ReducedT(n, 2x)
    return {family_recurrence(f, n),
            family_recurrence(FamilyId::ReducedT, n).scale_x(2).halve_exact()};
  }
  if (f == FamilyId::ChebyshevU) {
    // U(n, x) = ReducedU(n, 2x)
    return {family_recurrence(f, n),
            family_recurrence(FamilyId::ReducedU, n).scale_x(2)};
  }
  throw std::invalid_argument(
      "reduced counterparts exist for chebyshev-t and chebyshev-u only");
}

}  // namespace dixon
