#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <utility>

#include "dixon/bivar_poly.hpp"
#include "dixon/poly_matrix.hpp"

namespace dixon {

// The ten built-in families. The four Dickson entries are the parametrized
// Dixon recurrence with its kind constant and y-sign pinned; the others are
// the classical single-variable sequences it specializes to.
enum class FamilyId {
  DicksonStd1,  // P0 = 2, step x*P - y*P
  DicksonStd2,  // P0 = 1, step x*P - y*P
  DicksonReg1,  // D0 = 2, step x*D + y*D
  DicksonReg2,  // D0 = 1, step x*D + y*D
  ChebyshevT,   // cos(n phi) at x = cos(phi)
  ChebyshevU,   // sin((n+1) phi) / sin(phi)
  ReducedT,     // 2 cos(n phi) at x = 2 cos(phi)
  ReducedU,     // ReducedU(n) = U(n) with x halved
  Lucas,        // Lucas polynomials, L(n, 1) = Lucas numbers
  Fibonacci,    // Fibonacci polynomials, F(n, 1) = Fibonacci numbers
};

inline constexpr std::array<FamilyId, 10> kAllFamilies = {
    FamilyId::DicksonStd1, FamilyId::DicksonStd2, FamilyId::DicksonReg1,
    FamilyId::DicksonReg2, FamilyId::ChebyshevT,  FamilyId::ChebyshevU,
    FamilyId::ReducedT,    FamilyId::ReducedU,    FamilyId::Lucas,
    FamilyId::Fibonacci};

// Everything that distinguishes one family from another.
struct FamilyTraits {
  int c;             // kind constant: 2 -> matrix-power trace, 1 -> symmetric
  int sign;          // sign of the second recurrence term
  bool bivariate;    // second term carries the variable y (Dickson families)
  bool doubles_x;    // companion trace is 2x rather than x (Chebyshev T, U)
  bool halve_trace;  // the trace is twice the polynomial (Chebyshev T only)
};

const FamilyTraits& traits(FamilyId f);

std::string_view family_name(FamilyId f);  // the CLI spelling
std::optional<FamilyId> family_from_name(std::string_view name);

// n-th polynomial of the parametrized Dixon recurrence
//   P(0) = c, P(1) = x, P(n+1) = x*P(n) + sign*y*P(n-1)
// with c in {1, 2} and sign in {-1, +1}; anything else throws
// std::invalid_argument, as does n < 0.
BivarPoly dixon_recurrence(int c, int sign, int n);

// n-th polynomial of a family, by that family's own three-term recurrence.
BivarPoly family_recurrence(FamilyId f, int n);

// The same polynomial by the matrix route: trace of the n-th power (kind
// constant 2) or of the n-th symmetric power (kind constant 1) of the
// family's companion matrix, halved for Chebyshev T.
BivarPoly family_trace(FamilyId f, int n);

// The family's 2x2 companion matrix [[a, b], [1, 0]].
PolyMatrix companion(FamilyId f);

// The pair (chebyshev(n), reduced-counterpart(n) rewritten in Chebyshev
// variables); the two components are equal. f must be ChebyshevT or
// ChebyshevU.
std::pair<BivarPoly, BivarPoly> relate_reduced(FamilyId f, int n);

}  // namespace dixon
