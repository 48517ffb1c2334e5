#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

#include "dixon/bigint.hpp"
#include "dixon/families.hpp"

namespace dixon {

// Multiplication counter threaded through the integer fast paths. Additions
// are not counted: the asymptotic story here is about big-integer products.
struct OpCount {
  unsigned long long bigint_mults = 0;
};

// 2x2 big-integer matrix [[a, b], [c, d]].
struct IntMatrix2 {
  BigInt a, b, c, d;
};

// Plain product, 8 multiplications, counted if ops is given.
IntMatrix2 mat_mul(const IntMatrix2& l, const IntMatrix2& r,
                   OpCount* ops = nullptr);

// Binary exponentiation; n = 0 gives the identity. At most
// 8 * (2 floor(log2 n) + 1) multiplications.
IntMatrix2 mat_pow(IntMatrix2 base, unsigned long n, OpCount* ops = nullptr);

// Value of the parametrized Dixon polynomial at integer (x0, y0) through
// powers of [[x0, sign*y0], [1, 0]]: kind constant 2 reads the trace of the
// n-th power, kind constant 1 the lower-left entry of the (n+1)-th.
BigInt dixon_value(int c, int sign, unsigned long n, const BigInt& x0,
                   const BigInt& y0, OpCount* ops = nullptr);

// Same value by the O(n) scalar recurrence; 2 multiplications per step.
BigInt dixon_value_by_recurrence(int c, int sign, unsigned long n,
                                 const BigInt& x0, const BigInt& y0,
                                 OpCount* ops = nullptr);

// Integer sequences by the matrix route (indexing: lucas 2, 1, 3, 4, ... and
// fibonacci 1, 1, 2, 3, ... from n = 0).
BigInt lucas_number(unsigned long n);
BigInt fibonacci_number(unsigned long n);

// Addition-only recurrences, kept as independent oracles for the two above.
BigInt lucas_number_by_recurrence(unsigned long n);
BigInt fibonacci_number_by_recurrence(unsigned long n);

enum class EvalStrategy { recurrence, matrix_pow };
std::string_view strategy_name(EvalStrategy s);
std::optional<EvalStrategy> strategy_from_name(std::string_view name);

// Dixon parameters with a family's variable change already applied
// (standard Chebyshev doubles x and fixes y = 1; T halves the result).
struct EvalTarget {
  int c = 2;
  int sign = 1;
  BigInt x0 = 1;
  BigInt y0 = 1;
  bool halve = false;
};

EvalTarget eval_target(FamilyId f, const BigInt& x0, const BigInt& y0 = 1);
EvalTarget eval_target_dixon(int c, int sign, const BigInt& x0,
                             const BigInt& y0);

BigInt eval_by(EvalStrategy s, const EvalTarget& t, unsigned long n,
               OpCount* ops = nullptr);

struct BenchRecord {
  EvalStrategy strategy = EvalStrategy::recurrence;
  unsigned long n = 0;
  int reps = 0;
  std::chrono::nanoseconds total{0};
  unsigned long long bigint_mults = 0;  // for one evaluation
  BigInt value;
};

// Cross-checks the two strategies at (t, n) first and throws
// IdentityViolationError if they ever disagree, then times `reps`
// evaluations of the requested one.
BenchRecord bench(EvalStrategy s, const EvalTarget& t, unsigned long n,
                  int reps);

inline constexpr std::string_view kBenchCsvHeader =
    "strategy,n,reps,ns_total,bigint_mults";
std::string bench_csv_row(const BenchRecord& r);

}  // namespace dixon
