#include "dixon/seq_eval.hpp"

#include <stdexcept>
#include <utility>

#include "dixon/errors.hpp"

namespace dixon {

namespace {

void check_dixon_params(int c, int sign) {
  if (c != 1 && c != 2)
    throw std::invalid_argument("kind constant must be 1 or 2, got " +
                                std::to_string(c));
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("sign must be +1 or -1, got " +
                                std::to_string(sign));
}

BigInt halve_checked(BigInt v) {
  if (!bigint_is_even(v))
    throw IdentityViolationError(
        "trace value " + to_decimal(v) +
        " is odd; halving it would leave the integers");
  return v / 2;
}

}  // namespace

IntMatrix2 mat_mul(const IntMatrix2& l, const IntMatrix2& r, OpCount* ops) {
  if (ops) ops->bigint_mults += 8;
  return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d,
          l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
}

IntMatrix2 mat_pow(IntMatrix2 base, unsigned long n, OpCount* ops) {
  IntMatrix2 result{1, 0, 0, 1};
  while (n > 0) {
    if (n & 1UL) result = mat_mul(result, base, ops);
    n >>= 1UL;
    if (n > 0) base = mat_mul(base, base, ops);
  }
  return result;
}

BigInt dixon_value(int c, int sign, unsigned long n, const BigInt& x0,
                   const BigInt& y0, OpCount* ops) {
  check_dixon_params(c, sign);
  const IntMatrix2 m{x0, sign > 0 ? y0 : BigInt(-y0), 1, 0};
  if (c == 2) {
    const IntMatrix2 p = mat_pow(m, n, ops);
    return p.a + p.d;
  }
  return mat_pow(m, n + 1, ops).c;
}

BigInt dixon_value_by_recurrence(int c, int sign, unsigned long n,
                                 const BigInt& x0, const BigInt& y0,
                                 OpCount* ops) {
  check_dixon_params(c, sign);
  if (n == 0) return c;
  BigInt prev = c, cur = x0;
  for (unsigned long k = 1; k < n; ++k) {
    BigInt next = x0 * cur;
    if (sign > 0)
      next += y0 * prev;
    else
      next -= y0 * prev;
    if (ops) ops->bigint_mults += 2;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

BigInt lucas_number(unsigned long n) { return dixon_value(2, 1, n, 1, 1); }
BigInt fibonacci_number(unsigned long n) { return dixon_value(1, 1, n, 1, 1); }

BigInt lucas_number_by_recurrence(unsigned long n) {
  BigInt prev = 2, cur = 1;
  if (n == 0) return prev;
  for (unsigned long k = 1; k < n; ++k) {
    prev += cur;
    std::swap(prev, cur);
  }
  return cur;
}

BigInt fibonacci_number_by_recurrence(unsigned long n) {
  BigInt prev = 1, cur = 1;
  if (n == 0) return prev;
  for (unsigned long k = 1; k < n; ++k) {
    prev += cur;
    std::swap(prev, cur);
  }
  return cur;
}

std::string_view strategy_name(EvalStrategy s) {
  return s == EvalStrategy::recurrence ? "recurrence" : "matrix_pow";
}

std::optional<EvalStrategy> strategy_from_name(std::string_view name) {
  if (name == "recurrence") return EvalStrategy::recurrence;
  if (name == "matrix_pow") return EvalStrategy::matrix_pow;
  return std::nullopt;
}

EvalTarget eval_target(FamilyId f, const BigInt& x0, const BigInt& y0) {
  const FamilyTraits& t = traits(f);
  return {t.c, t.sign, t.doubles_x ? BigInt(2 * x0) : x0,
          t.bivariate ? y0 : BigInt(1), t.halve_trace};
}

EvalTarget eval_target_dixon(int c, int sign, const BigInt& x0,
                             const BigInt& y0) {
  check_dixon_params(c, sign);
  return {c, sign, x0, y0, false};
}

BigInt eval_by(EvalStrategy s, const EvalTarget& t, unsigned long n,
               OpCount* ops) {
  BigInt v = s == EvalStrategy::matrix_pow
                 ? dixon_value(t.c, t.sign, n, t.x0, t.y0, ops)
                 : dixon_value_by_recurrence(t.c, t.sign, n, t.x0, t.y0, ops);
  return t.halve ? halve_checked(std::move(v)) : v;
}

BenchRecord bench(EvalStrategy s, const EvalTarget& t, unsigned long n,
                  int reps) {
  if (reps < 1) throw std::invalid_argument("reps must be >= 1");
  const BigInt by_matrix = eval_by(EvalStrategy::matrix_pow, t, n);
  const BigInt by_recurrence = eval_by(EvalStrategy::recurrence, t, n);
  if (by_matrix != by_recurrence)
    throw IdentityViolationError(
        "strategies disagree at n=" + std::to_string(n) + ": matrix_pow " +
        to_decimal(by_matrix) + " vs recurrence " + to_decimal(by_recurrence));

  BenchRecord rec;
  rec.strategy = s;
  rec.n = n;
  rec.reps = reps;
  OpCount ops;
  rec.value = eval_by(s, t, n, &ops);
  rec.bigint_mults = ops.bigint_mults;
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) eval_by(s, t, n);
  const auto t1 = std::chrono::steady_clock::now();
  rec.total = std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0);
  return rec;
}

std::string bench_csv_row(const BenchRecord& r) {
  return std::string(strategy_name(r.strategy)) + ',' + std::to_string(r.n) +
         ',' + std::to_string(r.reps) + ',' + std::to_string(r.total.count()) +
         ',' + std::to_string(r.bigint_mults);
}

}  // namespace dixon
