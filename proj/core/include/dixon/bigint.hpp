#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace dixon {

// All exact arithmetic in this library runs on arbitrary-precision integers.
// GMP's C++ class does the heavy lifting; the helpers below keep the raw
// mpz_* calls in one place.
using BigInt = mpz_class;

inline BigInt bigint_pow(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline bool bigint_is_even(const BigInt& v) {
  return mpz_even_p(v.get_mpz_t()) != 0;
}

inline std::string to_decimal(const BigInt& v) { return v.get_str(); }

// Parses an optionally signed decimal string. Throws std::invalid_argument
// on anything else (this is also what mpz_class itself throws).
inline BigInt bigint_from_decimal(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

}  // namespace dixon
