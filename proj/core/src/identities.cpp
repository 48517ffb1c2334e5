#include "dixon/identities.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "dixon/bigint.hpp"
#include "dixon/errors.hpp"
#include "dixon/families.hpp"
#include "dixon/rng.hpp"

namespace dixon {

namespace {

using Clock = std::chrono::steady_clock;
using MaybeCe = std::optional<Counterexample>;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string const_json(const BigInt& v) {
  return BivarPoly::constant(v).to_json();
}

std::string int2x2_str(long a, long b, long c, long d) {
  return "[[" + std::to_string(a) + "," + std::to_string(b) + "],[" +
         std::to_string(c) + "," + std::to_string(d) + "]]";
}

PolyMatrix int2x2(long a, long b, long c, long d) {
  return PolyMatrix::from_rows(
      {{BivarPoly::constant(a), BivarPoly::constant(b)},
       {BivarPoly::constant(c), BivarPoly::constant(d)}});
}

std::string double_str(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

template <typename Fn>
VerificationReport run_report(std::string id,
                              std::optional<std::pair<int, int>> range,
                              std::optional<long> trials, Fn&& body) {
  VerificationReport rep;
  rep.identity_id = std::move(id);
  rep.range = range;
  rep.trials = trials;
  const auto t0 = Clock::now();
  rep.counterexample = body();
  rep.passed = !rep.counterexample.has_value();
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

// Standard-recurrence polynomials of both kinds, indexed by n.
struct StdDixonTables {
  std::vector<BivarPoly> first;   // kind constant 2
  std::vector<BivarPoly> second;  // kind constant 1
};

StdDixonTables std_tables(int n_max) {
  StdDixonTables t;
  for (int n = 0; n <= n_max; ++n) {
    t.first.push_back(dixon_recurrence(2, -1, n));
    t.second.push_back(dixon_recurrence(1, -1, n));
  }
  return t;
}

MaybeCe check_prop1_matrix(const PolyMatrix& m, int n_max,
                           const StdDixonTables& tables) {
  const BigInt a = m.at(0, 0).coeff(0, 0);
  const BigInt b = m.at(0, 1).coeff(0, 0);
  const BigInt c = m.at(1, 0).coeff(0, 0);
  const BigInt d = m.at(1, 1).coeff(0, 0);
  const BigInt x = a + d;
  const BigInt y = a * d - b * c;
  const std::string mstr = "[[" + to_decimal(a) + "," + to_decimal(b) +
                           "],[" + to_decimal(c) + "," + to_decimal(d) + "]]";
  PolyMatrix mn = PolyMatrix::identity(2);
  for (int n = 0; n <= n_max; ++n) {
    if (n > 0) mn = mn * m;
    const BigInt pow_trace = mn.trace().coeff(0, 0);
    const BigInt first = tables.first[n].eval_int(x, y);
    if (pow_trace != first)
      return Counterexample{
          "M=" + mstr + ", n=" + std::to_string(n) + ", kind=first",
          const_json(pow_trace), const_json(first)};
    const BigInt sym_trace = m.sym_power(n).trace().coeff(0, 0);
    const BigInt second = tables.second[n].eval_int(x, y);
    if (sym_trace != second)
      return Counterexample{
          "M=" + mstr + ", n=" + std::to_string(n) + ", kind=second",
          const_json(sym_trace), const_json(second)};
  }
  return std::nullopt;
}

}  // namespace

std::string report_to_json(const VerificationReport& rep) {
  nlohmann::ordered_json j;
  j["identity_id"] = rep.identity_id;
  if (rep.range)
    j["range"] = {rep.range->first, rep.range->second};
  else
    j["range"] = nullptr;
  if (rep.trials)
    j["trials"] = *rep.trials;
  else
    j["trials"] = nullptr;
  j["passed"] = rep.passed;
  if (rep.counterexample) {
    nlohmann::ordered_json ce;
    ce["inputs"] = rep.counterexample->inputs;
    ce["lhs"] = rep.counterexample->lhs;
    ce["rhs"] = rep.counterexample->rhs;
    j["counterexample"] = std::move(ce);
  } else {
    j["counterexample"] = nullptr;
  }
  j["elapsed_ms"] = rep.elapsed_ms;
  return j.dump();
}

VerificationReport verify_trace_lemma(long trials, std::uint64_t seed) {
  return run_report("trace-lemma", std::nullopt, trials, [&]() -> MaybeCe {
    Rng rng(seed);
    for (long t = 0; t < trials; ++t) {
      const long a = rng.next_in(-9, 9), b = rng.next_in(-9, 9);
      const long c = rng.next_in(-9, 9), d = rng.next_in(-9, 9);
      const long e = rng.next_in(-9, 9), f = rng.next_in(-9, 9);
      const long g = rng.next_in(-9, 9), h = rng.next_in(-9, 9);
      // A^2 entrywise, then Tr(A^2 B).
      const long p = a * a + b * c, q = a * b + b * d;
      const long r = c * a + d * c, s = c * b + d * d;
      const long lhs = p * e + q * g + r * f + s * h;
      const long tr_ab = (a * e + b * g) + (c * f + d * h);
      const long rhs = (a + d) * tr_ab - (a * d - b * c) * (e + h);
      if (lhs != rhs)
        return Counterexample{"A=" + int2x2_str(a, b, c, d) +
                                  ", B=" + int2x2_str(e, f, g, h) +
                                  ", trial=" + std::to_string(t),
                              const_json(lhs), const_json(rhs)};
    }
    return std::nullopt;
  });
}

VerificationReport verify_prop1(const PolyMatrix& m, int n_max) {
  if (m.size() != 2)
    throw std::invalid_argument("trace comparison needs a 2x2 matrix");
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      if (!m.at(r, c).is_constant())
        throw std::invalid_argument(
            "trace comparison needs integer (constant) entries");
  return run_report("prop1", std::pair{0, n_max}, std::nullopt,
                    [&]() -> MaybeCe {
                      const auto tables = std_tables(n_max);
                      return check_prop1_matrix(m, n_max, tables);
                    });
}

VerificationReport verify_prop1_random(long trials, int n_max,
                                       std::uint64_t seed) {
  return run_report("prop1", std::pair{0, n_max}, trials, [&]() -> MaybeCe {
    const auto tables = std_tables(n_max);
    Rng rng(seed);
    for (long t = 0; t < trials; ++t) {
      const long a = rng.next_in(-9, 9), b = rng.next_in(-9, 9);
      const long c = rng.next_in(-9, 9), d = rng.next_in(-9, 9);
      auto ce = check_prop1_matrix(int2x2(a, b, c, d), n_max, tables);
      if (ce) {
        ce->inputs += ", trial=" + std::to_string(t);
        return ce;
      }
    }
    return std::nullopt;
  });
}

VerificationReport verify_triangular_trace(int n_max) {
  return run_report("triangular-trace", std::pair{0, n_max}, std::nullopt,
                    [&]() -> MaybeCe {
    for (int n = 0; n <= n_max; ++n) {
      for (long a = -1; a <= n; ++a) {
        for (long b = -1; b <= n; ++b) {
          // The claim is that the trace ignores the off-diagonal entry, so
          // probe with one that varies with everything else.
          const long c = 2 * a + 3 * b + 1 - n;
          const PolyMatrix m = int2x2(a, 0, c, b);
          const BigInt lhs =
              m.sym_power(static_cast<unsigned long>(n)).trace().coeff(0, 0);
          BigInt rhs = 0;
          for (int i = 0; i <= n; ++i)
            rhs += bigint_pow(BigInt(a), static_cast<unsigned long>(n - i)) *
                   bigint_pow(BigInt(b), static_cast<unsigned long>(i));
          if (lhs != rhs)
            return Counterexample{
                "M=" + int2x2_str(a, 0, c, b) + ", n=" + std::to_string(n),
                const_json(lhs), const_json(rhs)};
        }
      }
    }
    return std::nullopt;
  });
}

VerificationReport verify_family_equivalence(int n_max) {
  return run_report("family-equivalence", std::pair{0, n_max}, std::nullopt,
                    [&]() -> MaybeCe {
    for (FamilyId f : kAllFamilies) {
      for (int n = 0; n <= n_max; ++n) {
        const BivarPoly lhs = family_trace(f, n);
        const BivarPoly rhs = family_recurrence(f, n);
        if (lhs != rhs)
          return Counterexample{"family=" + std::string(family_name(f)) +
                                    ", n=" + std::to_string(n),
                                lhs.to_json(), rhs.to_json()};
      }
    }
    return std::nullopt;
  });
}

VerificationReport verify_reduction(int n_max) {
  return run_report("reduction", std::pair{0, n_max}, std::nullopt,
                    [&]() -> MaybeCe {
    for (FamilyId f : {FamilyId::ChebyshevT, FamilyId::ChebyshevU}) {
      for (int n = 0; n <= n_max; ++n) {
        const auto [lhs, rhs] = relate_reduced(f, n);
        if (lhs != rhs)
          return Counterexample{"family=" + std::string(family_name(f)) +
                                    ", n=" + std::to_string(n),
                                lhs.to_json(), rhs.to_json()};
      }
    }
    return std::nullopt;
  });
}

VerificationReport verify_sign_flip(int n_max) {
  return run_report("sign-flip", std::pair{0, n_max}, std::nullopt,
                    [&]() -> MaybeCe {
    for (int c : {2, 1}) {
      for (int n = 0; n <= n_max; ++n) {
        const BivarPoly lhs = dixon_recurrence(c, -1, n);
        const BivarPoly rhs = dixon_recurrence(c, +1, n).negate_y();
        if (lhs != rhs)
          return Counterexample{
              "kind=" + std::to_string(c) + ", n=" + std::to_string(n),
              lhs.to_json(), rhs.to_json()};
      }
    }
    return std::nullopt;
  });
}

VerificationReport verify_block_structure(int n_max) {
  return run_report("block-structure", std::pair{1, n_max}, std::nullopt,
                    [&]() -> MaybeCe {
    std::vector<BivarPoly> e;
    for (int k = 0; k <= n_max + 1; ++k) e.push_back(dixon_recurrence(1, 1, k));
    const PolyMatrix m = companion(FamilyId::DicksonReg2);
    const BivarPoly yp = BivarPoly::y();
    PolyMatrix power = m;
    for (int n = 1; n <= n_max; ++n) {
      power = power * m;  // m^(n+1)
      const BivarPoly expected[2][2] = {{e[n + 1], yp * e[n]},
                                        {e[n], yp * e[n - 1]}};
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
          if (power.at(r, c) != expected[r][c])
            return Counterexample{"n=" + std::to_string(n) + ", entry=(" +
                                      std::to_string(r) + "," +
                                      std::to_string(c) + ")",
                                  power.at(r, c).to_json(),
                                  expected[r][c].to_json()};
    }
    return std::nullopt;
  });
}

VerificationReport verify_kind_sum(int n_max) {
  return verify_poly_sweep(
      "kind-sum", 2, n_max,
      [](int n) {
        return dixon_recurrence(1, 1, n) +
               BivarPoly::y() * dixon_recurrence(1, 1, n - 2);
      },
      [](int n) { return dixon_recurrence(2, 1, n); });
}

VerificationReport verify_det_sym(long trials, int n_max, int symbolic_n_max,
                                  std::uint64_t seed) {
  return run_report("det-sym", std::pair{0, n_max}, trials,
                    [&]() -> MaybeCe {
    Rng rng(seed);
    for (long t = 0; t < trials; ++t) {
      const long a = rng.next_in(-3, 3), b = rng.next_in(-3, 3);
      const long c = rng.next_in(-3, 3), d = rng.next_in(-3, 3);
      const PolyMatrix m = int2x2(a, b, c, d);
      const BigInt detm = BigInt(a) * d - BigInt(b) * c;
      for (int n = 0; n <= n_max; ++n) {
        const BigInt lhs =
            m.sym_power(static_cast<unsigned long>(n)).det().coeff(0, 0);
        const BigInt rhs =
            bigint_pow(detm, static_cast<unsigned long>(n) * (n + 1) / 2);
        if (lhs != rhs)
          return Counterexample{"M=" + int2x2_str(a, b, c, d) +
                                    ", n=" + std::to_string(n) +
                                    ", trial=" + std::to_string(t),
                                const_json(lhs), const_json(rhs)};
      }
    }
    const PolyMatrix comp = companion(FamilyId::DicksonReg2);
    for (int n = 0; n <= symbolic_n_max; ++n) {
      const BivarPoly lhs = comp.sym_power(static_cast<unsigned long>(n)).det();
      const int tri = n * (n + 1) / 2;
      // det of the companion is -y, so the power is (-1)^tri y^tri.
      const BivarPoly rhs = BivarPoly::monomial(0, tri, tri % 2 == 0 ? 1 : -1);
      if (lhs != rhs)
        return Counterexample{"M=[[x,y],[1,0]], n=" + std::to_string(n),
                              lhs.to_json(), rhs.to_json()};
    }
    return std::nullopt;
  });
}

VerificationReport verify_subdiag_sums(int n_max) {
  return run_report("subdiag-sums", std::pair{0, n_max}, std::nullopt,
                    [&]() -> MaybeCe {
    std::vector<BivarPoly> e;
    for (int k = 0; k <= n_max; ++k) e.push_back(dixon_recurrence(1, 1, k));
    const PolyMatrix m = companion(FamilyId::DicksonReg2);
    for (int n = 0; n <= n_max; ++n) {
      const PolyMatrix s = m.sym_power(static_cast<unsigned long>(n));
      for (int k = 1; k <= n - 1; ++k) {
        BivarPoly sum;
        for (int r = k; r <= n; ++r) sum += s.at(r, r - k);
        if (sum != e[n - k])
          return Counterexample{
              "n=" + std::to_string(n) + ", k=" + std::to_string(k),
              sum.to_json(), e[n - k].to_json()};
      }
    }
    return std::nullopt;
  });
}

VerificationReport verify_pascal(int n_max) {
  return run_report("pascal", std::pair{0, n_max}, std::nullopt,
                    [&]() -> MaybeCe {
    // Independent oracle: the triangle built by additions alone.
    std::vector<std::vector<BigInt>> binom(n_max + 1);
    binom[0] = {BigInt(1)};
    for (int r = 1; r <= n_max; ++r) {
      binom[r].assign(r + 1, BigInt(0));
      binom[r][0] = 1;
      binom[r][r] = 1;
      for (int j = 1; j < r; ++j)
        binom[r][j] = binom[r - 1][j - 1] + binom[r - 1][j];
    }
    const PolyMatrix f = int2x2(1, 1, 1, 0);
    for (int n = 0; n <= n_max; ++n) {
      const PolyMatrix s = f.sym_power(static_cast<unsigned long>(n));
      for (int k = 0; k <= n; ++k) {
        for (int j = 0; j <= n; ++j) {
          const int row = n - k;
          const BigInt expected = j <= row ? binom[row][j] : BigInt(0);
          if (s.at(k, j) != BivarPoly::constant(expected))
            return Counterexample{"n=" + std::to_string(n) +
                                      ", row=" + std::to_string(k) +
                                      ", col=" + std::to_string(j),
                                  s.at(k, j).to_json(), const_json(expected)};
        }
      }
    }
    return std::nullopt;
  });
}

VerificationReport verify_trig(int n_max, int angle_count, double tol) {
  return run_report("trig", std::pair{0, n_max}, std::nullopt,
                    [&]() -> MaybeCe {
    for (int n = 0; n <= n_max; ++n) {
      const BivarPoly t = family_recurrence(FamilyId::ChebyshevT, n);
      const BivarPoly rt = family_recurrence(FamilyId::ReducedT, n);
      const BivarPoly u = family_recurrence(FamilyId::ChebyshevU, n);
      for (int i = 1; i <= angle_count; ++i) {
        const double phi = std::numbers::pi * i / (angle_count + 1);
        const double cp = std::cos(phi), sp = std::sin(phi);
        const struct {
          const char* id;
          double lhs, rhs;
        } checks[] = {
            {"chebyshev-t", t.eval_float(cp, 0.0), std::cos(n * phi)},
            {"reduced-t", rt.eval_float(2 * cp, 0.0), 2 * std::cos(n * phi)},
            {"chebyshev-u", u.eval_float(cp, 0.0) * sp,
             std::sin((n + 1) * phi)},
        };
        for (const auto& chk : checks) {
          if (std::abs(chk.lhs - chk.rhs) > tol)
            return Counterexample{std::string("identity=") + chk.id +
                                      ", n=" + std::to_string(n) +
                                      ", phi=" + double_str(phi),
                                  double_str(chk.lhs), double_str(chk.rhs)};
        }
      }
    }
    return std::nullopt;
  });
}

VerificationReport verify_poly_sweep(
    std::string identity_id, int n_min, int n_max,
    const std::function<BivarPoly(int)>& lhs,
    const std::function<BivarPoly(int)>& rhs) {
  return run_report(std::move(identity_id), std::pair{n_min, n_max},
                    std::nullopt, [&]() -> MaybeCe {
    for (int n = n_min; n <= n_max; ++n) {
      const BivarPoly l = lhs(n);
      const BivarPoly r = rhs(n);
      if (l != r)
        return Counterexample{"n=" + std::to_string(n), l.to_json(),
                              r.to_json()};
    }
    return std::nullopt;
  });
}

std::vector<VerificationReport> run_all(const VerifyConfig& config) {
  std::vector<VerificationReport> reports;
  reports.push_back(verify_trace_lemma(config.lemma_trials, config.seed + 1));
  reports.push_back(verify_prop1_random(config.prop1_trials,
                                        config.prop1_n_max, config.seed + 2));
  reports.push_back(verify_triangular_trace(config.triangular_n_max));
  reports.push_back(verify_family_equivalence(config.family_n_max));
  reports.push_back(verify_reduction(config.reduction_n_max));
  reports.push_back(verify_sign_flip(config.sign_flip_n_max));
  reports.push_back(verify_block_structure(config.block_n_max));
  reports.push_back(verify_kind_sum(config.kind_sum_n_max));
  reports.push_back(verify_det_sym(config.det_sym_trials, config.det_sym_n_max,
                                   config.det_sym_symbolic_n_max,
                                   config.seed + 9));
  reports.push_back(verify_subdiag_sums(config.subdiag_n_max));
  reports.push_back(verify_pascal(config.pascal_n_max));
  reports.push_back(
      verify_trig(config.trig_n_max, config.trig_angles, config.trig_tol));
  return reports;
}

std::span<const IdentityRecord> identity_registry() {
  static constexpr std::array<IdentityRecord, 13> records = {{
      {"trace-product-lemma",
       "Tr(A^2 B) = Tr(A) Tr(A B) - det(A) Tr(B) for 2x2 A, B",
       "trace-lemma"},
      {"power-trace",
       "Tr(M^n) is the standard first-kind polynomial at (Tr M, det M)",
       "prop1"},
      {"sym-power-trace",
       "Tr of the n-th symmetric power is the standard second-kind "
       "polynomial at (Tr M, det M)",
       "prop1"},
      {"triangular-sym-trace",
       "for triangular M with diagonal (a, b), Tr of the n-th symmetric "
       "power is the sum of a^(n-i) b^i",
       "triangular-trace"},
      {"companion-traces",
       "each family's recurrence equals the trace route through its "
       "companion matrix",
       "family-equivalence"},
      {"chebyshev-reduction",
       "2 T(n, x) = ReducedT(n, 2x) and U(n, x) = ReducedU(n, 2x)",
       "reduction"},
      {"dickson-sign-flip",
       "standard and regular Dickson polynomials differ by y -> -y, both "
       "kinds",
       "sign-flip"},
      {"companion-power-blocks",
       "[[x, y], [1, 0]]^(n+1) is [[E(n+1), y E(n)], [E(n), y E(n-1)]] in "
       "regular second-kind polynomials E",
       "block-structure"},
      {"kind-sum",
       "E(n) + y E(n-2) equals the regular first-kind polynomial D(n)",
       "kind-sum"},
      {"sym-power-det",
       "det of the n-th symmetric power is det(M)^(n(n+1)/2)",
       "det-sym"},
      {"sym-power-subdiagonals",
       "the k-th subdiagonal of [[x, y], [1, 0]]^(sym n) sums to E(n-k)",
       "subdiag-sums"},
      {"sym-power-pascal",
       "[[1, 1], [1, 0]]^(sym n) holds the binomials C(n-k, j)",
       "pascal"},
      {"chebyshev-trig",
       "T(n, cos phi) = cos(n phi), ReducedT(n, 2 cos phi) = 2 cos(n phi), "
       "U(n, cos phi) sin phi = sin((n+1) phi)",
       "trig"},
  }};
  return records;
}

}  // namespace dixon
