#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dixon/bivar_poly.hpp"
#include "dixon/poly_matrix.hpp"

namespace dixon {

// First failing instance of a checked identity. For exact checks lhs/rhs are
// polynomial JSON and re-parse with BivarPoly::from_json; for floating-point
// checks they are decimal literals.
struct Counterexample {
  std::string inputs;
  std::string lhs;
  std::string rhs;
};

struct VerificationReport {
  std::string identity_id;
  std::optional<std::pair<int, int>> range;  // swept index range, inclusive
  std::optional<long> trials;                // randomized trial count
  bool passed = false;
  std::optional<Counterexample> counterexample;
  double elapsed_ms = 0.0;
};

// One line of compact JSON with a fixed key order:
// identity_id, range, trials, passed, counterexample, elapsed_ms.
std::string report_to_json(const VerificationReport& report);

// Knobs for run_all. The defaults are the library's reference configuration;
// every randomized verifier derives its own stream from `seed`, so equal
// configs give equal reports (modulo elapsed_ms).
struct VerifyConfig {
  std::uint64_t seed = 12345;
  long lemma_trials = 1000;
  long prop1_trials = 100;
  int prop1_n_max = 16;
  int triangular_n_max = 16;
  int family_n_max = 64;
  int reduction_n_max = 32;
  int sign_flip_n_max = 32;
  int block_n_max = 32;
  int kind_sum_n_max = 64;
  long det_sym_trials = 20;
  int det_sym_n_max = 6;
  int det_sym_symbolic_n_max = 5;
  int subdiag_n_max = 16;
  int pascal_n_max = 20;
  int trig_n_max = 20;
  int trig_angles = 10;
  double trig_tol = 1e-9;
};

// Tr(A^2 B) = Tr(A) Tr(A B) - det(A) Tr(B) on random integer 2x2 pairs.
VerificationReport verify_trace_lemma(long trials, std::uint64_t seed);

// Tr(M^n) and Tr(M^(sym n)) against the standard Dixon polynomials of the
// first and second kind evaluated at (Tr M, det M). M must be 2x2 with
// constant entries.
VerificationReport verify_prop1(const PolyMatrix& m, int n_max);
VerificationReport verify_prop1_random(long trials, int n_max,
                                       std::uint64_t seed);

// For triangular M with diagonal (a, b), Tr(M^(sym n)) = sum a^(n-i) b^i,
// independent of the off-diagonal entry. Probes a deterministic grid of
// (a, b) pairs for each n.
VerificationReport verify_triangular_trace(int n_max);

// family_recurrence == family_trace for all ten families.
VerificationReport verify_family_equivalence(int n_max);

// 2 T(n, x) = ReducedT(n, 2x) and U(n, x) = ReducedU(n, 2x).
VerificationReport verify_reduction(int n_max);

// Standard and regular Dickson polynomials differ by y -> -y, both kinds.
VerificationReport verify_sign_flip(int n_max);

// [[x, y], [1, 0]]^(n+1) = [[E(n+1), y E(n)], [E(n), y E(n-1)]] where E is
// the regular second-kind sequence.
VerificationReport verify_block_structure(int n_max);

// E(n) + y E(n-2) = D(n): regular second kind to regular first kind.
VerificationReport verify_kind_sum(int n_max);

// det(M^(sym n)) = det(M)^(n(n+1)/2), on random integer matrices and
// symbolically on [[x, y], [1, 0]].
VerificationReport verify_det_sym(long trials, int n_max, int symbolic_n_max,
                                  std::uint64_t seed);

// The k-th subdiagonal of [[x, y], [1, 0]]^(sym n) sums to E(n-k).
VerificationReport verify_subdiag_sums(int n_max);

// [[1, 1], [1, 0]]^(sym n) holds binomial coefficients: entry (k, j) is
// C(n-k, j). Checked against an additively built Pascal triangle.
VerificationReport verify_pascal(int n_max);

// T(n, cos phi) = cos(n phi), ReducedT(n, 2 cos phi) = 2 cos(n phi) and
// U(n, cos phi) sin phi = sin((n+1) phi), within tol.
VerificationReport verify_trig(int n_max, int angle_count, double tol);

// Sweeps n over [n_min, n_max] and compares the two routes, reporting the
// first mismatch. Also the hook tests use to prove a broken oracle is
// actually caught.
VerificationReport verify_poly_sweep(
    std::string identity_id, int n_min, int n_max,
    const std::function<BivarPoly(int)>& lhs,
    const std::function<BivarPoly(int)>& rhs);

// Runs every verifier in a fixed order with per-verifier seeds derived from
// config.seed.
std::vector<VerificationReport> run_all(const VerifyConfig& config = {});

// Which verifier covers which claim. Tests walk this to guarantee nothing
// is silently dropped from run_all.
struct IdentityRecord {
  std::string_view identity_id;
  std::string_view statement;
  std::string_view verifier;
};
std::span<const IdentityRecord> identity_registry();

}  // namespace dixon
