#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kplab/fac_product.hpp"
#include "kplab/kp_family.hpp"
#include "kplab/multipoly.hpp"

namespace kplab::sym {

/// The closed-form product R_{m+shift_m}(a+shift_a, b+shift_b) with every
/// argument and the (2n+1)! exponent expressed as linear forms. shift_m must
/// lie in {-2..0} and shift_a, shift_b in {0, 1}. When numeric_m is given,
/// m is substituted by that value before shifting, as needed for the
/// fixed-m and base-case proofs.
FacProduct build_R_expr(int shift_m, int shift_a, int shift_b,
                        std::optional<long> numeric_m = std::nullopt);

/// A term with an explicit determinant-expansion sign.
struct SignedProduct {
  int sign;  // +1 or -1
  FacProduct product;
};

/// The determinant side at m = 0 (one term) or m = 1 (the two-term 2x2
/// expansion), each term a product of factorial ratios.
std::vector<SignedProduct> build_L_base_expr(int m_value);

enum class ProofStatus { proven, stalled, refuted };

const char* to_string(ProofStatus s);

struct ProofReport {
  std::string mode;
  ProofStatus status = ProofStatus::stalled;
  long rewrite_steps = 0;
  /// Total degrees of the two sides of the verified polynomial identity
  /// p1*q2 - p2*q1 = q1*q2; -1 when the proof never reached polynomials.
  int degree_lhs = -1;
  int degree_rhs = -1;
  std::string detail;
  std::optional<Point> witness;  // refutation evaluation point

  /// Structured text: mode, status, rewrite steps, degrees, witness if any.
  std::string to_text() const;
};

inline constexpr std::uint64_t kDefaultSpotSeed = 0x5eedf00dULL;

/// Proves the recurrence identity T1 - T2 = 1 for the closed form with n, m,
/// a, b fully symbolic; the symbolic (2n+1)! exponents must cancel during
/// ratio canonicalization for this to reach polynomials. Every proof is
/// spot-checked numerically at 20 random validated-domain points.
ProofReport prove_recurrence_generic(std::uint64_t spot_seed = kDefaultSpotSeed);

/// Same identity with m fixed to a numeric value >= 2; n, a, b symbolic.
ProofReport prove_recurrence_fixed(long m_value,
                                   std::uint64_t spot_seed = kDefaultSpotSeed);

/// m = 0: the single-term ratio must simplify to the empty product.
/// m = 1: the two-term identity, proven like the recurrence.
std::vector<ProofReport> prove_base_cases(std::uint64_t spot_seed = kDefaultSpotSeed);

struct RecurrenceCounterexample {
  KPParams p;
  std::string which;  // "L" or "R"
  std::string detail;
};

struct RecurrenceCheckReport {
  long n_max = 0;
  long points_checked = 0;
  long passes = 0;
  long failures = 0;
  std::optional<RecurrenceCounterexample> counterexample;

  bool all_passed() const { return failures == 0; }
  std::string to_text() const;
};

/// Failure description for one eligible point, or nullopt when the
/// recurrence holds there for both X = L (determinant engines) and X = R
/// (closed form). Requires m >= 2 and p in the validated domain.
std::optional<std::string> check_recurrence_point(const KPParams& p);

/// Verifies the recurrence exactly at every validated-domain point with
/// n <= n_max and m >= 2. n_max < 2 yields an empty report.
RecurrenceCheckReport numeric_recurrence_check(long n_max);

}  // namespace kplab::sym
