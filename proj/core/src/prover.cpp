#include "kplab/prover.hpp"

#include <sstream>
#include <stdexcept>

#include "kplab/errors.hpp"
#include "kplab/rng.hpp"

namespace kplab::sym {

FacProduct build_R_expr(int shift_m, int shift_a, int shift_b,
                        std::optional<long> numeric_m) {
  if (shift_m < -2 || shift_m > 0 || shift_a < 0 || shift_a > 1 || shift_b < 0 ||
      shift_b > 1) {
    throw std::invalid_argument("closed-form shifts limited to {-2..0}x{0,1}x{0,1}");
  }
  const LinearForm N = LinearForm::var(Var::n);
  const LinearForm M =
      (numeric_m ? LinearForm::of(*numeric_m) : LinearForm::var(Var::m)) + shift_m;
  const LinearForm A = LinearForm::var(Var::a) + shift_a;
  const LinearForm B = LinearForm::var(Var::b) + shift_b;
  const LinearForm one = LinearForm::of(1);

  std::vector<FacFactor> fs;
  auto fact = [&fs](const LinearForm& arg, const LinearForm& exp) {
    fs.push_back({FacKind::factorial, arg, exp});
  };
  auto sf = [&fs](const LinearForm& arg, long long exp) {
    fs.push_back({FacKind::superfactorial, arg, LinearForm::of(exp)});
  };

  // numerator
  fact(A + B, one);
  fact(2 * N + 1, M + 1);
  sf(2 * N - M, 1);
  sf(M, 1);
  sf(M + A + B, 1);
  sf(2 * N - M - A - B, 1);
  sf(A, 1);
  sf(B, 1);
  sf(N - M - A - 1, 1);
  sf(N - M - B - 1, 1);
  // denominator
  fact(A, LinearForm::of(-1));
  fact(B, LinearForm::of(-1));
  sf(2 * N + 1, -1);
  sf(N - A, -1);
  sf(N - B, -1);
  sf(M + A, -1);
  sf(M + B, -1);
  sf(A + B, -1);
  sf(2 * N - 2 * M - A - B - 1, -1);
  return FacProduct::from_factors(fs);
}

namespace {

// C(p, q) as the factorial ratio p! / (q! (p-q)!).
FacProduct binomial_expr(const LinearForm& p, const LinearForm& q) {
  return FacProduct::from_factors({
      {FacKind::factorial, p, LinearForm::of(1)},
      {FacKind::factorial, q, LinearForm::of(-1)},
      {FacKind::factorial, p - q, LinearForm::of(-1)},
  });
}

// Matrix entry (i, j) as a product of two binomial factorial ratios.
FacProduct entry_expr(long i, long j) {
  const LinearForm N = LinearForm::var(Var::n);
  const LinearForm A = LinearForm::var(Var::a);
  const LinearForm B = LinearForm::var(Var::b);
  return binomial_expr(A + B + (i + j), A + i) *
         binomial_expr(2 * N - A - B - (i + j), N - A - i);
}

}  // namespace

std::vector<SignedProduct> build_L_base_expr(int m_value) {
  if (m_value == 0) {
    return {{+1, entry_expr(0, 0)}};
  }
  if (m_value == 1) {
    return {{+1, entry_expr(0, 0) * entry_expr(1, 1)},
            {-1, entry_expr(0, 1) * entry_expr(1, 0)}};
  }
  throw std::invalid_argument("determinant base expressions exist for m = 0, 1 only");
}

const char* to_string(ProofStatus s) {
  switch (s) {
    case ProofStatus::proven:
      return "proven";
    case ProofStatus::stalled:
      return "stalled";
    case ProofStatus::refuted:
      return "refuted";
  }
  return "?";
}

std::string ProofReport::to_text() const {
  std::ostringstream out;
  out << "mode: " << mode << '\n';
  out << "status: " << to_string(status) << '\n';
  out << "rewrite-steps: " << rewrite_steps << '\n';
  out << "identity-degree-lhs: " << degree_lhs << '\n';
  out << "identity-degree-rhs: " << degree_rhs << '\n';
  if (witness) {
    out << "witness: n=" << (*witness)[0] << " m=" << (*witness)[1]
        << " a=" << (*witness)[2] << " b=" << (*witness)[3] << '\n';
  }
  if (!detail.empty()) {
    out << "detail: " << detail << '\n';
  }
  return out.str();
}

namespace {

std::string point_str(const Point& pt) {
  return "(n=" + std::to_string(pt[0]) + ", m=" + std::to_string(pt[1]) +
         ", a=" + std::to_string(pt[2]) + ", b=" + std::to_string(pt[3]) + ")";
}

// Random validated-domain point; m is forced to fixed_m when given, else
// drawn from [min_m, min_m+3].
Point random_domain_point(SplitMix64& rng, std::optional<long> fixed_m, long min_m) {
  const long long m = fixed_m ? *fixed_m : rng.range(min_m, min_m + 3);
  const long long a = rng.range(0, 3);
  const long long b = rng.range(0, 3);
  const long long n = m + std::max(a, b) + rng.range(0, 3);
  return {n, m, a, b};
}

// Exact numeric check that T1 - T2 = 1 at 20 random validated-domain points,
// independent of the polynomial route.
bool spot_check_difference(const FacProduct& t1, const FacProduct& t2,
                           std::optional<long> fixed_m, long min_m,
                           std::uint64_t seed, Point& bad_point) {
  SplitMix64 rng(seed);
  for (int i = 0; i < 20; ++i) {
    const Point pt = random_domain_point(rng, fixed_m, min_m);
    if (eval(t1, pt) - eval(t2, pt) != 1) {
      bad_point = pt;
      return false;
    }
  }
  return true;
}

// Witness hunt for a refuted polynomial identity.
std::optional<Point> find_witness(const MultiPoly& lhs, const MultiPoly& rhs,
                                  std::uint64_t seed) {
  SplitMix64 rng(seed);
  for (int i = 0; i < 1000; ++i) {
    const Point pt{rng.range(-9, 9), rng.range(-9, 9), rng.range(-9, 9),
                   rng.range(-9, 9)};
    if (lhs.eval(pt) != rhs.eval(pt)) {
      return pt;
    }
  }
  return std::nullopt;
}

// Shared tail of every two-term proof: simplify T1 and T2, reduce both to
// rational functions, and verify T1 - T2 = 1 as the polynomial identity
// p1*q2 - p2*q1 = q1*q2, with a randomized evaluation fast-fail first.
ProofReport prove_difference_is_one(std::string mode, const FacProduct& t1,
                                    const FacProduct& t2,
                                    std::optional<long> fixed_m, long min_m,
                                    std::uint64_t spot_seed) {
  ProofReport report;
  report.mode = std::move(mode);

  const SimplifyResult s1 = simplify(t1);
  const SimplifyResult s2 = simplify(t2);
  report.rewrite_steps = s1.steps + s2.steps;

  MultiPoly p1, q1, p2, q2;
  try {
    std::tie(p1, q1) = to_rational_function(s1.product);
    std::tie(p2, q2) = to_rational_function(s2.product);
  } catch (const StallError& e) {
    report.status = ProofStatus::stalled;
    report.detail = e.what();
    return report;
  }

  const MultiPoly lhs = p1 * q2 - p2 * q1;
  const MultiPoly rhs = q1 * q2;
  report.degree_lhs = lhs.total_degree();
  report.degree_rhs = rhs.total_degree();

  SplitMix64 precheck(spot_seed ^ 0xabcdefULL);
  for (int i = 0; i < 5; ++i) {
    const Point pt{precheck.range(-9, 9), precheck.range(-9, 9),
                   precheck.range(-9, 9), precheck.range(-9, 9)};
    if (lhs.eval(pt) != rhs.eval(pt)) {
      report.status = ProofStatus::refuted;
      report.witness = pt;
      report.detail = "randomized pre-check mismatch at " + point_str(pt);
      return report;
    }
  }

  if (!(lhs == rhs)) {
    report.status = ProofStatus::refuted;
    report.witness = find_witness(lhs, rhs, spot_seed ^ 0x777ULL);
    report.detail = "polynomial identity failed: lhs " + lhs.str() + " vs rhs " +
                    rhs.str();
    return report;
  }

  Point bad{};
  if (!spot_check_difference(t1, t2, fixed_m, min_m, spot_seed, bad)) {
    report.status = ProofStatus::refuted;
    report.witness = bad;
    report.detail = "numeric spot check of T1 - T2 = 1 failed at " + point_str(bad);
    return report;
  }

  report.status = ProofStatus::proven;
  report.detail = "T1 simplified to " + s1.product.str() + "; T2 simplified to " +
                  s2.product.str();
  return report;
}

struct RecurrenceRatios {
  FacProduct t1;
  FacProduct t2;
};

// T1 = R_{m-1}(a,b) R_{m-1}(a+1,b+1) / (R_{m-2}(a+1,b+1) R_m(a,b)) and the
// crossed T2; the recurrence is exactly T1 - T2 = 1.
RecurrenceRatios recurrence_ratios(std::optional<long> numeric_m) {
  const FacProduct r_m = build_R_expr(0, 0, 0, numeric_m);
  const FacProduct r1_00 = build_R_expr(-1, 0, 0, numeric_m);
  const FacProduct r1_11 = build_R_expr(-1, 1, 1, numeric_m);
  const FacProduct r1_10 = build_R_expr(-1, 1, 0, numeric_m);
  const FacProduct r1_01 = build_R_expr(-1, 0, 1, numeric_m);
  const FacProduct r2_11 = build_R_expr(-2, 1, 1, numeric_m);
  const FacProduct den = r2_11 * r_m;
  return {ratio(r1_00 * r1_11, den), ratio(r1_10 * r1_01, den)};
}

}  // namespace

ProofReport prove_recurrence_generic(std::uint64_t spot_seed) {
  const RecurrenceRatios r = recurrence_ratios(std::nullopt);
  return prove_difference_is_one("generic-m", r.t1, r.t2, std::nullopt, 2, spot_seed);
}

ProofReport prove_recurrence_fixed(long m_value, std::uint64_t spot_seed) {
  if (m_value < 2) {
    throw std::invalid_argument("fixed-m recurrence proof needs m >= 2, got " +
                                std::to_string(m_value));
  }
  const RecurrenceRatios r = recurrence_ratios(m_value);
  return prove_difference_is_one("fixed-m-" + std::to_string(m_value), r.t1, r.t2,
                                 m_value, 2, spot_seed);
}

std::vector<ProofReport> prove_base_cases(std::uint64_t spot_seed) {
  std::vector<ProofReport> reports;

  // m = 0: one term; the ratio against the closed form must vanish entirely.
  {
    ProofReport report;
    report.mode = "base-m0";
    const FacProduct t =
        ratio(build_L_base_expr(0)[0].product, build_R_expr(0, 0, 0, 0L));
    const SimplifyResult s = simplify(t);
    report.rewrite_steps = s.steps;
    if (s.product.empty()) {
      // Numeric spot check on the original ratio.
      SplitMix64 rng(spot_seed);
      report.status = ProofStatus::proven;
      report.detail = "ratio reduced to the empty product";
      for (int i = 0; i < 20; ++i) {
        const Point pt = random_domain_point(rng, 0L, 0);
        if (eval(t, pt) != 1) {
          report.status = ProofStatus::refuted;
          report.witness = pt;
          report.detail = "numeric spot check of L/R = 1 failed at " + point_str(pt);
          break;
        }
      }
    } else {
      report.status = ProofStatus::stalled;
      report.detail = "leftover factors: " + s.product.str();
    }
    reports.push_back(std::move(report));
  }

  // m = 1: both determinant terms over R_1(a,b), then T1 - T2 = 1.
  {
    const std::vector<SignedProduct> terms = build_L_base_expr(1);
    const FacProduct r1 = build_R_expr(0, 0, 0, 1L);
    reports.push_back(prove_difference_is_one("base-m1",
                                              ratio(terms[0].product, r1),
                                              ratio(terms[1].product, r1), 1L, 1,
                                              spot_seed ^ 0x1111ULL));
  }
  return reports;
}

}  // namespace kplab::sym
