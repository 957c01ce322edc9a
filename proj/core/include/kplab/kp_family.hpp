#pragma once

#include "kplab/exact.hpp"
#include "kplab/matrix.hpp"

namespace kplab {

/// Parameters (n, m, a, b) of the binomial-product matrix family. The
/// validated domain (all nonnegative, m <= n, m+a <= n, m+b <= n) keeps every
/// binomial upper index nonnegative and every superfactorial argument of the
/// closed form >= -1. Points outside it are rejected, not guessed.
struct KPParams {
  long n = 0;
  long m = 0;
  long a = 0;
  long b = 0;

  bool operator==(const KPParams&) const = default;
};

bool in_validated_domain(const KPParams& p) noexcept;

/// Throws DomainError when p is outside the validated domain.
void validate(const KPParams& p);

/// Entry at 0-based (i, j), 0 <= i, j <= m:
///   C(i+j+a+b, i+a) * C(2n-i-j-a-b, n-i-a)
ApInt kp_entry(const KPParams& p, long i, long j);

/// The (m+1) x (m+1) matrix of kp_entry values.
ExactMatrix kp_matrix(const KPParams& p);

/// Which of the four m x m corner minors of kp_matrix(n, m, a, b) equal the
/// order-m family member at shifted parameters, entrywise:
///   A_m(1,1) vs (n, m-1, a,   b  )    A_m(2,2) vs (n, m-1, a+1, b+1)
///   A_m(2,1) vs (n, m-1, a+1, b  )    A_m(1,2) vs (n, m-1, a,   b+1)
/// This correspondence is what lets the condensation rule drive the family's
/// recurrence. Requires m >= 1.
struct ShiftReport {
  bool corner_11 = false;
  bool corner_22 = false;
  bool corner_21 = false;
  bool corner_12 = false;

  bool all() const { return corner_11 && corner_22 && corner_21 && corner_12; }
};

ShiftReport shift_correspondence(const KPParams& p);

}  // namespace kplab
