#include "kplab/kp_family.hpp"

#include <stdexcept>
#include <string>

#include "kplab/errors.hpp"

namespace kplab {

namespace {

std::string params_str(const KPParams& p) {
  return "(n=" + std::to_string(p.n) + ", m=" + std::to_string(p.m) +
         ", a=" + std::to_string(p.a) + ", b=" + std::to_string(p.b) + ")";
}

}  // namespace

bool in_validated_domain(const KPParams& p) noexcept {
  return p.n >= 0 && p.m >= 0 && p.a >= 0 && p.b >= 0 && p.m <= p.n &&
         p.m + p.a <= p.n && p.m + p.b <= p.n;
}

void validate(const KPParams& p) {
  if (!in_validated_domain(p)) {
    throw DomainError("parameters " + params_str(p) +
                      " outside the validated domain (nonnegative, m <= n, "
                      "m+a <= n, m+b <= n)");
  }
}

ApInt kp_entry(const KPParams& p, long i, long j) {
  validate(p);
  if (i < 0 || j < 0 || i > p.m || j > p.m) {
    throw std::out_of_range("entry index (" + std::to_string(i) + ", " +
                            std::to_string(j) + ") outside 0.." +
                            std::to_string(p.m));
  }
  return binomial(i + j + p.a + p.b, i + p.a) *
         binomial(2 * p.n - i - j - p.a - p.b, p.n - i - p.a);
}

ExactMatrix kp_matrix(const KPParams& p) {
  validate(p);
  ExactMatrix out(static_cast<int>(p.m) + 1);
  for (long i = 0; i <= p.m; ++i) {
    for (long j = 0; j <= p.m; ++j) {
      out.at(static_cast<int>(i), static_cast<int>(j)) = ApRat(kp_entry(p, i, j));
    }
  }
  return out;
}

ShiftReport shift_correspondence(const KPParams& p) {
  validate(p);
  if (p.m < 1) {
    throw DomainError("shift correspondence needs m >= 1; " + params_str(p) +
                      " has no proper corner minor");
  }
  const ExactMatrix A = kp_matrix(p);
  const int m = static_cast<int>(p.m);
  ShiftReport report;
  report.corner_11 =
      connected_minor(A, m, 1, 1) == kp_matrix({p.n, p.m - 1, p.a, p.b});
  report.corner_22 =
      connected_minor(A, m, 2, 2) == kp_matrix({p.n, p.m - 1, p.a + 1, p.b + 1});
  report.corner_21 =
      connected_minor(A, m, 2, 1) == kp_matrix({p.n, p.m - 1, p.a + 1, p.b});
  report.corner_12 =
      connected_minor(A, m, 1, 2) == kp_matrix({p.n, p.m - 1, p.a, p.b + 1});
  return report;
}

}  // namespace kplab
