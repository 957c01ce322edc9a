#include <sstream>

#include "kplab/closed_form.hpp"
#include "kplab/det.hpp"
#include "kplab/errors.hpp"
#include "kplab/prover.hpp"

namespace kplab::sym {

namespace {

ApRat det_of(const KPParams& p) { return det_bareiss(kp_matrix(p)); }

std::string failure(const char* side, const KPParams& p, const ApRat& lhs,
                    const ApRat& rhs) {
  std::ostringstream out;
  out << side << " recurrence violated at (n=" << p.n << ", m=" << p.m
      << ", a=" << p.a << ", b=" << p.b << "): " << lhs << " != " << rhs;
  return out.str();
}

}  // namespace

std::optional<std::string> check_recurrence_point(const KPParams& p) {
  validate(p);
  if (p.m < 2) {
    throw DomainError("recurrence check needs m >= 2");
  }
  const long n = p.n, m = p.m, a = p.a, b = p.b;
  // Multiplied-out form X_m(a,b) X_{m-2}(a+1,b+1) = cross terms; every
  // shifted tuple stays in the validated domain when p is in it.
  {
    const ApRat lhs = det_of(p) * det_of({n, m - 2, a + 1, b + 1});
    const ApRat rhs = det_of({n, m - 1, a, b}) * det_of({n, m - 1, a + 1, b + 1}) -
                      det_of({n, m - 1, a + 1, b}) * det_of({n, m - 1, a, b + 1});
    if (lhs != rhs) {
      return failure("X=L", p, lhs, rhs);
    }
  }
  {
    const ApRat lhs =
        rabbit_rhs(p).value * rabbit_rhs({n, m - 2, a + 1, b + 1}).value;
    const ApRat rhs = rabbit_rhs({n, m - 1, a, b}).value *
                          rabbit_rhs({n, m - 1, a + 1, b + 1}).value -
                      rabbit_rhs({n, m - 1, a + 1, b}).value *
                          rabbit_rhs({n, m - 1, a, b + 1}).value;
    if (lhs != rhs) {
      return failure("X=R", p, lhs, rhs);
    }
  }
  // The divisor form of the recurrence also needs the divisor nonzero.
  if (det_of({n, m - 2, a + 1, b + 1}) == 0) {
    return std::string("zero recurrence divisor at (n=") + std::to_string(n) +
           ", m=" + std::to_string(m) + ", a=" + std::to_string(a) +
           ", b=" + std::to_string(b) + ")";
  }
  return std::nullopt;
}

RecurrenceCheckReport numeric_recurrence_check(long n_max) {
  RecurrenceCheckReport report;
  report.n_max = n_max;
  for (long n = 2; n <= n_max; ++n) {
    for (long m = 2; m <= n; ++m) {
      for (long a = 0; m + a <= n; ++a) {
        for (long b = 0; m + b <= n; ++b) {
          const KPParams p{n, m, a, b};
          ++report.points_checked;
          if (auto fail = check_recurrence_point(p)) {
            ++report.failures;
            if (!report.counterexample) {
              const std::string which = fail->substr(0, 3) == "X=R" ? "R" : "L";
              report.counterexample = RecurrenceCounterexample{p, which, *fail};
            }
          } else {
            ++report.passes;
          }
        }
      }
    }
  }
  return report;
}

std::string RecurrenceCheckReport::to_text() const {
  std::ostringstream out;
  out << "recurrence check up to n=" << n_max << ": " << points_checked
      << " points, " << passes << " pass, " << failures << " fail\n";
  if (counterexample) {
    out << "counterexample (X=" << counterexample->which
        << "): " << counterexample->detail << '\n';
  }
  return out.str();
}

}  // namespace kplab::sym
