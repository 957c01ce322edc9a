#include "kplab/closed_form.hpp"

#include <string>
#include <vector>

#include "kplab/errors.hpp"

namespace kplab {

namespace {

struct Factor {
  const char* name;  // for domain-error messages
  bool is_superfactorial;
  long argument;
};

ApInt factor_value(const Factor& f) {
  if (f.is_superfactorial) {
    if (f.argument < -1) {
      throw DomainError(std::string(f.name) + " with argument " +
                        std::to_string(f.argument));
    }
    return superfactorial(f.argument);
  }
  if (f.argument < 0) {
    throw DomainError(std::string(f.name) + " with argument " +
                      std::to_string(f.argument));
  }
  return factorial(f.argument);
}

ApInt product(const std::vector<Factor>& factors) {
  ApInt out(1);
  for (const Factor& f : factors) {
    out *= factor_value(f);
  }
  return out;
}

}  // namespace

RabbitValue rabbit_rhs(const KPParams& p) {
  validate(p);
  const long n = p.n, m = p.m, a = p.a, b = p.b;

  const std::vector<Factor> numerator_factors{
      {"(a+b)!", false, a + b},
      {"(2n-m)!!", true, 2 * n - m},
      {"m!!", true, m},
      {"(m+a+b)!!", true, m + a + b},
      {"(2n-m-a-b)!!", true, 2 * n - m - a - b},
      {"a!!", true, a},
      {"b!!", true, b},
      {"(n-m-a-1)!!", true, n - m - a - 1},
      {"(n-m-b-1)!!", true, n - m - b - 1},
  };
  const std::vector<Factor> denominator_factors{
      {"a!", false, a},
      {"b!", false, b},
      {"(2n+1)!!", true, 2 * n + 1},
      {"(n-a)!!", true, n - a},
      {"(n-b)!!", true, n - b},
      {"(m+a)!!", true, m + a},
      {"(m+b)!!", true, m + b},
      {"(a+b)!!", true, a + b},
      {"(2n-2m-a-b-1)!!", true, 2 * n - 2 * m - a - b - 1},
  };

  ApInt numerator = product(numerator_factors) *
                    pow_int(factorial(2 * n + 1), static_cast<unsigned long>(m + 1));
  const ApInt denominator = product(denominator_factors);

  RabbitValue out;
  out.value = make_rat(numerator, denominator);
  out.integral = is_integral(out.value);
  return out;
}

ApInt special_rhs(long n) {
  if (n < 0) {
    throw DomainError("special closed form needs n >= 0, got " + std::to_string(n));
  }
  return exact_div(pow_int(factorial(2 * n + 1), static_cast<unsigned long>(n + 1)),
                   superfactorial(2 * n + 1));
}

bool specialization_check(long n) {
  const RabbitValue r = rabbit_rhs({n, n, 0, 0});
  return r.integral && r.value == ApRat(special_rhs(n));
}

}  // namespace kplab
