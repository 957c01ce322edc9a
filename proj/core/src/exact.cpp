#include "kplab/exact.hpp"

#include <string>
#include <vector>

#include "kplab/errors.hpp"

namespace kplab {

// Caches grow monotonically and are thread_local, so concurrent callers see
// behavior identical to recomputation from scratch without any locking.

ApInt factorial(long k) {
  if (k < 0) {
    throw DomainError("factorial argument " + std::to_string(k) + " is negative");
  }
  thread_local std::vector<ApInt> cache{ApInt(1)};
  while (static_cast<long>(cache.size()) <= k) {
    cache.push_back(cache.back() * static_cast<long>(cache.size()));
  }
  return cache[static_cast<std::size_t>(k)];
}

ApInt superfactorial(long k) {
  if (k < -1) {
    throw DomainError("superfactorial argument " + std::to_string(k) +
                      " is below -1");
  }
  if (k == -1) {
    return ApInt(1);  // empty product
  }
  thread_local std::vector<ApInt> cache{ApInt(1)};  // 0!! = 0! = 1
  while (static_cast<long>(cache.size()) <= k) {
    cache.push_back(cache.back() * factorial(static_cast<long>(cache.size())));
  }
  return cache[static_cast<std::size_t>(k)];
}

ApInt binomial(long p, long q) {
  if (p < 0) {
    throw DomainError("binomial upper index " + std::to_string(p) + " is negative");
  }
  if (q < 0 || q > p) {
    return ApInt(0);
  }
  return exact_div(factorial(p), factorial(q) * factorial(p - q));
}

ApInt pow_int(const ApInt& base, unsigned long exp) {
  ApInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

ApRat pow_rat(const ApInt& base, long exp) {
  if (exp >= 0) {
    return ApRat(pow_int(base, static_cast<unsigned long>(exp)));
  }
  if (base == 0) {
    throw DomainError("zero base raised to negative exponent " + std::to_string(exp));
  }
  return make_rat(ApInt(1), pow_int(base, static_cast<unsigned long>(-exp)));
}

ApInt exact_div(const ApInt& num, const ApInt& den) {
  if (den == 0) {
    throw DomainError("division by zero");
  }
  ApInt q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) {
    throw InternalError("non-exact division: " + num.get_str() + " by " +
                        den.get_str());
  }
  return q;
}

ApRat make_rat(const ApInt& num, const ApInt& den) {
  if (den == 0) {
    throw DomainError("rational with zero denominator");
  }
  ApRat q(num, den);
  q.canonicalize();
  return q;
}

std::size_t bit_length(const ApInt& v) {
  if (v == 0) {
    return 0;
  }
  return mpz_sizeinbase(v.get_mpz_t(), 2);
}

std::size_t bit_length(const ApRat& q) {
  const std::size_t num_bits = bit_length(ApInt(q.get_num()));
  const std::size_t den_bits = bit_length(ApInt(q.get_den()));
  return num_bits > den_bits ? num_bits : den_bits;
}

}  // namespace kplab
