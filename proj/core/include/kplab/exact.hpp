#pragma once

#include <gmpxx.h>

#include <cstddef>

namespace kplab {

/// Exact signed integer, unbounded.
using ApInt = mpz_class;

/// Exact rational, always in lowest terms with positive denominator.
using ApRat = mpq_class;

/// k! for k >= 0. Memoized; repeated calls are O(1) after the first.
ApInt factorial(long k);

/// 0!*1!*...*k! for k >= -1, with the empty-product convention
/// superfactorial(-1) = 1. Arguments below -1 are a domain error.
ApInt superfactorial(long k);

/// C(p, q) for p >= 0 and any integer q; vanishes for q < 0 or q > p so
/// matrix construction is total. Negative p is a domain error.
ApInt binomial(long p, long q);

ApInt pow_int(const ApInt& base, unsigned long exp);

/// base^exp with negative exponents allowed; 0 with a negative exponent is a
/// domain error.
ApRat pow_rat(const ApInt& base, long exp);

/// Quotient asserted exact; a nonzero remainder raises InternalError.
ApInt exact_div(const ApInt& num, const ApInt& den);

/// num/den reduced to lowest terms with positive denominator.
ApRat make_rat(const ApInt& num, const ApInt& den);

inline bool is_integral(const ApRat& q) { return q.get_den() == 1; }

std::size_t bit_length(const ApInt& v);
std::size_t bit_length(const ApRat& q);

}  // namespace kplab
