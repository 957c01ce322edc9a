#pragma once

#include "kplab/exact.hpp"
#include "kplab/kp_family.hpp"

namespace kplab {

/// R_m(a,b): the closed-form side of the identity. On the validated domain
/// the value is a positive integer, so integral must come out true.
struct RabbitValue {
  ApRat value;
  bool integral = false;
};

/// Evaluates, with !! meaning the superfactorial and superfactorial(-1) = 1:
///
///   (a+b)! (2n+1)!^(m+1) (2n-m)!! m!! (m+a+b)!! (2n-m-a-b)!! a!! b!!
///                       (n-m-a-1)!! (n-m-b-1)!!
///   -----------------------------------------------------------------
///   a! b! (2n+1)!! (n-a)!! (n-b)!! (m+a)!! (m+b)!! (a+b)!!
///                       (2n-2m-a-b-1)!!
///
/// as a single exact product quotient, then reduces. Domain errors name the
/// offending factor, e.g. "(n-m-a-1)!! with argument -3".
RabbitValue rabbit_rhs(const KPParams& p);

/// (2n+1)!^(n+1) / (2n+1)!! for n >= 0; the division is asserted exact.
ApInt special_rhs(long n);

/// Whether rabbit_rhs(n, n, 0, 0) equals special_rhs(n) exactly.
bool specialization_check(long n);

}  // namespace kplab
