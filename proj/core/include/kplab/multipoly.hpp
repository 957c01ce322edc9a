#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>

#include "kplab/exact.hpp"
#include "kplab/fac_product.hpp"
#include "kplab/linear_form.hpp"

namespace kplab::sym {

/// Exponent vector over {n, m, a, b}.
using Monomial = std::array<int, kVarCount>;

/// Exact multivariate polynomial; zero coefficients are never stored.
class MultiPoly {
public:
  MultiPoly() = default;  // the zero polynomial

  static MultiPoly constant(ApInt c);
  static MultiPoly from_linear(const LinearForm& f);

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly pow(unsigned e) const;

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Max total degree; -1 for the zero polynomial.
  int total_degree() const;

  ApInt eval(const Point& point) const;

  bool operator==(const MultiPoly&) const = default;

  std::string str() const;

private:
  void add_term(const Monomial& mono, const ApInt& c);

  std::map<Monomial, ApInt> terms_;
};

/// Expands a fully reduced product into (numerator, denominator) polynomials:
/// positive-exponent linear factors to the numerator, negative to the
/// denominator. Throws StallError, naming the offender, if any
/// factorial/superfactorial factor or non-constant exponent remains.
std::pair<MultiPoly, MultiPoly> to_rational_function(const FacProduct& fp);

}  // namespace kplab::sym
