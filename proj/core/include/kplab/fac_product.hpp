#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kplab/exact.hpp"
#include "kplab/linear_form.hpp"

namespace kplab::sym {

enum class FacKind : int { factorial = 0, superfactorial = 1, linear = 2 };

const char* fac_kind_name(FacKind k);

/// One factor: arg! or arg!! (superfactorial) or the bare linear form arg,
/// raised to an exponent that is itself a linear form ((2n+1)!^(m+1) needs
/// symbolic exponents).
struct FacFactor {
  FacKind kind;
  LinearForm arg;
  LinearForm exp;

  auto operator<=>(const FacFactor&) const = default;
  std::string str() const;
};

/// Canonical multiset of factors representing a product/quotient of
/// factorial-type terms. Canonicalization merges factors sharing
/// (kind, argument) by exponent addition, drops zero exponents, drops factors
/// that are identically 1 (0!, 1!, (-1)!!, 0!!, 1!!, the unit linear factor)
/// and folds remaining constant-argument factorials/superfactorials to
/// linear-kind constants when the value fits a machine word.
class FacProduct {
public:
  FacProduct() = default;

  static FacProduct from_factors(const std::vector<FacFactor>& factors);

  FacProduct& operator*=(const FacFactor& f);
  FacProduct& operator*=(const FacProduct& o);
  friend FacProduct operator*(FacProduct lhs, const FacProduct& rhs) {
    lhs *= rhs;
    return lhs;
  }

  /// Exponent-negated copy.
  FacProduct inverse() const;

  bool empty() const { return factors_.empty(); }
  std::size_t size() const { return factors_.size(); }

  /// Factors in canonical (kind, argument) order.
  std::vector<FacFactor> factors() const;

  bool operator==(const FacProduct&) const = default;

  /// Rendering like "(2n+1)!^(m+1) (a)!^-1 (n-m-a-1)!!"; empty prints as "1".
  std::string str() const;

private:
  void fold_in(FacKind kind, LinearForm arg, LinearForm exp);

  std::map<std::pair<FacKind, LinearForm>, LinearForm> factors_;
};

/// num merged with exponent-negated den, canonicalized.
FacProduct ratio(const FacProduct& num, const FacProduct& den);

struct SimplifyResult {
  FacProduct product;
  long steps = 0;
};

/// Applies, to a global fixpoint, superfactorial rules then factorial rules:
/// a pair of same-kind factors whose arguments differ by a positive integer
/// constant k and whose exponents oppose (exactly as linear forms, or as
/// integer constants of opposite sign, transferring min magnitude) rewrites
/// to the k lower-kind factors through the intermediate arguments:
///   x!!^e (x-k)!!^-e  ->  x!^e (x-1)!^e ... (x-k+1)!^e
///   x!^e  (x-k)!^-e   ->  x^e  (x-1)^e  ... (x-k+1)^e
/// Each application strictly reduces the count of superfactorial factors,
/// then factorial factors, so the rewriting terminates.
SimplifyResult simplify(const FacProduct& fp);

/// Exact value at an integer point. DomainError when a factorial argument is
/// negative, a superfactorial argument is below -1, or a zero base meets a
/// negative exponent.
ApRat eval(const FacFactor& f, const Point& point);
ApRat eval(const FacProduct& fp, const Point& point);

}  // namespace kplab::sym
