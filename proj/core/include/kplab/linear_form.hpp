#pragma once

#include <array>
#include <compare>
#include <string>

namespace kplab::sym {

enum class Var : int { n = 0, m = 1, a = 2, b = 3 };

inline constexpr int kVarCount = 4;

const char* var_name(Var v);

/// A point assigning an integer to each of n, m, a, b.
using Point = std::array<long long, kVarCount>;

/// Integer-coefficient affine expression over {n, m, a, b}. Canonical by
/// construction (coefficient array plus constant); equality is
/// coefficientwise.
struct LinearForm {
  std::array<long long, kVarCount> coeff{};
  long long constant = 0;

  static LinearForm var(Var v) {
    LinearForm f;
    f.coeff[static_cast<int>(v)] = 1;
    return f;
  }

  static LinearForm of(long long c) {
    LinearForm f;
    f.constant = c;
    return f;
  }

  LinearForm operator-() const;
  LinearForm operator+(const LinearForm& o) const;
  LinearForm operator-(const LinearForm& o) const;
  LinearForm operator+(long long c) const;
  LinearForm operator-(long long c) const;
  LinearForm operator*(long long s) const;

  bool is_zero() const;
  bool is_constant() const;

  long long eval(const Point& point) const;

  /// Replaces one symbol by a numeric value, folding it into the constant.
  LinearForm substitute(Var v, long long value) const;

  /// Rendering like "2n-m+1"; the zero form prints as "0".
  std::string str() const;

  auto operator<=>(const LinearForm&) const = default;
};

inline LinearForm operator*(long long s, const LinearForm& f) { return f * s; }

}  // namespace kplab::sym
