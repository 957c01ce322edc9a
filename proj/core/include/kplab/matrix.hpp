#pragma once

#include <vector>

#include "kplab/exact.hpp"

namespace kplab {

/// Dense square matrix of exact rationals. Entry addressing is 0-based;
/// connected_minor() uses the 1-based (k, l) corner convention of A_r(k, l).
class ExactMatrix {
public:
  /// Zero-filled matrix. Order must be >= 1.
  explicit ExactMatrix(int order);

  /// Throws std::invalid_argument unless the rows form a nonempty square.
  static ExactMatrix from_rows(const std::vector<std::vector<ApRat>>& rows);

  int order() const noexcept { return order_; }

  const ApRat& at(int i, int j) const;
  ApRat& at(int i, int j);

  bool operator==(const ExactMatrix&) const = default;

private:
  int order_;
  std::vector<ApRat> cells_;
};

/// The r x r contiguous submatrix of A whose upper-left corner sits at the
/// 1-based position (k, l). Out-of-range windows throw std::out_of_range.
ExactMatrix connected_minor(const ExactMatrix& A, int r, int k, int l);

ExactMatrix transpose(const ExactMatrix& A);

}  // namespace kplab
