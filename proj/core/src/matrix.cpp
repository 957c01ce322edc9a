#include "kplab/matrix.hpp"

#include <stdexcept>
#include <string>

namespace kplab {

ExactMatrix::ExactMatrix(int order)
    : order_(order), cells_(order >= 1 ? static_cast<std::size_t>(order) * order : 0) {
  if (order < 1) {
    throw std::invalid_argument("matrix order must be >= 1, got " +
                                std::to_string(order));
  }
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<ApRat>>& rows) {
  if (rows.empty()) {
    throw std::invalid_argument("matrix rows must be nonempty");
  }
  ExactMatrix out(static_cast<int>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw std::invalid_argument("matrix is not square: row " + std::to_string(i) +
                                  " has " + std::to_string(rows[i].size()) +
                                  " entries, expected " + std::to_string(rows.size()));
    }
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      out.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    }
  }
  return out;
}

const ApRat& ExactMatrix::at(int i, int j) const {
  if (i < 0 || j < 0 || i >= order_ || j >= order_) {
    throw std::out_of_range("matrix index (" + std::to_string(i) + ", " +
                            std::to_string(j) + ") outside order " +
                            std::to_string(order_));
  }
  return cells_[static_cast<std::size_t>(i) * order_ + j];
}

ApRat& ExactMatrix::at(int i, int j) {
  return const_cast<ApRat&>(static_cast<const ExactMatrix&>(*this).at(i, j));
}

ExactMatrix connected_minor(const ExactMatrix& A, int r, int k, int l) {
  if (r < 1 || k < 1 || l < 1 || k + r - 1 > A.order() || l + r - 1 > A.order()) {
    throw std::out_of_range("connected minor window r=" + std::to_string(r) +
                            " at (" + std::to_string(k) + ", " + std::to_string(l) +
                            ") outside order " + std::to_string(A.order()));
  }
  ExactMatrix out(r);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      out.at(i, j) = A.at(k - 1 + i, l - 1 + j);
    }
  }
  return out;
}

ExactMatrix transpose(const ExactMatrix& A) {
  ExactMatrix out(A.order());
  for (int i = 0; i < A.order(); ++i) {
    for (int j = 0; j < A.order(); ++j) {
      out.at(j, i) = A.at(i, j);
    }
  }
  return out;
}

}  // namespace kplab
