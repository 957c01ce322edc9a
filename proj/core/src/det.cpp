#include "kplab/det.hpp"

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "kplab/errors.hpp"

namespace kplab {

const char* engine_name(Engine e) {
  switch (e) {
    case Engine::cofactor:
      return "cofactor";
    case Engine::bareiss:
      return "bareiss";
    case Engine::condense:
      return "condense";
  }
  return "?";
}

std::optional<Engine> engine_from_name(std::string_view name) {
  if (name == "cofactor") return Engine::cofactor;
  if (name == "bareiss") return Engine::bareiss;
  if (name == "condense") return Engine::condense;
  return std::nullopt;
}

void DetStats::observe(const ApInt& v) {
  const std::size_t bits = bit_length(v);
  if (bits > peak_bits) peak_bits = bits;
}

void DetStats::observe(const ApRat& v) {
  const std::size_t bits = bit_length(v);
  if (bits > peak_bits) peak_bits = bits;
}

namespace {

ApRat cofactor_recurse(const ExactMatrix& A, DetStats* stats) {
  const int r = A.order();
  if (r == 1) {
    return A.at(0, 0);
  }
  ApRat acc(0);
  for (int j = 0; j < r; ++j) {
    if (A.at(0, j) == 0) {
      continue;
    }
    ExactMatrix minor(r - 1);
    for (int i = 1; i < r; ++i) {
      int jj = 0;
      for (int k = 0; k < r; ++k) {
        if (k == j) continue;
        minor.at(i - 1, jj++) = A.at(i, k);
      }
    }
    const ApRat term = A.at(0, j) * cofactor_recurse(minor, stats);
    if (j % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
    if (stats) stats->observe(acc);
  }
  return acc;
}

// Fraction-free elimination on an integer matrix; returns det. Row swaps
// keep the exact-divisibility property (the divisor is still a leading
// minor of the permuted matrix).
ApInt bareiss_int(std::vector<ApInt> cells, int r, DetStats* stats) {
  auto at = [&](int i, int j) -> ApInt& {
    return cells[static_cast<std::size_t>(i) * r + j];
  };
  int sign = 1;
  ApInt prev(1);
  for (int k = 0; k < r - 1; ++k) {
    if (at(k, k) == 0) {
      int pivot = -1;
      for (int i = k + 1; i < r; ++i) {
        if (at(i, k) != 0) {
          pivot = i;
          break;
        }
      }
      if (pivot < 0) {
        return ApInt(0);
      }
      for (int j = 0; j < r; ++j) {
        std::swap(at(k, j), at(pivot, j));
      }
      sign = -sign;
    }
    for (int i = k + 1; i < r; ++i) {
      for (int j = k + 1; j < r; ++j) {
        at(i, j) = exact_div(at(k, k) * at(i, j) - at(i, k) * at(k, j), prev);
        if (stats) stats->observe(at(i, j));
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  return sign > 0 ? at(r - 1, r - 1) : ApInt(-at(r - 1, r - 1));
}

}  // namespace

ApRat det_cofactor(const ExactMatrix& A, DetStats* stats) {
  if (A.order() > kCofactorOrderLimit) {
    throw GuardError("cofactor expansion refused for order " +
                     std::to_string(A.order()) + " (limit " +
                     std::to_string(kCofactorOrderLimit) + ")");
  }
  return cofactor_recurse(A, stats);
}

ApRat det_bareiss(const ExactMatrix& A, DetStats* stats) {
  const int r = A.order();
  // Scale to an integer matrix by the lcm of denominators; det(D*A) = D^r det(A).
  ApInt scale(1);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      ApInt den(A.at(i, j).get_den());
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), den.get_mpz_t());
    }
  }
  std::vector<ApInt> cells;
  cells.reserve(static_cast<std::size_t>(r) * r);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      const ApRat scaled = A.at(i, j) * ApRat(scale);
      cells.emplace_back(scaled.get_num());  // denominator is 1 by construction
    }
  }
  const ApInt det_scaled = bareiss_int(std::move(cells), r, stats);
  if (scale == 1) {
    return ApRat(det_scaled);
  }
  ApInt denom;
  mpz_pow_ui(denom.get_mpz_t(), scale.get_mpz_t(), static_cast<unsigned long>(r));
  return make_rat(det_scaled, denom);
}

DetResult det_condense(const ExactMatrix& A, DetStats* stats) {
  const int r = A.order();
  if (r == 1) {
    return {A.at(0, 0), Engine::condense, false};
  }
  // prev = layer k-1, prev2 = layer k-2; only two layers live at a time.
  std::vector<ApRat> prev2;
  std::vector<ApRat> prev;
  prev.reserve(static_cast<std::size_t>(r) * r);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      prev.push_back(A.at(i, j));
    }
  }
  int side = r;  // side length of the layer held in prev
  for (int layer = 2; layer <= r; ++layer) {
    const int next_side = side - 1;
    std::vector<ApRat> next(static_cast<std::size_t>(next_side) * next_side);
    for (int i = 0; i < next_side; ++i) {
      for (int j = 0; j < next_side; ++j) {
        ApRat cross = prev[static_cast<std::size_t>(i) * side + j] *
                          prev[static_cast<std::size_t>(i + 1) * side + (j + 1)] -
                      prev[static_cast<std::size_t>(i) * side + (j + 1)] *
                          prev[static_cast<std::size_t>(i + 1) * side + j];
        if (layer >= 3) {
          const ApRat& divisor = prev2[static_cast<std::size_t>(i + 1) * (side + 1) + (j + 1)];
          if (divisor == 0) {
            return {det_bareiss(A, stats), Engine::condense, true};
          }
          cross /= divisor;
        }
        if (stats) stats->observe(cross);
        next[static_cast<std::size_t>(i) * next_side + j] = std::move(cross);
      }
    }
    prev2 = std::move(prev);
    prev = std::move(next);
    side = next_side;
  }
  return {prev.front(), Engine::condense, false};
}

CondensationTableau condensation_tableau(const ExactMatrix& A) {
  CondensationTableau tableau;
  const int r = A.order();
  tableau.layers.reserve(static_cast<std::size_t>(r));
  for (int layer = 1; layer <= r; ++layer) {
    const int side = r - layer + 1;
    ExactMatrix L(side);
    for (int i = 0; i < side; ++i) {
      for (int j = 0; j < side; ++j) {
        L.at(i, j) = det_bareiss(connected_minor(A, layer, i + 1, j + 1));
      }
    }
    tableau.layers.push_back(std::move(L));
  }
  return tableau;
}

namespace {

ApInt condense_kp_memo(long n, long m, long a, long b,
                       std::map<std::tuple<long, long, long>, ApInt>& memo) {
  const auto key = std::make_tuple(m, a, b);
  if (auto it = memo.find(key); it != memo.end()) {
    return it->second;
  }
  ApInt value;
  if (m == 0) {
    value = kp_entry({n, 0, a, b}, 0, 0);
  } else if (m == 1) {
    const KPParams p{n, 1, a, b};
    value = kp_entry(p, 0, 0) * kp_entry(p, 1, 1) -
            kp_entry(p, 0, 1) * kp_entry(p, 1, 0);
  } else {
    const ApInt divisor = condense_kp_memo(n, m - 2, a + 1, b + 1, memo);
    if (divisor == 0) {
      throw DomainError("condensation recurrence divisor X_" + std::to_string(m - 2) +
                        "(" + std::to_string(a + 1) + ", " + std::to_string(b + 1) +
                        ") is zero at (m=" + std::to_string(m) + ", a=" +
                        std::to_string(a) + ", b=" + std::to_string(b) + ")");
    }
    const ApInt cross = condense_kp_memo(n, m - 1, a, b, memo) *
                            condense_kp_memo(n, m - 1, a + 1, b + 1, memo) -
                        condense_kp_memo(n, m - 1, a + 1, b, memo) *
                            condense_kp_memo(n, m - 1, a, b + 1, memo);
    value = exact_div(cross, divisor);
  }
  memo.emplace(key, value);
  return value;
}

}  // namespace

ApInt det_condense_kp(const KPParams& p) {
  validate(p);
  // Memo table is per invocation, keyed (m, a, b) with n fixed, mirroring the
  // recurrence's shift pattern.
  std::map<std::tuple<long, long, long>, ApInt> memo;
  return condense_kp_memo(p.n, p.m, p.a, p.b, memo);
}

}  // namespace kplab
