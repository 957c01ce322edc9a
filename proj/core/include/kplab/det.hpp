#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "kplab/kp_family.hpp"
#include "kplab/matrix.hpp"

namespace kplab {

enum class Engine { cofactor, bareiss, condense };

const char* engine_name(Engine e);
std::optional<Engine> engine_from_name(std::string_view name);

/// Peak bit length seen among intermediate values, from actual magnitudes.
struct DetStats {
  std::size_t peak_bits = 0;

  void observe(const ApInt& v);
  void observe(const ApRat& v);
};

struct DetResult {
  ApRat value;
  Engine engine = Engine::condense;
  bool fallback_used = false;
};

/// Cofactor expansion is kept only as a second, independently coded oracle;
/// past this order it refuses (GuardError) rather than burn factorial time.
inline constexpr int kCofactorOrderLimit = 8;

/// First-row Laplace expansion. Order must be <= kCofactorOrderLimit.
ApRat det_cofactor(const ExactMatrix& A, DetStats* stats = nullptr);

/// Fraction-free elimination with row pivoting; every division is exact.
/// Rational input is scaled to an integer matrix first and the scale's power
/// divided back out at the end.
ApRat det_bareiss(const ExactMatrix& A, DetStats* stats = nullptr);

/// Condensation: layer 1 is the entries, layer 2 the 2x2 connected minors,
/// and layer k entry (i,j) is
///   (L[k-1](i,j) L[k-1](i+1,j+1) - L[k-1](i,j+1) L[k-1](i+1,j)) / L[k-2](i+1,j+1).
/// Only two consecutive layers are kept. A zero divisor anywhere makes the
/// whole computation fall back to det_bareiss, with fallback_used set.
DetResult det_condense(const ExactMatrix& A, DetStats* stats = nullptr);

/// All connected-minor determinants of A: layers()[r-1] holds every r x r
/// one, so layer orders descend from A's order down to 1. Each entry is
/// computed definitionally (a Bareiss determinant of the minor), which makes
/// the tableau an independent oracle for the condensation cross rule.
struct CondensationTableau {
  std::vector<ExactMatrix> layers;
};

CondensationTableau condensation_tableau(const ExactMatrix& A);

/// L_m(a,b) by the condensation recurrence alone, memoized over (m, a, b)
/// with n fixed, bottoming out at the explicit 1x1 and 2x2 determinants.
/// Never builds a matrix beyond order 2. A zero divisor (impossible on the
/// validated domain) raises DomainError naming the offending (m, a, b).
ApInt det_condense_kp(const KPParams& p);

}  // namespace kplab
