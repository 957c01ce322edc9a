#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kplab/det.hpp"
#include "kplab/kp_family.hpp"

namespace kplab {

inline constexpr int kSchemaVersion = 1;

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitViolation = 1,  // identity violation or proof refuted
  kExitUsage = 2,      // usage or parse error
  kExitStall = 3,      // symbolic stall (prove only)
};

enum class PointOutcome { pass, fail, out_of_domain };

const char* outcome_name(PointOutcome o);

struct SweepPoint {
  KPParams p;
  PointOutcome outcome = PointOutcome::pass;
  std::string value;   // checked value at this point (empty when skipped)
  std::string detail;  // failure diagnostics (empty otherwise)
};

struct EngineTiming {
  std::string engine;
  double seconds = 0.0;
};

/// Point order is deterministic ((n, m, a, b)-lexicographic) regardless of
/// how many workers ran the sweep; timings live in their own fields and are
/// excluded from the determinism contract.
struct SweepReport {
  int schema_version = kSchemaVersion;
  std::string command;
  long n_max = 0;
  std::vector<SweepPoint> points;
  long passes = 0;
  long failures = 0;
  long out_of_domain = 0;
  std::vector<EngineTiming> timings;

  bool all_passed() const { return failures == 0; }
};

/// det(kp_matrix(n,n,0,0)) = special_rhs(n) for 0 <= n <= n_max, checked
/// with both condensation and Bareiss.
SweepReport run_verify_main(long n_max, int jobs = 1);

/// L = R exactly (two engines vs the closed form), R integral and positive,
/// at every validated-domain point with n <= n_max. Points with m+a > n or
/// m+b > n are reported as out-of-domain, never asserted.
SweepReport run_verify_rabbit(long n_max, int jobs = 1);

/// The condensation recurrence for X = L and X = R at every eligible point
/// (m >= 2) with n <= n_max.
SweepReport run_verify_recurrence(long n_max, int jobs = 1);

enum class BenchFamily { kp, random };

struct BenchRecord {
  std::string engine;
  int order = 0;
  double seconds = 0.0;
  std::size_t peak_bits = 0;
  std::string value;     // determinant; empty when refused
  bool refused = false;  // order guard tripped
};

/// Deterministic given the seed: the random family draws each matrix from a
/// SplitMix64 stream (entries next() % 19 - 9), the kp family uses
/// (n, m, a, b) = (order-1, order-1, 0, 0).
std::vector<BenchRecord> run_bench(const std::vector<int>& orders,
                                   const std::vector<Engine>& engines,
                                   BenchFamily family, std::uint64_t seed);

}  // namespace kplab
