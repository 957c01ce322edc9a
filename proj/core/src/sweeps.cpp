#include "kplab/sweeps.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <sstream>
#include <thread>

#include "kplab/closed_form.hpp"
#include "kplab/errors.hpp"
#include "kplab/prover.hpp"
#include "kplab/rng.hpp"

namespace kplab {

const char* outcome_name(PointOutcome o) {
  switch (o) {
    case PointOutcome::pass:
      return "pass";
    case PointOutcome::fail:
      return "fail";
    case PointOutcome::out_of_domain:
      return "out-of-domain";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Per-engine accumulated nanoseconds; timing only, excluded from the
// determinism contract.
struct TimingSink {
  std::atomic<long long> condense{0};
  std::atomic<long long> bareiss{0};
  std::atomic<long long> closed_form{0};

  std::vector<EngineTiming> snapshot() const {
    auto s = [](const std::atomic<long long>& ns) {
      return static_cast<double>(ns.load()) * 1e-9;
    };
    return {{"condense", s(condense)},
            {"bareiss", s(bareiss)},
            {"closed-form", s(closed_form)}};
  }
};

template <typename Fn>
auto timed(std::atomic<long long>& sink, Fn&& fn) {
  const auto start = Clock::now();
  auto out = fn();
  sink.fetch_add(
      std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start)
          .count(),
      std::memory_order_relaxed);
  return out;
}

// Runs fn over every index, fanning out to `jobs` workers when asked; the
// result vector keeps input order, so reports never depend on scheduling.
void run_indexed(std::size_t count, int jobs,
                 const std::function<void(std::size_t)>& fn) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      fn(i);
    }
    return;
  }
  std::atomic<std::size_t> cursor{0};
  const int workers = std::min<int>(jobs, static_cast<int>(count));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = cursor.fetch_add(1); i < count; i = cursor.fetch_add(1)) {
        fn(i);
      }
    });
  }
  for (auto& t : pool) {
    t.join();
  }
}

void tally(SweepReport& report) {
  for (const SweepPoint& pt : report.points) {
    switch (pt.outcome) {
      case PointOutcome::pass:
        ++report.passes;
        break;
      case PointOutcome::fail:
        ++report.failures;
        break;
      case PointOutcome::out_of_domain:
        ++report.out_of_domain;
        break;
    }
  }
}

std::string rat_str(const ApRat& v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

}  // namespace

SweepReport run_verify_main(long n_max, int jobs) {
  SweepReport report;
  report.command = "verify-main";
  report.n_max = n_max;
  report.points.resize(n_max >= 0 ? static_cast<std::size_t>(n_max) + 1 : 0);
  TimingSink timing;

  run_indexed(report.points.size(), jobs, [&](std::size_t idx) {
    const long n = static_cast<long>(idx);
    const KPParams p{n, n, 0, 0};
    SweepPoint& pt = report.points[idx];
    pt.p = p;
    const ExactMatrix A = kp_matrix(p);
    const DetResult cond = timed(timing.condense, [&] { return det_condense(A); });
    const ApRat bare = timed(timing.bareiss, [&] { return det_bareiss(A); });
    const ApRat expected =
        timed(timing.closed_form, [&] { return ApRat(special_rhs(n)); });
    pt.value = rat_str(expected);
    if (cond.value == expected && bare == expected) {
      pt.outcome = PointOutcome::pass;
      if (cond.fallback_used) {
        pt.detail = "condensation fell back to bareiss";
      }
    } else {
      pt.outcome = PointOutcome::fail;
      pt.detail = "condense=" + rat_str(cond.value) + " bareiss=" + rat_str(bare) +
                  " closed-form=" + rat_str(expected);
    }
  });

  tally(report);
  report.timings = timing.snapshot();
  return report;
}

SweepReport run_verify_rabbit(long n_max, int jobs) {
  SweepReport report;
  report.command = "verify-rabbit";
  report.n_max = n_max;
  for (long n = 0; n <= n_max; ++n) {
    for (long m = 0; m <= n; ++m) {
      for (long a = 0; a <= n; ++a) {
        for (long b = 0; b <= n; ++b) {
          report.points.push_back({KPParams{n, m, a, b}, PointOutcome::pass, "", ""});
        }
      }
    }
  }
  TimingSink timing;

  run_indexed(report.points.size(), jobs, [&](std::size_t idx) {
    SweepPoint& pt = report.points[idx];
    if (!in_validated_domain(pt.p)) {
      pt.outcome = PointOutcome::out_of_domain;
      return;
    }
    const ExactMatrix A = kp_matrix(pt.p);
    const DetResult cond = timed(timing.condense, [&] { return det_condense(A); });
    const ApRat bare = timed(timing.bareiss, [&] { return det_bareiss(A); });
    const RabbitValue rhs =
        timed(timing.closed_form, [&] { return rabbit_rhs(pt.p); });
    pt.value = rat_str(rhs.value);
    if (cond.value == rhs.value && bare == rhs.value && rhs.integral &&
        sgn(rhs.value) > 0) {
      pt.outcome = PointOutcome::pass;
    } else {
      pt.outcome = PointOutcome::fail;
      pt.detail = "condense=" + rat_str(cond.value) + " bareiss=" + rat_str(bare) +
                  " closed-form=" + rat_str(rhs.value) +
                  (rhs.integral ? "" : " (non-integral)") +
                  (sgn(rhs.value) > 0 ? "" : " (non-positive)");
    }
  });

  tally(report);
  report.timings = timing.snapshot();
  return report;
}

SweepReport run_verify_recurrence(long n_max, int jobs) {
  SweepReport report;
  report.command = "verify-recurrence";
  report.n_max = n_max;
  for (long n = 2; n <= n_max; ++n) {
    for (long m = 2; m <= n; ++m) {
      for (long a = 0; a <= n; ++a) {
        for (long b = 0; b <= n; ++b) {
          report.points.push_back({KPParams{n, m, a, b}, PointOutcome::pass, "", ""});
        }
      }
    }
  }
  TimingSink timing;

  run_indexed(report.points.size(), jobs, [&](std::size_t idx) {
    SweepPoint& pt = report.points[idx];
    if (!in_validated_domain(pt.p)) {
      pt.outcome = PointOutcome::out_of_domain;
      return;
    }
    const auto start = Clock::now();
    const auto fail = sym::check_recurrence_point(pt.p);
    timing.bareiss.fetch_add(std::chrono::duration_cast<std::chrono::nanoseconds>(
                                 Clock::now() - start)
                                 .count(),
                             std::memory_order_relaxed);
    if (fail) {
      pt.outcome = PointOutcome::fail;
      pt.detail = *fail;
    } else {
      pt.outcome = PointOutcome::pass;
      pt.value = "recurrence holds for X=L and X=R";
    }
  });

  tally(report);
  report.timings = timing.snapshot();
  return report;
}

std::vector<BenchRecord> run_bench(const std::vector<int>& orders,
                                   const std::vector<Engine>& engines,
                                   BenchFamily family, std::uint64_t seed) {
  std::vector<BenchRecord> records;
  SplitMix64 rng(seed);
  for (const int order : orders) {
    if (order < 1) {
      throw DomainError("bench order must be >= 1, got " + std::to_string(order));
    }
    ExactMatrix A(order);
    if (family == BenchFamily::kp) {
      A = kp_matrix({order - 1, order - 1, 0, 0});
    } else {
      for (int i = 0; i < order; ++i) {
        for (int j = 0; j < order; ++j) {
          A.at(i, j) = ApRat(static_cast<long>(rng.next() % 19) - 9);
        }
      }
    }
    for (const Engine engine : engines) {
      BenchRecord rec;
      rec.engine = engine_name(engine);
      rec.order = order;
      DetStats stats;
      const auto start = Clock::now();
      try {
        switch (engine) {
          case Engine::cofactor:
            rec.value = rat_str(det_cofactor(A, &stats));
            break;
          case Engine::bareiss:
            rec.value = rat_str(det_bareiss(A, &stats));
            break;
          case Engine::condense:
            rec.value = rat_str(det_condense(A, &stats).value);
            break;
        }
        rec.seconds = seconds_since(start);
        rec.peak_bits = stats.peak_bits;
      } catch (const GuardError&) {
        rec.refused = true;
        rec.seconds = seconds_since(start);
      }
      records.push_back(std::move(rec));
    }
  }
  return records;
}

}  // namespace kplab
