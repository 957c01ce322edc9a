#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kplab/det.hpp"
#include "kplab/errors.hpp"
#include "kplab/matrix_io.hpp"
#include "kplab/prover.hpp"
#include "kplab/report_io.hpp"
#include "kplab/sweeps.hpp"

namespace {

constexpr std::uint64_t kDefaultSeed = 123456789;

kplab::OutputFormat parse_format(const std::string& name) {
  const auto format = kplab::format_from_name(name);
  if (!format) {
    throw CLI::ValidationError("--format", "unknown format '" + name + "'");
  }
  return *format;
}

std::vector<int> parse_orders(const std::string& csv) {
  std::vector<int> orders;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      orders.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw CLI::ValidationError("--orders", "invalid order '" + item + "'");
    }
  }
  if (orders.empty()) {
    throw CLI::ValidationError("--orders", "no orders given");
  }
  return orders;
}

std::vector<kplab::Engine> parse_engines(const std::string& csv) {
  std::vector<kplab::Engine> engines;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto engine = kplab::engine_from_name(item);
    if (!engine) {
      throw CLI::ValidationError("--engines", "unknown engine '" + item + "'");
    }
    engines.push_back(*engine);
  }
  if (engines.empty()) {
    throw CLI::ValidationError("--engines", "no engines given");
  }
  return engines;
}

int sweep_exit(const kplab::SweepReport& report) {
  return report.all_passed() ? kplab::kExitOk : kplab::kExitViolation;
}

int proof_exit(const std::vector<kplab::sym::ProofReport>& reports) {
  bool stalled = false;
  for (const auto& r : reports) {
    if (r.status == kplab::sym::ProofStatus::refuted) {
      return kplab::kExitViolation;
    }
    stalled = stalled || r.status == kplab::sym::ProofStatus::stalled;
  }
  return stalled ? kplab::kExitStall : kplab::kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "kplab: exact condensation laboratory for the Kuperberg-Propp "
      "determinant family"};
  app.require_subcommand(1);

  std::string format_name = "table";
  long n_max = 0;
  int jobs = 1;

  auto* verify_main = app.add_subcommand(
      "verify-main", "Check det = closed form for the main identity, n = 0..n-max");
  verify_main->add_option("--n-max", n_max, "Largest n to check")->default_val(8);
  verify_main->add_option("--format", format_name, "table|json|csv");
  verify_main->add_option("--jobs", jobs, "Parallel sweep workers")->default_val(1);

  auto* verify_rabbit = app.add_subcommand(
      "verify-rabbit",
      "Check the two-parameter identity over the whole validated domain");
  verify_rabbit->add_option("--n-max", n_max, "Largest n to sweep")->default_val(6);
  verify_rabbit->add_option("--format", format_name, "table|json|csv");
  verify_rabbit->add_option("--jobs", jobs, "Parallel sweep workers")->default_val(1);

  auto* verify_recurrence = app.add_subcommand(
      "verify-recurrence",
      "Check the condensation recurrence for X = L and X = R numerically");
  verify_recurrence->add_option("--n-max", n_max, "Largest n to sweep")
      ->default_val(6);
  verify_recurrence->add_option("--format", format_name, "table|json|csv");
  verify_recurrence->add_option("--jobs", jobs, "Parallel sweep workers")
      ->default_val(1);

  std::string prove_mode;
  long prove_m = -1;
  auto* prove = app.add_subcommand(
      "prove", "Symbolic proofs: base cases and the closed-form recurrence");
  prove->add_option("--mode", prove_mode, "base|fixed-m|generic-m")->required();
  prove->add_option("--m", prove_m, "m value for fixed-m mode (>= 2)");
  prove->add_option("--format", format_name, "table|json");

  std::string orders_csv = "2,4,6,8";
  std::string engines_csv = "condense,bareiss";
  std::string family_name = "kp";
  std::uint64_t seed = kDefaultSeed;
  auto* bench = app.add_subcommand("bench", "Time the determinant engines");
  bench->add_option("--orders", orders_csv, "Comma-separated matrix orders");
  bench->add_option("--engines", engines_csv,
                    "Comma-separated engines (condense,bareiss,cofactor)");
  bench->add_option("--family", family_name, "kp|random");
  bench->add_option("--seed", seed, "Seed for the random family");
  bench->add_option("--format", format_name, "table|json|csv");

  std::string det_path;
  std::string engine_name_opt = "condense";
  auto* det = app.add_subcommand("det", "Exact determinant of a matrix file");
  det->add_option("file", det_path, "Matrix file (plain or structured text)")
      ->required();
  det->add_option("--engine", engine_name_opt, "condense|bareiss|cofactor");
  det->add_option("--format", format_name, "table|json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kplab::kExitUsage;
  }

  try {
    const kplab::OutputFormat format = parse_format(format_name);

    if (verify_main->parsed()) {
      const auto report = kplab::run_verify_main(n_max, jobs);
      std::cout << kplab::render(report, format);
      return sweep_exit(report);
    }
    if (verify_rabbit->parsed()) {
      const auto report = kplab::run_verify_rabbit(n_max, jobs);
      std::cout << kplab::render(report, format);
      return sweep_exit(report);
    }
    if (verify_recurrence->parsed()) {
      const auto report = kplab::run_verify_recurrence(n_max, jobs);
      std::cout << kplab::render(report, format);
      return sweep_exit(report);
    }

    if (prove->parsed()) {
      if (format == kplab::OutputFormat::csv) {
        std::cerr << "prove reports are structured text; use table or json\n";
        return kplab::kExitUsage;
      }
      std::vector<kplab::sym::ProofReport> reports;
      if (prove_mode == "base") {
        reports = kplab::sym::prove_base_cases();
      } else if (prove_mode == "fixed-m") {
        if (prove_m < 2) {
          std::cerr << "--mode fixed-m needs --m <value >= 2>\n";
          return kplab::kExitUsage;
        }
        reports.push_back(kplab::sym::prove_recurrence_fixed(prove_m));
      } else if (prove_mode == "generic-m") {
        reports.push_back(kplab::sym::prove_recurrence_generic());
      } else {
        std::cerr << "unknown prove mode '" << prove_mode << "'\n";
        return kplab::kExitUsage;
      }
      std::cout << kplab::render(reports, format);
      return proof_exit(reports);
    }

    if (bench->parsed()) {
      kplab::BenchFamily family;
      if (family_name == "kp") {
        family = kplab::BenchFamily::kp;
      } else if (family_name == "random") {
        family = kplab::BenchFamily::random;
      } else {
        std::cerr << "unknown family '" << family_name << "'\n";
        return kplab::kExitUsage;
      }
      const auto records =
          kplab::run_bench(parse_orders(orders_csv), parse_engines(engines_csv),
                           family, seed);
      std::cout << kplab::render(records, format);
      return kplab::kExitOk;
    }

    if (det->parsed()) {
      const auto engine = kplab::engine_from_name(engine_name_opt);
      if (!engine) {
        std::cerr << "unknown engine '" << engine_name_opt << "'\n";
        return kplab::kExitUsage;
      }
      std::ifstream in(det_path);
      if (!in) {
        std::cerr << "cannot open '" << det_path << "'\n";
        return kplab::kExitUsage;
      }
      std::ostringstream buffer;
      buffer << in.rdbuf();
      const kplab::ExactMatrix A = kplab::parse_matrix(buffer.str());

      kplab::DetOutput out;
      out.engine = kplab::engine_name(*engine);
      std::ostringstream value;
      switch (*engine) {
        case kplab::Engine::cofactor:
          value << kplab::det_cofactor(A);
          break;
        case kplab::Engine::bareiss:
          value << kplab::det_bareiss(A);
          break;
        case kplab::Engine::condense: {
          const kplab::DetResult result = kplab::det_condense(A);
          value << result.value;
          out.fallback_used = result.fallback_used;
          break;
        }
      }
      out.value = value.str();
      std::cout << kplab::render(out, format);
      return kplab::kExitOk;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return kplab::kExitUsage;
  } catch (const kplab::ParseError& e) {
    std::cerr << e.what() << '\n';
    return kplab::kExitUsage;
  } catch (const kplab::GuardError& e) {
    std::cerr << e.what() << '\n';
    return kplab::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kplab::kExitUsage;
  }

  return kplab::kExitUsage;
}
