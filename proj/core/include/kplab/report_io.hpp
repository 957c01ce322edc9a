#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kplab/prover.hpp"
#include "kplab/sweeps.hpp"

namespace kplab {

enum class OutputFormat { table, json, csv };

std::optional<OutputFormat> format_from_name(std::string_view name);

/// Human table (summary plus failures; verify-main lists every point), or
/// machine JSON/CSV carrying every point.
std::string render(const SweepReport& report, OutputFormat format);

std::string render(const std::vector<BenchRecord>& records, OutputFormat format);

/// Proof reports are structured text by contract; JSON wraps the same
/// fields. CSV is not defined for proofs and is rejected by the CLI.
std::string render(const std::vector<sym::ProofReport>& reports, OutputFormat format);

struct DetOutput {
  std::string engine;
  std::string value;
  std::optional<bool> fallback_used;  // present for the condensation engine
};

std::string render(const DetOutput& out, OutputFormat format);

}  // namespace kplab
