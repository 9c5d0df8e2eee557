#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "fockwit/witnesses.hpp"

namespace fockwit::cli {

struct SelftestOptions {
  std::uint64_t seed = 2024;
  /// Per-mode cutoff for the algebra and random-state suites.
  int cutoff = 8;
  int samples = 50;
  WitnessConfig config;
};

struct SuiteResult {
  std::string name;
  int checks = 0;
  int failures = 0;
  std::vector<std::string> notes;     // informational lines
  std::vector<std::string> messages;  // one per failure
};

struct SelftestSummary {
  std::vector<SuiteResult> suites;
  std::vector<std::string> nondefault_config;
  bool passed() const;
};

SelftestSummary run_selftest(const SelftestOptions& opts);

void print_summary(const SelftestSummary& summary, std::ostream& os);

}  // namespace fockwit::cli
