#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "fockwit/witnesses.hpp"

namespace fockwit::cli {

/// Shortest round-trip decimal form of a double; "nan"/"inf" spelled out.
std::string format_double(double v);

nlohmann::json report_to_json(const WitnessReport& r);

struct RunMetadata {
  std::string command;
  std::uint64_t seed = 0;
  std::vector<int> cutoffs;
  WitnessConfig config;
  nlohmann::json state;
};

nlohmann::json metadata_json(const RunMetadata& meta);

/// "# key=value" header lines for CSV outputs.
std::string metadata_csv_comment(const RunMetadata& meta);

/// Columns: name,kind,lhs,rhs,margin,verdict,leakage,anchor.
std::string witness_csv(const RunMetadata& meta, const std::vector<WitnessReport>& reports);

struct SweepRow {
  double param;
  WitnessReport report;
};

/// Columns: param,name,kind,lhs,rhs,margin,verdict,leakage. Witness anchors are
/// listed in the comment header.
std::string sweep_csv(const RunMetadata& meta, const std::vector<std::string>& witnesses,
                      const std::vector<SweepRow>& rows);

std::string csv_escape(const std::string& field);

}  // namespace fockwit::cli
