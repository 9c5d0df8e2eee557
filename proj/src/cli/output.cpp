#include "cli/output.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "fockwit/version.hpp"

namespace fockwit::cli {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

nlohmann::json report_to_json(const WitnessReport& r) {
  auto num = [](double v) -> nlohmann::json {
    return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
  };
  nlohmann::json j;
  j["name"] = r.name;
  j["kind"] = std::string(to_string(r.kind));
  j["lhs"] = num(r.lhs);
  j["rhs"] = num(r.rhs);
  j["margin"] = num(r.margin);
  j["verdict"] = std::string(to_string(r.verdict));
  j["leakage"] = num(r.leakage);
  j["anchor"] = r.anchor;
  if (r.reference_rhs) j["reference_rhs"] = num(*r.reference_rhs);
  if (!r.message.empty()) j["message"] = r.message;
  return j;
}

nlohmann::json metadata_json(const RunMetadata& meta) {
  nlohmann::json j;
  j["tool"] = "fockwit";
  j["version"] = kVersion;
  j["command"] = meta.command;
  j["seed"] = meta.seed;
  j["cutoffs"] = meta.cutoffs;
  j["tolerances"] = {
      {"boundary_tol", meta.config.boundary_tol},
      {"leakage_warn", meta.config.leakage.warn},
      {"leakage_error", meta.config.leakage.error},
  };
  j["state"] = meta.state;
  return j;
}

std::string metadata_csv_comment(const RunMetadata& meta) {
  std::ostringstream os;
  os << "# tool=fockwit version=" << kVersion << " command=" << meta.command
     << " seed=" << meta.seed << " cutoffs=";
  for (std::size_t i = 0; i < meta.cutoffs.size(); ++i) {
    os << (i ? "," : "") << meta.cutoffs[i];
  }
  os << "\n# boundary_tol=" << format_double(meta.config.boundary_tol)
     << " leakage_warn=" << format_double(meta.config.leakage.warn)
     << " leakage_error=" << format_double(meta.config.leakage.error) << "\n";
  os << "# state=" << meta.state.dump() << "\n";
  return os.str();
}

std::string witness_csv(const RunMetadata& meta, const std::vector<WitnessReport>& reports) {
  std::ostringstream os;
  os << metadata_csv_comment(meta);
  os << "name,kind,lhs,rhs,margin,verdict,leakage,anchor\n";
  for (const auto& r : reports) {
    os << r.name << ',' << to_string(r.kind) << ',' << format_double(r.lhs) << ','
       << format_double(r.rhs) << ',' << format_double(r.margin) << ','
       << to_string(r.verdict) << ',' << format_double(r.leakage) << ','
       << csv_escape(r.anchor) << '\n';
  }
  return os.str();
}

std::string sweep_csv(const RunMetadata& meta, const std::vector<std::string>& witnesses,
                      const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << metadata_csv_comment(meta);
  for (const auto& name : witnesses) {
    os << "# anchor " << name << ": " << witness_anchor(name) << "\n";
  }
  os << "param,name,kind,lhs,rhs,margin,verdict,leakage\n";
  for (const auto& row : rows) {
    const WitnessReport& r = row.report;
    os << format_double(row.param) << ',' << r.name << ',' << to_string(r.kind) << ','
       << format_double(r.lhs) << ',' << format_double(r.rhs) << ','
       << format_double(r.margin) << ',' << to_string(r.verdict) << ','
       << format_double(r.leakage) << '\n';
  }
  return os.str();
}

}  // namespace fockwit::cli
