#include "cli/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <sstream>

#include <CLI11.hpp>

#include "cli/output.hpp"
#include "cli/selftest.hpp"
#include "fockwit/cross_check.hpp"
#include "fockwit/error.hpp"
#include "fockwit/ppt_oracle.hpp"
#include "fockwit/state_catalog.hpp"
#include "fockwit/version.hpp"
#include "fockwit/witnesses.hpp"

namespace fockwit::cli {

namespace {

struct StateOptions {
  std::string spec_file;
  std::string family;
  std::vector<std::string> params;  // key=value
  std::string occ;                  // comma-separated
  std::string cutoffs;              // comma-separated
};

struct CommonOptions {
  StateOptions state;
  std::uint64_t seed = 0;
  WitnessConfig config;
  std::string format = "json";
  std::string output;
  std::size_t max_dim = kDefaultMaxDim;
};

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw InvalidArgument(std::string("malformed ") + what + " list '" + text + "'");
    }
  }
  if (out.empty()) throw InvalidArgument(std::string("empty ") + what + " list");
  return out;
}

double parse_number(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size() || !std::isfinite(v)) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw InvalidArgument("malformed number '" + text + "' for " + what);
  }
}

StateSpec resolve_spec(const StateOptions& o) {
  nlohmann::json j;
  if (!o.spec_file.empty()) {
    if (!o.family.empty()) {
      throw InvalidArgument("give either --spec or --family, not both");
    }
    std::ifstream in(o.spec_file);
    if (!in) throw InvalidArgument("cannot open spec file '" + o.spec_file + "'");
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw InvalidArgument(std::string("spec file is not valid JSON: ") + e.what());
    }
  } else {
    if (o.family.empty()) throw InvalidArgument("no state given: use --family or --spec");
    j["family"] = o.family;
    j["params"] = nlohmann::json::object();
  }
  for (const auto& kv : o.params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw InvalidArgument("--param expects key=value, got '" + kv + "'");
    }
    const std::string key = kv.substr(0, eq);
    const std::string value = kv.substr(eq + 1);
    long long as_int = 0;
    const auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), as_int);
    if (ec == std::errc() && end == value.data() + value.size()) {
      j["params"][key] = as_int;
    } else {
      j["params"][key] = parse_number(value, key);
    }
  }
  if (!o.occ.empty()) j["params"]["occ"] = parse_int_list(o.occ, "occupation");
  if (!o.cutoffs.empty()) j["cutoffs"] = parse_int_list(o.cutoffs, "cutoff");
  StateSpec spec = parse_state_spec(j);
  if (spec.cutoffs.empty()) spec.cutoffs = default_cutoffs(spec.family);
  return spec;
}

BuildOptions build_options(const CommonOptions& c) {
  BuildOptions b;
  b.leakage_limit = c.config.leakage.error;
  b.seed = c.seed;
  b.max_dim = c.max_dim;
  return b;
}

void add_state_options(CLI::App* app, CommonOptions& c) {
  app->add_option("--spec", c.state.spec_file, "State spec JSON file");
  app->add_option("--family", c.state.family, "State family");
  app->add_option("--param", c.state.params, "Family parameter key=value (repeatable)");
  app->add_option("--occ", c.state.occ, "Occupations for family fock, e.g. 0,1");
  app->add_option("--cutoffs", c.state.cutoffs, "Per-mode cutoffs, e.g. 30,30");
  app->add_option("--seed", c.seed, "Seed for random families");
  app->add_option("--boundary-tol", c.config.boundary_tol, "Boundary tolerance on margins");
  app->add_option("--leak-warn", c.config.leakage.warn, "Leakage warning threshold");
  app->add_option("--leak-error", c.config.leakage.error, "Leakage error threshold");
  app->add_option("--max-dim", c.max_dim, "Largest Fock space dimension accepted");
  app->add_option("--output,-o", c.output, "Output file (default: stdout)");
}

void emit(const std::string& command, const std::string& ext, const std::string& text,
          const std::string& output, std::ostream& out) {
  std::string path = output;
  if (path.empty()) {
    if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') {
      path = (std::filesystem::path(dir) / (command + "." + ext)).string();
    }
  }
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write output file '" + path + "'");
  f << text;
}

void warn_leakage(double leakage, const WitnessConfig& cfg, std::ostream& err) {
  if (classify_leakage(leakage, cfg.leakage) == LeakageLevel::warn) {
    err << "warning: truncation leakage " << format_double(leakage)
        << " exceeds warning threshold " << format_double(cfg.leakage.warn) << '\n';
  }
}

void enforce_leakage(double leakage, const WitnessConfig& cfg) {
  if (classify_leakage(leakage, cfg.leakage) == LeakageLevel::error) {
    throw LeakageError("truncation leakage " + format_double(leakage) +
                           " exceeds error threshold " + format_double(cfg.leakage.error),
                       leakage);
  }
}

std::vector<std::string> resolve_witnesses(const std::string& selection) {
  std::vector<std::string> out;
  if (selection == "all") {
    for (std::string_view n : witness_names()) {
      if (n != "pt_su11_product_strict") out.emplace_back(n);
    }
    return out;
  }
  std::stringstream ss(selection);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!is_witness_name(item)) throw InvalidArgument("unknown witness '" + item + "'");
    out.push_back(item);
  }
  if (out.empty()) throw InvalidArgument("empty witness selection");
  return out;
}

std::vector<WitnessReport> run_witnesses(const std::vector<std::string>& names,
                                         bool all, const State& state,
                                         const WitnessConfig& cfg) {
  if (all) return evaluate_all(state, cfg);
  std::vector<WitnessReport> out;
  for (const auto& n : names) out.push_back(evaluate_witness(n, state, cfg));
  return out;
}

RunMetadata metadata(const std::string& command, const CommonOptions& c,
                     const StateSpec& spec) {
  return RunMetadata{command, c.seed, spec.cutoffs, c.config, to_json(spec)};
}

int cmd_witness(const CommonOptions& c, const std::string& selection, std::ostream& out,
                std::ostream& err) {
  const std::vector<std::string> names = resolve_witnesses(selection);
  const StateSpec spec = resolve_spec(c.state);
  const State state = build_state(spec, build_options(c));
  const double leak = truncation_leakage(state);
  enforce_leakage(leak, c.config);
  warn_leakage(leak, c.config, err);

  const auto reports = run_witnesses(names, selection == "all", state, c.config);
  const RunMetadata meta = metadata("witness", c, spec);
  if (c.format == "csv") {
    emit("witness", "csv", witness_csv(meta, reports), c.output, out);
  } else {
    nlohmann::json j = metadata_json(meta);
    j["leakage"] = leak;
    j["reports"] = nlohmann::json::array();
    for (const auto& r : reports) j["reports"].push_back(report_to_json(r));
    emit("witness", "json", j.dump(2) + "\n", c.output, out);
  }
  return kExitOk;
}

struct Range {
  double start;
  double stop;
  double step;
};

Range parse_range(const std::string& text) {
  const auto a = text.find(':');
  const auto b = a == std::string::npos ? a : text.find(':', a + 1);
  if (a == std::string::npos || b == std::string::npos ||
      text.find(':', b + 1) != std::string::npos) {
    throw InvalidArgument("range must be start:stop:step, got '" + text + "'");
  }
  Range r{parse_number(text.substr(0, a), "range start"),
          parse_number(text.substr(a + 1, b - a - 1), "range stop"),
          parse_number(text.substr(b + 1), "range step")};
  if (!(r.step > 0.0)) throw InvalidArgument("range step must be > 0");
  if (r.stop < r.start) throw InvalidArgument("range stop must be >= start");
  return r;
}

// start, start+step, ... up to stop inclusive; empty when start == stop. Values
// are rounded to 12 significant digits so 0.1 + 2*0.1 prints as 0.3.
std::vector<double> range_values(const Range& r) {
  std::vector<double> out;
  if (r.stop == r.start) return out;
  const auto n = static_cast<long long>(std::floor((r.stop - r.start) / r.step + 1e-9));
  for (long long k = 0; k <= n; ++k) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", r.start + static_cast<double>(k) * r.step);
    out.push_back(std::strtod(buf, nullptr));
  }
  return out;
}

int cmd_sweep(const CommonOptions& c, const std::string& selection, const std::string& vary,
              const std::string& range_text, int jobs, std::ostream& out, std::ostream& err) {
  std::vector<std::string> names = resolve_witnesses(selection);
  std::sort(names.begin(), names.end());
  const Range range = parse_range(range_text);
  const StateSpec base = resolve_spec(c.state);
  const std::vector<double> values = range_values(range);

  auto evaluate_point = [&](double v) {
    StateSpec spec = base;
    spec.params[vary] = v;
    const State state = build_state(spec, build_options(c));
    const double leak = truncation_leakage(state);
    enforce_leakage(leak, c.config);
    std::vector<SweepRow> rows;
    for (auto& r : run_witnesses(names, selection == "all", state, c.config)) {
      if (r.verdict != Verdict::not_applicable) rows.push_back({v, std::move(r)});
    }
    std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
      return a.report.name < b.report.name;
    });
    return std::make_pair(leak, rows);
  };

  std::vector<std::pair<double, std::vector<SweepRow>>> results(values.size());
  const std::size_t width = static_cast<std::size_t>(std::max(1, jobs));
  for (std::size_t begin = 0; begin < values.size(); begin += width) {
    const std::size_t end = std::min(values.size(), begin + width);
    std::vector<std::future<std::pair<double, std::vector<SweepRow>>>> batch;
    for (std::size_t i = begin; i < end; ++i) {
      batch.push_back(std::async(width > 1 ? std::launch::async : std::launch::deferred,
                                 evaluate_point, values[i]));
    }
    for (std::size_t i = begin; i < end; ++i) results[i] = batch[i - begin].get();
  }

  std::vector<SweepRow> rows;
  for (std::size_t i = 0; i < results.size(); ++i) {
    warn_leakage(results[i].first, c.config, err);
    for (auto& row : results[i].second) rows.push_back(std::move(row));
  }
  RunMetadata meta = metadata("sweep", c, base);
  meta.state["sweep"] = {{"vary", vary}, {"range", range_text}};
  emit("sweep", "csv", sweep_csv(meta, names, rows), c.output, out);
  return kExitOk;
}

int cmd_ppt(const CommonOptions& c, std::size_t mode, std::size_t cap, std::ostream& out) {
  const StateSpec spec = resolve_spec(c.state);
  const State state = build_state(spec, build_options(c));
  const double leak = truncation_leakage(state);
  if (space_of(state).dim() > cap) {
    throw OracleCapExceeded("state dimension " + std::to_string(space_of(state).dim()) +
                            " exceeds dense oracle cap " + std::to_string(cap));
  }
  JacobiOptions jopts;
  jopts.max_dim = cap;
  const PptAnalysis ppt = ppt_analysis(to_density(state), mode, jopts);

  const RunMetadata meta = metadata("ppt", c, spec);
  if (c.format == "csv") {
    std::ostringstream os;
    os << metadata_csv_comment(meta);
    os << "mode,min_eigenvalue,negativity,verdict,residual,sweeps,leakage\n";
    os << mode << ',' << format_double(ppt.min_eigenvalue) << ','
       << format_double(ppt.negativity) << ',' << (ppt.ppt ? "PPT" : "NPT") << ','
       << format_double(ppt.residual) << ',' << ppt.sweeps << ',' << format_double(leak)
       << '\n';
    emit("ppt", "csv", os.str(), c.output, out);
    return kExitOk;
  }
  nlohmann::json j = metadata_json(meta);
  j["tolerances"]["spectral_tol"] = kSpectralTol;
  j["tolerances"]["oracle_cap"] = cap;
  j["mode"] = mode;
  j["leakage"] = leak;
  j["min_eigenvalue"] = ppt.min_eigenvalue;
  j["negativity"] = ppt.negativity;
  j["verdict"] = ppt.ppt ? "PPT" : "NPT";
  j["residual"] = ppt.residual;
  j["sweeps"] = ppt.sweeps;
  if (space_of(state).modes() == 2 && mode == 1 &&
      classify_leakage(leak, c.config.leakage) != LeakageLevel::error) {
    const CrossCheck cc = cross_check(state, c.config, jopts);
    j["cross_check"] = {{"violated", cc.violated},
                        {"discrepancies", cc.discrepancies},
                        {"consistent", cc.consistent()}};
  }
  emit("ppt", "json", j.dump(2) + "\n", c.output, out);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entanglement witnesses for truncated multimode Fock states", "fockwit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("fockwit ") + kVersion);

  CommonOptions wc;
  std::string witness_sel = "all";
  auto* witness = app.add_subcommand("witness", "Evaluate witnesses on one state");
  add_state_options(witness, wc);
  witness->add_option("--witness", witness_sel, "Witness names, comma-separated, or all");
  witness->add_option("--phi", wc.config.phi, "Phase for k_phi_variance (radians)");
  witness->add_option("--format", wc.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  CommonOptions sc;
  std::string sweep_sel = "all";
  std::string vary = "x";
  std::string range_text;
  int jobs = 1;
  auto* sweep = app.add_subcommand("sweep", "Sweep one numeric family parameter");
  add_state_options(sweep, sc);
  sweep->add_option("--witness", sweep_sel, "Witness names, comma-separated, or all");
  sweep->add_option("--vary", vary, "Parameter to sweep (default x)");
  sweep->add_option("--range", range_text, "start:stop:step (stop inclusive)")->required();
  sweep->add_option("--phi", sc.config.phi, "Phase for k_phi_variance (radians)");
  sweep->add_option("--jobs", jobs, "Sweep points evaluated concurrently");

  CommonOptions pc;
  std::size_t mode = 1;
  std::size_t cap = JacobiOptions{}.max_dim;
  auto* ppt = app.add_subcommand("ppt", "Spectral partial-transpose test");
  add_state_options(ppt, pc);
  ppt->add_option("--mode", mode, "Mode to transpose (default 1)");
  ppt->add_option("--oracle-cap", cap, "Largest dimension for the dense eigensolver");
  ppt->add_option("--format", pc.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  SelftestOptions st;
  auto* selftest = app.add_subcommand("selftest", "Run the built-in invariant suites");
  selftest->add_option("--seed", st.seed, "Seed for sampled states");
  selftest->add_option("--cutoff", st.cutoff, "Per-mode cutoff for algebra and sampling");
  selftest->add_option("--samples", st.samples, "Samples per property");
  selftest->add_option("--boundary-tol", st.config.boundary_tol, "Boundary tolerance");
  selftest->add_option("--leak-warn", st.config.leakage.warn, "Leakage warning threshold");
  selftest->add_option("--leak-error", st.config.leakage.error, "Leakage error threshold");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << "fockwit " << kVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadSpec;
  }

  try {
    if (witness->parsed()) return cmd_witness(wc, witness_sel, out, err);
    if (sweep->parsed()) return cmd_sweep(sc, sweep_sel, vary, range_text, jobs, out, err);
    if (ppt->parsed()) return cmd_ppt(pc, mode, cap, out);
    if (selftest->parsed()) {
      const SelftestSummary summary = run_selftest(st);
      print_summary(summary, out);
      return summary.passed() ? kExitOk : kExitSelftestFailed;
    }
  } catch (const LeakageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitLeakage;
  } catch (const OracleCapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitOracleCap;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadSpec;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitSelftestFailed;
  }
  return kExitBadSpec;
}

}  // namespace fockwit::cli
