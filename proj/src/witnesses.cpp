#include "fockwit/witnesses.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <string>

#include "fockwit/error.hpp"
#include "fockwit/su_algebra.hpp"

namespace fockwit {

namespace {

struct WitnessInfo {
  std::string_view name;
  WitnessKind kind;
  std::size_t modes;
  std::string_view anchor;
};

// evaluate_all order; the strict variant is last and opt-in.
constexpr std::array<WitnessInfo, 11> kWitnesses{{
    {"su2_uncertainty", WitnessKind::physicality, 2, "dSx*dSy >= |<Sz>|/2"},
    {"su11_uncertainty", WitnessKind::physicality, 2, "dKx*dKy >= |<Kz>|/2"},
    {"pt_su11_product", WitnessKind::separability, 2, "dSx*dSy >= |<Na>+<Nb>|/4"},
    {"sum_variance", WitnessKind::separability, 2, "dSx^2 + dSy^2 >= |<Na>+<Nb>|/2"},
    {"factorization_gap", WitnessKind::diagnostic, 2,
     "|<a b^dag>|^2 - |<a><b^dag>|^2 (0 on product states)"},
    {"pt_su2_product", WitnessKind::diagnostic, 2, "dKx*dKy >= |<Na - Nb - 1>|/4"},
    {"hz_su2", WitnessKind::separability, 2, "<Na Nb> - |<a b^dag>|^2 >= 0"},
    {"hz_su11", WitnessKind::separability, 2, "<Na><Nb> - |<ab>|^2 >= 0"},
    {"hz_three_mode", WitnessKind::separability, 3, "sqrt(<Na Nb Nc>) >= |<a b^dag c^dag>|"},
    {"k_phi_variance", WitnessKind::separability, 2, "dK(phi)^2 >= 1/4"},
    {"pt_su11_product_strict", WitnessKind::diagnostic, 2, "dSx*dSy >= |<Na>+<Nb>+2|/4"},
}};

constexpr std::size_t kDefaultCount = 10;

std::array<std::string_view, kWitnesses.size()> make_names() {
  std::array<std::string_view, kWitnesses.size()> out{};
  for (std::size_t i = 0; i < kWitnesses.size(); ++i) out[i] = kWitnesses[i].name;
  return out;
}

const std::array<std::string_view, kWitnesses.size()> kNames = make_names();

const WitnessInfo& info(std::string_view name) {
  for (const auto& w : kWitnesses) {
    if (w.name == name) return w;
  }
  throw InvalidArgument("unknown witness '" + std::string(name) + "'");
}

void require_modes(const State& state, std::size_t modes, std::string_view name) {
  const std::size_t got = space_of(state).modes();
  if (got != modes) {
    throw InvalidArgument(std::string(name) + " needs a " + std::to_string(modes) +
                          "-mode state, got " + std::to_string(got));
  }
}

double checked_leakage(const State& state, const WitnessConfig& cfg,
                       std::string_view name) {
  const double leak = truncation_leakage(state);
  if (classify_leakage(leak, cfg.leakage) == LeakageLevel::error) {
    throw LeakageError(std::string(name) + ": truncation leakage " + std::to_string(leak) +
                           " exceeds error threshold",
                       leak);
  }
  return leak;
}

WitnessReport make_report(std::string_view name, double lhs, double rhs, double leakage,
                          const WitnessConfig& cfg) {
  const WitnessInfo& w = info(name);
  WitnessReport r;
  r.name = std::string(name);
  r.kind = w.kind;
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = lhs - rhs;
  r.verdict = classify_margin(r.margin, cfg.boundary_tol);
  r.leakage = leakage;
  r.anchor = std::string(w.anchor);
  return r;
}

double mean(const State& s, const LinearOperator& op) { return expectation(s, op).real(); }

}  // namespace

std::string_view to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::physicality: return "physicality";
    case WitnessKind::separability: return "separability";
    case WitnessKind::diagnostic: return "diagnostic";
  }
  return "unknown";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::satisfied: return "satisfied";
    case Verdict::violated: return "violated";
    case Verdict::boundary: return "boundary";
    case Verdict::not_applicable: return "not_applicable";
    case Verdict::error: return "error";
  }
  return "unknown";
}

Verdict classify_margin(double margin, double boundary_tol) {
  if (std::abs(margin) <= boundary_tol) return Verdict::boundary;
  return margin < 0.0 ? Verdict::violated : Verdict::satisfied;
}

WitnessReport su2_uncertainty(const State& state, const WitnessConfig& cfg) {
  constexpr std::string_view name = "su2_uncertainty";
  require_modes(state, 2, name);
  const double leak = checked_leakage(state, cfg, name);
  const GeneratorSet s = su2_generators(space_of(state));
  return make_report(name, uncertainty_product(state, s.x, s.y),
                     0.5 * std::abs(mean(state, s.z)), leak, cfg);
}

WitnessReport su11_uncertainty(const State& state, const WitnessConfig& cfg) {
  constexpr std::string_view name = "su11_uncertainty";
  require_modes(state, 2, name);
  const double leak = checked_leakage(state, cfg, name);
  const GeneratorSet k = su11_generators(space_of(state));
  return make_report(name, uncertainty_product(state, k.x, k.y),
                     0.5 * std::abs(mean(state, k.z)), leak, cfg);
}

WitnessReport pt_su11_product(const State& state, PtVariant variant,
                              const WitnessConfig& cfg) {
  const bool strict = variant == PtVariant::strict;
  const std::string_view name = strict ? "pt_su11_product_strict" : "pt_su11_product";
  require_modes(state, 2, name);
  const double leak = checked_leakage(state, cfg, name);
  const FockSpace& space = space_of(state);
  const GeneratorSet s = su2_generators(space);
  const double n_total = mean(state, number_op(space, 0)) + mean(state, number_op(space, 1));
  const double rhs = 0.25 * std::abs(n_total + (strict ? 2.0 : 0.0));
  return make_report(name, uncertainty_product(state, s.x, s.y), rhs, leak, cfg);
}

WitnessReport sum_variance(const State& state, const WitnessConfig& cfg) {
  constexpr std::string_view name = "sum_variance";
  require_modes(state, 2, name);
  const double leak = checked_leakage(state, cfg, name);
  const FockSpace& space = space_of(state);
  const GeneratorSet s = su2_generators(space);
  const double n_total = mean(state, number_op(space, 0)) + mean(state, number_op(space, 1));
  return make_report(name, variance(state, s.x) + variance(state, s.y),
                     0.5 * std::abs(n_total), leak, cfg);
}

WitnessReport factorization_gap(const State& state, const WitnessConfig& cfg) {
  constexpr std::string_view name = "factorization_gap";
  require_modes(state, 2, name);
  const double leak = truncation_leakage(state);
  const FockSpace& space = space_of(state);
  const LinearOperator a = annihilation_op(space, 0);
  const LinearOperator bd = creation_op(space, 1);
  const double joint = std::norm(expectation(state, compose(a, bd)).value);
  const double split = std::norm(expectation(state, a).value * expectation(state, bd).value);
  return make_report(name, joint, split, leak, cfg);
}

WitnessReport pt_su2_product(const State& state, const WitnessConfig& cfg) {
  constexpr std::string_view name = "pt_su2_product";
  require_modes(state, 2, name);
  const double leak = checked_leakage(state, cfg, name);
  const FockSpace& space = space_of(state);
  const GeneratorSet k = su11_generators(space);
  const double diff =
      mean(state, number_op(space, 0)) - mean(state, number_op(space, 1)) - 1.0;
  WitnessReport r =
      make_report(name, uncertainty_product(state, k.x, k.y), 0.25 * std::abs(diff), leak, cfg);
  r.reference_rhs = 0.5 * std::abs(mean(state, k.z));
  return r;
}

WitnessReport hz_su2(const State& state, const WitnessConfig& cfg) {
  constexpr std::string_view name = "hz_su2";
  require_modes(state, 2, name);
  const double leak = checked_leakage(state, cfg, name);
  const FockSpace& space = space_of(state);
  const LinearOperator na_nb = compose(number_op(space, 0), number_op(space, 1));
  const LinearOperator a_bd = compose(annihilation_op(space, 0), creation_op(space, 1));
  const double lhs = mean(state, na_nb) - std::norm(expectation(state, a_bd).value);
  return make_report(name, lhs, 0.0, leak, cfg);
}

WitnessReport hz_su11(const State& state, const WitnessConfig& cfg) {
  constexpr std::string_view name = "hz_su11";
  require_modes(state, 2, name);
  const double leak = checked_leakage(state, cfg, name);
  const FockSpace& space = space_of(state);
  const LinearOperator ab = compose(annihilation_op(space, 0), annihilation_op(space, 1));
  const double lhs = mean(state, number_op(space, 0)) * mean(state, number_op(space, 1)) -
                     std::norm(expectation(state, ab).value);
  return make_report(name, lhs, 0.0, leak, cfg);
}

WitnessReport hz_three_mode(const State& state, const WitnessConfig& cfg) {
  constexpr std::string_view name = "hz_three_mode";
  require_modes(state, 3, name);
  const double leak = checked_leakage(state, cfg, name);
  const FockSpace& space = space_of(state);
  const LinearOperator n3 =
      compose(compose(number_op(space, 0), number_op(space, 1)), number_op(space, 2));
  const LinearOperator a_bd_cd = compose(
      compose(annihilation_op(space, 0), creation_op(space, 1)), creation_op(space, 2));
  // <Na Nb Nc> is a nonnegative moment; clamp rounding noise before the root.
  const double lhs = std::sqrt(std::max(0.0, mean(state, n3)));
  const double rhs = std::abs(expectation(state, a_bd_cd).value);
  return make_report(name, lhs, rhs, leak, cfg);
}

WitnessReport k_phi_variance(const State& state, const WitnessConfig& cfg) {
  constexpr std::string_view name = "k_phi_variance";
  require_modes(state, 2, name);
  const double leak = checked_leakage(state, cfg, name);
  WitnessReport r =
      make_report(name, variance(state, k_phi(space_of(state), cfg.phi)), 0.25, leak, cfg);
  std::ostringstream msg;
  msg.precision(17);
  msg << "phi=" << cfg.phi;
  r.message = msg.str();
  return r;
}


std::span<const std::string_view> witness_names() { return kNames; }

std::string_view witness_anchor(std::string_view name) { return info(name).anchor; }

WitnessKind witness_kind(std::string_view name) { return info(name).kind; }

bool is_witness_name(std::string_view name) {
  for (std::string_view n : witness_names()) {
    if (n == name) return true;
  }
  return false;
}

WitnessReport evaluate_witness(std::string_view name, const State& state,
                               const WitnessConfig& cfg) {
  if (name == "su2_uncertainty") return su2_uncertainty(state, cfg);
  if (name == "su11_uncertainty") return su11_uncertainty(state, cfg);
  if (name == "pt_su11_product") return pt_su11_product(state, PtVariant::weak, cfg);
  if (name == "pt_su11_product_strict") return pt_su11_product(state, PtVariant::strict, cfg);
  if (name == "sum_variance") return sum_variance(state, cfg);
  if (name == "factorization_gap") return factorization_gap(state, cfg);
  if (name == "pt_su2_product") return pt_su2_product(state, cfg);
  if (name == "hz_su2") return hz_su2(state, cfg);
  if (name == "hz_su11") return hz_su11(state, cfg);
  if (name == "hz_three_mode") return hz_three_mode(state, cfg);
  if (name == "k_phi_variance") return k_phi_variance(state, cfg);
  throw InvalidArgument("unknown witness '" + std::string(name) + "'");
}

std::vector<WitnessReport> evaluate_all(const State& state, const WitnessConfig& cfg) {
  std::vector<WitnessReport> out;
  const std::size_t modes = space_of(state).modes();
  for (std::size_t k = 0; k < kDefaultCount; ++k) {
    const std::string_view name = kWitnesses[k].name;
    if (info(name).modes != modes) {
      WitnessReport r;
      r.name = std::string(name);
      r.kind = info(name).kind;
      r.verdict = Verdict::not_applicable;
      r.lhs = r.rhs = r.margin = std::nan("");
      r.message = "needs a " + std::to_string(info(name).modes) + "-mode state";
      out.push_back(std::move(r));
      continue;
    }
    try {
      out.push_back(evaluate_witness(name, state, cfg));
    } catch (const Error& e) {
      WitnessReport r;
      r.name = std::string(name);
      r.kind = info(name).kind;
      r.verdict = Verdict::error;
      r.lhs = r.rhs = r.margin = std::nan("");
      r.leakage = truncation_leakage(state);
      r.message = e.what();
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace fockwit
