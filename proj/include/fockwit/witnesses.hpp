#pragma once

#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fockwit/moments.hpp"
#include "fockwit/states.hpp"

namespace fockwit {

/// physicality: holds for every state; a violation is a numerical or
///   truncation fault, never an entanglement claim.
/// separability: holds for every separable state; a violation certifies
///   entanglement.
/// diagnostic: informational.
enum class WitnessKind { physicality, separability, diagnostic };

/// not_applicable and error only appear in evaluate_all output.
enum class Verdict { satisfied, violated, boundary, not_applicable, error };

std::string_view to_string(WitnessKind k);
std::string_view to_string(Verdict v);

struct WitnessReport {
  std::string name;
  WitnessKind kind = WitnessKind::diagnostic;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // lhs - rhs, negative means violated
  Verdict verdict = Verdict::satisfied;
  double leakage = 0.0;
  std::string anchor;                   // the inequality being tested
  std::optional<double> reference_rhs;  // pt_su2_product: the K uncertainty bound
  std::string message;                  // parameters, or why not evaluated
};

struct WitnessConfig {
  double boundary_tol = 1e-9;
  LeakagePolicy leakage;
  double phi = std::numbers::pi / 2;  // for k_phi_variance
};

enum class PtVariant { weak, strict };

/// dSx dSy >= |<Sz>|/2.
WitnessReport su2_uncertainty(const State& state, const WitnessConfig& cfg = {});
/// dKx dKy >= |<Kz>|/2.
WitnessReport su11_uncertainty(const State& state, const WitnessConfig& cfg = {});

/// SU(1,1) uncertainty pushed through the partial transpose and rewritten in
/// SU(2) variables. weak: dSx dSy >= |<Na> + <Nb>|/4. strict keeps the +2:
/// dSx dSy >= |<Na> + <Nb> + 2|/4. Only the weak form is a separability
/// criterion; the strict form fails on the vacuum and is reported as a
/// diagnostic.
WitnessReport pt_su11_product(const State& state, PtVariant variant = PtVariant::weak,
                              const WitnessConfig& cfg = {});

/// (dSx)^2 + (dSy)^2 >= |<Na> + <Nb>|/2.
WitnessReport sum_variance(const State& state, const WitnessConfig& cfg = {});

/// |<a b^dag>|^2 - |<a><b^dag>|^2; zero on pure product states.
WitnessReport factorization_gap(const State& state, const WitnessConfig& cfg = {});

/// dKx dKy >= |<Na - Nb - 1>|/4. Implied by the K uncertainty relation via
/// the triangle inequality, so it never fires; `reference_rhs` carries
/// |<Kz>|/2 for comparison.
WitnessReport pt_su2_product(const State& state, const WitnessConfig& cfg = {});

/// <Na Nb> - |<a b^dag>|^2 >= 0.
WitnessReport hz_su2(const State& state, const WitnessConfig& cfg = {});
/// <Na><Nb> - |<ab>|^2 >= 0.
WitnessReport hz_su11(const State& state, const WitnessConfig& cfg = {});
/// sqrt(<Na Nb Nc>) >= |<a b^dag c^dag>| on a three-mode state.
WitnessReport hz_three_mode(const State& state, const WitnessConfig& cfg = {});
/// (dK(phi))^2 >= 1/4 with phi = cfg.phi.
WitnessReport k_phi_variance(const State& state, const WitnessConfig& cfg = {});

/// Every witness name accepted by evaluate_witness, in evaluate_all order,
/// plus the opt-in "pt_su11_product_strict".
std::span<const std::string_view> witness_names();
bool is_witness_name(std::string_view name);

/// Human-readable inequality for a witness; throws InvalidArgument if unknown.
std::string_view witness_anchor(std::string_view name);
WitnessKind witness_kind(std::string_view name);

/// Throws InvalidArgument for unknown names.
WitnessReport evaluate_witness(std::string_view name, const State& state,
                               const WitnessConfig& cfg = {});

/// All default witnesses (everything except pt_su11_product_strict). Witnesses
/// for the wrong mode count come back as not_applicable; evaluation errors are
/// embedded as verdict error with the message filled in.
std::vector<WitnessReport> evaluate_all(const State& state, const WitnessConfig& cfg = {});

/// margin = lhs - rhs and the verdict from `boundary_tol`.
Verdict classify_margin(double margin, double boundary_tol);

}  // namespace fockwit
