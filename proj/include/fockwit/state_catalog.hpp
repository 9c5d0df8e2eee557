#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fockwit/states.hpp"

namespace fockwit {

/// Leakage allowed for truncated catalog states unless the caller says otherwise.
inline constexpr double kCatalogLeakageLimit = 1e-4;

StateVector fock(const FockSpace& space, std::span<const int> occupations);

/// (|0,1> + |1,0>)/sqrt(2).
StateVector bell_su2(const FockSpace& space);
/// (|0,0> + |1,1>)/sqrt(2).
StateVector bell_su11(const FockSpace& space);
/// (|1,0,0> + |0,1,1>)/sqrt(2).
StateVector three_mode_hz(const FockSpace& space);

/// Product of truncated coherent states, one amplitude per mode, renormalized
/// after truncation. Throws LeakageError above `leakage_limit`.
StateVector coherent_product(const FockSpace& space, std::span<const Complex> amplitudes,
                             double leakage_limit = kCatalogLeakageLimit);

/// Two-mode squeezed vacuum sqrt(1-x^2) sum_n x^n |n,n>, 0 <= x < 1,
/// truncated and renormalized.
StateVector tmsv(const FockSpace& space, double x,
                 double leakage_limit = kCatalogLeakageLimit);

/// Normalized complex Gaussian amplitudes on the interior block (every
/// occupation <= cutoff - 3), so truncation leakage is exactly zero and
/// quadratic moments are exact. Needs every cutoff >= 4.
StateVector random_pure(const FockSpace& space, std::uint64_t seed);

/// sum_k p_k |phi_k><phi_k| with each phi_k a product of random single-mode
/// states on the interior block. Separable, hence PPT, by construction.
DensityOperator random_separable(const FockSpace& space, std::uint64_t seed, int terms);

enum class Family {
  fock,
  bell_su2,
  bell_su11,
  coherent_product,
  tmsv,
  three_mode_hz,
  mixture,
  random_pure,
  random_separable,
};

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

/// JSON-facing state description:
///   {"family": str, "params": {...}, "cutoffs": [int], "mix": [{"weight", "spec"}]}
/// Mixture components inherit the parent cutoffs when they omit their own.
struct StateSpec {
  Family family = Family::fock;
  nlohmann::json params = nlohmann::json::object();
  std::vector<int> cutoffs;
  struct Component;
  std::vector<Component> mix;
};

struct StateSpec::Component {
  double weight;
  StateSpec spec;
};

/// Throws InvalidArgument on any schema violation.
StateSpec parse_state_spec(const nlohmann::json& j);
nlohmann::json to_json(const StateSpec& spec);

/// Default cutoffs for a family when none are given.
std::vector<int> default_cutoffs(Family family);

struct BuildOptions {
  double leakage_limit = kCatalogLeakageLimit;
  std::uint64_t seed = 0;  // used when params carry no "seed"
  std::size_t max_dim = kDefaultMaxDim;
};

State build_state(const StateSpec& spec, const BuildOptions& opts = {});

}  // namespace fockwit
