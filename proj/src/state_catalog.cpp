#include "fockwit/state_catalog.hpp"

#include <array>
#include <cmath>
#include <random>
#include <string>

#include "fockwit/error.hpp"
#include "fockwit/moments.hpp"

namespace fockwit {

namespace {

void require_modes(const FockSpace& space, std::size_t modes, const char* what) {
  if (space.modes() != modes) {
    throw InvalidArgument(std::string(what) + " needs a " + std::to_string(modes) +
                          "-mode space, got " + std::to_string(space.modes()));
  }
}

StateVector superpose(const FockSpace& space,
                      std::initializer_list<std::vector<int>> kets) {
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(space.dim()));
  for (const auto& occ : kets) {
    amps[static_cast<Eigen::Index>(space.index(occ))] += 1.0;
  }
  return StateVector(space, std::move(amps));
}

void check_leakage(const StateVector& psi, double limit, const char* what) {
  const double leak = truncation_leakage(psi);
  if (leak > limit) {
    throw LeakageError(std::string(what) + " truncation leakage " + std::to_string(leak) +
                           " exceeds limit " + std::to_string(limit),
                       leak);
  }
}

void require_interior(const FockSpace& space) {
  for (int c : space.cutoffs()) {
    if (c < 4) {
      throw InvalidArgument("random states need every cutoff >= 4");
    }
  }
}

// Normalized complex Gaussian vector over occupations 0..cutoff-3 of one mode.
Eigen::VectorXcd random_mode_vector(int cutoff, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(cutoff);
  for (int n = 0; n <= cutoff - 3; ++n) {
    const double re = normal(rng);
    const double im = normal(rng);
    v[n] = Complex(re, im);
  }
  return v / v.norm();
}

Eigen::VectorXcd kron(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  Eigen::VectorXcd out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a[i] * b;
  }
  return out;
}

Eigen::VectorXcd product_vector(const FockSpace& space,
                                const std::vector<Eigen::VectorXcd>& factors) {
  Eigen::VectorXcd out = factors.front();
  for (std::size_t m = 1; m < space.modes(); ++m) out = kron(out, factors[m]);
  return out;
}

}  // namespace

StateVector fock(const FockSpace& space, std::span<const int> occupations) {
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(space.dim()));
  amps[static_cast<Eigen::Index>(space.index(occupations))] = 1.0;
  return StateVector(space, std::move(amps));
}

StateVector bell_su2(const FockSpace& space) {
  require_modes(space, 2, "bell_su2");
  return superpose(space, {{0, 1}, {1, 0}});
}

StateVector bell_su11(const FockSpace& space) {
  require_modes(space, 2, "bell_su11");
  return superpose(space, {{0, 0}, {1, 1}});
}

StateVector three_mode_hz(const FockSpace& space) {
  require_modes(space, 3, "three_mode_hz");
  return superpose(space, {{1, 0, 0}, {0, 1, 1}});
}

StateVector coherent_product(const FockSpace& space, std::span<const Complex> amplitudes,
                             double leakage_limit) {
  if (amplitudes.size() != space.modes()) {
    throw InvalidArgument("coherent_product needs one amplitude per mode");
  }
  std::vector<Eigen::VectorXcd> factors;
  for (std::size_t m = 0; m < space.modes(); ++m) {
    const Complex alpha = amplitudes[m];
    if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag())) {
      throw InvalidArgument("coherent amplitude must be finite");
    }
    const int cutoff = space.cutoffs()[m];
    Eigen::VectorXcd v(cutoff);
    // c_n = alpha^n / sqrt(n!), built recursively; the global e^{-|alpha|^2/2}
    // drops out in the renormalization.
    v[0] = 1.0;
    for (int n = 1; n < cutoff; ++n) {
      v[n] = v[n - 1] * alpha / std::sqrt(static_cast<double>(n));
    }
    factors.push_back(v);
  }
  StateVector psi(space, product_vector(space, factors));
  check_leakage(psi, leakage_limit, "coherent_product");
  return psi;
}

StateVector tmsv(const FockSpace& space, double x, double leakage_limit) {
  require_modes(space, 2, "tmsv");
  if (!(x >= 0.0 && x < 1.0)) {
    throw InvalidArgument("tmsv parameter x must satisfy 0 <= x < 1");
  }
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(space.dim()));
  const int top = std::min(space.cutoffs()[0], space.cutoffs()[1]);
  const double norm = std::sqrt(1.0 - x * x);
  double xn = 1.0;
  for (int n = 0; n < top; ++n) {
    const std::array<int, 2> occ{n, n};
    amps[static_cast<Eigen::Index>(space.index(occ))] = norm * xn;
    xn *= x;
  }
  StateVector psi(space, std::move(amps));
  check_leakage(psi, leakage_limit, "tmsv");
  return psi;
}

StateVector random_pure(const FockSpace& space, std::uint64_t seed) {
  require_interior(space);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(space.dim()));
  for (std::size_t i = 0; i < space.dim(); ++i) {
    bool interior = true;
    for (std::size_t m = 0; m < space.modes() && interior; ++m) {
      interior = space.occupation(i, m) <= space.cutoffs()[m] - 3;
    }
    if (interior) {
      const double re = normal(rng);
      const double im = normal(rng);
      amps[static_cast<Eigen::Index>(i)] = Complex(re, im);
    }
  }
  return StateVector(space, std::move(amps));
}

DensityOperator random_separable(const FockSpace& space, std::uint64_t seed, int terms) {
  if (terms < 1) {
    throw InvalidArgument("random_separable needs terms >= 1");
  }
  require_interior(space);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.05, 1.0);

  std::vector<double> weights(static_cast<std::size_t>(terms));
  double total = 0.0;
  for (double& w : weights) {
    w = uniform(rng);
    total += w;
  }
  std::vector<DensityOperator> parts;
  parts.reserve(weights.size());
  for (double& w : weights) {
    w /= total;
    std::vector<Eigen::VectorXcd> factors;
    for (int c : space.cutoffs()) factors.push_back(random_mode_vector(c, rng));
    parts.push_back(density_from_pure(StateVector(space, product_vector(space, factors))));
  }
  // Absorb rounding so the weights pass mix()'s sum check exactly.
  double rest = 1.0;
  for (std::size_t k = 0; k + 1 < weights.size(); ++k) rest -= weights[k];
  weights.back() = rest;
  return mix(weights, parts);
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::fock: return "fock";
    case Family::bell_su2: return "bell_su2";
    case Family::bell_su11: return "bell_su11";
    case Family::coherent_product: return "coherent_product";
    case Family::tmsv: return "tmsv";
    case Family::three_mode_hz: return "three_mode_hz";
    case Family::mixture: return "mixture";
    case Family::random_pure: return "random_pure";
    case Family::random_separable: return "random_separable";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::fock, Family::bell_su2, Family::bell_su11,
                   Family::coherent_product, Family::tmsv, Family::three_mode_hz,
                   Family::mixture, Family::random_pure, Family::random_separable}) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

std::vector<int> default_cutoffs(Family family) {
  switch (family) {
    case Family::three_mode_hz: return {4, 4, 4};
    case Family::bell_su2:
    case Family::bell_su11: return {6, 6};
    case Family::random_pure:
    case Family::random_separable: return {8, 8};
    default: return {30, 30};
  }
}

StateSpec parse_state_spec(const nlohmann::json& j) {
  if (!j.is_object()) {
    throw InvalidArgument("state spec must be a JSON object");
  }
  StateSpec spec;
  if (!j.contains("family") || !j["family"].is_string()) {
    throw InvalidArgument("state spec needs a string \"family\"");
  }
  const auto family = parse_family(j["family"].get<std::string>());
  if (!family) {
    throw InvalidArgument("unknown state family '" + j["family"].get<std::string>() + "'");
  }
  spec.family = *family;
  for (const auto& [key, _] : j.items()) {
    if (key != "family" && key != "params" && key != "cutoffs" && key != "mix") {
      throw InvalidArgument("unknown state spec field '" + key + "'");
    }
  }
  if (j.contains("params")) {
    if (!j["params"].is_object()) throw InvalidArgument("\"params\" must be an object");
    spec.params = j["params"];
  }
  if (j.contains("cutoffs")) {
    if (!j["cutoffs"].is_array()) throw InvalidArgument("\"cutoffs\" must be an array");
    for (const auto& c : j["cutoffs"]) {
      if (!c.is_number_integer()) throw InvalidArgument("cutoffs must be integers");
      spec.cutoffs.push_back(c.get<int>());
    }
  }
  if (j.contains("mix")) {
    if (!j["mix"].is_array() || j["mix"].empty()) {
      throw InvalidArgument("\"mix\" must be a non-empty array");
    }
    for (const auto& item : j["mix"]) {
      if (!item.is_object() || !item.contains("weight") || !item["weight"].is_number() ||
          !item.contains("spec")) {
        throw InvalidArgument("mix entries need a numeric \"weight\" and a \"spec\"");
      }
      spec.mix.push_back({item["weight"].get<double>(), parse_state_spec(item["spec"])});
    }
  }
  if ((spec.family == Family::mixture) != !spec.mix.empty()) {
    throw InvalidArgument("\"mix\" is required for, and only allowed with, family mixture");
  }
  return spec;
}

nlohmann::json to_json(const StateSpec& spec) {
  nlohmann::json j;
  j["family"] = std::string(family_name(spec.family));
  j["params"] = spec.params;
  if (!spec.cutoffs.empty()) j["cutoffs"] = spec.cutoffs;
  if (!spec.mix.empty()) {
    j["mix"] = nlohmann::json::array();
    for (const auto& c : spec.mix) {
      j["mix"].push_back({{"weight", c.weight}, {"spec", to_json(c.spec)}});
    }
  }
  return j;
}

namespace {

double number_param(const nlohmann::json& params, const char* key, double fallback) {
  if (!params.contains(key)) return fallback;
  if (!params[key].is_number()) {
    throw InvalidArgument(std::string("parameter '") + key + "' must be a number");
  }
  return params[key].get<double>();
}

bool has_param(const nlohmann::json& params, const char* key) {
  return params.contains(key);
}

// Accepts a number, [re, im], or separate "<key>" and "<key>_im" numbers.
Complex complex_param(const nlohmann::json& params, const std::string& key) {
  if (params.contains(key) && params[key].is_array()) {
    const auto& a = params[key];
    if (a.size() != 2 || !a[0].is_number() || !a[1].is_number()) {
      throw InvalidArgument("parameter '" + key + "' must be [re, im]");
    }
    return {a[0].get<double>(), a[1].get<double>()};
  }
  const std::string im_key = key + "_im";
  return {number_param(params, key.c_str(), 0.0), number_param(params, im_key.c_str(), 0.0)};
}

std::uint64_t seed_param(const nlohmann::json& params, std::uint64_t fallback) {
  if (!params.contains("seed")) return fallback;
  if (!params["seed"].is_number_integer() || params["seed"].get<long long>() < 0) {
    throw InvalidArgument("parameter 'seed' must be a nonnegative integer");
  }
  return params["seed"].get<std::uint64_t>();
}

}  // namespace

State build_state(const StateSpec& spec, const BuildOptions& opts) {
  const std::vector<int> cutoffs =
      spec.cutoffs.empty() ? default_cutoffs(spec.family) : spec.cutoffs;
  const FockSpace space(cutoffs, opts.max_dim);
  const nlohmann::json& p = spec.params;

  switch (spec.family) {
    case Family::fock: {
      std::vector<int> occ(space.modes(), 0);
      if (p.contains("occ")) {
        if (!p["occ"].is_array()) throw InvalidArgument("'occ' must be an integer array");
        occ.clear();
        for (const auto& o : p["occ"]) {
          if (!o.is_number_integer()) throw InvalidArgument("'occ' must be an integer array");
          occ.push_back(o.get<int>());
        }
      }
      return fock(space, occ);
    }
    case Family::bell_su2: return bell_su2(space);
    case Family::bell_su11: return bell_su11(space);
    case Family::three_mode_hz: return three_mode_hz(space);
    case Family::coherent_product: {
      std::vector<Complex> amps;
      if (p.contains("amplitudes")) {
        if (!p["amplitudes"].is_array()) {
          throw InvalidArgument("'amplitudes' must be an array");
        }
        for (std::size_t k = 0; k < p["amplitudes"].size(); ++k) {
          amps.push_back(complex_param(
              nlohmann::json{{"v", p["amplitudes"][k]}}, "v"));
        }
      } else {
        static const std::array<const char*, 3> names{"alpha", "beta", "gamma"};
        if (space.modes() > names.size()) {
          throw InvalidArgument("use 'amplitudes' for more than three modes");
        }
        for (std::size_t m = 0; m < space.modes(); ++m) {
          amps.push_back(complex_param(p, names[m]));
        }
      }
      return coherent_product(space, amps, opts.leakage_limit);
    }
    case Family::tmsv: {
      if (!has_param(p, "x")) throw InvalidArgument("tmsv needs parameter 'x'");
      return tmsv(space, number_param(p, "x", 0.0), opts.leakage_limit);
    }
    case Family::random_pure:
      return random_pure(space, seed_param(p, opts.seed));
    case Family::random_separable: {
      const double terms = number_param(p, "terms", 4.0);
      if (terms != std::floor(terms) || terms < 1) {
        throw InvalidArgument("'terms' must be a positive integer");
      }
      return random_separable(space, seed_param(p, opts.seed), static_cast<int>(terms));
    }
    case Family::mixture: {
      std::vector<double> weights;
      std::vector<DensityOperator> parts;
      for (const auto& c : spec.mix) {
        StateSpec child = c.spec;
        if (child.cutoffs.empty()) child.cutoffs = cutoffs;
        if (child.cutoffs != cutoffs) {
          throw InvalidArgument("mixture components must share the mixture cutoffs");
        }
        weights.push_back(c.weight);
        parts.push_back(to_density(build_state(child, opts)));
      }
      return mix(weights, parts);
    }
  }
  throw InvalidArgument("unsupported state family");
}

}  // namespace fockwit
