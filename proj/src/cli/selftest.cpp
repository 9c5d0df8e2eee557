#include "cli/selftest.hpp"

#include <array>
#include <cmath>
#include <random>
#include <sstream>

#include "cli/output.hpp"
#include "fockwit/error.hpp"
#include "fockwit/moments.hpp"
#include "fockwit/ppt_oracle.hpp"
#include "fockwit/state_catalog.hpp"
#include "fockwit/su_algebra.hpp"

namespace fockwit::cli {

namespace {

constexpr double kMarginTol = 1e-9;

class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  void check(bool ok, const std::string& what) {
    ++result_.checks;
    if (!ok) {
      ++result_.failures;
      result_.messages.push_back(what);
    }
  }

  void note(const std::string& line) { result_.notes.push_back(line); }

  // Runs `body`, turning a library exception into a single failed check.
  template <typename F>
  void guarded(const std::string& what, F&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      check(false, what + ": " + e.what());
    }
  }

  SuiteResult finish() { return std::move(result_); }

 private:
  SuiteResult result_;
};

FockSpace two_mode(int cutoff) { return FockSpace({cutoff, cutoff}); }

Eigen::MatrixXcd random_matrix(Eigen::Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      m(i, j) = Complex(re, im);
    }
  }
  return m;
}

DensityOperator random_mixed(const FockSpace& space, std::uint64_t seed) {
  const std::array<double, 3> w{0.5, 0.3, 0.2};
  std::vector<DensityOperator> parts;
  for (std::uint64_t k = 0; k < w.size(); ++k) {
    parts.push_back(density_from_pure(random_pure(space, seed * 7919 + k)));
  }
  return mix(w, parts);
}

SuiteResult fock_core_suite(const SelftestOptions& o) {
  Suite s("fock_core");
  s.guarded("fock_core", [&] {
    const FockSpace space = two_mode(o.cutoff);
    for (std::size_t i = 0; i < space.dim(); ++i) {
      s.check(space.index(space.occupations(i)) == i, "index round trip");
    }
    // [a_m, a_n^dag] = delta_mn on states with every occupation < cutoff - 1.
    const std::vector<std::size_t> safe = safe_subspace(space, 2);
    for (std::size_t m = 0; m < 2; ++m) {
      for (std::size_t n = 0; n < 2; ++n) {
        const Eigen::MatrixXcd c =
            commutator(annihilation_op(space, m), creation_op(space, n)).dense();
        double worst = 0.0;
        for (std::size_t j : safe) {
          for (Eigen::Index i = 0; i < c.rows(); ++i) {
            const Complex expect =
                (m == n && static_cast<std::size_t>(i) == j) ? Complex(1.0) : Complex(0.0);
            worst = std::max(worst, std::abs(c(i, static_cast<Eigen::Index>(j)) - expect));
          }
        }
        s.check(worst <= 1e-12, "ladder commutator");
      }
    }
    std::mt19937_64 rng(o.seed);
    for (int k = 0; k < o.samples; ++k) {
      const DensityOperator rho = random_mixed(space, o.seed + static_cast<std::uint64_t>(k));
      const DenseOperator pt = partial_transpose(rho, 1);
      s.check(partial_transpose(pt, 1).matrix == rho.matrix(), "partial transpose involution");
      s.check(std::abs(pt.matrix.trace() - rho.matrix().trace()) <= 1e-12,
              "partial transpose trace");
      s.check((pt.matrix - pt.matrix.adjoint()).cwiseAbs().maxCoeff() <= 1e-12,
              "partial transpose Hermiticity");
      const LinearOperator op = LinearOperator::from_dense(
          space, random_matrix(static_cast<Eigen::Index>(space.dim()), rng));
      const Complex lhs = (pt.matrix * op.dense()).trace();
      const Complex rhs = (rho.matrix() * partial_transpose_op(op, 1).dense()).trace();
      s.check(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(lhs)),
              "partial transpose duality");
    }
  });
  return s.finish();
}

SuiteResult su_algebra_suite(const SelftestOptions& o) {
  Suite s("su_algebra");
  s.guarded("su_algebra", [&] {
    const FockSpace space = two_mode(o.cutoff);
    for (const GeneratorSet& g : {su2_generators(space), su11_generators(space)}) {
      const char* label = g.kind == AlgebraKind::su2 ? "su2" : "su11";
      s.check(is_hermitian(g.x, 1e-12) && is_hermitian(g.y, 1e-12) && is_hermitian(g.z, 1e-12),
              std::string(label) + " generators Hermitian");
      const double safe = algebra_residual(g, true);
      s.check(safe < 1e-10, std::string(label) + " commutation residual on safe subspace " +
                                format_double(safe));
      const double edge = algebra_residual(g, false);
      s.note(std::string(label) + " edge-inclusive residual (diagnostic) = " +
             format_double(edge));
    }
    const GeneratorSet g = su2_generators(space);
    const LinearOperator casimir = g.x * g.x + g.y * g.y + g.z * g.z;
    const Eigen::MatrixXcd c = commutator(g.z, casimir).dense();
    double worst = 0.0;
    for (std::size_t j : safe_subspace(space)) {
      worst = std::max(worst, c.col(static_cast<Eigen::Index>(j)).cwiseAbs().maxCoeff());
    }
    s.check(worst < 1e-10, "S_z commutes with the SU(2) Casimir");
  });
  return s.finish();
}

SuiteResult moments_suite(const SelftestOptions& o) {
  Suite s("moments");
  s.guarded("moments", [&] {
    const FockSpace space = two_mode(o.cutoff);
    const GeneratorSet sg = su2_generators(space);
    const GeneratorSet kg = su11_generators(space);
    for (int k = 0; k < o.samples; ++k) {
      const State psi = random_pure(space, o.seed + static_cast<std::uint64_t>(k));
      s.check(truncation_leakage(psi) < 1e-8, "random state leakage");
      s.check(uncertainty_product(psi, sg.x, sg.y) + kMarginTol >=
                  0.5 * std::abs(expectation(psi, sg.z).real()),
              "SU(2) uncertainty");
      s.check(uncertainty_product(psi, kg.x, kg.y) + kMarginTol >=
                  0.5 * std::abs(expectation(psi, kg.z).real()),
              "SU(1,1) uncertainty");
      const double shifted = variance(psi, sg.x + Complex(3.5) * identity_op(space));
      s.check(std::abs(shifted - variance(psi, sg.x)) <= 1e-10, "variance shift invariance");
      s.check(expectation(psi, kg.x).imag_residual <= 1e-10, "Hermitian expectation is real");
    }
  });
  return s.finish();
}

SuiteResult catalog_suite(const SelftestOptions&) {
  Suite s("state_catalog");
  s.guarded("state_catalog", [&] {
    const FockSpace space = two_mode(40);
    const GeneratorSet kg = su11_generators(space);
    const LinearOperator ab = compose(annihilation_op(space, 0), annihilation_op(space, 1));
    for (double x : {0.1, 0.3, 0.5}) {
      const State psi = tmsv(space, x);
      const double d = 1.0 - x * x;
      s.check(std::abs(expectation(psi, ab).real() - x / d) <= 1e-8, "TMSV <ab>");
      s.check(std::abs(expectation(psi, number_op(space, 0)).real() - x * x / d) <= 1e-8,
              "TMSV <Na>");
      s.check(std::abs(uncertainty_product(psi, kg.x, kg.y) -
                       0.5 * expectation(psi, kg.z).real()) <= 1e-8,
              "TMSV minimum uncertainty");
      s.check(std::abs(variance(psi, k_phi(space, std::numbers::pi / 2)) - 0.25) <= 1e-8,
              "TMSV K(pi/2) variance");
    }
  });
  return s.finish();
}

SuiteResult witnesses_suite(const SelftestOptions& o) {
  Suite s("witnesses");
  s.guarded("witnesses", [&] {
    const FockSpace space = two_mode(o.cutoff);
    for (int k = 0; k < o.samples; ++k) {
      const std::uint64_t seed = o.seed + static_cast<std::uint64_t>(k);
      const State sep = random_separable(space, seed, 1 + k % 4);
      for (const WitnessReport& r : evaluate_all(sep, o.config)) {
        if (r.verdict == Verdict::not_applicable) continue;
        if (r.kind != WitnessKind::diagnostic) {
          s.check(r.margin >= -kMarginTol, r.name + " on random separable state");
        }
      }
      const State psi = random_pure(space, seed);
      s.check(su2_uncertainty(psi, o.config).margin >= -kMarginTol, "su2_uncertainty");
      s.check(su11_uncertainty(psi, o.config).margin >= -kMarginTol, "su11_uncertainty");
      s.check(pt_su2_product(psi, o.config).margin >= -kMarginTol, "pt_su2_product vacuity");
    }
  });
  return s.finish();
}

SuiteResult ppt_suite(const SelftestOptions& o) {
  Suite s("ppt_oracle");
  s.guarded("ppt_oracle", [&] {
    std::mt19937_64 rng(o.seed);
    for (int k = 0; k < o.samples; ++k) {
      Eigen::MatrixXcd m = random_matrix(2, rng);
      m = 0.5 * (m + m.adjoint()).eval();
      const double a = m(0, 0).real();
      const double d = m(1, 1).real();
      const double r = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(m(0, 1)));
      const Spectrum spec = hermitian_eigenvalues(m);
      s.check(std::abs(spec.eigenvalues[0] - (0.5 * (a + d) - r)) <= 1e-12 &&
                  std::abs(spec.eigenvalues[1] - (0.5 * (a + d) + r)) <= 1e-12,
              "2x2 closed-form spectrum");
    }
    const FockSpace space = two_mode(std::max(4, std::min(o.cutoff, 6)));
    const double bell = ppt_min_eigenvalue(density_from_pure(bell_su2(space)), 1);
    s.check(std::abs(bell + 0.5) <= 1e-9, "bell_su2 min PT eigenvalue");
    for (int k = 0; k < o.samples; ++k) {
      const DensityOperator sep =
          random_separable(space, o.seed + static_cast<std::uint64_t>(k), 1 + k % 4);
      s.check(negativity(sep, 1) <= 1e-10, "random separable negativity");
    }
  });
  return s.finish();
}

}  // namespace

bool SelftestSummary::passed() const {
  for (const auto& s : suites) {
    if (s.failures > 0) return false;
  }
  return true;
}

SelftestSummary run_selftest(const SelftestOptions& opts) {
  SelftestSummary out;
  const SelftestOptions defaults;
  if (opts.config.boundary_tol != defaults.config.boundary_tol) {
    out.nondefault_config.push_back("boundary_tol=" + format_double(opts.config.boundary_tol));
  }
  if (opts.config.leakage.warn != defaults.config.leakage.warn) {
    out.nondefault_config.push_back("leakage_warn=" + format_double(opts.config.leakage.warn));
  }
  if (opts.config.leakage.error != defaults.config.leakage.error) {
    out.nondefault_config.push_back("leakage_error=" +
                                    format_double(opts.config.leakage.error));
  }
  if (opts.cutoff != defaults.cutoff) {
    out.nondefault_config.push_back("cutoff=" + std::to_string(opts.cutoff));
  }
  if (opts.cutoff < 4) {
    throw InvalidArgument("selftest needs cutoff >= 4");
  }
  out.suites.push_back(fock_core_suite(opts));
  out.suites.push_back(su_algebra_suite(opts));
  out.suites.push_back(moments_suite(opts));
  out.suites.push_back(catalog_suite(opts));
  out.suites.push_back(witnesses_suite(opts));
  out.suites.push_back(ppt_suite(opts));
  return out;
}

void print_summary(const SelftestSummary& summary, std::ostream& os) {
  if (summary.nondefault_config.empty()) {
    os << "config: default\n";
  } else {
    os << "config: NON-DEFAULT";
    for (const auto& c : summary.nondefault_config) os << ' ' << c;
    os << '\n';
  }
  for (const auto& s : summary.suites) {
    os << (s.failures == 0 ? "[PASS] " : "[FAIL] ") << s.name << ": " << s.checks
       << " checks, " << s.failures << " failures\n";
    for (const auto& n : s.notes) os << "       note: " << n << '\n';
    for (const auto& m : s.messages) os << "       failed: " << m << '\n';
  }
  os << (summary.passed() ? "selftest passed\n" : "selftest FAILED\n");
}

}  // namespace fockwit::cli
