#pragma once

#include <string>
#include <vector>

#include "fockwit/ppt_oracle.hpp"
#include "fockwit/witnesses.hpp"

namespace fockwit {

/// Moment-level witnesses against the spectral PPT test. A separability
/// witness violation must come with negativity > 0; anything else is logged
/// as a discrepancy. The converse is never required: witnesses are
/// sufficient conditions only.
struct CrossCheck {
  PptAnalysis ppt;
  std::vector<std::string> violated;       // separability witnesses that fired
  std::vector<std::string> discrepancies;  // fired without negativity
  bool consistent() const noexcept { return discrepancies.empty(); }
};

/// Two-mode states only; the partial transpose is taken on mode 1 (b).
CrossCheck cross_check(const State& state, const WitnessConfig& cfg = {},
                       const JacobiOptions& opts = {});

}  // namespace fockwit
