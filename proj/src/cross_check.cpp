#include "fockwit/cross_check.hpp"

#include "fockwit/error.hpp"

namespace fockwit {

CrossCheck cross_check(const State& state, const WitnessConfig& cfg,
                       const JacobiOptions& opts) {
  if (space_of(state).modes() != 2) {
    throw InvalidArgument("cross_check needs a two-mode state");
  }
  CrossCheck out{ppt_analysis(to_density(state), 1, opts), {}, {}};
  for (const WitnessReport& r : evaluate_all(state, cfg)) {
    if (r.kind != WitnessKind::separability || r.verdict != Verdict::violated) continue;
    out.violated.push_back(r.name);
    if (!(out.ppt.negativity > kSpectralTol)) {
      out.discrepancies.push_back(r.name);
    }
  }
  return out;
}

}  // namespace fockwit
