#include "fockwit/fock_space.hpp"

#include <limits>
#include <string>

#include "fockwit/error.hpp"

namespace fockwit {

FockSpace::FockSpace(std::vector<int> cutoffs, std::size_t max_dim)
    : cutoffs_(std::move(cutoffs)) {
  if (cutoffs_.empty()) {
    throw InvalidArgument("Fock space needs at least one mode");
  }
  std::size_t dim = 1;
  for (int c : cutoffs_) {
    if (c < 2) {
      throw InvalidArgument("cutoff must be >= 2, got " + std::to_string(c));
    }
    const auto uc = static_cast<std::size_t>(c);
    if (dim > std::numeric_limits<std::size_t>::max() / uc || dim * uc > max_dim) {
      throw InvalidArgument("Fock space dimension exceeds maximum of " +
                            std::to_string(max_dim));
    }
    dim *= uc;
  }
  dim_ = dim;
  strides_.assign(cutoffs_.size(), 1);
  for (std::size_t m = cutoffs_.size() - 1; m > 0; --m) {
    strides_[m - 1] = strides_[m] * static_cast<std::size_t>(cutoffs_[m]);
  }
}

int FockSpace::cutoff(std::size_t mode) const {
  check_mode(mode);
  return cutoffs_[mode];
}

std::size_t FockSpace::stride(std::size_t mode) const {
  check_mode(mode);
  return strides_[mode];
}

void FockSpace::check_mode(std::size_t mode) const {
  if (mode >= cutoffs_.size()) {
    throw InvalidArgument("mode index " + std::to_string(mode) +
                          " out of range for " + std::to_string(modes()) +
                          "-mode space");
  }
}

std::size_t FockSpace::index(std::span<const int> occupations) const {
  if (occupations.size() != cutoffs_.size()) {
    throw InvalidArgument("occupation tuple has " +
                          std::to_string(occupations.size()) + " entries, space has " +
                          std::to_string(modes()) + " modes");
  }
  std::size_t idx = 0;
  for (std::size_t m = 0; m < cutoffs_.size(); ++m) {
    if (occupations[m] < 0 || occupations[m] >= cutoffs_[m]) {
      throw InvalidArgument("occupation " + std::to_string(occupations[m]) +
                            " out of range for mode " + std::to_string(m));
    }
    idx += static_cast<std::size_t>(occupations[m]) * strides_[m];
  }
  return idx;
}

std::vector<int> FockSpace::occupations(std::size_t index) const {
  if (index >= dim_) {
    throw InvalidArgument("basis index " + std::to_string(index) + " out of range");
  }
  std::vector<int> occ(cutoffs_.size());
  for (std::size_t m = 0; m < cutoffs_.size(); ++m) {
    occ[m] = occupation(index, m);
  }
  return occ;
}

FockSpace make_space(std::size_t modes, std::vector<int> cutoffs,
                     std::size_t max_dim) {
  if (modes < 1) {
    throw InvalidArgument("mode count must be >= 1");
  }
  if (cutoffs.size() != modes) {
    throw InvalidArgument("expected " + std::to_string(modes) + " cutoffs, got " +
                          std::to_string(cutoffs.size()));
  }
  return FockSpace(std::move(cutoffs), max_dim);
}

void require_same_space(const FockSpace& a, const FockSpace& b) {
  if (!(a == b)) {
    throw SpaceMismatch("operands live on different Fock spaces");
  }
}

}  // namespace fockwit
