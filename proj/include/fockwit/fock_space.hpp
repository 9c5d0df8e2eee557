#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fockwit {

inline constexpr std::size_t kDefaultMaxDim = 4096;

/// Truncated multimode Fock space. Mode m admits occupations 0..cutoff(m)-1.
/// Basis states are indexed row-major over occupation tuples, so the last
/// mode varies fastest: for cutoffs [4,4], |2,3> has index 2*4+3 = 11.
class FockSpace {
 public:
  explicit FockSpace(std::vector<int> cutoffs,
                     std::size_t max_dim = kDefaultMaxDim);

  std::size_t modes() const noexcept { return cutoffs_.size(); }
  std::size_t dim() const noexcept { return dim_; }
  int cutoff(std::size_t mode) const;
  const std::vector<int>& cutoffs() const noexcept { return cutoffs_; }
  std::size_t stride(std::size_t mode) const;

  std::size_t index(std::span<const int> occupations) const;
  std::vector<int> occupations(std::size_t index) const;

  /// Occupation of one mode in basis state `index`; no bounds checking.
  int occupation(std::size_t index, std::size_t mode) const noexcept {
    return static_cast<int>((index / strides_[mode]) %
                            static_cast<std::size_t>(cutoffs_[mode]));
  }

  void check_mode(std::size_t mode) const;

  friend bool operator==(const FockSpace& a, const FockSpace& b) {
    return a.cutoffs_ == b.cutoffs_;
  }

 private:
  std::vector<int> cutoffs_;
  std::vector<std::size_t> strides_;
  std::size_t dim_ = 0;
};

/// Checked construction; `modes` must match cutoffs.size().
FockSpace make_space(std::size_t modes, std::vector<int> cutoffs,
                     std::size_t max_dim = kDefaultMaxDim);

void require_same_space(const FockSpace& a, const FockSpace& b);

}  // namespace fockwit
