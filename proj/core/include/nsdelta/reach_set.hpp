#pragma once

#include <cstdint>
#include <vector>

#include "nsdelta/arith.hpp"

namespace nsdelta {

// Dense bit set over [0, limit] used for submonoid membership up to a horizon.
class ReachSet {
 public:
  ReachSet() = default;
  explicit ReachSet(Int limit);

  // {0} over [0, limit].
  static ReachSet origin(Int limit);

  Int limit() const noexcept { return limit_; }
  bool test(Int x) const noexcept {
    if (x < 0 || x > limit_) return false;
    return (words_[static_cast<std::size_t>(x >> 6)] >> (x & 63)) & 1u;
  }
  void set(Int x) noexcept {
    words_[static_cast<std::size_t>(x >> 6)] |= std::uint64_t{1} << (x & 63);
  }

  // Closes the set under adding `step` (unbounded multiples).
  void close_under(Int step);

 private:
  void or_shifted(const std::vector<std::uint64_t>& src, Int shift);
  void trim();

  Int limit_ = -1;
  std::vector<std::uint64_t> words_;
};

}  // namespace nsdelta
