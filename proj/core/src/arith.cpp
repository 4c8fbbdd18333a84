#include "nsdelta/arith.hpp"

#include "nsdelta/error.hpp"
#include "nsdelta/reach_set.hpp"

namespace nsdelta {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::empty_generators: return "empty_generators";
    case ErrorCode::zero_generator: return "zero_generator";
    case ErrorCode::gcd_not_one: return "gcd_not_one";
    case ErrorCode::not_member: return "not_member";
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::overflow: return "overflow";
    case ErrorCode::cap_exceeded: return "cap_exceeded";
    case ErrorCode::budget_exceeded: return "budget_exceeded";
    case ErrorCode::threshold_not_met: return "threshold_not_met";
  }
  return "unknown";
}

Int mod_inverse(Int a, Int m) {
  if (m <= 0) throw Error(ErrorCode::invalid_argument, "modulus must be positive");
  if (m == 1) return 0;
  Int old_r = ((a % m) + m) % m, r = m;
  Int old_s = 1, s = 0;
  while (r != 0) {
    Int q = old_r / r;
    Int t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) {
    throw Error(ErrorCode::invalid_argument,
                std::to_string(a) + " is not invertible mod " + std::to_string(m));
  }
  return ((old_s % m) + m) % m;
}

ReachSet::ReachSet(Int limit) : limit_(limit) {
  if (limit < 0) {
    limit_ = -1;
    return;
  }
  words_.assign(static_cast<std::size_t>(limit / 64 + 1), 0);
}

ReachSet ReachSet::origin(Int limit) {
  ReachSet r(limit);
  if (limit >= 0) r.set(0);
  return r;
}

void ReachSet::or_shifted(const std::vector<std::uint64_t>& src, Int shift) {
  const std::size_t word_shift = static_cast<std::size_t>(shift >> 6);
  const unsigned bit_shift = static_cast<unsigned>(shift & 63);
  const std::size_t n = words_.size();
  if (word_shift >= n) return;
  for (std::size_t i = n; i-- > word_shift;) {
    std::uint64_t v = src[i - word_shift] << bit_shift;
    if (bit_shift != 0 && i - word_shift >= 1) {
      v |= src[i - word_shift - 1] >> (64 - bit_shift);
    }
    words_[i] |= v;
  }
}

void ReachSet::trim() {
  if (words_.empty()) return;
  const unsigned used = static_cast<unsigned>((limit_ & 63) + 1);
  if (used < 64) words_.back() &= (std::uint64_t{1} << used) - 1;
}

void ReachSet::close_under(Int step) {
  if (step <= 0 || limit_ < 0) return;
  for (Int shift = step; shift <= limit_; shift *= 2) {
    // Descending word order makes the in-place shift safe.
    or_shifted(words_, shift);
    if (shift > limit_ / 2) break;
  }
  trim();
}

}  // namespace nsdelta
