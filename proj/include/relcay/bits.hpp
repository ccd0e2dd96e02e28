#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace relcay {

/// One bit per group element; groups are capped at 64 elements.
using Mask = std::uint64_t;

inline constexpr int kMaxSupportedOrder = 64;

constexpr Mask bit(int i) { return Mask{1} << i; }

constexpr Mask low_bits(int n) { return n >= 64 ? ~Mask{0} : (bit(n) - 1); }

constexpr int popcount(Mask m) { return std::popcount(m); }

constexpr int lowest(Mask m) { return std::countr_zero(m); }

constexpr bool contains(Mask m, int i) { return (m >> i) & 1u; }

constexpr bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }

/// Calls f(i) for every set bit, lowest first.
template <typename F>
constexpr void for_each_bit(Mask m, F&& f) {
  while (m) {
    f(std::countr_zero(m));
    m &= m - 1;
  }
}

inline std::vector<int> bits_of(Mask m) {
  std::vector<int> out;
  out.reserve(std::popcount(m));
  for_each_bit(m, [&](int i) { out.push_back(i); });
  return out;
}

}  // namespace relcay
