#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace domgame::cgt {

/// Heap sum for impartial games: *m + *n = *(m xor n).
constexpr std::uint32_t nim_add(std::uint32_t m, std::uint32_t n) { return m ^ n; }

/// Least nonnegative integer not contained in xs (duplicates allowed).
inline std::uint32_t mex(std::span<const std::uint32_t> xs) {
  // mex of a set of size n is at most n, so a bitmap of size n + 1 suffices.
  std::vector<bool> seen(xs.size() + 1, false);
  for (std::uint32_t x : xs) {
    if (x <= xs.size()) seen[x] = true;
  }
  std::uint32_t m = 0;
  while (seen[m]) ++m;
  return m;
}

}  // namespace domgame::cgt
