// SPDX-FileCopyrightText: 2026 The cmest authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>

namespace cmest {

/// Random stream type used throughout the simulator.
using Stream = std::mt19937_64;

/// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Counter-based child seed: depends only on (root, series, point, trial), so
/// any trial can be replayed in isolation and the schedule of worker threads
/// never changes which stream a trial sees.
constexpr std::uint64_t child_seed(std::uint64_t root, std::uint64_t series, std::uint64_t point,
                                   std::uint64_t trial) {
  std::uint64_t h = mix64(root);
  h = mix64(h ^ series);
  h = mix64(h ^ (point + 0x632be59bd9b4e019ULL));
  h = mix64(h ^ (trial + 0x8cb92ba72f3d8dd7ULL));
  return h;
}

inline Stream make_stream(std::uint64_t root, std::uint64_t series, std::uint64_t point,
                          std::uint64_t trial) {
  return Stream(child_seed(root, series, point, trial));
}

}  // namespace cmest
