#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace gpack::rng {

// splitmix64 finalizer; good avalanche, cheap.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Derives an independent stream seed from a master seed and a tag path,
// e.g. derive(master, {kLfpShuffle, n, instance, test}). Used everywhere a
// run needs more than one source of randomness, so schemes never share or
// perturb each other's draws.
inline std::uint64_t derive(std::uint64_t master, std::initializer_list<std::uint64_t> tags) {
  std::uint64_t h = mix64(master);
  for (std::uint64_t t : tags) h = mix64(h ^ mix64(t));
  return h;
}

inline std::mt19937_64 engine(std::uint64_t seed) { return std::mt19937_64(seed); }

// Stream tags for the purposes that exist today.
inline constexpr std::uint64_t kTieBreak = 0x7469656272;    // routing tie coins
inline constexpr std::uint64_t kLfpShuffle = 0x6c667073;    // LFP within-class shuffles
inline constexpr std::uint64_t kRpDraw = 0x72706472;        // RP pool draws
inline constexpr std::uint64_t kTrafficGen = 0x74726166;    // demand generation

}  // namespace gpack::rng
