#pragma once

#include <cstdint>
#include <random>

namespace smartgrid {

// splitmix64 step; used both as a mixer for deriving independent stream
// seeds and (indirectly) to seed the per-stream mt19937_64 engines.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Deterministically derives a child seed from a root seed and a path of
// indices (e.g. {learning_step, episode, agent}). Children with different
// paths are independent for practical purposes.
inline std::uint64_t derive_seed(std::uint64_t root, std::initializer_list<std::uint64_t> path) {
  std::uint64_t s = root ^ 0x6a09e667f3bcc909ULL;
  splitmix64(s);
  for (std::uint64_t p : path) {
    s ^= p + 0x9e3779b97f4a7c15ULL + (s << 6) + (s >> 2);
    splitmix64(s);
  }
  std::uint64_t tmp = s;
  return splitmix64(tmp);
}

using RngStream = std::mt19937_64;

inline RngStream make_stream(std::uint64_t seed) { return RngStream(seed); }

}  // namespace smartgrid
