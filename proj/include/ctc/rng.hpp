#pragma once

#include <cstdint>
#include <random>

namespace ctc {

// SplitMix64 finalizer; decorrelates sequential seeds before they reach a
// generator.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Derive a deterministic child seed from a parent seed and an index path,
/// e.g. substream(seed, rep) or substream(seed, model, rep). Independent
/// streams keyed this way make parallel execution order irrelevant.
inline std::uint64_t substream(std::uint64_t seed) { return mix64(seed); }

template <typename... Rest>
std::uint64_t substream(std::uint64_t seed, std::uint64_t head, Rest... rest) {
  return substream(mix64(seed ^ mix64(head)), rest...);
}

template <typename... Path>
std::mt19937_64 make_rng(std::uint64_t seed, Path... path) {
  return std::mt19937_64(substream(seed, static_cast<std::uint64_t>(path)...));
}

inline std::mt19937_64 make_rng(std::uint64_t seed) {
  return std::mt19937_64(substream(seed));
}

}  // namespace ctc
