#pragma once

#include <bit>
#include <cstdint>

#include "sketchfrag/flow_key.hpp"

namespace sketchfrag {

// Role a hash function plays inside a fragment. Seeds with different
// purposes are mixed with different constants, so the index, sign,
// subepoch and level streams are pairwise independent even when they
// share the same 64-bit seed value.
enum class HashPurpose : std::uint64_t {
  index = 0,
  sign = 1,
  subepoch = 2,
  level = 3,
};

struct HashSeed {
  std::uint64_t value = 0;
  HashPurpose purpose = HashPurpose::index;

  friend bool operator==(const HashSeed&, const HashSeed&) = default;
};

// splitmix64 finalizer; full-avalanche 64-bit mixer.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

constexpr std::uint64_t purpose_constant(HashPurpose p) {
  // Arbitrary large odd constants, one per purpose.
  constexpr std::uint64_t table[] = {
      0x9e3779b97f4a7c15ULL,
      0xc2b2ae3d27d4eb4fULL,
      0x165667b19e3779f9ULL,
      0x27d4eb2f165667c5ULL,
  };
  return table[static_cast<std::uint64_t>(p)];
}

// Pure function of (seed value, purpose, key bytes).
constexpr std::uint64_t hash64(HashSeed seed, const FlowKey& key) {
  std::uint64_t h = seed.value ^ purpose_constant(seed.purpose);
  h = mix64(h ^ key.packed_hi());
  h = mix64(h ^ key.packed_lo());
  return h;
}

// Uniform bucket index in [0, w) via the 128-bit multiply trick.
constexpr std::uint32_t hash_index(HashSeed seed, const FlowKey& key, std::uint32_t w) {
  const std::uint64_t h = hash64(seed, key);
  return static_cast<std::uint32_t>((static_cast<unsigned __int128>(h) * w) >> 64);
}

// +1 / -1 with equal probability.
constexpr int hash_sign(HashSeed seed, const FlowKey& key) {
  return (hash64(seed, key) >> 63) ? 1 : -1;
}

// Geometric level: P(output >= l) = 2^-l, clamped to [0, max_level].
// Realized as the count of leading one bits of the hash.
constexpr int hash_level(HashSeed seed, const FlowKey& key, int max_level) {
  const int ones = std::countl_one(hash64(seed, key));
  return ones < max_level ? ones : max_level;
}

// Deterministic per-(fragment, epoch, purpose, row) seed stream. Central
// queries recompute data-plane hashes from the seed values carried in
// records, so everything downstream has to go through this derivation.
constexpr HashSeed derive_seed(std::uint64_t master_seed, std::uint64_t fragment_index,
                               std::uint64_t epoch, HashPurpose purpose, std::uint64_t row = 0) {
  std::uint64_t v = mix64(master_seed ^ purpose_constant(purpose));
  v = mix64(v ^ (fragment_index * 0x9e3779b97f4a7c15ULL + 1));
  v = mix64(v ^ (epoch * 0xc2b2ae3d27d4eb4fULL + 1));
  v = mix64(v ^ (row * 0x165667b19e3779f9ULL + 1));
  return HashSeed{v, purpose};
}

// Per-level row seeds of a level stack, derived from the base seed that
// the record exports.
constexpr HashSeed level_row_seed(HashSeed base, int level) {
  return HashSeed{mix64(base.value ^ (0xd6e8feb86659fd93ULL * (static_cast<std::uint64_t>(level) + 1))),
                  base.purpose};
}

}  // namespace sketchfrag
