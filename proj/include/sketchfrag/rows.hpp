#pragma once

#include <Eigen/Core>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sketchfrag/hash.hpp"

namespace sketchfrag {

template <typename Scalar>
using CounterArray = Eigen::Array<Scalar, Eigen::Dynamic, 1>;

// All counters are 64-bit in simulation; overflow is not a failure mode
// at the scales we replay.
using Counters = CounterArray<std::int64_t>;

enum class SketchKind { cs, cms, um };

const char* to_string(SketchKind kind);
SketchKind parse_sketch_kind(const std::string& text);

inline constexpr int kDefaultLevels = 16;

// One Count Sketch row: signed counters plus index and sign hashes.
struct CountRow {
  Counters counters;
  HashSeed index_seed;
  HashSeed sign_seed;

  CountRow() = default;
  CountRow(std::uint32_t width, HashSeed index, HashSeed sign)
      : counters(Counters::Zero(width)), index_seed(index), sign_seed(sign) {}

  std::uint32_t width() const { return static_cast<std::uint32_t>(counters.size()); }

  void update(const FlowKey& key, std::int64_t weight) {
    counters[hash_index(index_seed, key, width())] += hash_sign(sign_seed, key) * weight;
  }
  double query(const FlowKey& key) const {
    return static_cast<double>(hash_sign(sign_seed, key) *
                               counters[hash_index(index_seed, key, width())]);
  }
};

// One Count-Min row: non-negative counters, index hash only.
struct CountMinRow {
  CounterArray<std::uint64_t> counters;
  HashSeed index_seed;

  CountMinRow() = default;
  CountMinRow(std::uint32_t width, HashSeed index)
      : counters(CounterArray<std::uint64_t>::Zero(width)), index_seed(index) {}

  std::uint32_t width() const { return static_cast<std::uint32_t>(counters.size()); }

  void update(const FlowKey& key, std::uint64_t weight) {
    counters[hash_index(index_seed, key, width())] += weight;
  }
  double query(const FlowKey& key) const {
    return static_cast<double>(counters[hash_index(index_seed, key, width())]);
  }
};

// Universal sketch fragment: L Count Sketch rows over geometrically
// subsampled key sets, all with the same width. A key that samples into
// level l updates levels 0..l.
struct LevelStack {
  std::vector<CountRow> levels;
  HashSeed level_seed;

  LevelStack() = default;
  LevelStack(std::uint32_t width, int level_count, HashSeed index, HashSeed sign, HashSeed level)
      : level_seed(level) {
    levels.reserve(static_cast<std::size_t>(level_count));
    for (int l = 0; l < level_count; ++l) {
      levels.emplace_back(width, level_row_seed(index, l), level_row_seed(sign, l));
    }
  }

  std::uint32_t width() const { return levels.empty() ? 0 : levels.front().width(); }
  int level_count() const { return static_cast<int>(levels.size()); }

  void update(const FlowKey& key, std::int64_t weight) {
    const int top = hash_level(level_seed, key, level_count());
    const int last = top < level_count() - 1 ? top : level_count() - 1;
    for (int l = 0; l <= last; ++l) levels[static_cast<std::size_t>(l)].update(key, weight);
  }
  double query(const FlowKey& key, int level = 0) const {
    return levels.at(static_cast<std::size_t>(level)).query(key);
  }
};

// Estimated per-subepoch error bound from the counters alone:
// sqrt(sum c_i^2 / w) for Count Sketch rows, (sum c_i) / w for Count-Min.
template <typename Derived>
double rho_hat_cs(const Eigen::ArrayBase<Derived>& counters) {
  if (counters.size() == 0) return 0.0;
  const double ss = counters.template cast<double>().square().sum();
  return std::sqrt(ss / static_cast<double>(counters.size()));
}

template <typename Derived>
double rho_hat_cms(const Eigen::ArrayBase<Derived>& counters) {
  if (counters.size() == 0) return 0.0;
  return counters.template cast<double>().sum() / static_cast<double>(counters.size());
}

template <typename Derived>
double rho_hat(const Eigen::ArrayBase<Derived>& counters, SketchKind kind) {
  // For level stacks the caller passes level 0, which sees all traffic.
  return kind == SketchKind::cms ? rho_hat_cms(counters) : rho_hat_cs(counters);
}

// Counter width from a memory budget at 8 bytes per counter.
inline std::uint32_t width_from_memory(std::uint64_t memory_bytes, SketchKind kind,
                                       int levels = kDefaultLevels) {
  const std::uint64_t per_counter = kind == SketchKind::um ? 8ull * static_cast<std::uint64_t>(levels) : 8ull;
  const std::uint64_t w = memory_bytes / per_counter;
  if (w == 0) throw std::invalid_argument("memory budget below one counter");
  return static_cast<std::uint32_t>(w);
}

}  // namespace sketchfrag
