#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sketchfrag/rows.hpp"

namespace sketchfrag {

struct RecordSeeds {
  std::uint64_t index = 0;
  std::uint64_t sign = 0;      // 0 when the kind has no sign hash
  std::uint64_t subepoch = 0;
  std::uint64_t level = 0;     // 0 except for level stacks

  friend bool operator==(const RecordSeeds&, const RecordSeeds&) = default;
};

// The exported tuple (F, E, S, n, c, h) plus enough schema to make each
// record self-describing: width, kind, level count. The subepoch hash is
// recomputable centrally from `seeds.subepoch` and `n`.
struct SubepochRecord {
  std::string fragment_id;
  std::uint64_t epoch = 0;
  std::uint32_t subepoch = 0;
  std::uint32_t n = 1;
  std::uint32_t width = 0;
  SketchKind kind = SketchKind::cs;
  std::uint16_t levels = 1;  // 1 for cs/cms
  RecordSeeds seeds;
  Counters counters;  // levels * width entries, level-major

  // Raw single-row estimate for a key, from the stored seeds.
  double query(const FlowKey& key, int level = 0) const;

  friend bool operator==(const SubepochRecord& a, const SubepochRecord& b) {
    return a.fragment_id == b.fragment_id && a.epoch == b.epoch && a.subepoch == b.subepoch &&
           a.n == b.n && a.width == b.width && a.kind == b.kind && a.levels == b.levels &&
           a.seeds == b.seeds && (a.counters == b.counters).all();
  }
};

struct RecordError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Indexed storage for subepoch records. Appends are serialized through a
// single writer during replay; afterwards the store is read-only for the
// query engine.
class RecordStore {
 public:
  void append(SubepochRecord record);

  const SubepochRecord& get(const std::string& fragment_id, std::uint64_t epoch,
                            std::uint32_t subepoch) const;

  // The value n used by (F, E), or nullopt if the pair is absent.
  std::optional<std::uint32_t> epoch_n(const std::string& fragment_id, std::uint64_t epoch) const;

  // All n subepochs 0..n-1 present.
  bool epoch_complete(const std::string& fragment_id, std::uint64_t epoch) const;

  // Subepoch numbers present for (F, E), in order.
  std::vector<std::uint32_t> epoch_subepochs(const std::string& fragment_id,
                                             std::uint64_t epoch) const;

  // The 1 or 2 records of (F, E) that sampled `key`. With `mitigated`
  // set and n >= 2, also the opposite-half subepoch.
  std::vector<const SubepochRecord*> lookup_for_key(const std::string& fragment_id,
                                                    std::uint64_t epoch, const FlowKey& key,
                                                    bool mitigated) const;

  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  std::vector<std::string> fragment_ids() const;
  std::vector<std::uint64_t> epochs(const std::string& fragment_id) const;

  void save(std::ostream& out) const;
  void save_file(const std::string& path) const;
  static RecordStore load(std::istream& in);
  static RecordStore load_file(const std::string& path);

  friend bool operator==(const RecordStore& a, const RecordStore& b);

 private:
  struct EpochSlot {
    std::uint32_t n = 0;
    std::vector<std::optional<SubepochRecord>> records;  // indexed by subepoch
    std::size_t filled = 0;
  };
  // Ordered maps keep serialization canonical.
  std::map<std::string, std::map<std::uint64_t, EpochSlot>> fragments_;
  std::size_t count_ = 0;

  const EpochSlot& slot(const std::string& fragment_id, std::uint64_t epoch) const;
};

}  // namespace sketchfrag
