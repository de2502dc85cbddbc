#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <tuple>

namespace sketchfrag {

// Which packet header fields form the measured key.
enum class KeyFields {
  five_tuple,  // src, dst, proto, ports
  src_ip,      // source address only (entropy-style queries)
  ip_pair,     // src + dst addresses
};

// The measured key: the unit of sampling, routing and querying.
// Fields that the active KeyFields mode does not select are zeroed by
// extract_key, so equality and hashing work uniformly.
struct FlowKey {
  std::uint32_t src_addr = 0;
  std::uint32_t dst_addr = 0;
  std::uint16_t src_port = 0;
  std::uint16_t dst_port = 0;
  std::uint8_t proto = 0;

  constexpr std::uint64_t packed_hi() const {
    return (static_cast<std::uint64_t>(src_addr) << 32) | dst_addr;
  }
  constexpr std::uint64_t packed_lo() const {
    return (static_cast<std::uint64_t>(src_port) << 24) |
           (static_cast<std::uint64_t>(dst_port) << 8) | proto;
  }

  friend bool operator==(const FlowKey&, const FlowKey&) = default;
  friend auto operator<=>(const FlowKey& a, const FlowKey& b) {
    return std::tie(a.src_addr, a.dst_addr, a.src_port, a.dst_port, a.proto) <=>
           std::tie(b.src_addr, b.dst_addr, b.src_port, b.dst_port, b.proto);
  }
};

constexpr FlowKey extract_key(const FlowKey& raw, KeyFields fields) {
  switch (fields) {
    case KeyFields::five_tuple:
      return raw;
    case KeyFields::src_ip:
      return FlowKey{raw.src_addr, 0, 0, 0, 0};
    case KeyFields::ip_pair:
      return FlowKey{raw.src_addr, raw.dst_addr, 0, 0, 0};
  }
  return raw;
}

std::string to_string(const FlowKey& key);
FlowKey parse_flow_key(const std::string& text);

const char* to_string(KeyFields fields);
KeyFields parse_key_fields(const std::string& text);

}  // namespace sketchfrag

template <>
struct std::hash<sketchfrag::FlowKey> {
  std::size_t operator()(const sketchfrag::FlowKey& k) const noexcept {
    // Same mixing family as the sketch hashes, fixed seed.
    std::uint64_t h = 0x51afd7ed558ccd6dULL;
    h ^= k.packed_hi();
    h ^= h >> 30;
    h *= 0xbf58476d1ce4e5b9ULL;
    h ^= k.packed_lo();
    h ^= h >> 27;
    h *= 0x94d049bb133111ebULL;
    h ^= h >> 31;
    return static_cast<std::size_t>(h);
  }
};
