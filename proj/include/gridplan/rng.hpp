#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace gridplan {

// splitmix64; used to derive independent seed streams from one master seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t fnv1a64(const void* data, std::size_t n, std::uint64_t h = 0xcbf29ce484222325ULL) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::uint64_t stream_seed(std::uint64_t master, std::string_view stream_name) {
  return splitmix64(master ^ fnv1a64(stream_name.data(), stream_name.size()));
}

// Seed for the i-th record of a stream. Stable under sharding: record i gets
// the same engine no matter which worker produces it.
inline std::uint64_t record_seed(std::uint64_t stream, std::uint64_t index) {
  return splitmix64(stream ^ splitmix64(index + 1));
}

inline std::mt19937_64 make_engine(std::uint64_t seed) { return std::mt19937_64(seed); }

}  // namespace gridplan
