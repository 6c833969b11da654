#pragma once

// Packed exponent vectors. Up to kMaxVars signed exponents, each stored with
// a bias in a kExpBits-wide field of an unsigned 128-bit key. Variable 0
// occupies the most significant field, so integer order on keys equals
// lexicographic order on exponent vectors, and adding exponent vectors is
// key addition minus the zero key.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace fbh {

using MonoKey = unsigned __int128;

inline constexpr int kMaxVars = 10;
inline constexpr int kExpBits = 12;
inline constexpr int kExpBias = 1 << (kExpBits - 1);
inline constexpr int kMinExp = -kExpBias;
inline constexpr int kMaxExp = kExpBias - 1;

namespace mono {

constexpr int shift_of(int var) { return (kMaxVars - 1 - var) * kExpBits; }

constexpr MonoKey zero_key() {
  MonoKey k = 0;
  for (int v = 0; v < kMaxVars; ++v) k |= MonoKey(kExpBias) << shift_of(v);
  return k;
}

inline constexpr MonoKey kZeroKey = zero_key();

inline int exponent(MonoKey k, int var) {
  return int((k >> shift_of(var)) & ((MonoKey(1) << kExpBits) - 1)) - kExpBias;
}

inline MonoKey pack(std::span<const int> e) {
  if (e.size() > std::size_t(kMaxVars)) throw std::invalid_argument("too many variables");
  MonoKey k = kZeroKey;
  for (std::size_t v = 0; v < e.size(); ++v) {
    if (e[v] < kMinExp || e[v] > kMaxExp) throw std::overflow_error("exponent overflow");
    k += MonoKey(__int128(e[v]) << shift_of(int(v)));
  }
  return k;
}

inline std::vector<int> unpack(MonoKey k, std::size_t nvars) {
  std::vector<int> e(nvars);
  for (std::size_t v = 0; v < nvars; ++v) e[v] = exponent(k, int(v));
  return e;
}

// Caller guarantees that every resulting exponent is in range.
inline MonoKey add(MonoKey a, MonoKey b) { return a + b - kZeroKey; }
inline MonoKey sub(MonoKey a, MonoKey b) { return a - b + kZeroKey; }
inline MonoKey scale(MonoKey a, int s) {
  __int128 centred = __int128(a - kZeroKey);
  return MonoKey(centred * s) + kZeroKey;
}

inline int total_degree(MonoKey k, std::size_t nvars) {
  int s = 0;
  for (std::size_t v = 0; v < nvars; ++v) s += exponent(k, int(v));
  return s;
}

struct KeyHash {
  std::size_t operator()(MonoKey k) const {
    std::uint64_t lo = std::uint64_t(k), hi = std::uint64_t(k >> 64);
    std::uint64_t h = lo * 0x9E3779B97F4A7C15ull ^ (hi + 0x632BE59BD9B4E019ull + (lo << 6) + (lo >> 2));
    h ^= h >> 31;
    h *= 0xBF58476D1CE4E5B9ull;
    return std::size_t(h ^ (h >> 29));
  }
};

}  // namespace mono
}  // namespace fbh
