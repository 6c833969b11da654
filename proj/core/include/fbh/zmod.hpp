#pragma once

// Integers modulo m (m < 2^62), used to test Witt arithmetic through ghost
// components over Z/p^k.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fbh {

struct ZmodInt {
  std::uint64_t m = 1;
  std::uint64_t v = 0;

  ZmodInt() = default;
  ZmodInt(std::uint64_t modulus, std::int64_t value) : m(modulus) {
    std::int64_t r = value % std::int64_t(m);
    v = std::uint64_t(r < 0 ? r + std::int64_t(m) : r);
  }

  ZmodInt operator+(const ZmodInt& o) const { return {m, std::int64_t((v + o.v) % m)}; }
  ZmodInt operator-(const ZmodInt& o) const { return {m, std::int64_t((v + m - o.v) % m)}; }
  ZmodInt operator-() const { return {m, std::int64_t((m - v) % m)}; }
  ZmodInt operator*(const ZmodInt& o) const {
    return {m, std::int64_t((unsigned __int128)v * o.v % m)};
  }
  bool operator==(const ZmodInt& o) const { return m == o.m && v == o.v; }
  bool is_zero() const { return v == 0; }
  std::string to_string() const { return std::to_string(v); }
};

inline ZmodInt zero_like(const ZmodInt& x) { return {x.m, 0}; }
inline ZmodInt scalar_like(const ZmodInt& x, std::int64_t c) { return {x.m, c}; }
inline std::uint64_t characteristic(const ZmodInt& x) { return x.m; }
inline ZmodInt pow(ZmodInt b, std::uint64_t e) {
  ZmodInt r(b.m, 1);
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}
// Only a ring endomorphism when m is prime; Witt F checks this first.
inline ZmodInt frobenius(const ZmodInt& x) { return pow(x, x.m); }

}  // namespace fbh
