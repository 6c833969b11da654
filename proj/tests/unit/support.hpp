#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>

#include "fbh/field.hpp"

namespace fbh::test {

// FBH_SEED overrides the fixed default seed.
inline std::uint64_t seed() {
  if (const char* s = std::getenv("FBH_SEED")) return std::stoull(s);
  return 20240917;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(seed());
  return g;
}

inline FieldElement random_element(const FieldPtr& F) {
  return {F, std::uint32_t(rng()() % F->order())};
}

inline std::string data_path(const std::string& name) { return std::string(FBH_DATA_DIR) + "/" + name; }

}  // namespace fbh::test
