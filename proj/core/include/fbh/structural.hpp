#pragma once

// Witt structural polynomials over Z, derived from ghost components.
//
// Variables are interleaved: X_i is variable 2i and Y_i is variable 2i+1, so
// the k-th polynomial lives in 2(k+1) variables whatever the Witt length.

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "fbh/intpoly.hpp"

namespace fbh {

enum class WittOp { Sum, Difference, Product };

const char* witt_op_name(WittOp op);

// w_k(X) = sum_{i<=k} p^i X_i^{p^{k-i}} in 2(k+1) interleaved variables.
IntPoly ghost_component(std::uint32_t p, std::size_t k, bool y_side = false);

// The k-th structural polynomial of `op`. Cached per (p, op); safe to call
// from several threads. If FBH_STRUCT_CACHE names a directory, polynomials
// are also read from and written to it.
const IntPoly& structural_poly(std::uint32_t p, WittOp op, std::size_t k);

struct StructuralPolys {
  std::uint32_t p = 0;
  std::size_t n = 0;
  std::vector<IntPoly> S, D, P;
};

StructuralPolys structural_polys(std::uint32_t p, std::size_t n);

struct ReducedTerm {
  std::vector<std::pair<std::uint16_t, std::uint32_t>> factors;  // (variable, exponent)
  std::uint64_t coeff;
};
using ReducedPoly = std::vector<ReducedTerm>;

// The first n structural polynomials of `op` with coefficients reduced into
// [0, modulus), zero terms dropped. Cached.
std::shared_ptr<const std::vector<ReducedPoly>> reduced_structural(std::uint32_t p, WittOp op, std::size_t n,
                                                                   std::uint64_t modulus);

}  // namespace fbh
