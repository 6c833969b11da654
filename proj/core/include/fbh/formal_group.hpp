#pragma once

// One-dimensional formal group laws over F_q and their heights.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fbh/series.hpp"

namespace fbh {

class FormalGroupLaw {
 public:
  FormalGroupLaw() = default;
  explicit FormalGroupLaw(Series2 F) : F_(std::move(F)) {}

  static FormalGroupLaw additive(const FieldPtr& field, std::size_t N);
  static FormalGroupLaw multiplicative(const FieldPtr& field, std::size_t N);

  const Series2& series() const { return F_; }
  const FieldPtr& field() const { return F_.field(); }
  std::size_t order() const { return F_.order(); }

 private:
  Series2 F_;
};

struct FglCheck {
  bool valid = true;
  // One entry per failed axiom, naming the first offending monomial.
  std::vector<std::string> violations;
};

// Unit axioms, commutativity and associativity modulo degree N + 1.
FglCheck fgl_check(const Series2& F, std::size_t N);

// [m](t), with [1](t) = t and [m](t) = F([m-1](t), t).
Series1 mult_by(std::uint64_t m, const FormalGroupLaw& F);

enum class HeightKind { Exact, AtLeast, InfiniteWithinTruncation };

const char* height_kind_name(HeightKind k);

struct HeightReport {
  HeightKind kind = HeightKind::Exact;
  // The height for Exact; otherwise the proven lower bound.
  unsigned h = 0;
  std::optional<FieldElement> leading;
  Series1 p_series;
};

// Scans [p](t). Exact(h) if the first nonzero term sits at t^{p^h}. When
// [p](t) vanishes through the truncation the verdict is
// InfiniteWithinTruncation if the truncation reaches p^hmax + 1 and AtLeast
// otherwise; in both cases h is the lower bound floor(log_p N) + 1.
HeightReport height_of(const FormalGroupLaw& F, unsigned hmax);

// Compositional inverse of phi(t) = c_1 t + ..., c_1 != 0.
Series1 compositional_inverse(const Series1& phi);

// The law phi^{-1}(F(phi(x), phi(y))), isomorphic to F.
FormalGroupLaw conjugate(const FormalGroupLaw& F, const Series1& phi);

}  // namespace fbh
