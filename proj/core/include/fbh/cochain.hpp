#pragma once

// Cech cochains of O_X and W_i(O_X) for the standard cover U_j = {x_j != 0}.
//
// A k-cochain assigns to every (k+1)-element chart set J a degree-0 Laurent
// polynomial whose negative exponents only involve variables in J. Sections
// of O_X are represented by such polynomials modulo f, and Witt cochains by
// Witt vectors of them modulo W(f). Chart sets are bitmasks.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fbh/hypersurface.hpp"
#include "fbh/witt.hpp"

namespace fbh {

using ChartSet = std::uint32_t;
using WittLaurent = WittVector<LaurentPoly>;

struct Cochain {
  int degree = 0;
  std::vector<LaurentPoly> comp;  // indexed by ChartSet; unused entries are zero
};

struct WittCochain {
  int degree = 0;
  std::size_t length = 0;
  std::vector<WittLaurent> comp;
};

struct LinearSolve {
  // Set when b is a coboundary modulo f: coboundary(*gamma) = b - f * rho.
  std::optional<Cochain> gamma;
  // The class of b in H^n(O_X) as a multiple of the generator (top degree).
  FieldElement obstruction;
};

struct WittSolve {
  std::optional<WittCochain> gamma;
  // Witt component at which the greedy solve met a nonzero class.
  std::size_t obstructed_at = 0;
  FieldElement obstruction;
};

class CechComplex {
 public:
  explicit CechComplex(const Hypersurface& X);

  const Hypersurface& surface() const { return X_; }
  std::size_t charts() const { return N_; }
  int dim() const { return n_; }
  std::uint32_t prime() const { return X_.field()->p(); }

  // Chart sets of size k + 1 in lexicographic order of sorted tuples.
  const std::vector<ChartSet>& subsets(int k) const { return subsets_.at(std::size_t(k)); }
  static std::vector<int> members(ChartSet J);

  Cochain zero(int k) const;
  WittCochain witt_zero(int k, std::size_t length) const;

  Cochain coboundary(const Cochain& c) const;
  // Monomial contracting homotopy: for a monomial with negative variable set T
  // and t = min of the complement, moves the value at J (t in J) to J \ {t}
  // with sign (-1)^{position of t in J}. dh + hd is the identity except on
  // monomials with every exponent negative, which only live in top degree.
  Cochain homotopy(const Cochain& c) const;

  // For an n-cochain b with coboundary in f * (Laurent), the scalar a with
  // [b] = a [zeta]; throws std::logic_error if b is not a cocycle mod f.
  FieldElement top_class(const Cochain& b) const;
  // Solves coboundary(gamma) = b mod f for a k-cochain b, 1 <= k <= n.
  LinearSolve solve_linear(const Cochain& b) const;

  // Generator of H^n(O_X): homotopy of f / (x_0 ... x_{n+1}).
  Cochain zeta() const;

  WittCochain witt_coboundary(const WittCochain& c) const;
  // Greedy component-by-component solve of coboundary(gamma) = beta mod W(f).
  WittSolve witt_solve(const WittCochain& beta) const;

  // Largest pole order appearing in the cochain.
  static int pole_order(const Cochain& c);
  static int pole_order(const WittCochain& c);

 private:
  Hypersurface X_;
  std::size_t N_;
  int n_;
  std::vector<std::vector<ChartSet>> subsets_;
  MonoKey harmonic_;  // exponent (-1, ..., -1)
};

WittCochain witt_frobenius(const WittCochain& c);
WittCochain witt_truncate(const WittCochain& c, std::size_t length);
WittCochain witt_extend(const WittCochain& c, std::size_t length);
Cochain witt_component(const WittCochain& c, std::size_t k);
WittCochain witt_from_cochain(const Cochain& c, std::uint32_t p);

// Stable text form (chart sets in order, terms in key order) and its
// 64-bit FNV-1a digest in hex.
std::string serialize(const WittCochain& c);
std::string digest(const WittCochain& c);

}  // namespace fbh
