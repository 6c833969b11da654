#pragma once

// Height of the formal group of H^n(X, O_X) for a Calabi-Yau hypersurface,
// via the Frobenius action on H^n(X, W_i(O_X)).

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fbh/cochain.hpp"

namespace fbh {

class WindowExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BasisClass {
  Cochain zeta;
  // Class of zeta against the generator (always 1) and the certification
  // that zeta is not a coboundary.
  FieldElement scalar;
  bool certified_nonzero = false;
};

// The generator of H^n(O_X) and its non-coboundary certificate.
BasisClass hn_O_basis(const CechComplex& C);

// The scalar a with F(zeta) = a zeta in H^n(O_X); zero iff the height is >= 2.
FieldElement frobenius_scalar(const CechComplex& C);

// alpha^(1), ..., alpha^(m): Witt cocycles with R(alpha^(k+1)) = alpha^(k)
// and alpha^(1) = scale * zeta.
std::vector<WittCochain> zeta_lifts(const CechComplex& C, std::size_t m,
                                    std::optional<FieldElement> scale = std::nullopt);

enum class Verdict { Exact, Infinite, AtLeast };
const char* verdict_name(Verdict v);

struct LevelRecord {
  unsigned level = 0;
  int window = 0;
  int pole_order = 0;
  std::optional<FieldElement> witness;  // phi_n scalar at the terminating level
  std::string gamma_digest;             // coboundary data of a passed level
};

struct HeightCertificate {
  std::uint32_t p = 0;
  unsigned d = 1;
  std::vector<std::uint32_t> modulus;
  std::string f;
  int n = 0;
  unsigned i_max = 0;
  Verdict verdict = Verdict::AtLeast;
  unsigned h = 0;  // exact height, or the lower bound for AtLeast
  std::vector<LevelRecord> levels;
  int window_base = 0;
  std::optional<FieldElement> basis_scale;
  std::string note;
};

struct TowerOptions {
  // 0 selects 10 for surfaces, 2 for curves and 3 for threefolds.
  unsigned i_max = 0;
  // Base window; 0 selects p^i (n + 2) at level i.
  int window = 0;
  int window_cap = kMaxExp;
  // Report phi_n against the basis scale * zeta instead of zeta.
  std::optional<FieldElement> basis_scale;
  // Wall-clock budget in seconds (0 = none). A level whose projected cost,
  // extrapolated from the growth of the previous two, would overrun the
  // budget is not started and the verdict becomes at-least.
  double time_budget = 0;
  std::function<void(const std::string&)> progress;
};

unsigned default_tower_depth(int n);

HeightCertificate phi_tower(const CechComplex& C, const TowerOptions& opts = {});

// Length of ker F on H^n(X, W_i(O_X)), by enumerating the q^i classes
// sum_j V^j([c_j] alpha^(i-j)).
unsigned ker_f_dim_cech(const CechComplex& C, unsigned i, std::uint64_t budget = 100000);

}  // namespace fbh
