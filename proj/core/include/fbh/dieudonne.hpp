#pragma once

// The Dieudonne module of a one-dimensional formal group of height h,
// modelled as a free module over W_m(F_q) = GR(p^m, d) with basis
// e_0, ..., e_{h-1} and
//   F e_0 = e_{h-1},  F e_j = p e_{j-1}   (sigma-linear),
//   V e_j = e_{j+1},  V e_{h-1} = p e_0   (sigma^{-1}-linear).

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "fbh/galois_ring.hpp"

namespace fbh {

using GRVec = std::vector<GaloisRing::Elem>;
using GRMatrix = std::vector<GRVec>;  // list of columns

// Length of the cokernel of the map GR^rows <- GR^cols given by `columns`,
// computed from its Smith form over the chain ring GR.
unsigned cokernel_length(const GaloisRing& gr, std::size_t rows, GRMatrix columns);

class DieudonneModule {
 public:
  DieudonneModule(unsigned h, unsigned m, FieldPtr field);

  unsigned height() const { return h_; }
  unsigned witt_length() const { return m_; }
  const GaloisRing& ring() const { return *gr_; }

  GRVec basis(unsigned j) const;
  GRVec apply_F(const GRVec& x) const;
  GRVec apply_V(const GRVec& x) const;
  GRVec times_p(const GRVec& x) const;

  // Columns F e_j, V e_j, p e_j.
  GRMatrix F_columns() const;
  GRMatrix V_columns() const;
  GRMatrix p_columns() const;
  GRMatrix V_power_columns(unsigned i) const;

  // Rank over F_q of F reduced mod p.
  unsigned F_rank_mod_p() const;
  // FV = VF = p on all basis vectors.
  bool relations_hold() const;

 private:
  unsigned h_, m_;
  std::shared_ptr<const GaloisRing> gr_;
};

struct DimsReport {
  unsigned dim_M_VM = 0;
  unsigned dim_M_FM = 0;
  unsigned dim_M_pM = 0;
  bool sum_identity = false;  // dim M/pM = dim M/FM + dim M/VM
};

DimsReport check_dims(const DieudonneModule& M);

// M / V^i M with the induced F.
class TruncatedDModule {
 public:
  TruncatedDModule(const DieudonneModule& M, unsigned i);

  unsigned level() const { return i_; }
  unsigned dimension() const;
  bool f_is_zero() const;
  unsigned ker_f_dim() const;
  unsigned image_f_dim() const;

  const DieudonneModule& module() const { return *M_; }
  const GRMatrix& relations() const { return rel_; }

 private:
  const DieudonneModule* M_;
  unsigned i_;
  GRMatrix rel_;
};

TruncatedDModule truncate(const DieudonneModule& M, unsigned i);

struct FiltrationReport {
  unsigned h = 0;
  unsigned levels = 0;
  bool images_equal = false;
  unsigned image_dim = 0;    // length of F(H)
  unsigned codimension = 0;  // length of H / F(H)
};

// In H = M/V^levels M, compares F(H) with V^{h-1}(H).
FiltrationReport filtration_image_check(const DieudonneModule& M, unsigned levels = 10);

}  // namespace fbh
