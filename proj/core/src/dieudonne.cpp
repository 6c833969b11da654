#include "fbh/dieudonne.hpp"

#include <stdexcept>

namespace fbh {

unsigned cokernel_length(const GaloisRing& gr, std::size_t rows, GRMatrix columns) {
  const unsigned m = gr.length();
  const std::size_t cols = columns.size();
  for (const auto& c : columns)
    if (c.size() != rows) throw std::invalid_argument("matrix column has wrong size");
  // a[r][c]
  std::vector<GRVec> a(rows, GRVec(cols));
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t r = 0; r < rows; ++r) a[r][c] = std::move(columns[c][r]);

  unsigned length = 0;
  std::size_t t = 0;
  for (; t < std::min(rows, cols); ++t) {
    unsigned best = m;
    std::size_t br = 0, bc = 0;
    for (std::size_t r = t; r < rows && best > 0; ++r)
      for (std::size_t c = t; c < cols; ++c) {
        unsigned v = gr.valuation(a[r][c]);
        if (v < best) {
          best = v;
          br = r;
          bc = c;
          if (v == 0) break;
        }
      }
    if (best == m) break;
    std::swap(a[t], a[br]);
    for (auto& row : a) std::swap(row[t], row[bc]);
    const auto unit_inv = gr.unit_inverse(gr.div_p_power(a[t][t], best));
    for (std::size_t r = t + 1; r < rows; ++r) {
      if (gr.is_zero(a[r][t])) continue;
      auto factor = gr.mul(gr.div_p_power(a[r][t], best), unit_inv);
      for (std::size_t c = t; c < cols; ++c) a[r][c] = gr.sub(a[r][c], gr.mul(factor, a[t][c]));
    }
    for (std::size_t c = t + 1; c < cols; ++c) {
      if (gr.is_zero(a[t][c])) continue;
      auto factor = gr.mul(gr.div_p_power(a[t][c], best), unit_inv);
      for (std::size_t r = t; r < rows; ++r) a[r][c] = gr.sub(a[r][c], gr.mul(factor, a[r][t]));
    }
    length += best;
  }
  length += unsigned(rows - t) * m;
  return length;
}

DieudonneModule::DieudonneModule(unsigned h, unsigned m, FieldPtr field)
    : h_(h), m_(m), gr_(GaloisRing::get(field, m)) {
  if (h == 0) throw std::invalid_argument("height must be >= 1");
  if (m == 0) throw std::invalid_argument("Witt length must be >= 1");
  if (!relations_hold()) throw std::logic_error("Dieudonne model violates FV = VF = p");
}

GRVec DieudonneModule::basis(unsigned j) const {
  GRVec v(h_, gr_->zero());
  v.at(j) = gr_->one();
  return v;
}

GRVec DieudonneModule::apply_F(const GRVec& x) const {
  GRVec y(h_, gr_->zero());
  for (unsigned j = 0; j < h_; ++j) {
    auto s = gr_->sigma(x[j]);
    if (j == 0) {
      y[h_ - 1] = gr_->add(y[h_ - 1], s);
    } else {
      y[j - 1] = gr_->add(y[j - 1], gr_->scale(s, gr_->field()->p()));
    }
  }
  return y;
}

GRVec DieudonneModule::apply_V(const GRVec& x) const {
  GRVec y(h_, gr_->zero());
  for (unsigned j = 0; j < h_; ++j) {
    auto s = gr_->sigma_inverse(x[j]);
    if (j + 1 < h_) {
      y[j + 1] = gr_->add(y[j + 1], s);
    } else {
      y[0] = gr_->add(y[0], gr_->scale(s, gr_->field()->p()));
    }
  }
  return y;
}

GRVec DieudonneModule::times_p(const GRVec& x) const {
  GRVec y;
  for (const auto& c : x) y.push_back(gr_->scale(c, gr_->field()->p()));
  return y;
}

GRMatrix DieudonneModule::F_columns() const {
  GRMatrix cols;
  for (unsigned j = 0; j < h_; ++j) cols.push_back(apply_F(basis(j)));
  return cols;
}

GRMatrix DieudonneModule::V_columns() const { return V_power_columns(1); }

GRMatrix DieudonneModule::p_columns() const {
  GRMatrix cols;
  for (unsigned j = 0; j < h_; ++j) cols.push_back(times_p(basis(j)));
  return cols;
}

GRMatrix DieudonneModule::V_power_columns(unsigned i) const {
  GRMatrix cols;
  for (unsigned j = 0; j < h_; ++j) {
    GRVec v = basis(j);
    for (unsigned k = 0; k < i; ++k) v = apply_V(v);
    cols.push_back(std::move(v));
  }
  return cols;
}

unsigned DieudonneModule::F_rank_mod_p() const {
  auto cols = F_columns();
  // Units among the Smith entries: h minus the length of coker over GR/p.
  auto gr1 = GaloisRing::get(gr_->field(), 1);
  for (auto& c : cols)
    for (auto& e : c)
      for (auto& x : e) x %= gr_->field()->p();
  return h_ - cokernel_length(*gr1, h_, std::move(cols));
}

bool DieudonneModule::relations_hold() const {
  for (unsigned j = 0; j < h_; ++j) {
    auto e = basis(j);
    auto pe = times_p(e);
    if (apply_F(apply_V(e)) != pe || apply_V(apply_F(e)) != pe) return false;
  }
  return true;
}

DimsReport check_dims(const DieudonneModule& M) {
  DimsReport r;
  const auto& gr = M.ring();
  r.dim_M_VM = cokernel_length(gr, M.height(), M.V_columns());
  r.dim_M_FM = cokernel_length(gr, M.height(), M.F_columns());
  r.dim_M_pM = cokernel_length(gr, M.height(), M.p_columns());
  r.sum_identity = r.dim_M_pM == r.dim_M_FM + r.dim_M_VM;
  return r;
}

TruncatedDModule::TruncatedDModule(const DieudonneModule& M, unsigned i) : M_(&M), i_(i) {
  if (i == 0) throw std::invalid_argument("truncation level must be >= 1");
  // M/V^iM agrees with the untruncated quotient once p^m lies in V^iM.
  const unsigned need = (i + M.height() - 1) / M.height();
  if (need > M.witt_length())
    throw std::invalid_argument("truncation level " + std::to_string(i) + " exceeds representable Witt length " +
                                std::to_string(M.witt_length()));
  rel_ = M.V_power_columns(i);
}

unsigned TruncatedDModule::dimension() const {
  return cokernel_length(M_->ring(), M_->height(), rel_);
}

unsigned TruncatedDModule::ker_f_dim() const {
  GRMatrix cols = rel_;
  for (auto& c : M_->F_columns()) cols.push_back(std::move(c));
  return cokernel_length(M_->ring(), M_->height(), std::move(cols));
}

unsigned TruncatedDModule::image_f_dim() const { return dimension() - ker_f_dim(); }

bool TruncatedDModule::f_is_zero() const { return image_f_dim() == 0; }

TruncatedDModule truncate(const DieudonneModule& M, unsigned i) { return TruncatedDModule(M, i); }

FiltrationReport filtration_image_check(const DieudonneModule& M, unsigned levels) {
  TruncatedDModule H(M, levels);
  const auto& gr = M.ring();
  const unsigned h = M.height();
  GRMatrix l1 = H.relations(), l2 = H.relations(), l12 = H.relations();
  for (auto& c : M.F_columns()) {
    l1.push_back(c);
    l12.push_back(c);
  }
  for (auto& c : M.V_power_columns(h - 1)) {
    l2.push_back(c);
    l12.push_back(c);
  }
  const unsigned c1 = cokernel_length(gr, h, l1), c2 = cokernel_length(gr, h, l2),
                 c12 = cokernel_length(gr, h, l12);
  FiltrationReport r;
  r.h = h;
  r.levels = levels;
  r.images_equal = c1 == c2 && c1 == c12;
  r.codimension = c1;
  r.image_dim = H.dimension() - c1;
  return r;
}

}  // namespace fbh
