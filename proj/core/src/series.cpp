#include "fbh/series.hpp"

#include <stdexcept>

namespace fbh {

Series1 Series1::variable(const FieldPtr& field, std::size_t N) {
  Series1 s(field, N);
  if (N >= 1) s.c_[1] = 1;
  return s;
}

std::size_t Series1::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i]) return i;
  return c_.size();
}

Series1 Series1::operator+(const Series1& o) const {
  if (c_.size() != o.c_.size()) throw std::invalid_argument("series truncation mismatch");
  Series1 r(field_, order());
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = field_->add(c_[i], o.c_[i]);
  return r;
}

Series1 Series1::operator-(const Series1& o) const {
  if (c_.size() != o.c_.size()) throw std::invalid_argument("series truncation mismatch");
  Series1 r(field_, order());
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = field_->sub(c_[i], o.c_[i]);
  return r;
}

Series1 Series1::operator*(const Series1& o) const {
  if (c_.size() != o.c_.size()) throw std::invalid_argument("series truncation mismatch");
  const std::size_t n = c_.size();
  Series1 r(field_, order());
  for (std::size_t i = 0; i < n; ++i) {
    if (!c_[i]) continue;
    for (std::size_t j = 0; i + j < n; ++j)
      if (o.c_[j]) r.c_[i + j] = field_->add(r.c_[i + j], field_->mul(c_[i], o.c_[j]));
  }
  return r;
}

Series1 Series1::scaled(std::uint32_t a) const {
  Series1 r(field_, order());
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = field_->mul(c_[i], a);
  return r;
}

std::string Series1::to_string(const std::string& var, std::size_t max_terms) const {
  std::string out;
  std::size_t shown = 0;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i]) continue;
    if (shown == max_terms) {
      out += "+...";
      break;
    }
    std::string c = field_->format(c_[i]);
    if (c.find('+') != std::string::npos) c = "(" + c + ")";
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += c;
    } else {
      if (c != "1") out += c + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
    ++shown;
  }
  if (out.empty()) out = "0";
  return out + "+O(" + var + "^" + std::to_string(order() + 1) + ")";
}

Series2 Series2::x(const FieldPtr& field, std::size_t N) {
  Series2 s(field, N);
  if (N >= 1) s.set(1, 0, 1);
  return s;
}

Series2 Series2::y(const FieldPtr& field, std::size_t N) {
  Series2 s(field, N);
  if (N >= 1) s.set(0, 1, 1);
  return s;
}

Series2 Series2::constant(const FieldPtr& field, std::size_t N, std::uint32_t a) {
  Series2 s(field, N);
  s.set(0, 0, a);
  return s;
}

void Series2::set(std::size_t i, std::size_t j, std::uint32_t v) {
  if (i + j > N_) throw std::out_of_range("term beyond truncation");
  c_[i * (N_ + 1) + j] = v;
}

Series2 Series2::operator+(const Series2& o) const {
  if (N_ != o.N_) throw std::invalid_argument("series truncation mismatch");
  Series2 r(field_, N_);
  for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k] = field_->add(c_[k], o.c_[k]);
  return r;
}

Series2 Series2::operator-(const Series2& o) const {
  if (N_ != o.N_) throw std::invalid_argument("series truncation mismatch");
  Series2 r(field_, N_);
  for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k] = field_->sub(c_[k], o.c_[k]);
  return r;
}

Series2 Series2::operator*(const Series2& o) const {
  if (N_ != o.N_) throw std::invalid_argument("series truncation mismatch");
  const std::size_t W = N_ + 1;
  Series2 r(field_, N_);
  for (std::size_t i1 = 0; i1 <= N_; ++i1)
    for (std::size_t j1 = 0; i1 + j1 <= N_; ++j1) {
      const std::uint32_t a = c_[i1 * W + j1];
      if (!a) continue;
      for (std::size_t i2 = 0; i1 + j1 + i2 <= N_; ++i2)
        for (std::size_t j2 = 0; i1 + j1 + i2 + j2 <= N_; ++j2) {
          const std::uint32_t b = o.c_[i2 * W + j2];
          if (!b) continue;
          std::uint32_t& t = r.c_[(i1 + i2) * W + j1 + j2];
          t = field_->add(t, field_->mul(a, b));
        }
    }
  return r;
}

Series2 Series2::scaled(std::uint32_t a) const {
  Series2 r(field_, N_);
  for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k] = field_->mul(c_[k], a);
  return r;
}

Series2 Series2::inverse() const {
  const std::uint32_t c0 = at(0, 0);
  if (!c0) throw std::domain_error("series with zero constant term is not invertible");
  const std::uint32_t inv0 = field_->inv(c0);
  Series2 g(field_, N_);
  // Solve (this * g)_{ij} = [i = j = 0] degree by degree.
  for (std::size_t d = 0; d <= N_; ++d)
    for (std::size_t i = 0; i <= d; ++i) {
      const std::size_t j = d - i;
      std::uint32_t acc = (d == 0) ? 1 : 0;
      for (std::size_t a = 0; a <= i; ++a)
        for (std::size_t b = 0; b <= j; ++b) {
          if (a == 0 && b == 0) continue;
          const std::uint32_t s = at(a, b);
          if (s) acc = field_->sub(acc, field_->mul(s, g.at(i - a, j - b)));
        }
      g.set(i, j, field_->mul(acc, inv0));
    }
  return g;
}

Series2 Series2::swapped() const {
  Series2 r(field_, N_);
  for (std::size_t i = 0; i <= N_; ++i)
    for (std::size_t j = 0; i + j <= N_; ++j) r.set(j, i, at(i, j));
  return r;
}

Series1 Series2::compose(const Series1& a, const Series1& b) const {
  if (a.order() != N_ || b.order() != N_) throw std::invalid_argument("series truncation mismatch");
  if (a[0] || b[0]) throw std::invalid_argument("substituted series must have no constant term");
  // Powers of b, then Horner in a over G_i(t) = sum_j c_ij b^j.
  std::vector<Series1> bpow;
  bpow.emplace_back(field_, N_);
  bpow[0].coeff(0) = 1;
  for (std::size_t j = 1; j <= N_; ++j) bpow.push_back(bpow.back() * b);
  Series1 acc(field_, N_);
  for (std::size_t i = N_ + 1; i-- > 0;) {
    Series1 g(field_, N_);
    for (std::size_t j = 0; i + j <= N_; ++j) {
      const std::uint32_t c = at(i, j);
      if (!c) continue;
      for (std::size_t k = j; k <= N_; ++k)
        if (bpow[j][k]) g.coeff(k) = field_->add(g[k], field_->mul(c, bpow[j][k]));
    }
    acc = acc * a + g;
  }
  return acc;
}

Series1 Series2::restrict_x() const {
  Series1 r(field_, N_);
  for (std::size_t i = 0; i <= N_; ++i) r.coeff(i) = at(i, 0);
  return r;
}

Series1 Series2::restrict_y() const {
  Series1 r(field_, N_);
  for (std::size_t j = 0; j <= N_; ++j) r.coeff(j) = at(0, j);
  return r;
}

std::string Series2::to_string(std::size_t max_terms) const {
  std::string out;
  std::size_t shown = 0;
  for (std::size_t d = 0; d <= N_ && shown <= max_terms; ++d)
    for (std::size_t i = d + 1; i-- > 0;) {
      const std::size_t j = d - i;
      const std::uint32_t c = at(i, j);
      if (!c) continue;
      if (shown == max_terms) {
        out += "+...";
        ++shown;
        break;
      }
      std::string cs = field_->format(c);
      if (cs.find('+') != std::string::npos) cs = "(" + cs + ")";
      std::string mon;
      if (i) mon += i == 1 ? "x" : "x^" + std::to_string(i);
      if (j) mon += (mon.empty() ? "" : "*") + (j == 1 ? std::string("y") : "y^" + std::to_string(j));
      if (!out.empty()) out += "+";
      if (mon.empty()) {
        out += cs;
      } else {
        if (cs != "1") out += cs + "*";
        out += mon;
      }
      ++shown;
    }
  return out.empty() ? "0" : out;
}

}  // namespace fbh
