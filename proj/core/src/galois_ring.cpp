#include "fbh/galois_ring.hpp"

#include "fbh/structural.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace fbh {

namespace {

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return std::int64_t((__int128)a * b % m);
}

}  // namespace

GaloisRing::GaloisRing(FieldPtr field, unsigned m) : field_(std::move(field)), m_(m) {
  if (m_ == 0) throw std::invalid_argument("Galois ring length must be >= 1");
  d_ = field_->degree();
  p_ = field_->p();
  __int128 mod = 1;
  for (unsigned i = 0; i < m_; ++i) {
    mod *= p_;
    if (mod > (__int128(1) << 62)) throw std::invalid_argument("Galois ring modulus too large");
  }
  mod_ = std::int64_t(mod);
  for (auto c : field_->modulus()) g_.push_back(std::int64_t(c));

  // Hensel lift of the root t^p of g~ starting from its residue.
  Elem t = zero();
  if (d_ > 1) t[1] = 1;
  if (d_ == 1) {
    sigma_t_ = {one()};
    sigma_inv_t_ = {one()};
    return;
  }
  Elem tau = pow(t, p_);
  auto eval = [&](const std::vector<std::int64_t>& poly, const Elem& x) {
    Elem acc = zero();
    for (std::size_t i = poly.size(); i-- > 0;) acc = add(mul(acc, x), from_int(poly[i]));
    return acc;
  };
  std::vector<std::int64_t> dg;
  for (std::size_t i = 1; i < g_.size(); ++i) dg.push_back(mulmod(g_[i], std::int64_t(i), mod_));
  for (unsigned it = 0; it < m_ + 1; ++it) tau = sub(tau, mul(eval(g_, tau), unit_inverse(eval(dg, tau))));
  if (!is_zero(eval(g_, tau))) throw std::logic_error("Hensel lift of Frobenius failed");
  sigma_t_.push_back(one());
  for (unsigned j = 1; j < d_; ++j) sigma_t_.push_back(mul(sigma_t_.back(), tau));
  // sigma^{-1} = sigma^{d-1}
  Elem s = t;
  for (unsigned i = 0; i + 1 < d_; ++i) s = apply_sigma(s, sigma_t_);
  sigma_inv_t_.push_back(one());
  for (unsigned j = 1; j < d_; ++j) sigma_inv_t_.push_back(mul(sigma_inv_t_.back(), s));
}

std::shared_ptr<const GaloisRing> GaloisRing::get(const FieldPtr& field, unsigned m) {
  static std::mutex mu;
  static std::map<std::pair<const Field*, unsigned>, std::pair<FieldPtr, std::shared_ptr<const GaloisRing>>> cache;
  std::lock_guard lock(mu);
  auto key = std::make_pair(field.get(), m);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second.second;
  auto gr = std::make_shared<const GaloisRing>(field, m);
  cache.emplace(key, std::make_pair(field, gr));
  return gr;
}

GaloisRing::Elem GaloisRing::one() const { return from_int(1); }

GaloisRing::Elem GaloisRing::from_int(std::int64_t v) const {
  Elem r = zero();
  v %= mod_;
  if (v < 0) v += mod_;
  r[0] = v;
  return r;
}

bool GaloisRing::is_zero(const Elem& x) const {
  for (auto c : x)
    if (c != 0) return false;
  return true;
}

GaloisRing::Elem GaloisRing::add(const Elem& a, const Elem& b) const {
  Elem r(d_);
  for (unsigned i = 0; i < d_; ++i) {
    std::int64_t s = a[i] + b[i];
    r[i] = s >= mod_ ? s - mod_ : s;
  }
  return r;
}

GaloisRing::Elem GaloisRing::neg(const Elem& a) const {
  Elem r(d_);
  for (unsigned i = 0; i < d_; ++i) r[i] = a[i] == 0 ? 0 : mod_ - a[i];
  return r;
}

GaloisRing::Elem GaloisRing::sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

GaloisRing::Elem GaloisRing::scale(const Elem& a, std::int64_t c) const {
  c %= mod_;
  if (c < 0) c += mod_;
  Elem r(d_);
  for (unsigned i = 0; i < d_; ++i) r[i] = mulmod(a[i], c, mod_);
  return r;
}

GaloisRing::Elem GaloisRing::mul(const Elem& a, const Elem& b) const {
  if (d_ == 1) return {mulmod(a[0], b[0], mod_)};
  std::vector<__int128> prod(2 * d_ - 1, 0);
  for (unsigned i = 0; i < d_; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < d_; ++j) prod[i + j] = (prod[i + j] + (__int128)a[i] * b[j]) % mod_;
  }
  for (std::size_t k = prod.size(); k-- > d_;) {
    __int128 lead = prod[k];
    if (lead == 0) continue;
    for (unsigned i = 0; i < d_; ++i) prod[k - d_ + i] = (prod[k - d_ + i] - lead * g_[i]) % mod_;
  }
  Elem r(d_);
  for (unsigned i = 0; i < d_; ++i) {
    __int128 v = prod[i] % mod_;
    if (v < 0) v += mod_;
    r[i] = std::int64_t(v);
  }
  return r;
}

GaloisRing::Elem GaloisRing::pow(Elem a, std::uint64_t e) const {
  Elem r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    e >>= 1;
    if (e) a = mul(a, a);
  }
  return r;
}

unsigned GaloisRing::valuation(const Elem& x) const {
  unsigned best = m_;
  for (auto c : x) {
    if (c == 0) continue;
    unsigned v = 0;
    while (c % p_ == 0) {
      c /= p_;
      ++v;
    }
    best = std::min(best, v);
  }
  return best;
}

GaloisRing::Elem GaloisRing::unit_inverse(const Elem& x) const {
  std::uint32_t r = residue(x);
  if (r == 0) throw std::domain_error("Galois ring element is not a unit");
  Elem y = lift(field_->inv(r));
  // Newton iteration y <- y(2 - xy) doubles the p-adic precision.
  for (unsigned prec = 1; prec < m_; prec *= 2) y = mul(y, sub(from_int(2), mul(x, y)));
  return y;
}

GaloisRing::Elem GaloisRing::div_p_power(const Elem& x, unsigned k) const {
  if (valuation(x) < k) throw std::domain_error("Galois ring element not divisible by p^k");
  std::int64_t pk = 1;
  for (unsigned i = 0; i < k; ++i) pk *= p_;
  Elem r(d_);
  for (unsigned i = 0; i < d_; ++i) r[i] = x[i] / pk;
  return r;
}

GaloisRing::Elem GaloisRing::apply_sigma(const Elem& x, const std::vector<Elem>& images) const {
  Elem acc = zero();
  for (unsigned j = 0; j < d_; ++j)
    if (x[j]) acc = add(acc, scale(images[j], x[j]));
  return acc;
}

GaloisRing::Elem GaloisRing::sigma(const Elem& x) const { return d_ == 1 ? x : apply_sigma(x, sigma_t_); }
GaloisRing::Elem GaloisRing::sigma_inverse(const Elem& x) const {
  return d_ == 1 ? x : apply_sigma(x, sigma_inv_t_);
}

std::uint32_t GaloisRing::residue(const Elem& x) const {
  std::vector<std::uint32_t> c(d_);
  for (unsigned i = 0; i < d_; ++i) c[i] = std::uint32_t(x[i] % p_);
  return field_->from_coords(c);
}

GaloisRing::Elem GaloisRing::lift(std::uint32_t a) const {
  auto c = field_->coords(a);
  Elem r(d_);
  for (unsigned i = 0; i < d_; ++i) r[i] = c[i];
  return r;
}

GaloisRing::Elem GaloisRing::teichmuller(std::uint32_t a) const {
  if (a == 0) return zero();
  std::uint64_t e = 1;
  for (unsigned i = 0; i + 1 < m_; ++i) e *= field_->order();
  return pow(lift(a), e);
}

GaloisRing::Elem GaloisRing::from_witt(std::span<const FieldElement> a) const {
  if (a.size() != m_) throw std::invalid_argument("Witt length does not match Galois ring");
  Elem acc = zero();
  std::int64_t pk = 1;
  for (unsigned k = 0; k < m_; ++k) {
    std::uint32_t v = a[k].raw();
    for (unsigned j = 0; j < k; ++j) v = field_->frobenius_inverse(v);
    acc = add(acc, scale(teichmuller(v), pk));
    pk *= p_;
  }
  return acc;
}

std::vector<FieldElement> GaloisRing::to_witt(const Elem& x0) const {
  std::vector<FieldElement> out;
  Elem x = x0;
  for (unsigned k = 0; k < m_; ++k) {
    std::uint32_t b = residue(x);
    std::uint32_t a = b;
    for (unsigned j = 0; j < k; ++j) a = field_->frobenius(a);
    out.emplace_back(field_, a);
    if (k + 1 < m_) x = div_p_power(sub(x, teichmuller(b)), 1);
  }
  return out;
}

std::vector<FieldElement> witt_field_op(WittOp op, std::span<const FieldElement> a, std::span<const FieldElement> b) {
  if (a.size() != b.size() || a.empty()) throw std::invalid_argument("Witt length mismatch");
  auto gr = GaloisRing::get(a[0].field(), unsigned(a.size()));
  auto x = gr->from_witt(a), y = gr->from_witt(b);
  switch (op) {
    case WittOp::Sum: return gr->to_witt(gr->add(x, y));
    case WittOp::Difference: return gr->to_witt(gr->sub(x, y));
    case WittOp::Product: return gr->to_witt(gr->mul(x, y));
  }
  throw std::logic_error("unknown Witt operation");
}

}  // namespace fbh
