#include "fbh/field.hpp"

#include <algorithm>
#include <stdexcept>

namespace fbh {

namespace {

constexpr std::uint64_t kMaxExtensionOrder = std::uint64_t(1) << 22;
constexpr std::uint64_t kAddTableLimit = 1024;

// Remainder of a mod b over F_p, both low-to-high, b monic.
std::vector<std::uint32_t> poly_mod(std::vector<std::uint32_t> a, std::span<const std::uint32_t> b,
                                    std::uint32_t p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    std::uint32_t lead = a.back();
    if (lead != 0) {
      std::size_t shift = a.size() - 1 - db;
      for (std::size_t i = 0; i < db; ++i) {
        std::uint64_t t = (std::uint64_t(lead) * b[i]) % p;
        a[shift + i] = std::uint32_t((a[shift + i] + p - t) % p);
      }
    }
    a.pop_back();
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

bool is_irreducible_mod_p(std::span<const std::uint32_t> poly, std::uint32_t p) {
  if (poly.size() < 2 || poly.back() != 1) throw std::invalid_argument("modulus must be monic of degree >= 1");
  const std::size_t deg = poly.size() - 1;
  if (deg == 1) return true;
  // Enumerate monic candidates of each degree k <= deg/2 by counting in base p.
  for (std::size_t k = 1; k <= deg / 2; ++k) {
    std::vector<std::uint32_t> cand(k + 1, 0);
    cand[k] = 1;
    while (true) {
      auto r = poly_mod(std::vector<std::uint32_t>(poly.begin(), poly.end()), cand, p);
      if (std::all_of(r.begin(), r.end(), [](std::uint32_t c) { return c == 0; })) return false;
      std::size_t i = 0;
      while (i < k && ++cand[i] == p) cand[i++] = 0;
      if (i == k) break;
    }
  }
  return true;
}

FieldPtr Field::make(std::uint32_t p, unsigned d, std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  if (d == 0) throw std::invalid_argument("extension degree must be >= 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < d; ++i) {
    q *= p;
    if (d > 1 && q > kMaxExtensionOrder) throw std::invalid_argument("extension field too large");
  }
  if (p >= (std::uint32_t(1) << 31)) throw std::invalid_argument("characteristic too large");
  std::vector<std::uint32_t> mod;
  if (d == 1) {
    if (modulus && !(modulus->size() == 2 && (*modulus)[1] == 1))
      throw std::invalid_argument("modulus of a prime field must be linear and monic");
    mod = {0, 1};
  } else if (modulus) {
    mod = *modulus;
    if (mod.size() != d + 1) throw std::invalid_argument("modulus degree does not match extension degree");
    for (auto& c : mod) c %= p;
    if (mod.back() != 1) throw std::invalid_argument("modulus must be monic");
    if (!is_irreducible_mod_p(mod, p)) throw std::invalid_argument("modulus is reducible");
  } else {
    // Lexicographic search on (c_{d-1}, ..., c_0): c_0 is the fastest digit.
    std::vector<std::uint32_t> cand(d + 1, 0);
    cand[d] = 1;
    bool found = false;
    while (!found) {
      if (is_irreducible_mod_p(cand, p)) {
        found = true;
        break;
      }
      std::size_t i = 0;
      while (i < d && ++cand[i] == p) cand[i++] = 0;
      if (i == d) break;
    }
    if (!found) throw std::logic_error("no irreducible polynomial found");
    mod = cand;
  }
  return std::make_shared<const Field>(Private{}, p, d, std::move(mod));
}

Field::Field(Private, std::uint32_t p, unsigned d, std::vector<std::uint32_t> modulus)
    : p_(p), d_(d), q_(1), modulus_(std::move(modulus)) {
  for (unsigned i = 0; i < d_; ++i) q_ *= p_;
  if (d_ > 1) build_tables();
}

bool Field::same_as(const Field& other) const {
  return this == &other || (p_ == other.p_ && d_ == other.d_ && modulus_ == other.modulus_);
}

std::uint32_t Field::from_int(std::int64_t v) const {
  std::int64_t r = v % std::int64_t(p_);
  if (r < 0) r += p_;
  return std::uint32_t(r);
}

std::uint32_t Field::from_coords(std::span<const std::uint32_t> c) const {
  if (c.size() > d_) throw std::invalid_argument("too many coordinates for field");
  std::uint64_t v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * p_ + (c[i] % p_);
  return std::uint32_t(v);
}

std::vector<std::uint32_t> Field::coords(std::uint32_t a) const {
  std::vector<std::uint32_t> c(d_, 0);
  for (unsigned i = 0; i < d_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

std::uint32_t Field::add_slow(std::uint32_t a, std::uint32_t b) const {
  std::uint32_t r = 0, scale = 1;
  for (unsigned i = 0; i < d_; ++i) {
    std::uint32_t s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    r += s * scale;
    scale *= p_;
    a /= p_;
    b /= p_;
  }
  return r;
}

std::uint32_t Field::mul_slow(std::uint32_t a, std::uint32_t b) const {
  auto ca = coords(a), cb = coords(b);
  std::vector<std::uint32_t> prod(2 * d_ - 1, 0);
  for (unsigned i = 0; i < d_; ++i)
    for (unsigned j = 0; j < d_; ++j)
      prod[i + j] = std::uint32_t((prod[i + j] + std::uint64_t(ca[i]) * cb[j]) % p_);
  auto r = poly_mod(std::move(prod), modulus_, p_);
  return from_coords(r);
}

void Field::build_tables() {
  const std::uint32_t q = std::uint32_t(q_);
  neg_table_.resize(q);
  for (std::uint32_t a = 0; a < q; ++a) {
    auto c = coords(a);
    for (auto& x : c) x = x == 0 ? 0 : p_ - x;
    neg_table_[a] = from_coords(c);
  }
  if (q_ <= kAddTableLimit) {
    add_table_.resize(std::size_t(q) * q);
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b) add_table_[std::size_t(a) * q + b] = add_slow(a, b);
  }
  // Primitive element: g^((q-1)/l) != 1 for every prime l | q-1.
  const auto factors = prime_factors(q_ - 1);
  auto slow_pow = [&](std::uint32_t g, std::uint64_t e) {
    std::uint32_t r = 1, b = g;
    while (e) {
      if (e & 1) r = mul_slow(r, b);
      b = mul_slow(b, b);
      e >>= 1;
    }
    return r;
  };
  std::uint32_t gen = 0;
  for (std::uint32_t g = 2; g < q; ++g) {
    bool primitive = true;
    for (auto l : factors)
      if (slow_pow(g, (q_ - 1) / l) == 1) {
        primitive = false;
        break;
      }
    if (primitive) {
      gen = g;
      break;
    }
  }
  if (gen == 0) throw std::logic_error("no primitive element");
  log_.assign(q, 0);
  exp_.assign(2 * (q - 1), 0);
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i < q - 1; ++i) {
    exp_[i] = x;
    exp_[i + q - 1] = x;
    log_[x] = i;
    x = mul_slow(x, gen);
  }
  frob_.resize(q);
  frob_inv_.resize(q);
  for (std::uint32_t a = 0; a < q; ++a) frob_[a] = pow(a, p_);
  for (std::uint32_t a = 0; a < q; ++a) frob_inv_[frob_[a]] = a;
}

std::uint32_t Field::inv(std::uint32_t a) const {
  if (a == 0) throw std::domain_error("inverse of zero in " + describe());
  if (d_ == 1) return pow(a, p_ - 2);
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  if (d_ > 1) return exp_[std::uint64_t(log_[a]) * (e % (q_ - 1)) % (q_ - 1)];
  std::uint64_t r = 1, b = a;
  while (e) {
    if (e & 1) r = r * b % p_;
    b = b * b % p_;
    e >>= 1;
  }
  return std::uint32_t(r);
}

std::string Field::format(std::uint32_t a) const {
  if (d_ == 1) return std::to_string(a);
  auto c = coords(a);
  std::string out;
  for (std::size_t i = d_; i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c[i]);
      continue;
    }
    if (c[i] != 1) out += std::to_string(c[i]) + "*";
    out += "t";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

std::string Field::describe() const {
  std::string s = "F_" + std::to_string(q_);
  if (d_ > 1) {
    std::string m;
    for (std::size_t i = d_ + 1; i-- > 0;) {
      if (modulus_[i] == 0) continue;
      if (!m.empty()) m += "+";
      if (i == 0) {
        m += std::to_string(modulus_[i]);
        continue;
      }
      if (modulus_[i] != 1) m += std::to_string(modulus_[i]) + "*";
      m += "t";
      if (i > 1) m += "^" + std::to_string(i);
    }
    s += "[" + m + "]";
  }
  return s;
}

void FieldElement::check_same(const FieldElement& o) const {
  if (!field_ || !o.field_) throw std::invalid_argument("uninitialised field element");
  if (field_ != o.field_ && !field_->same_as(*o.field_))
    throw std::invalid_argument("field mismatch: " + field_->describe() + " vs " + o.field_->describe());
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->add(raw_, o.raw_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->sub(raw_, o.raw_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->mul(raw_, o.raw_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->div(raw_, o.raw_)};
}

}  // namespace fbh
