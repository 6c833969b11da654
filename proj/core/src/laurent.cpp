#include "fbh/laurent.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace fbh {

namespace {

// Open-addressing accumulator for products with many colliding monomials.
class TermAccumulator {
 public:
  TermAccumulator(const Field& f, std::size_t hint) : field_(f) {
    std::size_t cap = 64;
    while (cap < 2 * hint) cap <<= 1;
    resize(cap);
  }

  void add(MonoKey k, std::uint32_t c) {
    if (2 * (count_ + 1) > keys_.size()) resize(keys_.size() * 2);
    std::size_t mask = keys_.size() - 1;
    std::size_t i = mono::KeyHash{}(k)&mask;
    while (used_[i]) {
      if (keys_[i] == k) {
        vals_[i] = field_.add(vals_[i], c);
        return;
      }
      i = (i + 1) & mask;
    }
    used_[i] = 1;
    keys_[i] = k;
    vals_[i] = c;
    ++count_;
  }

  std::vector<LaurentPoly::Term> take_sorted() {
    std::vector<LaurentPoly::Term> out;
    out.reserve(count_);
    for (std::size_t i = 0; i < keys_.size(); ++i)
      if (used_[i] && vals_[i] != 0) out.push_back({keys_[i], vals_[i]});
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.key < b.key; });
    return out;
  }

 private:
  void resize(std::size_t cap) {
    std::vector<MonoKey> ok = std::move(keys_);
    std::vector<std::uint32_t> ov = std::move(vals_);
    std::vector<std::uint8_t> ou = std::move(used_);
    keys_.assign(cap, 0);
    vals_.assign(cap, 0);
    used_.assign(cap, 0);
    count_ = 0;
    std::size_t mask = cap - 1;
    for (std::size_t j = 0; j < ok.size(); ++j) {
      if (!ou[j]) continue;
      std::size_t i = mono::KeyHash{}(ok[j]) & mask;
      while (used_[i]) i = (i + 1) & mask;
      used_[i] = 1;
      keys_[i] = ok[j];
      vals_[i] = ov[j];
      ++count_;
    }
  }

  const Field& field_;
  std::vector<MonoKey> keys_;
  std::vector<std::uint32_t> vals_;
  std::vector<std::uint8_t> used_;
  std::size_t count_ = 0;
};

std::vector<LaurentPoly::Term> normalise(const Field& f, std::vector<LaurentPoly::Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.key < b.key; });
  std::vector<LaurentPoly::Term> out;
  out.reserve(terms.size());
  for (const auto& t : terms) {
    if (!out.empty() && out.back().key == t.key) {
      out.back().coeff = f.add(out.back().coeff, t.coeff);
    } else {
      out.push_back(t);
    }
  }
  std::erase_if(out, [](const auto& t) { return t.coeff == 0; });
  return out;
}

}  // namespace

LaurentPoly::LaurentPoly(FieldPtr field, std::size_t nvars) : field_(std::move(field)), nvars_(nvars) {
  if (!field_) throw std::invalid_argument("LaurentPoly needs a field");
  if (nvars_ > std::size_t(kMaxVars)) throw std::invalid_argument("too many variables");
}

LaurentPoly LaurentPoly::constant(const FieldPtr& field, std::size_t nvars, std::uint32_t c) {
  LaurentPoly r(field, nvars);
  if (c != 0) r.terms_.push_back({mono::kZeroKey, c});
  return r;
}

LaurentPoly LaurentPoly::monomial(const FieldPtr& field, std::span<const int> exps, std::uint32_t c) {
  LaurentPoly r(field, exps.size());
  if (c != 0) r.terms_.push_back({mono::pack(exps), c});
  return r;
}

LaurentPoly LaurentPoly::variable(const FieldPtr& field, std::size_t nvars, std::size_t var) {
  if (var >= nvars) throw std::invalid_argument("variable index out of range");
  std::vector<int> e(nvars, 0);
  e[var] = 1;
  return monomial(field, e);
}

LaurentPoly LaurentPoly::from_terms(const FieldPtr& field, std::size_t nvars, std::vector<Term> terms) {
  LaurentPoly r(field, nvars);
  r.terms_ = normalise(*field, std::move(terms));
  return r;
}

void LaurentPoly::check_compatible(const LaurentPoly& o) const {
  if (!field_ || !o.field_) throw std::invalid_argument("uninitialised LaurentPoly");
  if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
  if (field_ != o.field_ && !field_->same_as(*o.field_)) throw std::invalid_argument("field mismatch");
}

FieldElement LaurentPoly::coefficient(std::span<const int> e) const {
  if (e.size() != nvars_) throw std::invalid_argument("exponent arity mismatch");
  for (int x : e)
    if (x < kMinExp || x > kMaxExp) return {field_, 0};
  return {field_, coefficient_raw(mono::pack(e))};
}

std::uint32_t LaurentPoly::coefficient_raw(MonoKey k) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), k, [](const Term& t, MonoKey key) { return t.key < key; });
  return (it != terms_.end() && it->key == k) ? it->coeff : 0;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  check_compatible(o);
  const Field& f = *field_;
  LaurentPoly r(field_, nvars_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].key < o.terms_[j].key)) {
      r.terms_.push_back(terms_[i++]);
    } else if (i == terms_.size() || o.terms_[j].key < terms_[i].key) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      std::uint32_t c = f.add(terms_[i].coeff, o.terms_[j].coeff);
      if (c != 0) r.terms_.push_back({terms_[i].key, c});
      ++i;
      ++j;
    }
  }
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coeff = field_->neg(t.coeff);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  check_compatible(o);
  if (is_zero() || o.is_zero()) return LaurentPoly(field_, nvars_);
  for (std::size_t v = 0; v < nvars_; ++v) {
    if (min_exponent(v) + o.min_exponent(v) < kMinExp || max_exponent(v) + o.max_exponent(v) > kMaxExp)
      throw std::overflow_error("exponent overflow in Laurent product");
  }
  const Field& f = *field_;
  const LaurentPoly& big = size() >= o.size() ? *this : o;
  const LaurentPoly& small = size() >= o.size() ? o : *this;
  LaurentPoly r(field_, nvars_);
  if (small.size() == 1) {
    const Term s = small.terms_[0];
    r.terms_.reserve(big.size());
    for (const auto& t : big.terms_) r.terms_.push_back({mono::add(t.key, s.key), f.mul(t.coeff, s.coeff)});
    return r;
  }
  const std::size_t est = big.size() * small.size();
  if (est <= 2048) {
    std::vector<Term> prod;
    prod.reserve(est);
    for (const auto& a : small.terms_)
      for (const auto& b : big.terms_) prod.push_back({mono::add(a.key, b.key), f.mul(a.coeff, b.coeff)});
    r.terms_ = normalise(f, std::move(prod));
    return r;
  }
  TermAccumulator acc(f, std::min<std::size_t>(est, big.size() * 8));
  for (const auto& a : small.terms_)
    for (const auto& b : big.terms_) acc.add(mono::add(a.key, b.key), f.mul(a.coeff, b.coeff));
  r.terms_ = acc.take_sorted();
  return r;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
  if (field_ && o.field_ && !field_->same_as(*o.field_)) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].key != o.terms_[i].key || terms_[i].coeff != o.terms_[i].coeff) return false;
  return true;
}

LaurentPoly LaurentPoly::scaled(std::uint32_t c) const {
  LaurentPoly r(field_, nvars_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.key, field_->mul(t.coeff, c)});
  return r;
}

LaurentPoly LaurentPoly::times_monomial(MonoKey k, std::uint32_t c) const {
  LaurentPoly m(field_, nvars_);
  if (c != 0) m.terms_.push_back({k, c});
  return *this * m;
}

LaurentPoly LaurentPoly::frobenius() const {
  const int p = int(field_->p());
  for (std::size_t v = 0; v < nvars_; ++v) {
    if (std::int64_t(min_exponent(v)) * p < kMinExp || std::int64_t(max_exponent(v)) * p > kMaxExp)
      throw std::overflow_error("exponent overflow in Frobenius");
  }
  LaurentPoly r(field_, nvars_);
  r.terms_.reserve(terms_.size());
  // Scaling by p > 0 preserves lexicographic order.
  for (const auto& t : terms_) r.terms_.push_back({mono::scale(t.key, p), field_->frobenius(t.coeff)});
  return r;
}

LaurentPoly LaurentPoly::pow(std::uint64_t e) const {
  if (e == 0) return constant(field_, nvars_, 1);
  const std::uint64_t p = field_->p();
  unsigned frob = 0;
  while (e % p == 0) {
    e /= p;
    ++frob;
  }
  LaurentPoly result = constant(field_, nvars_, 1);
  LaurentPoly base = *this;
  while (true) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (!e) break;
    base = base * base;
  }
  for (unsigned i = 0; i < frob; ++i) result = result.frobenius();
  return result;
}

LaurentPoly LaurentPoly::derivative(std::size_t var) const {
  if (var >= nvars_) throw std::invalid_argument("variable index out of range");
  std::vector<Term> out;
  out.reserve(terms_.size());
  std::vector<int> unit(nvars_, 0);
  unit[var] = 1;
  const MonoKey shift = mono::pack(unit);
  for (const auto& t : terms_) {
    int e = mono::exponent(t.key, int(var));
    std::uint32_t c = field_->mul(t.coeff, field_->from_int(e));
    if (c == 0) continue;
    out.push_back({mono::sub(t.key, shift), c});
  }
  return from_terms(field_, nvars_, std::move(out));
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& f) const {
  check_compatible(f);
  if (f.is_zero()) throw std::domain_error("division by zero polynomial");
  if (is_zero()) return LaurentPoly(field_, nvars_);
  std::vector<int> fmin(nvars_), gmin(nvars_);
  for (std::size_t v = 0; v < nvars_; ++v) {
    fmin[v] = f.min_exponent(v);
    gmin[v] = min_exponent(v);
  }
  const MonoKey fshift = mono::pack(fmin), gshift = mono::pack(gmin);
  std::vector<Term> f0;
  f0.reserve(f.size());
  for (const auto& t : f.terms_) f0.push_back({mono::sub(t.key, fshift), t.coeff});
  const Term lead = f0.back();
  const std::uint32_t lead_inv = field_->inv(lead.coeff);

  std::map<MonoKey, std::uint32_t> rem;
  for (const auto& t : terms_) rem.emplace_hint(rem.end(), mono::sub(t.key, gshift), t.coeff);
  std::vector<Term> quotient;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    const MonoKey diff = mono::sub(top->first, lead.key);
    for (std::size_t v = 0; v < nvars_; ++v)
      if (mono::exponent(diff, int(v)) < 0) return std::nullopt;
    const std::uint32_t c = field_->mul(top->second, lead_inv);
    quotient.push_back({diff, c});
    for (const auto& t : f0) {
      const MonoKey k = mono::add(diff, t.key);
      const std::uint32_t s = field_->mul(c, t.coeff);
      auto [it, inserted] = rem.try_emplace(k, field_->neg(s));
      if (!inserted) {
        it->second = field_->sub(it->second, s);
        if (it->second == 0) rem.erase(it);
      }
    }
  }
  // Quotient of the shifted polynomials, moved back by gmin - fmin.
  const MonoKey back = mono::sub(gshift, fshift);
  for (auto& t : quotient) t.key = mono::add(t.key, back);
  return from_terms(field_, nvars_, std::move(quotient));
}

int LaurentPoly::min_exponent(std::size_t var) const {
  int m = 0;
  bool first = true;
  for (const auto& t : terms_) {
    int e = mono::exponent(t.key, int(var));
    if (first || e < m) m = e;
    first = false;
  }
  return m;
}

int LaurentPoly::max_exponent(std::size_t var) const {
  int m = 0;
  bool first = true;
  for (const auto& t : terms_) {
    int e = mono::exponent(t.key, int(var));
    if (first || e > m) m = e;
    first = false;
  }
  return m;
}

int LaurentPoly::pole_order() const {
  int worst = 0;
  for (std::size_t v = 0; v < nvars_; ++v) worst = std::max(worst, -min_exponent(v));
  return worst;
}

bool LaurentPoly::is_homogeneous(int degree) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return mono::total_degree(t.key, nvars_) == degree; });
}

std::string LaurentPoly::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = terms_.size(); i-- > 0;) {
    const auto& t = terms_[i];
    std::string mon;
    for (std::size_t v = 0; v < nvars_; ++v) {
      int e = mono::exponent(t.key, int(v));
      if (e == 0) continue;
      if (!mon.empty()) mon += "*";
      mon += v < names.size() ? names[v] : "x" + std::to_string(v);
      if (e != 1) mon += "^" + std::to_string(e);
    }
    std::string c = field_->format(t.coeff);
    if (c.find('+') != std::string::npos) c = "(" + c + ")";
    if (!out.empty()) out += "+";
    if (mon.empty()) {
      out += c;
    } else {
      if (c != "1") out += c + "*";
      out += mon;
    }
  }
  return out;
}

LaurentPoly zero_like(const LaurentPoly& x) { return LaurentPoly(x.field(), x.nvars()); }
LaurentPoly scalar_like(const LaurentPoly& x, std::int64_t v) {
  return LaurentPoly::constant(x.field(), x.nvars(), x.field()->from_int(v));
}
FieldElement zero_like(const FieldElement& x) { return {x.field(), 0}; }
FieldElement scalar_like(const FieldElement& x, std::int64_t v) { return {x.field(), x.field()->from_int(v)}; }

}  // namespace fbh
