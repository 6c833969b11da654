#include "fbh/intpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace fbh {

IntPoly IntPoly::constant(std::size_t nvars, const mpz_class& c) {
  IntPoly r(nvars);
  if (c != 0) r.terms_.emplace(Exps(nvars, 0), c);
  return r;
}

IntPoly IntPoly::variable(std::size_t nvars, std::size_t var) {
  if (var >= nvars) throw std::invalid_argument("variable index out of range");
  Exps e(nvars, 0);
  e[var] = 1;
  return monomial(e, 1);
}

IntPoly IntPoly::monomial(const Exps& e, const mpz_class& c) {
  IntPoly r(e.size());
  if (c != 0) r.terms_.emplace(e, c);
  return r;
}

mpz_class IntPoly::coefficient(const Exps& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

std::size_t IntPoly::degree() const {
  std::size_t d = 0;
  for (const auto& [e, c] : terms_) {
    std::size_t s = 0;
    for (auto x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

void IntPoly::add_term(const Exps& e, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("IntPoly variable count mismatch");
  IntPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("IntPoly variable count mismatch");
  IntPoly r(nvars_);
  Exps e(nvars_);
  mpz_class prod;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t v = 0; v < nvars_; ++v) e[v] = ea[v] + eb[v];
      prod = ca * cb;
      r.add_term(e, prod);
    }
  }
  return r;
}

IntPoly IntPoly::scaled(const mpz_class& c) const {
  IntPoly r(nvars_);
  if (c == 0) return r;
  for (const auto& [e, x] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, x * c);
  return r;
}

IntPoly IntPoly::pow(std::uint64_t e) const {
  IntPoly result = constant(nvars_, 1);
  IntPoly base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

IntPoly IntPoly::divexact(const mpz_class& m) const {
  if (m == 0) throw std::domain_error("IntPoly divexact by zero");
  IntPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (!mpz_divisible_p(c.get_mpz_t(), m.get_mpz_t()))
      throw std::domain_error("IntPoly divexact: coefficient " + c.get_str() + " not divisible by " + m.get_str());
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    r.terms_.emplace_hint(r.terms_.end(), e, q);
  }
  return r;
}

IntPoly IntPoly::extended(std::size_t nvars) const {
  if (nvars < nvars_) throw std::invalid_argument("cannot shrink IntPoly variables");
  IntPoly r(nvars);
  for (const auto& [e, c] : terms_) {
    Exps ne = e;
    ne.resize(nvars, 0);
    r.terms_.emplace(std::move(ne), c);
  }
  return r;
}

std::string IntPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mon;
    for (std::size_t v = 0; v < nvars_; ++v) {
      if (e[v] == 0) continue;
      if (!mon.empty()) mon += "*";
      mon += v < names.size() ? names[v] : "z" + std::to_string(v);
      if (e[v] != 1) mon += "^" + std::to_string(e[v]);
    }
    mpz_class a = abs(c);
    std::string sign = c < 0 ? "-" : (out.empty() ? "" : "+");
    out += sign;
    if (mon.empty()) {
      out += a.get_str();
    } else {
      if (a != 1) out += a.get_str() + "*";
      out += mon;
    }
  }
  return out;
}

std::string IntPoly::serialize() const {
  std::ostringstream os;
  os << nvars_ << "\n";
  for (const auto& [e, c] : terms_) {
    os << c.get_str();
    for (auto x : e) os << ' ' << x;
    os << '\n';
  }
  return os.str();
}

IntPoly IntPoly::deserialize(const std::string& text) {
  std::istringstream is(text);
  std::size_t nvars = 0;
  if (!(is >> nvars)) throw std::runtime_error("IntPoly: missing variable count");
  IntPoly r(nvars);
  std::string coeff;
  while (is >> coeff) {
    Exps e(nvars);
    for (auto& x : e)
      if (!(is >> x)) throw std::runtime_error("IntPoly: truncated term");
    r.add_term(e, mpz_class(coeff));
  }
  return r;
}

}  // namespace fbh
