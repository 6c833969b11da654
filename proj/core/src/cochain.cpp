#include "fbh/cochain.hpp"

#include <bit>
#include <cstdio>
#include <stdexcept>

namespace fbh {

namespace {

void combinations(std::size_t N, std::size_t size, std::size_t start, ChartSet acc, std::vector<ChartSet>& out) {
  if (size == 0) {
    out.push_back(acc);
    return;
  }
  for (std::size_t j = start; j + size <= N; ++j) combinations(N, size - 1, j + 1, acc | (ChartSet(1) << j), out);
}

ChartSet negative_set(MonoKey k, std::size_t N) {
  ChartSet T = 0;
  for (std::size_t v = 0; v < N; ++v)
    if (mono::exponent(k, int(v)) < 0) T |= ChartSet(1) << v;
  return T;
}

}  // namespace

CechComplex::CechComplex(const Hypersurface& X) : X_(X), N_(X.charts()), n_(X.dim()) {
  for (std::size_t k = 0; k < N_; ++k) {
    std::vector<ChartSet> s;
    combinations(N_, k + 1, 0, 0, s);
    subsets_.push_back(std::move(s));
  }
  std::vector<int> e(N_, -1);
  harmonic_ = mono::pack(e);
}

std::vector<int> CechComplex::members(ChartSet J) {
  std::vector<int> m;
  for (int j = 0; J; ++j, J >>= 1)
    if (J & 1) m.push_back(j);
  return m;
}

Cochain CechComplex::zero(int k) const {
  Cochain c;
  c.degree = k;
  c.comp.assign(std::size_t(1) << N_, LaurentPoly(X_.field(), N_));
  return c;
}

WittCochain CechComplex::witt_zero(int k, std::size_t length) const {
  WittCochain c;
  c.degree = k;
  c.length = length;
  c.comp.assign(std::size_t(1) << N_, WittLaurent::zero(prime(), length, LaurentPoly(X_.field(), N_)));
  return c;
}

Cochain CechComplex::coboundary(const Cochain& c) const {
  if (c.degree + 1 >= int(N_)) throw std::invalid_argument("coboundary beyond top degree");
  Cochain out = zero(c.degree + 1);
  for (ChartSet J : subsets(c.degree + 1)) {
    auto m = members(J);
    LaurentPoly acc(X_.field(), N_);
    for (std::size_t s = 0; s < m.size(); ++s) {
      const LaurentPoly& face = c.comp[J & ~(ChartSet(1) << m[s])];
      if (face.is_zero()) continue;
      acc = (s % 2 == 0) ? acc + face : acc - face;
    }
    out.comp[J] = std::move(acc);
  }
  return out;
}

Cochain CechComplex::homotopy(const Cochain& c) const {
  if (c.degree < 1) throw std::invalid_argument("homotopy needs degree >= 1");
  const ChartSet all = (ChartSet(1) << N_) - 1;
  const Field& f = *X_.field();
  std::vector<std::vector<LaurentPoly::Term>> acc(std::size_t(1) << N_);
  for (ChartSet J : subsets(c.degree)) {
    for (const auto& term : c.comp[J].terms()) {
      const ChartSet rest = all & ~negative_set(term.key, N_);
      if (!rest) continue;
      const int t = std::countr_zero(rest);
      const ChartSet bit = ChartSet(1) << t;
      if (!(J & bit)) continue;
      const int pos = std::popcount(J & (bit - 1));
      acc[J ^ bit].push_back({term.key, pos % 2 == 0 ? term.coeff : f.neg(term.coeff)});
    }
  }
  Cochain out = zero(c.degree - 1);
  for (ChartSet J : subsets(c.degree - 1))
    if (!acc[J].empty()) out.comp[J] = LaurentPoly::from_terms(X_.field(), N_, std::move(acc[J]));
  return out;
}

FieldElement CechComplex::top_class(const Cochain& b) const {
  if (b.degree != n_) throw std::invalid_argument("top_class needs an n-cochain");
  Cochain d = coboundary(b);
  const ChartSet all = (ChartSet(1) << N_) - 1;
  auto r = d.comp[all].divide_exact(X_.f());
  if (!r) throw std::logic_error("cochain is not a cocycle modulo f");
  return {X_.field(), r->coefficient_raw(harmonic_)};
}

LinearSolve CechComplex::solve_linear(const Cochain& b) const {
  if (b.degree > n_ || b.degree < 1) throw std::invalid_argument("solve_linear needs 1 <= degree <= n");
  Cochain d = coboundary(b);
  Cochain r = zero(b.degree + 1);
  for (ChartSet J : subsets(b.degree + 1)) {
    auto q = d.comp[J].divide_exact(X_.f());
    if (!q) throw std::logic_error("cochain is not a cocycle modulo f");
    r.comp[J] = std::move(*q);
  }
  LinearSolve out;
  out.obstruction = FieldElement(X_.field(), 0);
  if (b.degree == n_) {
    const ChartSet all = (ChartSet(1) << N_) - 1;
    out.obstruction = FieldElement(X_.field(), r.comp[all].coefficient_raw(harmonic_));
    if (!out.obstruction.is_zero()) return out;
  }
  Cochain rho = homotopy(r);
  Cochain bp = b;
  for (ChartSet J : subsets(b.degree))
    if (!rho.comp[J].is_zero()) bp.comp[J] = bp.comp[J] - rho.comp[J] * X_.f();
  out.gamma = homotopy(bp);
  return out;
}

Cochain CechComplex::zeta() const {
  const ChartSet all = (ChartSet(1) << N_) - 1;
  Cochain top = zero(int(N_) - 1);
  top.comp[all] = X_.f().times_monomial(harmonic_);
  return homotopy(top);
}

WittCochain CechComplex::witt_coboundary(const WittCochain& c) const {
  if (c.degree + 1 >= int(N_)) throw std::invalid_argument("coboundary beyond top degree");
  WittCochain out = witt_zero(c.degree + 1, c.length);
  for (ChartSet J : subsets(c.degree + 1)) {
    auto m = members(J);
    std::optional<WittLaurent> acc;
    for (std::size_t s = 0; s < m.size(); ++s) {
      const WittLaurent& face = c.comp[J & ~(ChartSet(1) << m[s])];
      if (face.is_zero()) continue;
      if (!acc) {
        acc = (s % 2 == 0) ? face : witt_neg(face);
      } else {
        acc = (s % 2 == 0) ? witt_add(*acc, face) : witt_sub(*acc, face);
      }
    }
    if (acc) out.comp[J] = std::move(*acc);
  }
  return out;
}

WittSolve CechComplex::witt_solve(const WittCochain& beta) const {
  if (beta.degree != n_) throw std::invalid_argument("witt_solve needs an n-cochain");
  if (n_ < 1) throw std::invalid_argument("witt_solve needs n >= 1");
  std::vector<Cochain> parts;
  WittSolve out;
  out.obstruction = FieldElement(X_.field(), 0);
  for (std::size_t k = 0; k < beta.length; ++k) {
    WittCochain g = witt_zero(n_ - 1, k + 1);
    for (ChartSet J : subsets(n_ - 1)) {
      std::vector<LaurentPoly> comps;
      for (const auto& part : parts) comps.push_back(part.comp[J]);
      comps.emplace_back(X_.field(), N_);
      g.comp[J] = WittLaurent(prime(), std::move(comps));
    }
    WittCochain dg = witt_coboundary(g);
    Cochain rhs = zero(n_);
    for (ChartSet J : subsets(n_)) {
      WittLaurent D = witt_sub(dg.comp[J], fbh::witt_truncate(beta.comp[J], k + 1));
      rhs.comp[J] = -D[k];
    }
    LinearSolve ls = solve_linear(rhs);
    if (!ls.gamma) {
      out.obstructed_at = k;
      out.obstruction = ls.obstruction;
      return out;
    }
    parts.push_back(std::move(*ls.gamma));
  }
  WittCochain gamma = witt_zero(n_ - 1, beta.length);
  for (ChartSet J : subsets(n_ - 1)) {
    std::vector<LaurentPoly> comps;
    for (const auto& part : parts) comps.push_back(part.comp[J]);
    gamma.comp[J] = WittLaurent(prime(), std::move(comps));
  }
  out.gamma = std::move(gamma);
  return out;
}

int CechComplex::pole_order(const Cochain& c) {
  int m = 0;
  for (const auto& x : c.comp) m = std::max(m, x.pole_order());
  return m;
}

int CechComplex::pole_order(const WittCochain& c) {
  int m = 0;
  for (const auto& w : c.comp)
    for (const auto& x : w.components()) m = std::max(m, x.pole_order());
  return m;
}

WittCochain witt_frobenius(const WittCochain& c) {
  WittCochain out = c;
  for (auto& w : out.comp) w = witt_F(w);
  return out;
}

WittCochain witt_truncate(const WittCochain& c, std::size_t length) {
  WittCochain out = c;
  out.length = length;
  for (auto& w : out.comp) w = fbh::witt_truncate(w, length);
  return out;
}

WittCochain witt_extend(const WittCochain& c, std::size_t length) {
  WittCochain out = c;
  out.length = length;
  for (auto& w : out.comp) w = fbh::witt_extend(w, length);
  return out;
}

Cochain witt_component(const WittCochain& c, std::size_t k) {
  Cochain out;
  out.degree = c.degree;
  for (const auto& w : c.comp) out.comp.push_back(w[k]);
  return out;
}

WittCochain witt_from_cochain(const Cochain& c, std::uint32_t p) {
  WittCochain out;
  out.degree = c.degree;
  out.length = 1;
  for (const auto& x : c.comp) out.comp.emplace_back(p, std::vector<LaurentPoly>{x});
  return out;
}

std::string serialize(const WittCochain& c) {
  std::string s = "deg=" + std::to_string(c.degree) + ";len=" + std::to_string(c.length) + "\n";
  for (std::size_t J = 0; J < c.comp.size(); ++J) {
    const auto& w = c.comp[J];
    if (w.is_zero()) continue;
    for (std::size_t k = 0; k < w.length(); ++k) {
      const LaurentPoly& x = w[k];
      if (x.is_zero()) continue;
      s += std::to_string(J) + ":" + std::to_string(k) + ":";
      for (std::size_t t = 0; t < x.size(); ++t) {
        for (int e : x.exponents(t)) s += std::to_string(e) + ",";
        s += std::to_string(x.terms()[t].coeff) + "|";
      }
      s += "\n";
    }
  }
  return s;
}

std::string digest(const WittCochain& c) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : serialize(c)) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace fbh
