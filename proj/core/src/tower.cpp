#include "fbh/tower.hpp"

#include <chrono>
#include <sstream>

namespace fbh {

namespace {

WittCochain scaled(const WittCochain& c, const FieldElement& lambda) {
  WittCochain out = c;
  for (auto& w : out.comp) w = teichmuller_times(lambda, w);
  return out;
}

WittCochain verschiebung(const WittCochain& c, std::size_t times) {
  WittCochain out = c;
  out.length = c.length + times;
  for (auto& w : out.comp)
    for (std::size_t k = 0; k < times; ++k) w = witt_V(w);
  return out;
}

WittCochain add(const WittCochain& a, const WittCochain& b) {
  WittCochain out = a;
  for (std::size_t J = 0; J < a.comp.size(); ++J) {
    if (b.comp[J].is_zero()) continue;
    out.comp[J] = a.comp[J].is_zero() ? b.comp[J] : witt_add(a.comp[J], b.comp[J]);
  }
  return out;
}

// The next lift: append the component that makes the top coboundary vanish.
WittCochain lift(const CechComplex& C, const WittCochain& alpha) {
  const std::size_t m = alpha.length;
  WittCochain ext = witt_extend(alpha, m + 1);
  WittCochain d = C.witt_coboundary(ext);
  const ChartSet all = (ChartSet(1) << C.charts()) - 1;
  Cochain top = C.zero(int(C.charts()) - 1);
  top.comp[all] = -d.comp[all][m];
  Cochain c = C.homotopy(top);
  for (ChartSet J : C.subsets(C.dim())) {
    std::vector<LaurentPoly> comps = ext.comp[J].components();
    comps[m] = c.comp[J];
    ext.comp[J] = WittLaurent(C.prime(), std::move(comps));
  }
  if (!C.witt_coboundary(ext).comp[all][m].is_zero()) throw std::logic_error("lift failed to close the cocycle");
  return ext;
}

int window_for(const CechComplex& C, unsigned level, const TowerOptions& opts, int pole) {
  std::int64_t base = opts.window;
  if (base <= 0) {
    base = C.dim() + 2;
    for (unsigned k = 0; k < level; ++k) base *= C.prime();
  }
  std::int64_t w = base;
  while (w < pole) w *= 2;
  if (w > opts.window_cap) {
    if (pole > opts.window_cap)
      throw WindowExhausted("pole order " + std::to_string(pole) + " at level " + std::to_string(level) +
                            " exceeds the window cap " + std::to_string(opts.window_cap));
    w = opts.window_cap;
  }
  return int(w);
}

}  // namespace

BasisClass hn_O_basis(const CechComplex& C) {
  BasisClass b;
  b.zeta = C.zeta();
  b.scalar = C.top_class(b.zeta);
  LinearSolve s = C.solve_linear(b.zeta);
  b.certified_nonzero = !s.gamma && !s.obstruction.is_zero();
  return b;
}

FieldElement frobenius_scalar(const CechComplex& C) {
  Cochain z = C.zeta();
  for (auto& x : z.comp) x = x.frobenius();
  return C.top_class(z);
}

std::vector<WittCochain> zeta_lifts(const CechComplex& C, std::size_t m, std::optional<FieldElement> scale) {
  std::vector<WittCochain> out;
  Cochain z = C.zeta();
  if (scale)
    for (auto& x : z.comp) x = x.scaled(scale->raw());
  out.push_back(witt_from_cochain(z, C.prime()));
  while (out.size() < m) out.push_back(lift(C, out.back()));
  return out;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Exact: return "exact";
    case Verdict::Infinite: return "infinite";
    case Verdict::AtLeast: return "at-least";
  }
  return "?";
}

unsigned default_tower_depth(int n) { return n == 2 ? 10 : n == 1 ? 2 : 3; }

HeightCertificate phi_tower(const CechComplex& C, const TowerOptions& opts) {
  const Hypersurface& X = C.surface();
  HeightCertificate cert;
  cert.p = C.prime();
  cert.d = X.field()->degree();
  if (cert.d > 1) cert.modulus = X.field()->modulus();
  cert.f = X.f().to_string();
  cert.n = C.dim();
  cert.i_max = opts.i_max ? opts.i_max : default_tower_depth(C.dim());
  cert.window_base = opts.window;
  cert.basis_scale = opts.basis_scale;
  auto say = [&](const std::string& s) {
    if (opts.progress) opts.progress(s);
  };
  if (C.dim() >= 2) {
    auto dims = cohomology_dims(X);
    if (dims[std::size_t(C.dim()) - 1] != 0 || dims[std::size_t(C.dim())] != 1)
      throw std::logic_error("unexpected cohomology of O_X");
  }
  const FieldElement lambda = opts.basis_scale.value_or(FieldElement(X.field(), 1));
  if (lambda.is_zero()) throw std::invalid_argument("basis scale must be nonzero");

  const auto start = std::chrono::steady_clock::now();
  double prev_secs = 0, last_secs = 0;
  try {
    Cochain z = C.zeta();
    for (auto& x : z.comp) x = x.scaled(lambda.raw());
    WittCochain alpha = witt_from_cochain(z, C.prime());
    for (unsigned level = 1; level <= cert.i_max; ++level) {
      const auto t0 = std::chrono::steady_clock::now();
      if (opts.time_budget > 0 && level > 1) {
        const double growth = prev_secs > 0 ? std::max(1.0, last_secs / prev_secs) : 1.0;
        const double elapsed = std::chrono::duration<double>(t0 - start).count();
        if (elapsed + last_secs * growth > opts.time_budget) {
          cert.verdict = Verdict::AtLeast;
          cert.h = level;
          cert.note = "time budget: level " + std::to_string(level) + " projected at " +
                      std::to_string(int(last_secs * growth)) + " s";
          return cert;
        }
      }
      LevelRecord rec;
      rec.level = level;
      WittCochain Fa = witt_frobenius(alpha);
      Cochain g;
      int pole = CechComplex::pole_order(Fa);
      if (level == 1) {
        g = witt_component(Fa, 0);
      } else {
        WittSolve s = C.witt_solve(witt_truncate(Fa, level - 1));
        if (!s.gamma)
          throw std::logic_error("F does not vanish at level " + std::to_string(level - 1) +
                                 " although the tower passed it");
        pole = std::max(pole, CechComplex::pole_order(*s.gamma));
        rec.gamma_digest = digest(*s.gamma);
        WittCochain diff = Fa;
        WittCochain dg = C.witt_coboundary(witt_extend(*s.gamma, level));
        for (ChartSet J : C.subsets(C.dim())) diff.comp[J] = witt_sub(Fa.comp[J], dg.comp[J]);
        g = witt_component(diff, level - 1);
      }
      rec.pole_order = pole;
      rec.window = window_for(C, level, opts, pole);
      const FieldElement s = C.top_class(g) / lambda;
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      std::ostringstream msg;
      msg << "level " << level << ": phi scalar " << s.to_string() << ", pole order " << pole << ", window "
          << rec.window << ", " << secs << " s";
      say(msg.str());
      if (!s.is_zero()) {
        rec.witness = s;
        rec.gamma_digest.clear();
        cert.levels.push_back(rec);
        cert.verdict = Verdict::Exact;
        cert.h = level;
        return cert;
      }
      if (level == 1) rec.gamma_digest = digest(witt_from_cochain(C.zero(C.dim() - 1), C.prime()));
      cert.levels.push_back(rec);
      if (level < cert.i_max) alpha = lift(C, alpha);
      prev_secs = last_secs;
      last_secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
  } catch (const WindowExhausted& e) {
    cert.verdict = Verdict::AtLeast;
    cert.h = unsigned(cert.levels.size()) + 1;
    cert.note = std::string("window exhausted: ") + e.what();
    return cert;
  } catch (const std::overflow_error& e) {
    cert.verdict = Verdict::AtLeast;
    cert.h = unsigned(cert.levels.size()) + 1;
    cert.note = std::string("window exhausted: ") + e.what();
    return cert;
  }
  const bool bound_reached = (C.dim() == 2 && cert.i_max >= 10) || (C.dim() == 1 && cert.i_max >= 2);
  cert.verdict = bound_reached ? Verdict::Infinite : Verdict::AtLeast;
  cert.h = bound_reached ? 0 : cert.i_max + 1;
  if (C.dim() == 1 && bound_reached) cert.note = "elliptic heights are at most 2; the cubic is singular";
  return cert;
}

unsigned ker_f_dim_cech(const CechComplex& C, unsigned i, std::uint64_t budget) {
  if (i == 0) throw std::invalid_argument("level must be >= 1");
  const FieldPtr& fld = C.surface().field();
  const std::uint64_t q = fld->order();
  std::uint64_t total = 1;
  for (unsigned k = 0; k < i; ++k) {
    total *= q;
    if (total > budget)
      throw std::runtime_error("kernel enumeration over " + fld->describe() + " at level " + std::to_string(i) +
                               " exceeds the budget of " + std::to_string(budget) + " classes");
  }
  auto alphas = zeta_lifts(C, i);
  std::vector<std::uint32_t> c(i, 0);
  std::uint64_t kernel = 0;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t r = idx;
    for (unsigned k = 0; k < i; ++k) {
      c[k] = std::uint32_t(r % q);
      r /= q;
    }
    if (idx == 0) {
      ++kernel;
      continue;
    }
    std::optional<WittCochain> x;
    for (unsigned j = 0; j < i; ++j) {
      if (c[j] == 0) continue;
      WittCochain term = verschiebung(scaled(alphas[i - j - 1], FieldElement(fld, c[j])), j);
      x = x ? add(*x, term) : term;
    }
    WittSolve s = C.witt_solve(witt_frobenius(*x));
    if (s.gamma) ++kernel;
  }
  unsigned dim = 0;
  std::uint64_t k = 1;
  while (k < kernel) {
    k *= q;
    ++dim;
  }
  if (k != kernel) throw std::logic_error("kernel of F has " + std::to_string(kernel) + " elements, not a power of q");
  return dim;
}

}  // namespace fbh
