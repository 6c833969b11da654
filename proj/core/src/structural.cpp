#include "fbh/structural.hpp"

#include <cstdlib>
#include <deque>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

namespace fbh {

namespace {

struct Cache {
  std::mutex mu;
  std::map<std::pair<std::uint32_t, WittOp>, std::deque<IntPoly>> polys;
  std::map<std::tuple<std::uint32_t, WittOp, std::size_t, std::uint64_t>,
           std::shared_ptr<const std::vector<ReducedPoly>>>
      reduced;
};

Cache& cache() {
  static Cache c;
  return c;
}

mpz_class ppow(std::uint32_t p, std::size_t e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, e);
  return r;
}

std::filesystem::path disk_path(std::uint32_t p, WittOp op, std::size_t k) {
  const char* dir = std::getenv("FBH_STRUCT_CACHE");
  if (!dir || !*dir) return {};
  return std::filesystem::path(dir) / (std::string(witt_op_name(op)) + "_" + std::to_string(p) + "_" +
                                       std::to_string(k) + ".txt");
}

IntPoly compute(std::uint32_t p, WittOp op, std::size_t k, const std::deque<IntPoly>& lower) {
  const std::size_t nv = 2 * (k + 1);
  IntPoly wx = ghost_component(p, k, false), wy = ghost_component(p, k, true);
  IntPoly target = op == WittOp::Sum ? wx + wy : op == WittOp::Difference ? wx - wy : wx * wy;
  for (std::size_t i = 0; i < k; ++i) {
    mpz_class e;
    mpz_ui_pow_ui(e.get_mpz_t(), p, k - i);
    target = target - lower[i].extended(nv).pow(e.get_ui()).scaled(ppow(p, i));
  }
  return target.divexact(ppow(p, k));
}

}  // namespace

const char* witt_op_name(WittOp op) {
  switch (op) {
    case WittOp::Sum: return "S";
    case WittOp::Difference: return "D";
    case WittOp::Product: return "P";
  }
  return "?";
}

IntPoly ghost_component(std::uint32_t p, std::size_t k, bool y_side) {
  const std::size_t nv = 2 * (k + 1);
  IntPoly w(nv);
  for (std::size_t i = 0; i <= k; ++i) {
    IntPoly::Exps e(nv, 0);
    e[2 * i + (y_side ? 1 : 0)] = std::uint32_t(ppow(p, k - i).get_ui());
    w = w + IntPoly::monomial(e, ppow(p, i));
  }
  return w;
}

const IntPoly& structural_poly(std::uint32_t p, WittOp op, std::size_t k) {
  Cache& c = cache();
  std::lock_guard lock(c.mu);
  auto& list = c.polys[{p, op}];
  while (list.size() <= k) {
    const std::size_t j = list.size();
    auto path = disk_path(p, op, j);
    if (!path.empty() && std::filesystem::exists(path)) {
      std::ifstream in(path);
      std::stringstream ss;
      ss << in.rdbuf();
      list.push_back(IntPoly::deserialize(ss.str()));
      continue;
    }
    list.push_back(compute(p, op, j, list));
    if (!path.empty()) {
      std::error_code ec;
      std::filesystem::create_directories(path.parent_path(), ec);
      std::ofstream out(path);
      if (out) out << list.back().serialize();
    }
  }
  return list[k];
}

StructuralPolys structural_polys(std::uint32_t p, std::size_t n) {
  if (n == 0) throw std::invalid_argument("Witt length must be >= 1");
  StructuralPolys sp{p, n, {}, {}, {}};
  for (std::size_t k = 0; k < n; ++k) {
    sp.S.push_back(structural_poly(p, WittOp::Sum, k));
    sp.D.push_back(structural_poly(p, WittOp::Difference, k));
    sp.P.push_back(structural_poly(p, WittOp::Product, k));
  }
  return sp;
}

std::shared_ptr<const std::vector<ReducedPoly>> reduced_structural(std::uint32_t p, WittOp op, std::size_t n,
                                                                   std::uint64_t modulus) {
  auto key = std::make_tuple(p, op, n, modulus);
  {
    Cache& c = cache();
    std::lock_guard lock(c.mu);
    auto it = c.reduced.find(key);
    if (it != c.reduced.end()) return it->second;
  }
  auto out = std::make_shared<std::vector<ReducedPoly>>();
  const mpz_class m(std::to_string(modulus));
  for (std::size_t k = 0; k < n; ++k) {
    const IntPoly& poly = structural_poly(p, op, k);
    ReducedPoly rp;
    for (const auto& [e, coeff] : poly.terms()) {
      mpz_class r = coeff % m;
      if (r < 0) r += m;
      if (r == 0) continue;
      ReducedTerm t;
      t.coeff = std::stoull(r.get_str());
      for (std::size_t v = 0; v < e.size(); ++v)
        if (e[v]) t.factors.emplace_back(std::uint16_t(v), e[v]);
      rp.push_back(std::move(t));
    }
    out->push_back(std::move(rp));
  }
  Cache& c = cache();
  std::lock_guard lock(c.mu);
  return c.reduced.emplace(key, std::move(out)).first->second;
}

}  // namespace fbh
