#include "cli.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "fbh/certificate.hpp"
#include "fbh/dieudonne.hpp"
#include "fbh/elliptic.hpp"
#include "fbh/lubin_tate.hpp"
#include "fbh/parse.hpp"
#include "fbh/strata.hpp"
#include "fbh/tower.hpp"
#include "fbh/witt.hpp"

namespace fbh::cli {

namespace {

using ojson = nlohmann::ordered_json;

struct RunConfig {
  std::uint32_t p = 0;
  unsigned d = 1;
  std::string modulus;
  std::size_t N = 0;
  unsigned i_max = 0;
  int window = 0;
  std::string format = "text";
  unsigned threads = 1;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

FieldPtr make_field(const RunConfig& cfg) {
  if (!is_prime(cfg.p)) throw std::invalid_argument("p = " + std::to_string(cfg.p) + " is not prime");
  std::optional<std::vector<std::uint32_t>> modulus;
  if (!cfg.modulus.empty()) {
    std::vector<std::uint32_t> m;
    for (const auto& c : split(cfg.modulus, ',')) m.push_back(std::uint32_t(std::stoul(c)));
    modulus = m;
  }
  return Field::make(cfg.p, cfg.d, modulus);
}

void add_field_options(CLI::App* app, RunConfig& cfg, bool with_degree = true) {
  app->add_option("--p", cfg.p, "Characteristic")->required();
  if (with_degree) {
    app->add_option("--d", cfg.d, "Degree of F_q over F_p")->check(CLI::Range(1u, 8u));
    app->add_option("--modulus", cfg.modulus, "Monic modulus coefficients, low to high, comma separated");
  }
}

std::string& add_format_option(CLI::App* app, std::deque<std::string>& slots, const std::string& def) {
  std::string& slot = slots.emplace_back(def);
  app->add_option("--format", slot, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  return slot;
}

std::vector<FieldElement> parse_witt(const std::string& s, const FieldPtr& F) {
  std::vector<FieldElement> out;
  for (const auto& c : split(s, ',')) out.push_back(parse_field_element(c, F));
  return out;
}

std::vector<std::string> strings(const std::vector<FieldElement>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

// Witt eval

struct WittArgs {
  std::string op = "add";
  std::string a, b;
};

int witt_eval(const RunConfig& cfg, const WittArgs& w, std::ostream& out) {
  FieldPtr F = make_field(cfg);
  WittVector<FieldElement> a(cfg.p, parse_witt(w.a, F));
  auto other = [&] {
    if (w.b.empty()) throw UsageError("--b is required for " + w.op);
    return WittVector<FieldElement>(cfg.p, parse_witt(w.b, F));
  };
  WittVector<FieldElement> r;
  if (w.op == "add")
    r = witt_add(a, other());
  else if (w.op == "sub")
    r = witt_sub(a, other());
  else if (w.op == "mul")
    r = witt_mul(a, other());
  else if (w.op == "neg")
    r = witt_neg(a);
  else if (w.op == "F")
    r = witt_F(a);
  else if (w.op == "V")
    r = witt_V(a);
  else
    r = witt_R(a);
  if (cfg.format == "json") {
    ojson j;
    j["p"] = cfg.p;
    j["field"] = F->describe();
    j["op"] = w.op;
    j["result"] = strings(r.components());
    out << j.dump() << "\n";
  } else if (cfg.format == "csv") {
    out << join(strings(r.components()), ",") << "\n";
  } else {
    out << to_string(r) << "\n";
  }
  return kOk;
}

// fgl height

struct FglArgs {
  std::string law = "lubin-tate";
  unsigned h = 1;
  unsigned hmax = 0;
  std::string a4 = "0", a6 = "1";
};

unsigned default_hmax(std::uint32_t p) {
  unsigned h = 1;
  std::uint64_t q = p;
  while (q * p + 1 <= 1025) {
    q *= p;
    ++h;
  }
  return h;
}

int fgl_height(const RunConfig& cfg, const FglArgs& g, std::ostream& out) {
  FieldPtr F = make_field(cfg);
  const unsigned hmax = g.hmax ? g.hmax : g.law == "lubin-tate" ? g.h : g.law == "elliptic" ? 2 : default_hmax(cfg.p);
  std::size_t N = cfg.N;
  if (N == 0) {
    N = 1;
    for (unsigned k = 0; k < hmax; ++k) N *= cfg.p;
    N += 1;
  }
  FormalGroupLaw law;
  if (g.law == "additive") {
    law = FormalGroupLaw::additive(F, N);
  } else if (g.law == "multiplicative") {
    law = FormalGroupLaw::multiplicative(F, N);
  } else if (g.law == "lubin-tate") {
    if (cfg.d != 1) throw std::invalid_argument("the Lubin-Tate law is defined over F_p");
    law = lubin_tate(cfg.p, g.h, N);
  } else {
    law = ec_fgl(parse_field_element(g.a4, F), parse_field_element(g.a6, F), N);
  }
  HeightReport r = height_of(law, hmax);
  if (cfg.format == "json") {
    ojson j;
    j["law"] = g.law;
    j["p"] = cfg.p;
    j["field"] = F->describe();
    j["N"] = N;
    j["kind"] = height_kind_name(r.kind);
    j["h"] = r.h;
    if (r.leading) j["leading"] = r.leading->to_string();
    out << j.dump() << "\n";
  } else {
    out << "law " << g.law << " over " << F->describe() << ", N = " << N << "\n";
    out << "[p](t) = " << r.p_series.to_string() << "\n";
    out << "height: " << height_kind_name(r.kind) << " " << r.h;
    if (r.leading) out << ", leading coefficient " << r.leading->to_string();
    out << "\n";
  }
  return kOk;
}

// ec survey

struct SurveyRow {
  std::uint32_t a4, a6;
  FieldElement j, hasse;
  HeightReport height;
};

int ec_survey(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  FieldPtr F = make_field(cfg);
  if (cfg.p < 5) throw std::invalid_argument("the survey needs p >= 5");
  const std::uint64_t q = F->order();
  const std::size_t N = cfg.N ? cfg.N : std::size_t(cfg.p) * cfg.p + 1;
  std::vector<std::vector<SurveyRow>> rows(q);
  auto work = [&](std::uint64_t start, std::uint64_t step) {
    for (std::uint64_t a4 = start; a4 < q; a4 += step)
      for (std::uint64_t a6 = 0; a6 < q; ++a6) {
        FieldElement x(F, std::uint32_t(a4)), y(F, std::uint32_t(a6));
        if (!is_nonsingular(x, y)) continue;
        rows[a4].push_back({std::uint32_t(a4), std::uint32_t(a6), j_invariant(x, y), hasse_invariant(x, y),
                            height_of(ec_fgl(x, y, N), 2)});
      }
  };
  const unsigned width = std::max(1u, std::min<unsigned>(cfg.threads, unsigned(q)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < width; ++t) pool.emplace_back(work, t, width);
  work(0, width);
  for (auto& t : pool) t.join();

  std::size_t total = 0, supersingular = 0, disagree = 0;
  ojson list = ojson::array();
  if (cfg.format == "csv") out << "a4,a6,j,hasse,height,agree\n";
  for (const auto& bucket : rows)
    for (const auto& r : bucket) {
      const bool ss = r.hasse.is_zero();
      const bool h2 = r.height.kind == HeightKind::Exact && r.height.h == 2;
      const bool agree = ss == h2;
      ++total;
      supersingular += ss;
      disagree += !agree;
      const std::string hs = r.height.kind == HeightKind::Exact ? std::to_string(r.height.h)
                                                                 : std::string(">=") + std::to_string(r.height.h);
      if (cfg.format == "csv") {
        out << F->format(r.a4) << "," << F->format(r.a6) << "," << r.j.to_string() << "," << r.hasse.to_string()
            << "," << hs << "," << (agree ? 1 : 0) << "\n";
      } else if (cfg.format == "json") {
        list.push_back({{"a4", F->format(r.a4)},
                        {"a6", F->format(r.a6)},
                        {"j", r.j.to_string()},
                        {"hasse", r.hasse.to_string()},
                        {"height", hs},
                        {"agree", agree}});
      }
    }
  if (cfg.format == "json") {
    ojson j;
    j["p"] = cfg.p;
    j["field"] = F->describe();
    j["curves"] = total;
    j["supersingular"] = supersingular;
    j["disagreements"] = disagree;
    j["rows"] = list;
    out << j.dump() << "\n";
  } else if (cfg.format == "text") {
    out << "curves " << total << ", supersingular " << supersingular << ", disagreements " << disagree << "\n";
  } else {
    err << "curves " << total << ", supersingular " << supersingular << ", disagreements " << disagree << "\n";
  }
  return disagree ? kDomainError : kOk;
}

// dmodel verify

struct DmodelArgs {
  unsigned hmax = 10;
  unsigned imax = 12;
};

int dmodel_verify(const RunConfig& cfg, const DmodelArgs& a, std::ostream& out) {
  FieldPtr F = make_field(cfg);
  std::size_t failures = 0;
  ojson rows = ojson::array();
  if (cfg.format == "csv") out << "h,i,dim,f_is_zero,ker_f_dim,expected,ok\n";
  for (unsigned h = 1; h <= a.hmax; ++h) {
    DieudonneModule M(h, (a.imax + h - 1) / h + 1, F);
    for (unsigned i = 1; i <= a.imax; ++i) {
      TruncatedDModule T = truncate(M, i);
      const bool fz = T.f_is_zero();
      const unsigned k = T.ker_f_dim();
      const unsigned expected = std::min(i, h - 1);
      const bool ok = (fz == (i <= h - 1)) && k == expected;
      failures += !ok;
      if (cfg.format == "csv")
        out << h << "," << i << "," << T.dimension() << "," << fz << "," << k << "," << expected << "," << ok
            << "\n";
      else if (cfg.format == "json")
        rows.push_back({{"h", h}, {"i", i}, {"dim", T.dimension()}, {"f_is_zero", fz}, {"ker_f_dim", k},
                        {"expected", expected}, {"ok", ok}});
    }
  }
  if (cfg.format == "json") {
    ojson j;
    j["p"] = cfg.p;
    j["field"] = F->describe();
    j["failures"] = failures;
    j["rows"] = rows;
    out << j.dump() << "\n";
  } else if (cfg.format == "text") {
    out << "checked h = 1.." << a.hmax << ", i = 1.." << a.imax << " over " << F->describe() << ": " << failures
        << " failures\n";
  }
  return failures ? kDomainError : kOk;
}

// cy height / cy kerdim

struct CyArgs {
  std::string f;
  bool normalize = false;
  std::string basis_scale;
  std::string certificate_out;
  std::string verify;
  double budget = 600;
  int window_cap = kMaxExp;
  unsigned level = 3;
  std::uint64_t enum_budget = 100000;
};

Hypersurface load_hypersurface(const RunConfig& cfg, const CyArgs& a) {
  if (a.f.empty()) throw UsageError("--f is required");
  FieldPtr F = make_field(cfg);
  return Hypersurface::make(parse_poly(a.f, F), a.normalize);
}

std::string describe_verdict(const HeightCertificate& c) {
  std::ostringstream s;
  switch (c.verdict) {
    case Verdict::Exact:
      s << "verdict h=" << c.h << ", witness " << c.levels.back().witness->to_string();
      break;
    case Verdict::Infinite:
      s << "verdict h=infinity (phi vanishes through level " << c.levels.size() << ")";
      break;
    case Verdict::AtLeast:
      s << "verdict h>=" << c.h;
      break;
  }
  return s.str();
}

int cy_height(const RunConfig& cfg, const CyArgs& a, std::ostream& out, std::ostream& err) {
  if (!a.verify.empty()) {
    std::ifstream in(a.verify);
    if (!in) throw std::invalid_argument("cannot read " + a.verify);
    HeightCertificate c = certificate_from_json(ojson::parse(in));
    ReplayReport rep = verify_certificate(c);
    if (cfg.format == "json") {
      ojson j;
      j["ok"] = rep.ok;
      j["verdict"] = verdict_name(rep.replayed.verdict);
      j["mismatches"] = rep.mismatches;
      out << j.dump() << "\n";
    } else {
      out << (rep.ok ? "certificate ok: " : "certificate mismatch: ") << describe_verdict(rep.replayed) << "\n";
      for (const auto& m : rep.mismatches) out << "  " << m << "\n";
    }
    return rep.ok ? kOk : kDomainError;
  }
  Hypersurface X = load_hypersurface(cfg, a);
  CechComplex C(X);
  TowerOptions o;
  o.i_max = cfg.i_max;
  o.window = cfg.window;
  o.window_cap = a.window_cap;
  o.time_budget = a.budget;
  if (!a.basis_scale.empty()) o.basis_scale = parse_field_element(a.basis_scale, X.field());
  o.progress = [&](const std::string& s) { err << s << "\n"; };
  HeightCertificate c = phi_tower(C, o);
  const ojson j = certificate_to_json(c);
  if (!a.certificate_out.empty()) {
    std::ofstream f(a.certificate_out);
    if (!f) throw std::invalid_argument("cannot write " + a.certificate_out);
    f << j.dump(2) << "\n";
  }
  if (cfg.format == "json") {
    out << j.dump() << "\n";
  } else {
    out << "X: " << c.f << " = 0 over " << X.field()->describe() << "\n";
    if (!X.normalization().empty()) {
      std::vector<std::string> sh;
      for (auto v : X.normalization()) sh.push_back(X.field()->format(v));
      out << "normalized by x_j -> x_j + c_j x_last, c = (" << join(sh, ", ") << ")\n";
    }
    for (const auto& r : c.levels) {
      out << "level " << r.level << ": window " << r.window << ", ";
      if (r.witness)
        out << "witness " << r.witness->to_string() << "\n";
      else
        out << "phi vanishes, gamma " << r.gamma_digest << "\n";
    }
    out << describe_verdict(c) << "\n";
    if (!c.note.empty()) out << "note: " << c.note << "\n";
  }
  return kOk;
}

int cy_kerdim(const RunConfig& cfg, const CyArgs& a, std::ostream& out) {
  Hypersurface X = load_hypersurface(cfg, a);
  CechComplex C(X);
  ojson rows = ojson::array();
  if (cfg.format == "csv") out << "i,ker_f_dim\n";
  for (unsigned i = 1; i <= a.level; ++i) {
    const unsigned k = ker_f_dim_cech(C, i, a.enum_budget);
    if (cfg.format == "csv")
      out << i << "," << k << "\n";
    else if (cfg.format == "json")
      rows.push_back({{"i", i}, {"ker_f_dim", k}});
    else
      out << "i=" << i << ": dim ker F = " << k << "\n";
  }
  if (cfg.format == "json") {
    ojson j;
    j["p"] = cfg.p;
    j["f"] = X.f().to_string();
    j["rows"] = rows;
    out << j.dump() << "\n";
  }
  return kOk;
}

// deuring / strata

int deuring(const RunConfig& cfg, std::ostream& out) {
  if (!is_prime(cfg.p)) throw std::invalid_argument("p = " + std::to_string(cfg.p) + " is not prime");
  MassReport r = deuring_mass(cfg.p);
  if (cfg.format == "json") {
    ojson j;
    j["p"] = cfg.p;
    j["mass"] = r.mass.get_str();
    j["j"] = strings(r.j);
    out << j.dump() << "\n";
  } else if (cfg.format == "csv") {
    out << "j,aut\n";
    for (std::size_t k = 0; k < r.j.size(); ++k) out << r.j[k].to_string() << "," << r.aut[k] << "\n";
  } else {
    out << "p=" << cfg.p << " supersingular j: " << join(strings(r.j), ", ") << "\n";
    out << "mass " << r.mass.get_str() << " = (p-1)/24\n";
  }
  return kOk;
}

int strata(const RunConfig& cfg, unsigned hmax, std::ostream& out) {
  if (!is_prime(cfg.p)) throw std::invalid_argument("p = " + std::to_string(cfg.p) + " is not prime");
  if (hmax < 1 || hmax > 11) throw std::invalid_argument("--hmax must be in 1..11");
  auto rows = strata_table(cfg.p, hmax);
  if (cfg.format == "json") {
    ojson list = ojson::array();
    for (const auto& r : rows) {
      ojson x{{"h", r.h}, {"codim", r.codim}, {"dim", r.dim}, {"coefficient", r.coefficient.get_str()}};
      if (!r.note.empty()) x["note"] = r.note;
      list.push_back(x);
    }
    ojson j;
    j["p"] = cfg.p;
    j["rows"] = list;
    out << j.dump() << "\n";
  } else if (cfg.format == "csv") {
    out << "h,codim,dim,coefficient,note\n";
    for (const auto& r : rows)
      out << r.h << "," << r.codim << "," << r.dim << "," << r.coefficient.get_str() << "," << r.note << "\n";
  } else {
    for (const auto& r : rows) {
      out << "h=" << r.h << ": codim " << r.codim << ", dim " << r.dim << ", class " << r.coefficient.get_str()
          << " v^" << r.codim;
      if (!r.note.empty()) out << " (" << r.note << ")";
      out << "\n";
    }
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Heights of formal groups and formal Brauer groups in characteristic p", "fbh"};
  app.require_subcommand(1);
  app.footer(
      "CSV columns:\n"
      "  ec survey      a4,a6,j,hasse,height,agree\n"
      "  dmodel verify  h,i,dim,f_is_zero,ker_f_dim,expected,ok\n"
      "  cy kerdim      i,ker_f_dim\n"
      "  deuring        j,aut\n"
      "  strata         h,codim,dim,coefficient,note\n"
      "Polynomials use x0..x9, the generator t of F_q, integers, + - * ^ and parentheses.\n"
      "FBH_STRUCT_CACHE names a directory caching Witt structural polynomials.");

  RunConfig cfg;
  std::deque<std::string> formats;
  std::vector<std::pair<CLI::App*, std::string*>> format_of;

  auto* witt = app.add_subcommand("witt", "Witt vector arithmetic over F_q");
  witt->require_subcommand(1);
  auto* witt_ev = witt->add_subcommand("eval", "Evaluate an operation on Witt vectors");
  WittArgs wa;
  add_field_options(witt_ev, cfg);
  format_of.emplace_back(witt_ev, &add_format_option(witt_ev, formats, "text"));
  witt_ev->add_option("--op", wa.op, "add, sub, mul, neg, F, V or R")
      ->check(CLI::IsMember({"add", "sub", "mul", "neg", "F", "V", "R"}));
  witt_ev->add_option("--a", wa.a, "Components, comma separated")->required();
  witt_ev->add_option("--b", wa.b, "Second operand");

  auto* fgl = app.add_subcommand("fgl", "Formal group laws");
  fgl->require_subcommand(1);
  auto* fgl_h = fgl->add_subcommand("height", "Height from the [p]-series");
  FglArgs ga;
  add_field_options(fgl_h, cfg);
  format_of.emplace_back(fgl_h, &add_format_option(fgl_h, formats, "text"));
  fgl_h->add_option("--law", ga.law, "additive, multiplicative, lubin-tate or elliptic")
      ->check(CLI::IsMember({"additive", "multiplicative", "lubin-tate", "elliptic"}));
  fgl_h->add_option("--height", ga.h, "Height of the Lubin-Tate law")->check(CLI::Range(1u, 12u));
  fgl_h->add_option("--a4", ga.a4, "Elliptic coefficient a4");
  fgl_h->add_option("--a6", ga.a6, "Elliptic coefficient a6");
  fgl_h->add_option("--N", cfg.N, "Truncation order (default p^hmax + 1)");
  fgl_h->add_option("--hmax", ga.hmax, "Largest height to resolve");

  auto* ec = app.add_subcommand("ec", "Elliptic curves");
  ec->require_subcommand(1);
  auto* ec_s = ec->add_subcommand("survey", "Compare Hasse invariants with formal group heights");
  add_field_options(ec_s, cfg);
  format_of.emplace_back(ec_s, &add_format_option(ec_s, formats, "csv"));
  ec_s->add_option("--N", cfg.N, "Truncation order (default p^2 + 1)");
  ec_s->add_option("--threads", cfg.threads, "Parallel workers")->check(CLI::Range(1u, 64u));

  auto* dm = app.add_subcommand("dmodel", "Dieudonne module model");
  dm->require_subcommand(1);
  auto* dm_v = dm->add_subcommand("verify", "Check F on M/V^i M against min(i, h-1)");
  DmodelArgs da;
  add_field_options(dm_v, cfg);
  format_of.emplace_back(dm_v, &add_format_option(dm_v, formats, "csv"));
  dm_v->add_option("--hmax", da.hmax, "Largest height")->check(CLI::Range(1u, 10u));
  dm_v->add_option("--imax", da.imax, "Largest truncation level")->check(CLI::Range(1u, 64u));

  auto* cy = app.add_subcommand("cy", "Calabi-Yau hypersurfaces");
  cy->require_subcommand(1);
  CyArgs ca;
  auto* cy_h = cy->add_subcommand("height", "Height of the formal group of H^n(O_X)");
  format_of.emplace_back(cy_h, &add_format_option(cy_h, formats, "text"));
  cy_h->add_option("--p", cfg.p, "Characteristic");
  cy_h->add_option("--d", cfg.d, "Degree of F_q over F_p")->check(CLI::Range(1u, 8u));
  cy_h->add_option("--modulus", cfg.modulus, "Monic modulus coefficients, low to high, comma separated");
  cy_h->add_option("--f", ca.f, "Homogeneous polynomial of degree n + 2 in n + 2 variables");
  cy_h->add_option("--imax", cfg.i_max, "Tower depth (default 10 for surfaces, 2 for curves, 3 for threefolds)");
  cy_h->add_option("--window", cfg.window, "Base exponent window (default p^i (n + 2))");
  cy_h->add_option("--window-cap", ca.window_cap, "Hard cap on the exponent window")->check(CLI::Range(1, kMaxExp));
  cy_h->add_option("--budget", ca.budget, "Time budget in seconds, 0 for none");
  cy_h->add_flag("--normalize", ca.normalize, "Shear so that x_last^(n+2) has a nonzero coefficient");
  cy_h->add_option("--basis-scale", ca.basis_scale, "Report phi against scale * zeta");
  cy_h->add_option("--certificate", ca.certificate_out, "Write the JSON certificate to this file");
  cy_h->add_option("--verify-certificate", ca.verify, "Replay a JSON certificate");
  auto* cy_k = cy->add_subcommand("kerdim", "dim ker F on H^n(W_i(O_X)) for i = 1..level");
  add_field_options(cy_k, cfg);
  format_of.emplace_back(cy_k, &add_format_option(cy_k, formats, "text"));
  cy_k->add_option("--f", ca.f, "Homogeneous polynomial")->required();
  cy_k->add_option("--i", ca.level, "Largest level")->check(CLI::Range(1u, 8u));
  cy_k->add_flag("--normalize", ca.normalize, "Shear so that x_last^(n+2) has a nonzero coefficient");
  cy_k->add_option("--enum-budget", ca.enum_budget, "Largest number of classes to enumerate");

  auto* de = app.add_subcommand("deuring", "Supersingular j-invariants and the Deuring mass");
  add_field_options(de, cfg, false);
  format_of.emplace_back(de, &add_format_option(de, formats, "text"));

  auto* st = app.add_subcommand("strata", "Height strata classes");
  unsigned st_hmax = 11;
  add_field_options(st, cfg, false);
  format_of.emplace_back(st, &add_format_option(st, formats, "csv"));
  st->add_option("--hmax", st_hmax, "Largest height");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
    for (auto [sub, fmt] : format_of)
      if (sub->parsed()) cfg.format = *fmt;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (witt_ev->parsed()) return witt_eval(cfg, wa, out);
    if (fgl_h->parsed()) return fgl_height(cfg, ga, out);
    if (ec_s->parsed()) return ec_survey(cfg, out, err);
    if (dm_v->parsed()) return dmodel_verify(cfg, da, out);
    if (cy_h->parsed()) {
      if (ca.verify.empty() && cfg.p == 0) throw UsageError("--p is required");
      return cy_height(cfg, ca, out, err);
    }
    if (cy_k->parsed()) return cy_kerdim(cfg, ca, out);
    if (de->parsed()) return deuring(cfg, out);
    if (st->parsed()) return strata(cfg, st_hmax, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
  err << "usage error: no command\n";
  return kUsageError;
}

}  // namespace fbh::cli
