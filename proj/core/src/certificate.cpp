#include "fbh/certificate.hpp"

#include "fbh/parse.hpp"

namespace fbh {

using json = nlohmann::ordered_json;

json certificate_to_json(const HeightCertificate& c) {
  json j;
  j["p"] = c.p;
  j["d"] = c.d;
  if (!c.modulus.empty()) j["modulus"] = c.modulus;
  j["f"] = c.f;
  j["n"] = c.n;
  j["i_max"] = c.i_max;
  j["verdict"] = verdict_name(c.verdict);
  if (c.verdict != Verdict::Infinite) j["h"] = c.h;
  if (c.window_base) j["window_base"] = c.window_base;
  if (c.basis_scale) j["basis_scale"] = c.basis_scale->to_string();
  json levels = json::array();
  for (const auto& r : c.levels) {
    json l;
    l["i"] = r.level;
    l["window"] = r.window;
    l["pole_order"] = r.pole_order;
    if (r.witness)
      l["witness"] = r.witness->to_string();
    else
      l["gamma-digest"] = r.gamma_digest;
    levels.push_back(l);
  }
  j["levels"] = levels;
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

HeightCertificate certificate_from_json(const json& j) {
  HeightCertificate c;
  c.p = j.at("p").get<std::uint32_t>();
  c.d = j.at("d").get<unsigned>();
  if (j.contains("modulus")) c.modulus = j.at("modulus").get<std::vector<std::uint32_t>>();
  c.f = j.at("f").get<std::string>();
  c.n = j.value("n", 0);
  c.i_max = j.at("i_max").get<unsigned>();
  const std::string v = j.at("verdict").get<std::string>();
  if (v == "exact")
    c.verdict = Verdict::Exact;
  else if (v == "infinite")
    c.verdict = Verdict::Infinite;
  else if (v == "at-least")
    c.verdict = Verdict::AtLeast;
  else
    throw std::invalid_argument("unknown verdict '" + v + "'");
  c.h = j.value("h", 0u);
  c.window_base = j.value("window_base", 0);
  FieldPtr F = Field::make(c.p, c.d, c.modulus.empty() ? std::nullopt : std::optional(c.modulus));
  if (j.contains("basis_scale")) c.basis_scale = parse_field_element(j.at("basis_scale").get<std::string>(), F);
  for (const auto& l : j.at("levels")) {
    LevelRecord r;
    r.level = l.at("i").get<unsigned>();
    r.window = l.at("window").get<int>();
    r.pole_order = l.value("pole_order", 0);
    if (l.contains("witness"))
      r.witness = parse_field_element(l.at("witness").get<std::string>(), F);
    else
      r.gamma_digest = l.at("gamma-digest").get<std::string>();
    c.levels.push_back(r);
  }
  c.note = j.value("note", "");
  return c;
}

ReplayReport verify_certificate(const HeightCertificate& c) {
  ReplayReport rep;
  FieldPtr F = Field::make(c.p, c.d, c.modulus.empty() ? std::nullopt : std::optional(c.modulus));
  Hypersurface X = Hypersurface::make(parse_poly(c.f, F));
  CechComplex C(X);
  TowerOptions o;
  o.window = c.window_base;
  o.basis_scale = c.basis_scale;
  // Budget-limited runs recorded fewer levels than i_max; replay just those.
  o.i_max = c.verdict == Verdict::AtLeast && c.note.rfind("time budget", 0) == 0 ? unsigned(c.levels.size()) : c.i_max;
  if (o.i_max == 0) o.i_max = c.i_max;
  rep.replayed = phi_tower(C, o);
  const HeightCertificate& r = rep.replayed;
  auto bad = [&](const std::string& s) { rep.mismatches.push_back(s); };
  if (r.f != c.f) bad("polynomial normal form differs: " + r.f);
  const bool budget = c.note.rfind("time budget", 0) == 0;
  if (budget) {
    if (r.verdict == Verdict::Exact) bad("replay found an exact height below the recorded bound");
  } else {
    if (r.verdict != c.verdict) bad(std::string("verdict ") + verdict_name(r.verdict) + " vs " + verdict_name(c.verdict));
    if (r.h != c.h) bad("height " + std::to_string(r.h) + " vs " + std::to_string(c.h));
  }
  if (r.levels.size() != c.levels.size())
    bad("level count " + std::to_string(r.levels.size()) + " vs " + std::to_string(c.levels.size()));
  for (std::size_t k = 0; k < std::min(r.levels.size(), c.levels.size()); ++k) {
    const auto &a = r.levels[k], &b = c.levels[k];
    const std::string at = "level " + std::to_string(b.level) + ": ";
    if (a.level != b.level) bad(at + "index differs");
    if (a.window != b.window) bad(at + "window " + std::to_string(a.window) + " vs " + std::to_string(b.window));
    if (a.witness.has_value() != b.witness.has_value())
      bad(at + "witness presence differs");
    else if (a.witness && !(*a.witness == *b.witness))
      bad(at + "witness " + a.witness->to_string() + " vs " + b.witness->to_string());
    if (a.gamma_digest != b.gamma_digest) bad(at + "gamma digest " + a.gamma_digest + " vs " + b.gamma_digest);
  }
  rep.ok = rep.mismatches.empty();
  return rep;
}

}  // namespace fbh
