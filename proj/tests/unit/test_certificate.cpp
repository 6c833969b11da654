#include "doctest.h"

#include "fbh/certificate.hpp"
#include "fbh/parse.hpp"

using namespace fbh;

namespace {

HeightCertificate run(const char* f, std::uint32_t p, unsigned d, unsigned i_max) {
  CechComplex C(Hypersurface::make(parse_poly(f, Field::make(p, d))));
  TowerOptions o;
  o.i_max = i_max;
  return phi_tower(C, o);
}

}  // namespace

TEST_SUITE("certificate") {
  TEST_CASE("JSON round trip and replay") {
    for (auto c : {run("x0^4+x1^4+x2^4+x3^4", 5, 1, 0), run("x0^4+x1^4+x2^4+x3^4", 3, 1, 2),
                   run("x0^3+x1^3+x2^3+t*x0*x1*x2", 2, 2, 0)}) {
      auto j = certificate_to_json(c);
      auto back = certificate_from_json(nlohmann::ordered_json::parse(j.dump()));
      CHECK(certificate_to_json(back) == j);
      auto rep = verify_certificate(back);
      CHECK(rep.ok);
      CHECK(rep.mismatches.empty());
    }
  }

  TEST_CASE("tampering is detected") {
    auto c = run("x0^4+x1^4+x2^4+x3^4", 3, 1, 2);
    auto j = certificate_to_json(c);
    j["levels"][1]["gamma-digest"] = "0000000000000000";
    CHECK_FALSE(verify_certificate(certificate_from_json(j)).ok);

    auto e = certificate_to_json(run("x0^4+x1^4+x2^4+x3^4", 5, 1, 0));
    e["levels"][0]["witness"] = "3";
    CHECK_FALSE(verify_certificate(certificate_from_json(e)).ok);
    e["levels"][0]["witness"] = "4";
    e["h"] = 2;
    CHECK_FALSE(verify_certificate(certificate_from_json(e)).ok);
  }

  TEST_CASE("required fields") {
    auto j = certificate_to_json(run("x0^4+x1^4+x2^4+x3^4", 5, 1, 0));
    CHECK(j.contains("p"));
    CHECK(j.contains("d"));
    CHECK(j.contains("f"));
    CHECK(j.contains("verdict"));
    CHECK(j["levels"][0].contains("window"));
    j["verdict"] = "maybe";
    CHECK_THROWS(certificate_from_json(j));
  }
}
