#include "doctest.h"

#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = fbh::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("deuring json") {
    auto r = run({"deuring", "--p", "11", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"p\":11,\"mass\":\"5/12\",\"j\":[\"0\",\"1\"]}\n");
  }

  TEST_CASE("strata csv") {
    auto r = run({"strata", "--p", "2", "--hmax", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\n4,3,16,21,") != std::string::npos);
  }

  TEST_CASE("cy height") {
    auto r = run({"cy", "height", "--p", "5", "--f", "x0^4+x1^4+x2^4+x3^4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("verdict h=1, witness 4") != std::string::npos);
    CHECK(r.err.find("level 1") != std::string::npos);
  }

  TEST_CASE("deterministic output") {
    auto a = run({"cy", "height", "--p", "3", "--f", "x0^4+x1^4+x2^4+x3^4", "--imax", "2", "--format", "json"});
    auto b = run({"cy", "height", "--p", "3", "--f", "x0^4+x1^4+x2^4+x3^4", "--imax", "2", "--format", "json"});
    CHECK(a.out == b.out);
  }

  TEST_CASE("exit codes") {
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"deuring"}).code == 2);
    CHECK(run({"deuring", "--p", "3"}).code == 1);
    CHECK(run({"cy", "height", "--p", "5", "--f", "x0^^2"}).code == 1);
    CHECK(run({"cy", "height", "--p", "5", "--f", "x0^4+x1^4"}).code == 1);
    CHECK(run({"deuring", "--p", "4"}).code == 1);
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("syntax error message") {
    auto r = run({"cy", "height", "--p", "5", "--f", "x0^^2"});
    CHECK(r.err.find("column 4") != std::string::npos);
  }

  TEST_CASE("other subcommands") {
    auto w = run({"witt", "eval", "--p", "3", "--a", "1,0", "--b", "1,0"});
    CHECK(w.out == "(2, 1)\n");
    auto f = run({"fgl", "height", "--p", "2", "--height", "3", "--format", "json"});
    CHECK(f.out.find("\"kind\":\"exact\",\"h\":3") != std::string::npos);
    auto e = run({"ec", "survey", "--p", "5", "--format", "text"});
    CHECK(e.code == 0);
    CHECK(e.out.find("disagreements 0") != std::string::npos);
    auto d = run({"dmodel", "verify", "--p", "2", "--hmax", "4", "--imax", "6", "--format", "text"});
    CHECK(d.out.find("0 failures") != std::string::npos);
    auto k = run({"cy", "kerdim", "--p", "3", "--f", "x0^4+x1^4+x2^4+x3^4", "--i", "2", "--format", "csv"});
    CHECK(k.out == "i,ker_f_dim\n1,1\n2,2\n");
  }
}
