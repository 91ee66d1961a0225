#include <doctest.h>

#include <sstream>

#include "ksbound/cli.hpp"
#include "ksbound/report.hpp"

using namespace ksb;

namespace {

struct Outcome {
  int code;
  std::string out, err;
  json j() const { return json::parse(out); }
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("ks-exponent on the worked examples") {
  const Outcome a = call({"ks-exponent", "x^4 + 4 x^2 y^2 + 2 y^4"});
  REQUIRE(a.code == 0);
  const json ja = a.j();
  CHECK(ja["command"] == "ks-exponent");
  CHECK(ja["result"]["exponent"] == 3);
  CHECK(ja["result"]["rho_star"].is_null());
  CHECK(ja["result"]["exponent_basis"] == "no-common-zero-with-external-upper-bound");
  CHECK(ja["result"]["constants"]["c1"]["sphere"]["converged"] == true);

  const Outcome b = call({"ks-exponent", "x^4 + 2 x^2 y^2 + y^4", "--linear-scan"});
  REQUIRE(b.code == 0);
  const json jb = b.j();
  CHECK(jb["result"]["exponent"] == 2);
  CHECK(jb["result"]["rho_star"] == 1);
  CHECK(jb["result"]["constants"]["c2"]["squared"] == "224/1");
  CHECK(jb["result"]["levels"].size() == 3);
}

TEST_CASE("same invocation, same bytes") {
  const std::vector<std::string> args{"ks-exponent", "x^4 + 4 x^2 y^2 + 2 y^4", "--seed", "7"};
  CHECK(call(args).out == call(args).out);
}

TEST_CASE("report round trip") {
  const json j = call({"apolar-norm", "3 x^2 + i y"}).j();
  const Report r = Report::from_json(j);
  CHECK(r.to_json() == j);
  CHECK(Report::from_json(r.to_json()) == r);
  CHECK(compare_reports(j, r.to_json()).empty());
}

TEST_CASE("apolar-norm") {
  const json j = call({"apolar-norm", "x y"}).j();
  CHECK(j["result"]["norm_sq"] == "1/1");
  CHECK(j["result"]["bombieri_norm_sq"] == "1/2");
  CHECK(j["result"]["homogeneous"] == true);

  const json k = call({"apolar-norm", "1 + x"}).j();
  CHECK(k["result"]["norm_sq"] == "2/1");
  CHECK(k["result"]["bombieri_norm_sq"].is_null());
}

TEST_CASE("bombieri-check") {
  const Outcome o = call({"bombieri-check", "x^2", "y^3"});
  REQUIRE(o.code == 0);
  const json j = o.j();
  CHECK(j["result"]["holds"] == true);
  CHECK(j["result"]["equality"] == true);
}

TEST_CASE("groebner") {
  const json j = call({"groebner", "x^4 + 2 x^2 y^2 + y^4", "--rho", "2"}).j();
  CHECK(j["result"]["basis"] == json::array({"x^2", "x y", "y^2"}));
  CHECK(j["result"]["verdict"]["only_origin"] == true);

  const json k = call({"groebner", "x^2 - y^2", "x y - y^2"}).j();
  CHECK(k["result"]["verdict"]["common_nonzero_zero"] == true);

  const json n = call({"groebner", "x + 1", "y"}).j();
  CHECK(n["result"]["verdict"].is_null());

  CHECK(call({"groebner", "x^2", "y^2", "--rho", "1"}).code == 2);
}

TEST_CASE("constants with a witness") {
  const Outcome o =
      call({"constants", "x^4 + 2 x^2 y^2 + y^4", "--rho", "1", "--witness", "1,i", "--m-range", "4..8", "--starts", "8"});
  REQUIRE(o.code == 0);
  const json j = o.j();
  CHECK(j["result"]["c2"]["squared"] == "224/1");
  CHECK(j["result"]["necessity"]["rows"].size() == 5);
  CHECK(j["result"]["necessity"]["violations"] == 0);
  CHECK(j["result"]["real_witness"].size() == 5);

  CHECK(call({"constants", "x^4 + y^4", "--rho", "1", "--m-range", "4..8"}).code == 2);
  const Outcome bad = call({"constants", "x^4 + 2 x^2 y^2 + y^4", "--rho", "1", "--witness", "1,1"});
  CHECK(bad.code == 1);
  CHECK(bad.j().contains("error"));
}

TEST_CASE("extremal output formats") {
  const Outcome csv = call({"extremal", "x y", "--m-range", "0..3"});
  REQUIRE(csv.code == 0);
  std::istringstream lines(csv.out);
  std::string header, row;
  std::getline(lines, header);
  CHECK(header == "m,dim,I_m,S_m,pinasco_ratio");
  int rows = 0;
  while (std::getline(lines, row)) ++rows;
  CHECK(rows == 4);

  const json j = call({"extremal", "x y", "--m-range", "2", "--format", "json", "--starts", "8"}).j();
  REQUIRE(j["result"]["rows"].size() == 1);
  CHECK(j["result"]["rows"][0]["dim"] == 3);
}

TEST_CASE("verify-identities") {
  const Outcome o = call({"verify-identities", "--cases", "20"});
  CHECK(o.code == 0);
  CHECK(o.j()["result"]["all_passed"] == true);
}

TEST_CASE("reproduce against committed reports") {
  const Outcome o = call({"reproduce-paper"});
  CHECK(o.code == 0);
  const json j = o.j();
  CHECK(j["result"]["all_passed"] == true);
  for (const auto& e : j["result"]["examples"]) {
    CHECK(e["differences"].empty());
    for (const auto& b : e["printed_bases"]) CHECK(b["ideal_equal"] == true);
  }
}

TEST_CASE("usage errors exit 2") {
  CHECK(call({}).code == 2);
  CHECK(call({"no-such-command"}).code == 2);
  CHECK(call({"ks-exponent"}).code == 2);
  CHECK(call({"ks-exponent", "x^2", "--order", "revlex"}).code == 2);
  CHECK(call({"extremal", "x y", "--m-range", "5..2"}).code == 2);
  CHECK(call({"extremal", "x y", "--m-range", "0..2", "--format", "xml"}).code == 2);
  CHECK(call({"--help"}).code == 0);
  CHECK(call({"--version"}).out == std::string(kVersion) + "\n");
}

TEST_CASE("error records exit 1") {
  const Outcome parse = call({"apolar-norm", "x^ + 1"});
  CHECK(parse.code == 1);
  const json pe = parse.j();
  CHECK(pe["error"]["kind"] == "parse");
  CHECK(pe["error"].contains("position"));
  CHECK(!pe.contains("result"));

  const Outcome pre = call({"ks-exponent", "x^2 + y"});
  CHECK(pre.code == 1);
  CHECK(pre.j()["error"]["kind"] == "precondition");

  const Outcome dim = call({"ks-exponent", "x^2 + y^2 + z^2", "--vars", "x,y"});
  CHECK(dim.code == 1);
  CHECK(dim.j().contains("error"));
}
