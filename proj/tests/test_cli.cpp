#include <doctest.h>

#include <sstream>

#include "branchinv/cli.hpp"
#include "branchinv/fixtures.hpp"

using namespace branchinv;
using cli::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  args.push_back("--json");
  const Run r = run(args);
  INFO(r.out, r.err);
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

std::string error_kind(std::vector<std::string> args) {
  args.push_back("--json");
  const Run r = run(args);
  const json doc = json::parse(r.out);
  CHECK(doc.at("exit_code") == r.code);
  return doc.at("error").at("kind").get<std::string>();
}

}  // namespace

TEST_CASE("branch files") {
  const auto b = cli::parse_branch(json::parse(R"({"kind":"parametrization","n":4,"terms":[[7,"1"],[13,"17/14"]]})"));
  const auto& phi = std::get<Parametrization>(b);
  CHECK(phi.is_polynomial());
  CHECK(phi.coeff(13) == make_rational(17, 14));
  CHECK(cli::branch_json(phi) == json::parse(R"({"kind":"parametrization","n":4,"terms":[[7,"1"],[13,"17/14"]]})"));

  const auto t = cli::parse_branch(json::parse(R"({"kind":"parametrization","n":2,"terms":[[3,"1"]],"trunc":9})"));
  CHECK_FALSE(std::get<Parametrization>(t).is_polynomial());
  CHECK(std::get<Parametrization>(t).trunc() == 9);

  const auto f = cli::parse_branch(json::parse(R"({"kind":"polynomial","terms":[[[0,2],"1"],[[3,0],"-1"]]})"));
  CHECK(std::get<BivarPoly>(f) == BivarPoly::y() * BivarPoly::y() - pow(BivarPoly::x(), 3));

  for (const char* bad : {R"({"kind":"parametrization","n":4,"terms":[[7,"1"],[7,"2"]]})",
                          R"({"kind":"parametrization","n":4,"terms":[[9,"1"],[7,"2"]]})",
                          R"({"kind":"parametrization","n":4,"terms":[[7,"1/0"]]})",
                          R"({"kind":"parametrization","n":4,"terms":[[7,0.5]]})",
                          R"({"kind":"parametrization","terms":[[7,"1"]]})",
                          R"({"kind":"parametrization","n":2,"terms":[[3,"1"]],"trunc":3})",
                          R"({"kind":"polynomial","terms":[[[0,2],"1"],[[0,2],"1"]]})",
                          R"({"kind":"polynomial","terms":[[0,"1"]]})",
                          R"({"kind":"curve","terms":[]})"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(cli::parse_branch(json::parse(bad)), BranchError);
  }
}

TEST_CASE("invariants command") {
  const json q = run_json({"invariants", "fixture:quartic"});
  CHECK(q["results"]["beta"] == json({4, 7}));
  CHECK(q["results"]["semigroup"] == json({4, 7}));
  CHECK(q["results"]["conductor"] == 18);

  const json f = run_json({"invariants", "--fixture", "f2"});
  CHECK(f["results"]["class"] == "K(6,14,17)");
  CHECK(f["results"]["semigroup"] == json({6, 14, 45}));
  CHECK(f["results"]["conductor"] == 68);
  CHECK(f["results"]["genus"] == 2);

  CHECK(run_json({"invariants", "fixture:cusp-param"})["results"]["conductor"] == 2);
  CHECK(run_json({"invariants", "fixture:cusp"})["results"]["conductor"] == 2);

  const Run text = run({"invariants", "fixture:quartic"});
  CHECK(text.code == 0);
  CHECK(text.out.find("conductor: 18") != std::string::npos);
}

TEST_CASE("zariski command") {
  const json b0 = run_json({"zariski", "fixture:quartic:b=0"});
  CHECK(b0["results"]["lambda"] == 13);
  CHECK(b0["results"]["b_lambda"] == "-17/14");
  CHECK(b0["results"]["witness"] ==
        json::parse(R"({"kind":"parametrization","n":4,"terms":[[7,"1"],[10,"1"],[12,"1"],[13,"17/14"]]})"));
  CHECK(b0["checks"]["witness_intersection"]["computed"] == 34);

  CHECK(run_json({"zariski", "fixture:quartic:b=17/14"})["results"]["lambda"] == "infinite");
  CHECK(run_json({"zariski", "fixture:c1"})["results"]["lambda"] == 8);
  CHECK(run_json({"zariski", "fixture:f2"})["results"]["lambda"] == 16);
  CHECK(run_json({"zariski", "--swap-xy", R"({"kind":"parametrization","n":5,"terms":[[2,"1"]]})"})["results"]
            ["lambda"] == "infinite");
}

TEST_CASE("pair commands") {
  CHECK(run_json({"pair", "intersect", "fixture:c1", "fixture:f2"})["results"]["intersection"] == 45);
  CHECK(run_json({"pair", "intersect", "fixture:f2", "fixture:c1"})["results"]["intersection"] == 45);

  const json c = run_json({"pair", "contact", "fixture:quartic", "fixture:quartic-witness"});
  CHECK(c["results"]["contact"] == "13/4");
  CHECK(c["results"]["intersection"] == 34);
  CHECK(c["checks"]["merle"]["intersection_from_contact"] == "34");

  const json given = run_json({"pair", "infer", "--known-lambda", "8", "fixture:c1", "fixture:f2"});
  CHECK(given["results"]["lambda_other"] == 16);
  CHECK(given["checks"]["direct_lambda_other"] == 16);
  const json computed = run_json({"pair", "infer", "fixture:c1", "fixture:f2"});
  CHECK(computed["results"]["lambda_source"] == "computed");
  CHECK(computed["results"]["lambda_other"] == 16);

  // I = 22 equals the bound n'((n1-1)m + lambda)/n1 exactly
  const std::string close = R"({"kind":"parametrization","n":3,"terms":[[7,"1"],[8,"2"]]})";
  CHECK(error_kind({"pair", "infer", "fixture:c1", close}) == "HypothesisNotMet");
  CHECK(run({"pair", "infer", "fixture:c1", close}).code == 5);
}

TEST_CASE("expand command") {
  const json e = run_json({"expand", "fixture:f2", "fixture:h"});
  CHECK(e["results"]["c"] == "9");
  CHECK(e["results"]["p"] == 10);
  CHECK(e["results"]["q"] == 2);
  CHECK(e["checks"]["reconstruction"] == true);
  CHECK(e["checks"]["I(f,h)"] == 44);
  const auto h1 = std::get<BivarPoly>(cli::parse_branch(e["results"]["h1"]));
  CHECK(h1.to_string() == "-9*x^11*y^2 + 6*x^13*y - 6*x^14*y - 9*x^15 + 10*x^16 - x^17");

  const json ep = run_json({"expand", "fixture:f2", "fixture:h-prime-param", "--known-lambda", "16"});
  CHECK(ep["results"]["c"] == "9");
  CHECK(ep["results"]["p"] == 10);
  CHECK(ep["results"]["q"] == 2);
  CHECK(std::get<BivarPoly>(cli::parse_branch(ep["results"]["h"])) == fixtures::h_prime());
  CHECK(run_json({"expand", "fixture:f2", "fixture:h-prime"})["results"] == ep["results"]);

  CHECK(error_kind({"expand", "fixture:f2", "fixture:h", "--known-lambda", "15"}) == "WitnessMismatch");
}

TEST_CASE("convert commands") {
  const json imp = run_json({"convert", "implicitize", "fixture:h-prime-param"});
  CHECK(std::get<BivarPoly>(cli::parse_branch(imp["results"]["branch"])) == fixtures::h_prime());
  CHECK(imp["checks"]["substitution"] == true);

  const json cusp = run_json({"convert", "puiseux", "fixture:cusp"});
  CHECK(cusp["results"]["branch"] == json::parse(R"({"kind":"parametrization","n":2,"terms":[[3,"1"]]})"));

  const json pf2 = run_json({"convert", "puiseux", "fixture:f2"});
  CHECK(pf2["checks"]["residual"] == "exactly zero");

  const json trunc = run_json({"convert", "puiseux", "--precision", "40",
                               R"({"kind":"polynomial","terms":[[[0,2],"1"],[[3,0],"-1"],[[4,0],"-1"]]})"});
  CHECK(trunc["results"]["branch"]["trunc"] == 40);
  const std::string residual = trunc["checks"]["residual"];
  REQUIRE(residual.rfind("zero below t^", 0) == 0);
  CHECK(std::stoi(residual.substr(13)) >= 40);

  CHECK(error_kind({"convert", "puiseux", R"({"kind":"polynomial","terms":[[[0,2],"1"],[[3,0],"-2"]]})"}) ==
        "NonRationalCoefficient");
  CHECK(run({"convert", "implicitize", "fixture:cusp"}).code == 2);
}

TEST_CASE("exit codes") {
  CHECK(run({"invariants", "fixture:quartic"}).code == 0);
  CHECK(run({}).code == 2);
  CHECK(run({"invariants"}).code == 2);
  CHECK(run({"invariants", "fixture:nope"}).code == 2);
  CHECK(run({"invariants", "/nonexistent/branch.json"}).code == 2);
  CHECK(run({"invariants", "{not json"}).code == 2);
  CHECK(run({"invariants", "--precision", "abc", "fixture:c1"}).code == 2);
  CHECK(run({"--help"}).code == 0);

  const std::string steep = R"({"kind":"parametrization","n":7,"terms":[[3,"1"]]})";
  const Run nt = run({"invariants", steep});
  CHECK(nt.code == 3);
  CHECK(nt.err.find("--swap-xy") != std::string::npos);
  CHECK(run({"invariants", "--swap-xy", steep}).code == 0);
  CHECK(run({"invariants", R"({"kind":"parametrization","n":4,"terms":[[6,"1"]]})"}).code == 3);

  CHECK(run({"zariski", "--precision", "10", "fixture:f2"}).code == 4);
  CHECK(run({"pair", "intersect", "fixture:c1", "fixture:c1"}).code == 5);
  CHECK(run({"convert", "puiseux", R"({"kind":"polynomial","terms":[[[0,2],"1"],[[3,0],"-2"]]})"}).code == 7);

  CHECK(cli::exit_code(ErrorKind::Parse) == 2);
  CHECK(cli::exit_code(ErrorKind::NotTransversal) == 3);
  CHECK(cli::exit_code(ErrorKind::NotPrimitive) == 3);
  CHECK(cli::exit_code(ErrorKind::PrecisionExhausted) == 4);
  CHECK(cli::exit_code(ErrorKind::HypothesisNotMet) == 5);
  CHECK(cli::exit_code(ErrorKind::CrossCheckFailed) == 6);
  CHECK(cli::exit_code(ErrorKind::ZeroLeadingC) == 6);
  CHECK(cli::exit_code(ErrorKind::NonRationalCoefficient) == 7);
}

TEST_CASE("JSON output re-fed reproduces the results") {
  const std::vector<std::vector<std::string>> commands = {
      {"invariants", "fixture:f2"},
      {"zariski", "fixture:quartic"},
      {"zariski", "fixture:f2"},
      {"pair", "contact", "fixture:c1", "fixture:f2"},
      {"expand", "fixture:f2", "fixture:h"},
      {"convert", "puiseux", "fixture:f2"},
  };
  for (const auto& cmd : commands) {
    CAPTURE(cmd[0]);
    const json first = run_json(cmd);
    std::vector<std::string> again(cmd.begin(), cmd.end());
    std::size_t k = 0;
    for (auto& arg : again) {
      if (arg.rfind("fixture:", 0) == 0) arg = first["inputs"][k++]["branch"].dump();
    }
    const json second = run_json(again);
    CHECK(second["results"] == first["results"]);
    CHECK(second["checks"] == first["checks"]);
  }

  // a truncated Puiseux root written out and read back keeps its invariants
  const std::string f = R"({"kind":"polynomial","terms":[[[0,4],"1"],[[2,3],"-1"],[[7,0],"-1"]]})";
  const json root = run_json({"convert", "puiseux", f});
  REQUIRE(root["results"]["branch"].contains("trunc"));
  const std::string file = root["results"]["branch"].dump();
  json from_file = run_json({"invariants", file})["results"];
  json from_poly = run_json({"invariants", f})["results"];
  from_poly.erase("parametrization");
  CHECK(from_file == from_poly);
  const json z = run_json({"zariski", file});
  CHECK(z["results"]["lambda"] == run_json({"zariski", f})["results"]["lambda"]);
  if (z["results"]["lambda"] != "infinite") {
    CHECK(run_json({"zariski", z["results"]["witness"].dump()})["results"]["lambda"] == "infinite");
  }
}
