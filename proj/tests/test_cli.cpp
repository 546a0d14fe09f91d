#include <doctest.h>

#include <sstream>

#include "golden_cases.hpp"
#include "hypiso/cli.hpp"
#include "hypiso/error.hpp"
#include "hypiso/report.hpp"

using namespace hypiso;

namespace {

struct Run {
  Json json;
  std::string text;
  int code;
};

Run run_cli(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  Json j;
  try {
    j = Json::parse(out.str());
  } catch (const std::exception&) {
  }
  return {j, out.str(), code};
}

}  // namespace

TEST_CASE("parse_matrix_text") {
  const auto p = cli::parse_matrix_text("# comment\n\n3\n1 0 0\n0 1/2 0\n0 0 -1.5\n");
  CHECK(p.matrix(1, 1) == Rational(1, 2));
  CHECK(p.matrix(2, 2) == Rational(-3, 2));
  CHECK(p.where[4].line == 5);
  CHECK(p.where[4].column == 3);
  auto location = [](std::string_view text) {
    try {
      cli::parse_matrix_text(text);
    } catch (const ParseError& e) {
      return std::pair<std::size_t, std::size_t>{e.line(), e.column()};
    }
    return std::pair<std::size_t, std::size_t>{0, 0};
  };
  CHECK(location("3\n1 0 0\n0 1 x\n0 0 1\n") == std::pair<std::size_t, std::size_t>{3, 5});
  CHECK(location("3\n1 0 0\n0 1\n0 0 1\n") == std::pair<std::size_t, std::size_t>{3, 4});
  CHECK(location("2\n1 0\n0 1\n") == std::pair<std::size_t, std::size_t>{1, 1});
  CHECK(location("3\n1 0 0\n0 1 0\n0 0 1\n1\n") == std::pair<std::size_t, std::size_t>{5, 1});
  CHECK(location("3\n1 0 0\n") == std::pair<std::size_t, std::size_t>{3, 1});
}

TEST_CASE("parse_moebius_json and parse_an_json") {
  const auto m = cli::parse_moebius_json(R"([["1/2", [0, 1]], [0, 2]])", Orientation::Preserving);
  CHECK(m.a == GaussianRational(Rational(1, 2)));
  CHECK(m.b == GaussianRational(0, 1));
  CHECK(cli::parse_moebius_json("[1, 1, 0, 1]", Orientation::Reversing).orientation == Orientation::Reversing);
  CHECK_THROWS_AS(cli::parse_moebius_json("[1, 1, 0]", Orientation::Preserving), ParseError);
  CHECK_THROWS_AS(cli::parse_moebius_json("[1, 1, 0, ", Orientation::Preserving), ParseError);
  const auto e = cli::parse_an_json(R"({"a": ["3", 4], "r": "2"})");
  CHECK(e.r() == 2);
  CHECK(e.a()[1] == 4);
  CHECK_THROWS_AS(cli::parse_an_json(R"({"a": []})"), ParseError);
}

TEST_CASE("classify via stdin") {
  const auto r = run_cli({"classify", "-"}, "3\n5/3 4/3 0\n4/3 5/3 0\n0 0 1\n");
  CHECK(r.code == 0);
  CHECK(r.json["schema"] == "1");
  CHECK(r.json["classification"]["type"] == "hyperbolic");
  CHECK(r.json["classification"]["boost"]["r"].get<double>() == doctest::Approx(3.0));
  CHECK(r.json["generic"] == true);
  CHECK(r.json["zclass"]["key"]["l"] == 0);
  CHECK(r.json["zclass"]["key"]["m"] == 1);
}

TEST_CASE("report generic flag matches the embedded signature") {
  for (const char* file : {"identity.txt", "boost.txt", "rotation.txt", "parabolic.txt", "reflection.txt"}) {
    const auto r = run_cli({"classify", golden::source_path(std::string("fixtures/") + file)});
    REQUIRE(r.code == 0);
    const auto& z = r.json["zclass"];
    ZClassSignature sig;
    const std::string type = z["type"];
    sig.kind = type == "elliptic" ? Kind::Elliptic : type == "parabolic" ? Kind::Parabolic : Kind::Hyperbolic;
    sig.l = z["l"];
    sig.m = z["m"];
    sig.partition = z["partition"].get<std::vector<unsigned>>();
    CHECK(r.json["generic"] == is_generic(sig, r.json["input"]["n"].get<std::size_t>()));
    CHECK(r.json["quick_tests"].contains("low_dim"));
  }
}

TEST_CASE("error objects") {
  auto r = run_cli({"classify", golden::source_path("fixtures/malformed.txt")});
  CHECK(r.code == 2);
  CHECK(r.json["error"]["code"] == "ParseError");
  CHECK(r.json["error"]["line"] == 3);
  CHECK(r.json["error"]["column"] == 5);
  r = run_cli({"classify", "-"}, "3\n-1 0 0\n0 1 0\n0 0 1\n");
  CHECK(r.json["error"]["code"] == "WrongComponent");
  CHECK(r.json["error"]["line"] == 2);
  r = run_cli({"classify", golden::source_path("fixtures/not_orthogonal.txt")});
  CHECK(r.json["error"]["code"] == "NotOrthogonal");
  CHECK(r.json["error"].contains("line"));
  r = run_cli({"conjugate", golden::source_path("fixtures/identity.txt"), golden::source_path("fixtures/malformed.txt")});
  CHECK(r.code == 2);
  CHECK(r.json["error"]["argument"] == 2);
  r = run_cli({"conjugate", golden::source_path("fixtures/identity.txt"), "-"}, "4\n1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n");
  CHECK(r.json["error"]["code"] == "DimensionMismatch");
  r = run_cli({"census", "--from", "5", "--to", "3"});
  CHECK(r.code == 2);
  CHECK(r.json["error"]["code"] == "RangeError");
  r = run_cli({"census", "--to", "61"});
  CHECK(r.json["error"]["code"] == "RangeError");
  r = run_cli({"frobnicate"});
  CHECK(r.code == 2);
  CHECK(r.json["error"]["code"] == "UsageError");
  r = run_cli({"classify", "/nonexistent/file"});
  CHECK(r.code == 2);
  r = run_cli({"moebius", "-", "--model", "h2"}, "[[0, 2], [1, 1]]");
  CHECK(r.json["error"]["code"] == "NotAnH2Element");
  r = run_cli({"an", "-"}, R"({"a": ["1"], "r": "-1"})");
  CHECK(r.json["error"]["code"] == "InvalidArgument");
}

TEST_CASE("conjugate verdicts") {
  const auto rot = golden::source_path("fixtures/rotation.txt");
  const auto rot_b = golden::source_path("fixtures/rotation_b.txt");
  auto r = run_cli({"conjugate", rot, rot_b});
  CHECK(r.json["conjugate"] == false);
  CHECK(r.json["same_zclass"] == true);
  r = run_cli({"conjugate", golden::source_path("fixtures/identity.txt"), golden::source_path("fixtures/parabolic.txt")});
  CHECK(r.json["conjugate"] == false);
  CHECK(r.json["same_zclass"] == false);
  r = run_cli({"conjugate", rot, "-"}, "3\n1 0 0\n0 3/5 4/5\n0 -4/5 3/5\n");
  CHECK(r.json["conjugate"] == true);
}

TEST_CASE("census output") {
  auto r = run_cli({"census", "--from", "2", "--to", "2", "--format", "csv"});
  CHECK(r.text == "n,elliptic,hyperbolic,parabolic,total\n2,4,1,1,6\n");
  r = run_cli({"census", "--from", "3", "--to", "3", "--format", "csv"});
  CHECK(r.text == "n,elliptic,hyperbolic,parabolic,total\n3,6,3,2,11\n");
  r = run_cli({"census", "--verify"});
  CHECK(r.code == 0);
  CHECK(r.json["rows"].size() == 29);
  CHECK(r.json["verified"] == true);
  r = run_cli({"census", "--from", "2", "--to", "3", "--atlas"});
  CHECK(r.json["atlas"][0]["signatures"].size() == 6);
}

TEST_CASE("moebius and an commands") {
  auto r = run_cli({"moebius", "-"}, "[[1,1],[0,1]]");
  CHECK(r.json["class"] == "Translation");
  r = run_cli({"moebius", "-", "--reversing", "--lift"}, "[[0,-1],[1,0]]");
  CHECK(r.json["class"] == "Antipodal");
  CHECK(r.json["cross_check"] == true);
  CHECK(r.json.contains("B"));
  r = run_cli({"moebius", "-", "--orientation", "reversing"}, "[[0,1],[1,0]]");
  CHECK(r.json["class"] == "InversionInCircle");
  r = run_cli({"an", "-"}, R"({"a":["3","4"],"r":"2"})");
  CHECK(r.json["zclass"] == "DilationClass");
  CHECK(r.json["representative"]["a"] == Json::array({"0", "0"}));
  CHECK(r.json["representative"]["r"] == "2");
}

TEST_CASE("golden files") {
  for (const auto& c : golden::cases()) {
    INFO(c.name);
    CHECK(golden::matches(c));
    // a second run is byte-identical
    CHECK(golden::run(c).out == golden::run(c).out);
  }
}

TEST_CASE("help exits cleanly") {
  const auto r = run_cli({"--help"});
  CHECK(r.code == 0);
  CHECK(r.text.find("classify") != std::string::npos);
}
