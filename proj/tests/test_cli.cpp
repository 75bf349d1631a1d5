#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "support.hpp"
#include "wicks/verify.hpp"

using namespace wicks;
using namespace wicks::test;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> tokens(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

std::vector<std::string> cat(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

TEST_CASE("witness command") {
  const auto r = run({"witness", "u1", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "b1^-1 c1^-1 b1 a1 c1 a1^-1\nlength: 6\n");
  const auto j = json::parse(run({"--format", "json", "witness", "u2", "2"}).out);
  CHECK(j["length"] == 12);
  CHECK(C(j["word"].get<std::string>()) == witness_u2(2));
  CHECK(run({"witness", "u1", "0"}).code == 2);
  CHECK(run({"witness", "u3", "1"}).code == 2);
}

TEST_CASE("JSON output schema") {
  {
    const auto r = run(cat({"--format", "json", "solve", "commutators"}, tokens("a^-2 b^-3 a^2 b^3")));
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["equation"] == "x1^-1 y1^-1 x1 y1 = a^-2 b^-3 a^2 b^3");
    CHECK(j["genus"] == 1);
    REQUIRE(j["classes"].size() == 4);
    for (const auto& c : j["classes"]) {
      CHECK(c.contains("assignments"));
      CHECK(c["lengths"]["x1"].is_number_integer());
      CHECK(c["fingerprint_id"].get<std::string>().size() == 16);
      CHECK(c["distinctness"] == "resolved-distinct");
    }
    CHECK(j["certificates"].size() == 4);
  }
  {
    const auto j = json::parse(run(cat({"--format", "json", "solve", "squares"}, tokens("a^-1 b^-1 a b"))).out);
    CHECK(j["genus"] == 3);
    CHECK(j["complete"] == false);
    CHECK(j["certificates"][0]["construction"] == "three-squares identity");
  }
  {
    const auto j = json::parse(run(cat({"--format", "json", "genus"}, tokens("a^2 b"))).out);
    CHECK(j["genus"]["genus+"].is_null());
    CHECK(j["genus"]["genus-"].is_null());
    const auto p = json::parse(run(cat({"--format", "json", "genus", "--orientable"}, tokens("a^-1 b^-1 a b"))).out);
    CHECK(p["genus"]["genus+"] == 1);
    CHECK_FALSE(p["genus"].contains("genus-"));
  }
  {
    const auto j = json::parse(run({"--format", "json", "wicks", "orientable", "1"}).out);
    CHECK(j["count"] == 2);
    CHECK(j["forms"].size() == 2);
  }
  {
    const auto r = run({"--format", "json", "reduce-solution", "x^-1 y^-1 x y", "x=a b", "y=b^-1 c"});
    REQUIRE(r.code == 0);
    CHECK(json::accept(r.out));
  }
}

TEST_CASE("output is deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           cat({"solve", "commutators"}, tokens("a^-2 b^-3 a^2 b^3")),
           cat({"--format", "json", "solve", "squares"}, tokens("a^4 b^2 c^6")),
           cat({"--format", "json", "genus"}, tokens("a b a^-1 b^-1 c d c^-1 d^-1")),
           {"wicks", "nonorientable", "3"}}) {
    const auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"genus"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"genus", "a^"}).code == 2);
  CHECK(run({"genus", "x^-1", "y^-1", "x", "y", "--orientable", "--nonorientable"}).code == 2);
  CHECK(run({"solve", "commutators", "1"}).code == 2);
  CHECK(run({"solve", "commutators", "a", "b"}).code == 1);
  CHECK(run({"solve", "squares", "a", "b"}).code == 1);
  CHECK(run({"reduce-solution", "x y", "x=a"}).code == 2);
  CHECK(run({"wicks", "orientable", "0"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  const auto bad = run({"genus", "a^x"});
  CHECK_FALSE(bad.err.empty());
  CHECK(bad.out.empty());
}

TEST_CASE("word arguments round trip") {
  Rng rng(6);
  const auto alpha = alphabet(3);
  for (int t = 0; t < 30; ++t) {
    const Word w = random_word(rng, alpha, 1 + rng() % 10);
    const std::string text = format_word(w);
    const auto j = json::parse(run(cat({"--format", "json", "genus"}, tokens(text))).out);
    CHECK(j["equation"] == text);
    CHECK(C(j["equation"].get<std::string>()) == w);
  }
  // Unreduced input is reported reduced.
  const auto j = json::parse(run({"--format", "json", "genus", "a", "a", "b", "b^-1"}).out);
  CHECK(j["equation"] == "a^2");
}

TEST_CASE("text output mirrors JSON") {
  const auto args = tokens("a^-2 b^-3 a^2 b^3");
  const auto text = run(cat({"solve", "commutators"}, args)).out;
  const auto j = json::parse(run(cat({"--format", "json", "solve", "commutators"}, args)).out);
  CHECK(text.find(j["equation"].get<std::string>()) != std::string::npos);
  for (const auto& c : j["classes"]) {
    for (const auto& [var, img] : c["assignments"].items())
      CHECK(text.find(var + " -> " + img.get<std::string>()) != std::string::npos);
    CHECK(text.find(c["fingerprint_id"].get<std::string>()) != std::string::npos);
  }
  const auto gtext = run(cat({"genus"}, tokens("a^-1 b^-1 a b"))).out;
  CHECK(gtext.find("genus+: 1") != std::string::npos);
  CHECK(gtext.find("genus-: 3") != std::string::npos);
}

TEST_CASE("verify command") {
  const auto r = run({"--format", "json", "verify", "paper", "--skip-slow"});
  CHECK(r.code == 0);
  const auto j = json::parse(r.out);
  REQUIRE(j.contains("claims"));
  CHECK(j["claims"].size() == reproduction_suite_claims().size());
}
