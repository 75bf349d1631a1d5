#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "support.hpp"
#include "wicks/error.hpp"
#include "wicks/solver.hpp"
#include "wicks/verify.hpp"

using namespace wicks;
using namespace wicks::test;

TEST_CASE("witness families") {
  CHECK(witness_u1(1) == C("b1^-1 c1^-1 b1 a1 c1 a1^-1"));
  CHECK(witness_u2(1) == C("a1^-1 b1^-1 c1^-1 a1 b1 c1"));
  CHECK(witness_u1(2) == C("b2^-1 b1^-1 c1^-1 b1 b2 a1 a2 c1 a2^-1 a1^-1"));
  for (int n = 1; n <= 5; ++n) {
    CHECK(witness_u1(n).size() == static_cast<std::size_t>(4 * n + 2));
    CHECK(witness_u2(n).size() == static_cast<std::size_t>(6 * n));
    CHECK(witness_u1(n).is_cyclically_reduced());
    CHECK(witness_u2(n).is_cyclically_reduced());
  }
  for (int n = 1; n <= 3; ++n) {
    CHECK(genus_plus(witness_u1(n)).value == 1);
    CHECK(genus_plus(witness_u2(n)).value == 1);
  }
  CHECK_THROWS_AS(witness_u1(0), DomainError);
  CHECK_THROWS_AS(witness_u2(-1), DomainError);
}

TEST_CASE("length bounds on the witness families") {
  {
    const auto r = verify_bef(witness_u1(1));
    CHECK(r.part_i);
    REQUIRE(r.class_witnesses.size() == 1);
    REQUIRE(r.class_witnesses[0]);
    CHECK(r.class_witnesses[0]->total() == 5);
    CHECK(r.part_ii);
  }
  {
    const Word u = witness_u2(1);
    const auto r = verify_bef(u);
    CHECK(r.part_i);
    CHECK(r.part_ii);
    REQUIRE(r.rotated);
    CHECK(r.rotated->total() == 4);
    const Word rotated = u.rotate(r.rotated->rotation);
    CHECK(commutator(r.rotated->x, r.rotated->y) == rotated);
  }
  for (int n = 2; n <= 3; ++n) {
    for (const Word& u : {witness_u1(n), witness_u2(n)}) {
      const auto r = verify_bef(u);
      CHECK(r.part_i);
      CHECK(r.part_ii);
      for (const auto& w : r.class_witnesses) {
        REQUIRE(w);
        CHECK(commutator(w->x, w->y) == u.rotate(w->rotation));
        CHECK(2 * w->x.size() <= u.size());
        CHECK(2 * w->y.size() <= u.size());
        CHECK(w->total() + 1 <= u.size());
      }
      REQUIRE(r.rotated);
      CHECK(2 * r.rotated->x.size() + 2 <= u.size());
      CHECK(3 * r.rotated->total() <= 2 * u.size());
    }
  }
}

TEST_CASE("length bound checker preconditions") {
  CHECK_THROWS_AS(verify_bef(Word()), DomainError);
  CHECK_THROWS_AS(verify_bef(commutator(C("a"), C("b")) * commutator(C("c"), C("d"))), DomainError);
  CHECK_THROWS_AS(verify_bef(C("a^2")), DomainError);
  CHECK_THROWS_AS(verify_bef(C("c^-1 a^-1 b^-1 a b c")), DomainError);
}

TEST_CASE("suite claim list") {
  const auto ids = reproduction_suite_claims();
  CHECK(std::set<std::string>(ids.begin(), ids.end()).size() == ids.size());
  CHECK(ids.front() == "wicks-o1-count");
  CHECK(ids.back() == "cor-polynomial-bound");
  CHECK(to_string(ClaimStatus::skipped) == "skipped");
}

TEST_CASE("suite with the slow census skipped") {
  FormLibrary lib;
  SuiteOptions opts;
  opts.skip_slow = true;
  const auto report = run_reproduction_suite(opts, lib);
  CHECK(report.passed());
  REQUIRE(report.claims.size() == reproduction_suite_claims().size());
  for (std::size_t i = 0; i < report.claims.size(); ++i) {
    const auto& c = report.claims[i];
    CAPTURE(c.id);
    CAPTURE(c.details);
    CHECK(c.id == reproduction_suite_claims()[i]);
    CHECK(c.status == (c.id == "wicks-o2-maximal" ? ClaimStatus::skipped : ClaimStatus::pass));
  }
}

TEST_CASE("suite regenerates a tampered table and passes") {
  const auto dir = std::filesystem::temp_directory_path() / "wicks-test-suite-tables";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  {
    FormLibrary lib(dir);
    lib.complete(true, 1);
    lib.complete(false, 2);
  }
  const auto file = dir / table_file_name(true, 1);
  REQUIRE(std::filesystem::exists(file));
  {
    std::ofstream out(file, std::ios::trunc);
    out << "wicks orientable genus=1 count=1\nv1^-1 v2^-1 v1 v2\n";
  }
  FormLibrary lib(dir);
  const auto report = run_reproduction_suite({}, lib);
  CHECK(report.passed());
  CHECK(lib.regenerations() == 1);
  CHECK(read_table(dir, true, 1));
  std::filesystem::remove_all(dir);
}
