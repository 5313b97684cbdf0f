#include "doctest.h"
#include "dw/error.hpp"
#include "dw/verify.hpp"

using namespace dw;

TEST_CASE("suite names") {
  CHECK(is_suite("operators"));
  CHECK(is_suite("all"));
  CHECK(!is_suite("bogus"));
  CHECK_THROWS_AS(run_suite("bogus", 1), Error);
}

TEST_CASE("report layout") {
  Report r = run_suite("remainders", 5, 20);
  CHECK(r.ok());
  CHECK(r.cases == 22);
  CHECK(r.checks > 0);
  auto j = report_json(r);
  CHECK(j.at("suite") == "remainders");
  CHECK(j.at("seed") == 5);
  CHECK(j.at("failures").empty());
  CHECK(!j.contains("elapsed"));
  CHECK(report_json(r, true).contains("elapsed"));
  CHECK(report_json(run_suite("remainders", 5, 20)).dump() == j.dump());
}

TEST_CASE("seeds change the sampled cases") {
  auto a = report_json(verify_operators(1, 5)), b = report_json(verify_operators(2, 5));
  CHECK(a.at("failures").empty());
  CHECK(b.at("failures").empty());
  CHECK(a.at("checks") != b.at("checks"));
}

TEST_CASE("main theorem report carries the guard band") {
  Report r = verify_main_theorem(0);
  CHECK(r.ok());
  REQUIRE(r.guard_band.is_array());
  CHECK(r.guard_band.size() == r.cases);
  for (const auto& g : r.guard_band) {
    CHECK(g.at("ok") == true);
    CHECK(g.at("compared").get<std::size_t>() > 0);
  }
}

TEST_CASE("small suites pass") {
  CHECK(verify_rank3(3, 10).ok());
  CHECK(verify_residues(3, 10).ok());
  CHECK(verify_torsion(3, 6).ok());
  CHECK(verify_maurischat_perkins(3).ok());
}
