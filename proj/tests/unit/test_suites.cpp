#include <catch_amalgamated.hpp>

#include "spmodels/errors.hpp"
#include "spmodels/suites.hpp"

using namespace spm;

namespace {
void require_pass(const SuiteReport& r) {
  for (const auto& c : r.checks) {
    INFO(r.suite << ": " << c.name << " " << c.detail << " " << c.residual);
    if (!c.informational) REQUIRE(c.pass);
  }
  REQUIRE(r.pass());
}
}  // namespace

TEST_CASE("suites pass at small parameters") {
  for (int n = 1; n <= 2; ++n) {
    require_pass(run_suite("sp-invariance", {n, 1, {}}));
    require_pass(run_suite("sl2-harmonic", {n, 1, {}}));
    require_pass(run_suite("realization", {n, 2, {}}));
  }
  const auto so5 = run_suite("so5", {2, 2, {}});
  require_pass(so5);
  REQUIRE(so5.dimension == 10);
  const auto pf = run_suite("parafermion", {1, 1, {}});
  require_pass(pf);
  REQUIRE(pf.dimension == 3);
  const auto pf2 = run_suite("parafermion", {1, 2, {}});
  require_pass(pf2);
  REQUIRE(pf2.dimension == 10);
  require_pass(run_suite("so4-dual", {2, 2, {}}));
  require_pass(run_suite("hwv", {3, 2, {2, 1}}));
}

TEST_CASE("suite argument errors") {
  REQUIRE_THROWS_AS(run_suite("nope", {2, 1, {}}), InvalidInput);
}
