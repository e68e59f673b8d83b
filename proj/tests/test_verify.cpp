#include <catch2/catch_amalgamated.hpp>

#include "osc/verify.hpp"

using namespace osc;

TEST_CASE("default suites pass on a small range") {
  VerifyOptions opt;
  opt.pmin = 3;
  opt.pmax = 13;
  const VerifyReport report = run_verification(opt);
  REQUIRE(!report.checks.empty());
  for (const CheckResult& c : report.checks) {
    INFO(c.name << " max_err=" << c.max_err);
    REQUIRE(c.pass);
  }
}

TEST_CASE("suite selection") {
  VerifyOptions opt;
  opt.pmin = 3;
  opt.pmax = 7;
  opt.suites = {"field"};
  const VerifyReport report = run_verification(opt);
  REQUIRE(!report.checks.empty());
  for (const CheckResult& c : report.checks)
    REQUIRE(c.name.rfind("field:", 0) == 0);
}

TEST_CASE("empty prime range yields a trivially passing report") {
  VerifyOptions opt;
  opt.pmin = 24;
  opt.pmax = 28;
  const VerifyReport report = run_verification(opt);
  REQUIRE(report.all_passed());
}

TEST_CASE("negative control: a perturbed Weyl operator fails the dft check") {
  VerifyOptions opt;
  opt.pmin = 5;
  opt.pmax = 7;
  opt.suites = {"weil"};
  opt.perturb_dft_relation = 1e-3;
  const VerifyReport report = run_verification(opt);
  REQUIRE(!report.all_passed());
  bool dft_failed = false;
  for (const CheckResult& c : report.checks) {
    if (c.name.find("dft matrix equals constant") != std::string::npos) {
      dft_failed = !c.pass;
    } else {
      REQUIRE(c.pass);  // only the targeted check fails
    }
  }
  REQUIRE(dft_failed);
}
