// Acceptance suite: one test per criterion, one pass/fail line each.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>

#include "plifs/verify.hpp"

namespace {

const std::vector<plifs::CriterionResult> &results() {
  static std::vector<plifs::CriterionResult> r = [] {
    auto out = plifs::run_acceptance();
    for (const auto &c : out)
      std::printf("[%s] criterion %d: %s (%s, %.2fs)\n", c.pass ? "PASS" : "FAIL", c.id,
                  c.name.c_str(), c.detail.c_str(), c.seconds);
    std::fflush(stdout);
    return out;
  }();
  return r;
}

void check_criterion(int id) {
  for (const auto &c : results()) {
    if (c.id != id) continue;
    INFO(c.detail);
    CHECK(c.pass);
    return;
  }
  FAIL("criterion not found");
}

} // namespace

TEST_CASE("criterion 1: triadic convergence, exact counts and lengths") { check_criterion(1); }
TEST_CASE("criterion 2: backward property and gap-point density") { check_criterion(2); }
TEST_CASE("criterion 3: interval minimality, Cantor powers") { check_criterion(3); }
TEST_CASE("criterion 4: example 2 orbits dense in the circle") { check_criterion(4); }
TEST_CASE("criterion 5: classification matrix and perturbations") { check_criterion(5); }
TEST_CASE("criterion 6: symmetric-Cantorval predicate") { check_criterion(6); }
TEST_CASE("criterion 7: gap matcher invariants") { check_criterion(7); }
TEST_CASE("criterion 8: brute-force word oracle") { check_criterion(8); }
