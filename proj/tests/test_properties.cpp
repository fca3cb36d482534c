#include "doctest.h"

#include "coxeter/verify.hpp"

using namespace coxeter;

TEST_CASE("invariants") {
  SuiteOptions opt;
  opt.threads = default_threads();
  auto results = run_property_suite(opt);
  CHECK(results.size() > 10);
  for (const auto& r : results) {
    INFO(r.name << ": " << r.detail);
    CHECK(r.pass);
  }
}
