// Acceptance criteria 1-8, one line each. Pass --optional to add the affine A4 row.
#include <cstdio>
#include <cstring>
#include <iostream>

#include "coxeter/verify.hpp"

int main(int argc, char** argv) {
  coxeter::SuiteOptions opt;
  opt.threads = coxeter::default_threads();
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--optional") == 0) {
      opt.include_optional = true;
    } else if (std::strcmp(argv[i], "--verbose") == 0) {
      opt.progress = &std::cerr;
    } else {
      std::cerr << "usage: coxeter_acceptance [--optional] [--verbose]\n";
      return 2;
    }
  }
  bool all = true;
  for (const auto& r : coxeter::run_paper_suite(opt)) {
    std::printf("%s criterion %s [%.2f s] %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(), r.seconds, r.detail.c_str());
    all &= r.pass;
  }
  std::fflush(stdout);
  return all ? 0 : 1;
}
