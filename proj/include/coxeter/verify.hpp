#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "coxeter/automata.hpp"
#include "coxeter/shadows.hpp"

namespace coxeter {

struct CountRow {
  std::size_t E = 0, S = 0, L = 0, L0 = 0, Gamma = 0, Gamma0 = 0;
  friend bool operator==(const CountRow&, const CountRow&) = default;
};
std::string to_string(const CountRow& r);

// Everything computed for one group, built on demand.
class Analysis {
 public:
  explicit Analysis(CoxeterSystem sys);
  Analysis(const Analysis&) = delete;
  Analysis& operator=(const Analysis&) = delete;

  Group& group() { return *g_; }
  Shadows& shadows() { return *sh_; }
  const RootSet& elementary() { return sh_->elementary(); }
  const ShadowSet& low() { return sh_->low(); }
  const ShadowSet& tight_low();
  const Algorithm1Result& algorithm1() { return sh_->algorithm1(); }
  const ReducedWordAutomaton& raw_automaton();
  const Minimization& minimization();
  const ReducedWordAutomaton& minimized() { return minimization().automaton; }
  const GateTable& gate_table();
  const ShadowSet& gates();  // Gamma
  CountRow counts();

 private:
  std::unique_ptr<Group> g_;
  std::unique_ptr<Shadows> sh_;
  std::optional<ShadowSet> tight_low_;
  std::optional<ReducedWordAutomaton> raw_;
  std::optional<Minimization> min_;
  std::optional<GateTable> gate_table_;
  std::optional<ShadowSet> gates_;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct SuiteOptions {
  bool include_optional = false;  // slow extras such as the affine A4 row
  int threads = 1;
  std::ostream* progress = nullptr;
};

// COXETER_THREADS if set and positive, otherwise hardware concurrency.
int default_threads();

// One result per acceptance criterion (1..8), optional rows appended to 1.
std::vector<CheckResult> run_paper_suite(const SuiteOptions& opt);
// Invariant checks for every module.
std::vector<CheckResult> run_property_suite(const SuiteOptions& opt);

}  // namespace coxeter
