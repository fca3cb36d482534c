#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "coxeter/inversions.hpp"

namespace coxeter {

// Deterministic partial automaton over the generators; every state accepts.
struct ReducedWordAutomaton {
  std::vector<std::string> alphabet;
  int start = 0;
  std::vector<std::vector<int>> delta;  // delta[q][s], -1 if undefined
  std::vector<RootSet> state_roots;     // raw form only: E(w^{-1}) per state
  std::vector<Word> state_words;        // ShortLex-least word reaching each state
  bool minimized = false;

  int num_states() const { return static_cast<int>(delta.size()); }
  int run(const Word& w) const;  // -1 if rejected
  bool accepts(const Word& w) const { return run(w) >= 0; }
};

struct Minimization {
  ReducedWordAutomaton automaton;
  std::vector<int> state_map;  // raw state -> class
};

struct GateTable {
  std::vector<Element> minimal;  // m_T per class
  std::vector<Element> gates;    // all m_T^{-1}, sorted
};

ReducedWordAutomaton build_bh_automaton(Group& g, const RootSet& E);
Minimization minimize(const ReducedWordAutomaton& a);
GateTable gates(Group& g, const ReducedWordAutomaton& minimized);

// T(x) == T(y) via the minimized automaton.
bool cone_type_equal(const ReducedWordAutomaton& minimized, const Element& x, const Element& y);
// T(x) == T(y) via membership of x^{-1}, y^{-1} in the cone types of tight gates.
bool cone_type_equal_tight(Group& g, const std::vector<Element>& tight_gates, const Element& x, const Element& y);

// Accepted words of each length 0..n, as decimal strings.
std::vector<std::string> growth_series(const ReducedWordAutomaton& a, int n);

std::string export_dot(Group& g, const ReducedWordAutomaton& a);
nlohmann::json export_json(Group& g, const ReducedWordAutomaton& a);
// Structure only; root payloads are not re-interned.
ReducedWordAutomaton import_json(const nlohmann::json& j);
bool isomorphic(const ReducedWordAutomaton& a, const ReducedWordAutomaton& b);

}  // namespace coxeter
