#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "coxeter/weak_order.hpp"

namespace coxeter {

enum class ShadowKind { Low, TightLow, Gates, TightGates, SmallestGarside, UltraLow, Custom };

const char* to_string(ShadowKind k);

struct ShadowSet {
  ShadowKind kind = ShadowKind::Custom;
  std::vector<Element> elements;  // sorted by length, then lexicographically

  std::size_t size() const { return elements.size(); }
  bool contains(const Element& x) const;
};

struct WitnessRecord {
  Element subject;
  int root = -1;
  std::optional<Element> witness;
  int search_cap = 0;
  bool cap_exhausted = false;  // BFS stopped at the cap without a certificate
};

struct Algorithm1Result {
  ShadowSet tight_gates;     // Gamma^0
  RootSet super_elementary;  // S
  std::vector<Element> pool; // L' in discovery order (length order)
  std::vector<RootSet> pool_phi;
  std::vector<int> pool_final_root;
  std::unordered_map<int, std::vector<int>> by_final_root;  // indices into pool
};

// Computation context for one group; caches E, L and the tight-gate search pool.
class Shadows {
 public:
  explicit Shadows(Group& g);

  Group& group() { return g_; }
  const RootSet& elementary();
  const ShadowSet& low();
  const Algorithm1Result& algorithm1();

  std::optional<Element> minimal_witness(const Element& x, int beta);
  WitnessRecord minimal_witness_bfs(const Element& x, int beta, int cap = -1);
  RootSet boundary_roots(const Element& x);
  bool is_gate(const Element& x);
  bool is_ultra_low(const Element& x);
  ShadowSet ultra_low();

  Element garside_projection(const ShadowSet& G, const Element& x);
  ShadowSet smallest_garside_shadow();

  int max_low_length();

 private:
  bool exact_intersection(const Element& x, const RootSet& phi_y, int beta);

  Group& g_;
  std::optional<RootSet> elementary_;
  std::optional<ShadowSet> low_;
  std::optional<Algorithm1Result> alg1_;
};

ShadowSet low_elements(Group& g, const RootSet& E);
ShadowSet tight(Group& g, const ShadowSet& X);
Algorithm1Result algorithm1(Group& g, const RootSet& E);

// Closure of S and e under suffixes and weak-order joins computed with join().
// Throws if a join hits the cap.
ShadowSet smallest_garside_shadow_by_joins(Group& g, int cap);

bool is_suffix_closed(Group& g, const std::vector<Element>& X);

}  // namespace coxeter
