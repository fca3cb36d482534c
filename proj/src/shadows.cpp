#include "coxeter/shadows.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

namespace coxeter {

const char* to_string(ShadowKind k) {
  switch (k) {
    case ShadowKind::Low: return "low";
    case ShadowKind::TightLow: return "tight-low";
    case ShadowKind::Gates: return "gates";
    case ShadowKind::TightGates: return "tight-gates";
    case ShadowKind::SmallestGarside: return "smallest-garside";
    case ShadowKind::UltraLow: return "ultra-low";
    case ShadowKind::Custom: return "custom";
  }
  return "?";
}

bool ShadowSet::contains(const Element& x) const { return std::binary_search(elements.begin(), elements.end(), x); }

ShadowSet low_elements(Group& g, const RootSet& E) {
  struct Node {
    Element x;
    std::vector<int> sequence;
    RootSet short_roots;
  };
  std::vector<Node> nodes{{g.identity(), {}, {}}};
  std::unordered_set<Element, ElementHash> seen{g.identity()};
  std::size_t head = 0;
  while (head < nodes.size()) {
    // Copy: nodes may reallocate below.
    Node cur = nodes[head++];
    for (int s = 0; s < g.rank(); ++s) {
      if (cur.x.has_left_descent(s)) continue;
      Element y = g.left_multiply(s, cur.x);
      if (!seen.insert(y).second) continue;
      RootSet sh = short_inversions_step(g, s, cur.x.word(), cur.sequence, cur.short_roots);
      if (!is_subset(sh, E)) continue;
      nodes.push_back({y, inversion_sequence(g, y.word()), std::move(sh)});
    }
  }
  ShadowSet out{ShadowKind::Low, {}};
  for (auto& n : nodes) out.elements.push_back(std::move(n.x));
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

ShadowSet tight(Group& g, const ShadowSet& X) {
  ShadowSet out;
  out.kind = X.kind == ShadowKind::Low ? ShadowKind::TightLow
           : X.kind == ShadowKind::Gates ? ShadowKind::TightGates
                                         : ShadowKind::Custom;
  for (const auto& x : X.elements)
    if (std::popcount(x.right_descents()) == 1) out.elements.push_back(x);
  (void)g;
  return out;
}

Algorithm1Result algorithm1(Group& g, const RootSet& E) {
  Algorithm1Result res;
  std::unordered_map<Element, int, ElementHash> index;
  std::unordered_set<int> gamma;  // indices into pool
  std::unordered_set<int> super{};
  auto add = [&](Element y, RootSet phi, int beta) {
    int id = static_cast<int>(res.pool.size());
    index.emplace(y, id);
    res.pool.push_back(std::move(y));
    res.pool_phi.push_back(std::move(phi));
    res.pool_final_root.push_back(beta);
    res.by_final_root[beta].push_back(id);
    return id;
  };
  std::vector<int> level;
  for (int s = 0; s < g.rank(); ++s) {
    level.push_back(add(g.generator(s), RootSet{s}, s));
    super.insert(s);
  }
  while (!level.empty()) {
    std::vector<int> next;
    for (int xi : level) {
      for (int s = 0; s < g.rank(); ++s) {
        if (res.pool[xi].has_left_descent(s)) continue;
        Element y = g.left_multiply(s, res.pool[xi]);
        if (std::popcount(y.right_descents()) != 1) continue;
        int beta = right_descent_roots(g, y).front();
        if (!contains(E, beta)) continue;
        if (index.count(y)) continue;
        RootSet phi{s};
        for (int r : res.pool_phi[xi]) phi.push_back(root_id(g.roots().reflect(s, r)));
        std::sort(phi.begin(), phi.end());
        int yi = add(std::move(y), std::move(phi), beta);
        next.push_back(yi);
        for (int zi : res.by_final_root[beta]) {
          if (zi == yi) continue;
          if (set_intersection(res.pool_phi[zi], res.pool_phi[yi]) == RootSet{beta}) {
            super.insert(beta);
            gamma.insert(yi);
            gamma.insert(zi);
          }
        }
      }
    }
    level = std::move(next);
  }
  res.tight_gates.kind = ShadowKind::TightGates;
  for (int i : gamma) res.tight_gates.elements.push_back(res.pool[i]);
  for (int s = 0; s < g.rank(); ++s)
    if (!gamma.count(s)) res.tight_gates.elements.push_back(res.pool[s]);
  std::sort(res.tight_gates.elements.begin(), res.tight_gates.elements.end());
  res.super_elementary.assign(super.begin(), super.end());
  std::sort(res.super_elementary.begin(), res.super_elementary.end());
  return res;
}

Shadows::Shadows(Group& g) : g_(g) {}

const RootSet& Shadows::elementary() {
  if (!elementary_) elementary_ = elementary_roots(g_);
  return *elementary_;
}

const ShadowSet& Shadows::low() {
  if (!low_) low_ = low_elements(g_, elementary());
  return *low_;
}

const Algorithm1Result& Shadows::algorithm1() {
  if (!alg1_) alg1_ = coxeter::algorithm1(g_, elementary());
  return *alg1_;
}

int Shadows::max_low_length() {
  const auto& L = low().elements;
  return L.empty() ? 0 : L.back().length();
}

bool Shadows::exact_intersection(const Element& x, const RootSet& phi_y, int beta) {
  if (!contains(phi_y, beta)) return false;
  for (int r : phi_y)
    if (r != beta && g_.is_inversion(x, r)) return false;
  return true;
}

std::optional<Element> Shadows::minimal_witness(const Element& x, int beta) {
  if (!g_.is_inversion(x, beta)) throw std::invalid_argument("minimal_witness: root is not an inversion of x");
  const auto& a1 = algorithm1();
  auto it = a1.by_final_root.find(beta);
  if (it == a1.by_final_root.end()) return std::nullopt;
  std::optional<Element> found;
  for (int i : it->second) {
    const Element& y = a1.pool[i];
    if (found && y.length() > found->length()) break;
    if (!exact_intersection(x, a1.pool_phi[i], beta)) continue;
    if (found) throw std::logic_error("minimal_witness: two minimal witnesses of the same length");
    found = y;
  }
  return found;
}

WitnessRecord Shadows::minimal_witness_bfs(const Element& x, int beta, int cap) {
  if (!g_.is_inversion(x, beta)) throw std::invalid_argument("minimal_witness: root is not an inversion of x");
  if (cap < 0) cap = max_low_length() + 2;
  WitnessRecord rec{x, beta, std::nullopt, cap, false};
  std::vector<Element> level{g_.identity()};
  for (int len = 0; len < cap && !level.empty(); ++len) {
    std::unordered_set<Element, ElementHash> seen;
    std::vector<Element> next, hits;
    for (const auto& y : level)
      for (int s = 0; s < g_.rank(); ++s) {
        if (y.has_right_descent(s)) continue;
        int r = root_id(g_.act(y, s));
        if (r != beta && g_.is_inversion(x, r)) continue;
        Element z = g_.right_multiply(y, s);
        if (!seen.insert(z).second) continue;
        if (r == beta) hits.push_back(z);
        else next.push_back(std::move(z));
      }
    if (!hits.empty()) {
      if (hits.size() != 1) throw std::logic_error("minimal_witness: two minimal witnesses of the same length");
      rec.witness = hits[0];
      return rec;
    }
    level = std::move(next);
  }
  rec.cap_exhausted = !level.empty();
  return rec;
}

RootSet Shadows::boundary_roots(const Element& x) {
  RootSet out;
  const RootSet& E = elementary();
  for (int beta : short_inversions_evolution(g_, x))
    if (contains(E, beta) && minimal_witness(x, beta)) out.push_back(beta);
  return out;
}

bool Shadows::is_gate(const Element& x) {
  for (int beta : right_descent_roots(g_, x))
    if (!minimal_witness(x, beta)) return false;
  return true;
}

bool Shadows::is_ultra_low(const Element& x) {
  for (int beta : short_inversions_evolution(g_, x))
    if (!minimal_witness(x, beta)) return false;
  return true;
}

ShadowSet Shadows::ultra_low() {
  // Ultra-low elements are low, so L is a complete search space.
  ShadowSet out{ShadowKind::UltraLow, {}};
  for (const auto& x : low().elements)
    if (is_ultra_low(x)) out.elements.push_back(x);
  return out;
}

Element Shadows::garside_projection(const ShadowSet& G, const Element& x) {
  const Element* best = nullptr;
  bool tie = false;
  for (const auto& gel : G.elements) {
    if (gel.length() > x.length()) break;
    bool prefix = true;
    for (int r : inversion_sequence(g_, gel.word()))
      if (!g_.is_inversion(x, r)) {
        prefix = false;
        break;
      }
    if (!prefix) continue;
    if (!best || gel.length() > best->length()) {
      best = &gel;
      tie = false;
    } else if (gel.length() == best->length()) {
      tie = true;
    }
  }
  if (!best) throw std::invalid_argument("garside_projection: shadow does not contain e");
  if (tie) throw std::logic_error("garside_projection: longest prefix is not unique");
  return *best;
}

ShadowSet Shadows::smallest_garside_shadow() {
  // L is a finite Garside shadow: bounded joins of low elements are low, so
  // the join of a and b is the shortest common upper bound inside L.
  const auto& L = low().elements;
  const std::size_t n = L.size();
  const std::size_t words = (n + 63) / 64;
  std::vector<RootSet> phi(n);
  int nroots = 0;
  for (std::size_t i = 0; i < n; ++i) {
    phi[i] = inversion_set(g_, L[i]);
    if (!phi[i].empty()) nroots = std::max(nroots, phi[i].back() + 1);
  }
  const std::size_t rw = (static_cast<std::size_t>(nroots) + 63) / 64;
  std::vector<std::uint64_t> bits(n * rw, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (int r : phi[i]) bits[i * rw + r / 64] |= std::uint64_t{1} << (r % 64);
  auto below = [&](std::size_t a, std::size_t c) {
    for (std::size_t k = 0; k < rw; ++k)
      if (bits[a * rw + k] & ~bits[c * rw + k]) return false;
    return true;
  };
  std::vector<std::uint64_t> up(n * words, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = a; c < n; ++c)
      if (below(a, c)) up[a * words + c / 64] |= std::uint64_t{1} << (c % 64);
  // Nonzero word range of each up-set row.
  std::vector<std::size_t> lo(n, words), hi(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t k = 0; k < words; ++k)
      if (up[a * words + k]) {
        lo[a] = std::min(lo[a], k);
        hi[a] = k + 1;
      }
  std::unordered_map<Element, std::size_t, ElementHash> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(L[i], i);

  std::vector<char> in(n, 0);
  std::vector<std::size_t> members, work;
  auto add = [&](const Element& x) {
    auto it = index.find(x);
    if (it == index.end()) throw std::logic_error("smallest_garside_shadow: closure left the low elements");
    if (in[it->second]) return;
    in[it->second] = 1;
    work.push_back(it->second);
  };
  add(g_.identity());
  for (int s = 0; s < g_.rank(); ++s) add(g_.generator(s));
  while (!work.empty()) {
    std::size_t a = work.back();
    work.pop_back();
    for (int s = 0; s < g_.rank(); ++s)
      if (L[a].has_left_descent(s)) add(g_.left_multiply(s, L[a]));
    for (std::size_t b : members) {
      const std::size_t end = std::min(hi[a], hi[b]);
      for (std::size_t k = std::max(lo[a], lo[b]); k < end; ++k) {
        std::uint64_t m = up[a * words + k] & up[b * words + k];
        if (!m) continue;
        add(L[k * 64 + static_cast<std::size_t>(std::countr_zero(m))]);
        break;
      }
    }
    members.push_back(a);
  }
  ShadowSet out{ShadowKind::SmallestGarside, {}};
  for (std::size_t i = 0; i < n; ++i)
    if (in[i]) out.elements.push_back(L[i]);
  return out;
}

ShadowSet smallest_garside_shadow_by_joins(Group& g, int cap) {
  std::vector<Element> members;
  std::unordered_set<Element, ElementHash> in;
  std::vector<Element> work;
  auto add = [&](const Element& x) {
    if (in.insert(x).second) work.push_back(x);
  };
  add(g.identity());
  for (int s = 0; s < g.rank(); ++s) add(g.generator(s));
  while (!work.empty()) {
    Element a = work.back();
    work.pop_back();
    for (int s = 0; s < g.rank(); ++s)
      if (a.has_left_descent(s)) add(g.left_multiply(s, a));
    for (const auto& b : members) {
      JoinResult j = join(g, {a, b}, cap);
      if (j.status == JoinStatus::Found) add(*j.value);
      else if (j.status == JoinStatus::NoUpperBoundWithinCap)
        throw std::runtime_error("smallest_garside_shadow: join cap exceeded for " + g.format(a) + " and " +
                                 g.format(b));
    }
    members.push_back(a);
  }
  ShadowSet out{ShadowKind::SmallestGarside, members};
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

bool is_suffix_closed(Group& g, const std::vector<Element>& X) {
  std::unordered_set<Element, ElementHash> in(X.begin(), X.end());
  for (const auto& x : X)
    for (int s = 0; s < g.rank(); ++s)
      if (x.has_left_descent(s) && !in.count(g.left_multiply(s, x))) return false;
  return true;
}

}  // namespace coxeter
