#include "coxeter/weak_order.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace coxeter {

const char* to_string(JoinStatus s) {
  switch (s) {
    case JoinStatus::Found: return "found";
    case JoinStatus::Unbounded: return "unbounded";
    case JoinStatus::NoUpperBoundWithinCap: return "no-upper-bound-within-cap";
  }
  return "?";
}

bool is_prefix(Group& g, const Element& x, const Element& y) {
  return y.length() == x.length() + g.multiply(g.inverse(x), y).length();
}

bool is_suffix(Group& g, const Element& x, const Element& y) {
  return y.length() == g.multiply(y, g.inverse(x)).length() + x.length();
}

int default_join_cap(const std::vector<Element>& X) {
  int m = 0;
  for (const auto& x : X) m = std::max(m, x.length());
  return 2 * m + 4;
}

namespace {

RootSet union_of_inversions(Group& g, const std::vector<Element>& X) {
  RootSet U;
  for (const auto& x : X) U = set_union(U, inversion_set(g, x));
  return U;
}

bool in_cone_of(Group& g, int r, const RootSet& U) { return contains(U, r) || cone_membership(g, r, U); }

// Two roots of the cone pairing to <= -1 span an infinite dihedral subsystem,
// so no finite inversion set contains the cone.
bool has_infinite_pair(Group& g, const RootSet& A) {
  const GramMatrix& gram = g.system().gram();
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = i + 1; j < A.size(); ++j)
      if ((bilinear(gram, g.roots().root(A[i]), g.roots().root(A[j])) + AlgebraicReal(1)).sign() <= 0) return true;
  return false;
}

}  // namespace

JoinResult join(Group& g, const std::vector<Element>& X, int cap) {
  if (X.empty()) return {g.identity(), JoinStatus::Found};
  if (cap < 0) cap = default_join_cap(X);
  RootSet U = union_of_inversions(g, X);
  if (has_infinite_pair(g, U)) return {std::nullopt, JoinStatus::Unbounded};
  Element z = *std::max_element(X.begin(), X.end(), [](const Element& a, const Element& b) {
    return a.length() < b.length();
  });
  for (;;) {
    if (is_subset(U, inversion_set(g, z))) return {z, JoinStatus::Found};
    if (z.length() >= cap) {
      // Phi(z) lies in the cone of U too.
      if (has_infinite_pair(g, set_union(U, inversion_set(g, z)))) return {std::nullopt, JoinStatus::Unbounded};
      return {std::nullopt, JoinStatus::NoUpperBoundWithinCap};
    }
    bool moved = false;
    for (int s = 0; s < g.rank() && !moved; ++s) {
      if (z.has_right_descent(s)) continue;
      int r = root_id(g.act(z, s));
      if (in_cone_of(g, r, U)) {
        z = g.right_multiply(z, s);
        moved = true;
      }
    }
    if (!moved) return {std::nullopt, JoinStatus::Unbounded};
  }
}

JoinResult join_bruteforce(Group& g, const std::vector<Element>& X, int cap) {
  if (cap < 0) cap = default_join_cap(X);
  std::vector<RootSet> phis;
  for (const auto& x : X) phis.push_back(inversion_set(g, x));
  std::vector<Element> bounds;
  std::vector<RootSet> bound_phis;
  for (const auto& level : elements_up_to(g, cap))
    for (const auto& z : level) {
      RootSet pz = inversion_set(g, z);
      bool ok = std::all_of(phis.begin(), phis.end(), [&](const RootSet& p) { return is_subset(p, pz); });
      if (ok) {
        bounds.push_back(z);
        bound_phis.push_back(std::move(pz));
      }
    }
  if (bounds.empty()) return {std::nullopt, JoinStatus::NoUpperBoundWithinCap};
  // bounds are in length order; the first must lie below every other bound.
  for (std::size_t i = 1; i < bounds.size(); ++i)
    if (!is_subset(bound_phis[0], bound_phis[i]))
      throw std::logic_error("join_bruteforce: minimal upper bounds are not unique");
  return {bounds[0], JoinStatus::Found};
}

Element join_below(Group& g, const std::vector<Element>& X, const Element& u) {
  RootSet U = union_of_inversions(g, X);
  if (!is_subset(U, inversion_set(g, u))) throw std::invalid_argument("join_below: u is not an upper bound");
  Element z = u;
  for (bool moved = true; moved;) {
    moved = false;
    for (int s = 0; s < g.rank() && !moved; ++s) {
      if (!z.has_right_descent(s)) continue;
      int r = root_id(g.act(z, s));
      if (!in_cone_of(g, r, U)) {
        z = g.right_multiply(z, s);
        moved = true;
      }
    }
  }
  return z;
}

Element min_prefix_containing(Group& g, const Element& w, int beta) {
  if (!g.is_inversion(w, beta)) throw std::invalid_argument("min_prefix_containing: root is not an inversion of w");
  std::vector<Element> level{g.identity()};
  for (;;) {
    std::unordered_set<Element, ElementHash> seen;
    std::vector<Element> next, hits;
    for (const auto& z : level)
      for (int s = 0; s < g.rank(); ++s) {
        if (z.has_right_descent(s)) continue;
        int r = root_id(g.act(z, s));
        if (!g.is_inversion(w, r)) continue;
        Element y = g.right_multiply(z, s);
        if (!seen.insert(y).second) continue;
        if (r == beta) hits.push_back(y);
        next.push_back(std::move(y));
      }
    if (!hits.empty()) {
      if (hits.size() != 1) throw std::logic_error("min_prefix_containing: minimal prefix is not unique");
      if (right_descent_roots(g, hits[0]) != RootSet{beta})
        throw std::logic_error("min_prefix_containing: minimal prefix has extra descent roots");
      return hits[0];
    }
    if (next.empty()) throw std::logic_error("min_prefix_containing: prefix search exhausted");
    level = std::move(next);
  }
}

Element min_prefix_containing_greedy(Group& g, const Element& w, int beta) {
  if (!g.is_inversion(w, beta)) throw std::invalid_argument("min_prefix_containing: root is not an inversion of w");
  Element z = w;
  for (bool moved = true; moved;) {
    moved = false;
    for (int s = 0; s < g.rank() && !moved; ++s) {
      if (!z.has_right_descent(s)) continue;
      if (root_id(g.act(z, s)) == beta) continue;
      z = g.right_multiply(z, s);
      moved = true;
    }
  }
  return z;
}

std::vector<Element> canonical_join_representation(Group& g, const Element& w) {
  std::vector<Element> out;
  for (int beta : right_descent_roots(g, w)) out.push_back(min_prefix_containing(g, w, beta));
  std::sort(out.begin(), out.end());
  return out;
}

std::map<int, Element> phi1_decomposition(Group& g, const Element& w) {
  std::map<int, Element> out;
  for (int beta : short_inversions_evolution(g, w)) out.emplace(beta, min_prefix_containing(g, w, beta));
  return out;
}

std::vector<Element> prefixes(Group& g, const Element& w) {
  std::vector<Element> out{g.identity()};
  std::vector<Element> level{g.identity()};
  while (!level.empty()) {
    std::unordered_set<Element, ElementHash> seen;
    std::vector<Element> next;
    for (const auto& z : level)
      for (int s = 0; s < g.rank(); ++s) {
        if (z.has_right_descent(s)) continue;
        if (!g.is_inversion(w, root_id(g.act(z, s)))) continue;
        Element y = g.right_multiply(z, s);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Element> geodesic_elements(Group& g, const Element& x, const Element& y, int cap) {
  Element v = g.multiply(g.inverse(x), y);
  if (v.length() > cap) throw std::invalid_argument("geodesic_elements: distance exceeds cap");
  std::vector<Element> out;
  for (const auto& u : prefixes(g, v)) out.push_back(g.multiply(x, u));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_convex(Group& g, const std::vector<Element>& P, int cap) {
  std::unordered_set<Element, ElementHash> members(P.begin(), P.end());
  for (std::size_t i = 0; i < P.size(); ++i)
    for (std::size_t j = i + 1; j < P.size(); ++j)
      for (const auto& z : geodesic_elements(g, P[i], P[j], cap))
        if (!members.count(z)) return false;
  return true;
}

std::vector<Element> join_irreducibles(Group& g, const std::vector<Element>& P) {
  std::vector<RootSet> phi;
  phi.reserve(P.size());
  for (const auto& x : P) phi.push_back(inversion_set(g, x));
  std::vector<Element> out;
  for (std::size_t i = 0; i < P.size(); ++i) {
    if (P[i].is_identity()) continue;
    // Reducible iff every descent root is already an inversion of something below.
    bool reducible = true;
    for (int beta : right_descent_roots(g, P[i])) {
      bool covered = false;
      for (std::size_t j = 0; j < P.size() && !covered; ++j)
        covered = j != i && phi[j].size() < phi[i].size() && contains(phi[j], beta) && is_subset(phi[j], phi[i]);
      if (!covered) {
        reducible = false;
        break;
      }
    }
    if (!reducible) out.push_back(P[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Element> single_lower_cover(Group& g, const std::vector<Element>& P) {
  std::vector<RootSet> phi;
  for (const auto& x : P) phi.push_back(inversion_set(g, x));
  auto below = [&](std::size_t a, std::size_t b) { return phi[a].size() < phi[b].size() && is_subset(phi[a], phi[b]); };
  std::vector<Element> out;
  for (std::size_t i = 0; i < P.size(); ++i) {
    std::vector<std::size_t> under;
    for (std::size_t j = 0; j < P.size(); ++j)
      if (below(j, i)) under.push_back(j);
    int covers = 0;
    for (std::size_t a : under) {
      bool maximal = std::none_of(under.begin(), under.end(), [&](std::size_t b) { return below(a, b); });
      covers += maximal;
    }
    if (covers == 1) out.push_back(P[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace coxeter
