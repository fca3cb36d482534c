#pragma once

#include <map>
#include <optional>
#include <vector>

#include "coxeter/inversions.hpp"

namespace coxeter {

enum class JoinStatus {
  Found,
  Unbounded,               // certified: no upper bound exists
  NoUpperBoundWithinCap,   // search stopped at the cap
};

struct JoinResult {
  std::optional<Element> value;
  JoinStatus status = JoinStatus::NoUpperBoundWithinCap;
};

const char* to_string(JoinStatus s);

bool is_prefix(Group& g, const Element& x, const Element& y);
bool is_suffix(Group& g, const Element& x, const Element& y);

int default_join_cap(const std::vector<Element>& X);

// Cone-greedy join: climbs from the first input along roots in cone(U Phi(x)).
JoinResult join(Group& g, const std::vector<Element>& X, int cap = -1);
// Exhaustive search over all elements of length <= cap.
JoinResult join_bruteforce(Group& g, const std::vector<Element>& X, int cap = -1);
// Join below a known common upper bound u, by greedy descent from u.
Element join_below(Group& g, const std::vector<Element>& X, const Element& u);

// Unique minimal-length prefix z of w with beta in Phi(z); beta in Phi^1(w).
Element min_prefix_containing(Group& g, const Element& w, int beta);
// Same element by greedy descent; used as an oracle.
Element min_prefix_containing_greedy(Group& g, const Element& w, int beta);

std::vector<Element> canonical_join_representation(Group& g, const Element& w);
std::map<int, Element> phi1_decomposition(Group& g, const Element& w);

// All prefixes of w (the interval [e, w] in weak order).
std::vector<Element> prefixes(Group& g, const Element& w);
std::vector<Element> geodesic_elements(Group& g, const Element& x, const Element& y, int cap = 64);
bool is_convex(Group& g, const std::vector<Element>& P, int cap = 64);

// Join-irreducible members of a finite join-closed poset P (weak order).
std::vector<Element> join_irreducibles(Group& g, const std::vector<Element>& P);
// Same set via the single-lower-cover criterion.
std::vector<Element> single_lower_cover(Group& g, const std::vector<Element>& P);

}  // namespace coxeter
