#pragma once

#include <optional>
#include <vector>

#include "coxeter/group.hpp"

namespace coxeter {

using RootSet = std::vector<int>;  // sorted positive root ids

struct InversionData {
  std::vector<int> sequence;  // beta_i = s_1..s_{i-1} alpha_{s_i} along the canonical word
  RootSet roots;              // Phi(w)
  RootSet short_roots;        // Phi^1(w)
  RootSet right_descent_roots;
  RootSet left_descent_roots;
};

std::vector<int> inversion_sequence(Group& g, const Word& w);
RootSet inversion_set(Group& g, const Element& w);
InversionData inversion_data(Group& g, const Element& w);

// Phi^1 by the length condition on each deleted letter.
RootSet short_inversions_direct(Group& g, const Element& w);
// Phi^1 by left extension, one letter at a time.
RootSet short_inversions_evolution(Group& g, const Element& w);
// One evolution step: Phi^1(s x) from the word of x and Phi^1(x), s not in D_L(x).
RootSet short_inversions_step(Group& g, int s, const Word& x, const std::vector<int>& x_sequence,
                              const RootSet& x_short);

RootSet right_descent_roots(Group& g, const Element& w);
RootSet left_descent_roots(Group& g, const Element& w);

// beta dominates alpha (and alpha != beta).
bool dominates(Group& g, int beta, int alpha);
// Brute force over all elements up to the given length.
bool dominates_bruteforce(Group& g, int beta, int alpha, int max_length);

RootSet elementary_roots(Group& g);
int depth(Group& g, int beta);
std::uint32_t support(Group& g, int beta);

// Is beta a nonnegative combination of the roots in A?
bool cone_membership(Group& g, const Root& beta, const std::vector<Root>& A);
bool cone_membership(Group& g, int beta, const RootSet& A);

// Sorted-set helpers.
bool contains(const RootSet& a, int x);
bool is_subset(const RootSet& a, const RootSet& b);
RootSet set_intersection(const RootSet& a, const RootSet& b);
RootSet set_union(const RootSet& a, const RootSet& b);

// All elements of length <= n, grouped by length.
std::vector<std::vector<Element>> elements_up_to(Group& g, int n);

}  // namespace coxeter
