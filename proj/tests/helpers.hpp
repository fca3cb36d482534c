#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "coxeter/presets.hpp"
#include "coxeter/shadows.hpp"

namespace testing {

using namespace coxeter;

inline Root root_of(Group& g, std::initializer_list<AlgebraicReal> c) {
  Root v(g.rank());
  Eigen::Index i = 0;
  for (const auto& x : c) v(i++) = x;
  return v;
}

// Id of a positive root, interning it if the group has not met it yet.
inline int id_of(Group& g, std::initializer_list<AlgebraicReal> c) { return root_id(g.roots().intern(root_of(g, c))); }

inline std::vector<std::string> names(Group& g, const std::vector<Element>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(g.format(x));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::string> sorted_strings(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

inline RootSet ids(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace testing
