#include "doctest.h"

#include "coxeter/inversions.hpp"
#include "helpers.hpp"

using namespace coxeter;
using testing::id_of;
using testing::ids;
using testing::root_of;

namespace {

// Depth by definition: shortest w sending beta negative.
int depth_oracle(Group& g, int beta, int n) {
  for (auto& level : elements_up_to(g, n))
    for (auto& w : level)
      if (is_negative(g.act(w, beta))) return w.length();
  return -1;
}

}  // namespace

TEST_CASE("inversion sets") {
  Group a2(preset_system("I2:3"));
  CHECK(inversion_set(a2, a2.identity()).empty());
  CHECK(inversion_sequence(a2, a2.parse("st").word()) == std::vector<int>{0, id_of(a2, {1, 1})});
  Group a1(preset_system("I2:inf"));
  CHECK(inversion_sequence(a1, a1.parse("st").word()) == std::vector<int>{0, id_of(a1, {2, 1})});
  // Membership agrees with the action.
  Element w = a1.parse("sts");
  for (int b : inversion_set(a1, w)) CHECK(a1.is_inversion(w, b));
  CHECK(a1.is_inversion(w, id_of(a1, {3, 2})));
  CHECK_FALSE(a1.is_inversion(w, id_of(a1, {4, 3})));
}

TEST_CASE("short inversions") {
  Group a2(preset_system("I2:3"));
  Element wo = a2.parse("sts");
  CHECK(short_inversions_direct(a2, wo) == ids({0, 1}));
  CHECK(short_inversions_evolution(a2, wo) == ids({0, 1}));
  Group a1(preset_system("I2:inf"));
  Element st = a1.parse("st");
  RootSet want = ids({0, id_of(a1, {2, 1})});
  CHECK(short_inversions_direct(a1, st) == want);
  CHECK(short_inversions_evolution(a1, st) == want);
  CHECK(short_inversions_direct(a1, a1.identity()).empty());
  CHECK(short_inversions_evolution(a1, a1.identity()).empty());
  InversionData d = inversion_data(a2, wo);
  CHECK(d.roots.size() == 3);
  CHECK(d.short_roots == ids({0, 1}));
}

TEST_CASE("descent roots") {
  Group a2(preset_system("I2:3"));
  CHECK(right_descent_roots(a2, a2.parse("st")) == ids({id_of(a2, {1, 1})}));
  CHECK(right_descent_roots(a2, a2.identity()).empty());
  CHECK(left_descent_roots(a2, a2.parse("st")) == ids({0}));
  Group a1(preset_system("I2:inf"));
  CHECK(right_descent_roots(a1, a1.parse("st")) == ids({id_of(a1, {2, 1})}));
}

TEST_CASE("dominance") {
  Group a1(preset_system("I2:inf"));
  int b = id_of(a1, {2, 1});
  CHECK(dominates(a1, b, 0));
  CHECK(dominates_bruteforce(a1, b, 0, 8));
  CHECK_FALSE(dominates(a1, b, 1));
  CHECK_FALSE(dominates_bruteforce(a1, b, 1, 8));
  // sts separates 2a_s + a_t from a_t.
  Element sts = a1.parse("sts");
  CHECK(is_negative(a1.act_inverse(sts, b)));
  CHECK_FALSE(is_negative(a1.act_inverse(sts, 1)));
  CHECK_FALSE(dominates(a1, b, b));
  CHECK_FALSE(dominates(a1, 0, 0));
  // Finite groups have no dominance.
  Group a2(preset_system("I2:3"));
  CHECK_FALSE(dominates(a2, id_of(a2, {1, 1}), 0));
}

TEST_CASE("elementary roots") {
  Group a1(preset_system("I2:inf"));
  CHECK(elementary_roots(a1) == ids({0, 1}));
  Group g2(preset_system("affine-G2"));
  CHECK(elementary_roots(g2).size() == 12);
  Group t2(preset_system("rank3:II:5:5"));
  AlgebraicReal c = AlgebraicReal(-2) * embed_cos(t2.system().field(), 5);
  int full = id_of(t2, {c, 1, c});
  CHECK(contains(elementary_roots(t2), full));
  CHECK(support(t2, full) == 0b111u);
}

TEST_CASE("depth") {
  Group a1(preset_system("I2:inf"));
  CHECK(depth(a1, 0) == 1);
  int b = id_of(a1, {2, 1});
  CHECK(depth(a1, b) == 2);
  CHECK(depth_oracle(a1, b, 4) == 2);
  CHECK(depth_oracle(a1, id_of(a1, {2, 3}), 6) == depth(a1, id_of(a1, {2, 3})));
  Group a2(preset_system("I2:3"));
  CHECK(depth(a2, id_of(a2, {1, 1})) == 2);
  CHECK(depth_oracle(a2, id_of(a2, {1, 1}), 3) == 2);
}

TEST_CASE("support") {
  Group a2(preset_system("I2:3"));
  CHECK(support(a2, 0) == 0b01u);
  CHECK(support(a2, id_of(a2, {1, 1})) == 0b11u);
}

TEST_CASE("cone membership") {
  Group a2(preset_system("I2:3"));
  CHECK(cone_membership(a2, root_of(a2, {1, 1}), {root_of(a2, {1, 0}), root_of(a2, {0, 1})}));
  CHECK_FALSE(cone_membership(a2, root_of(a2, {1, 0}), {root_of(a2, {0, 1})}));
  Group a1(preset_system("I2:inf"));
  // Exact solve of a (1,0) + b (2,1) = (3,2) gives b = 2, a = -1 < 0.
  Rational bb = 2, aa = Rational(3) - 2 * bb;
  CHECK(aa < 0);
  CHECK_FALSE(cone_membership(a1, root_of(a1, {3, 2}), {root_of(a1, {1, 0}), root_of(a1, {2, 1})}));
  // (3,1) = 1 (1,0) + 1 (2,1).
  CHECK(cone_membership(a1, root_of(a1, {3, 1}), {root_of(a1, {1, 0}), root_of(a1, {2, 1})}));
}

TEST_CASE("elements by length") {
  Group a2(preset_system("I2:3"));
  auto levels = elements_up_to(a2, 5);
  std::vector<std::size_t> sizes;
  for (auto& l : levels) sizes.push_back(l.size());
  CHECK(sizes == std::vector<std::size_t>{1, 2, 2, 1});
}
