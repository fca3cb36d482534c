#include "doctest.h"

#include "coxeter/weak_order.hpp"
#include "helpers.hpp"

using namespace coxeter;
using testing::id_of;
using testing::names;

namespace {

std::vector<Element> parse_all(Group& g, std::initializer_list<const char*> ws) {
  std::vector<Element> out;
  for (const char* w : ws) out.push_back(g.parse(w));
  return out;
}

std::vector<Element> all_of(Group& g, int n) {
  std::vector<Element> out;
  for (auto& level : elements_up_to(g, n))
    for (auto& x : level) out.push_back(x);
  return out;
}

}  // namespace

TEST_CASE("prefix and suffix") {
  Group g(preset_system("I2:3"));
  CHECK(is_prefix(g, g.parse("s"), g.parse("st")));
  CHECK_FALSE(is_prefix(g, g.parse("t"), g.parse("st")));
  CHECK(is_suffix(g, g.parse("t"), g.parse("st")));
  CHECK(is_prefix(g, g.parse("t"), g.parse("sts")));  // sts = tst
  CHECK(is_prefix(g, g.identity(), g.parse("s")));
  CHECK(names(g, prefixes(g, g.parse("sts"))).size() == 6);
}

TEST_CASE("joins in finite dihedral groups") {
  Group a2(preset_system("I2:3"));
  auto r = join(a2, parse_all(a2, {"s", "t"}));
  REQUIRE(r.status == JoinStatus::Found);
  CHECK(a2.format(*r.value) == "sts");
  Group b2(preset_system("I2:4"));
  r = join(b2, parse_all(b2, {"st", "ts"}));
  REQUIRE(r.status == JoinStatus::Found);
  CHECK(b2.format(*r.value) == "stst");
  r = join(b2, parse_all(b2, {"s", "st"}));
  REQUIRE(r.status == JoinStatus::Found);
  CHECK(b2.format(*r.value) == "st");
  r = join(b2, {});
  REQUIRE(r.status == JoinStatus::Found);
  CHECK(r.value->is_identity());
}

TEST_CASE("joins agree with brute force") {
  Group g(preset_system("affine-A2"));
  auto xs = all_of(g, 3);
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i; j < xs.size(); ++j) {
      auto a = join(g, {xs[i], xs[j]});
      auto b = join_bruteforce(g, {xs[i], xs[j]}, 8);
      CAPTURE(g.format(xs[i]));
      CAPTURE(g.format(xs[j]));
      CHECK(a.value.has_value() == b.value.has_value());
      if (a.value && b.value) CHECK(*a.value == *b.value);
      if (!a.value) CHECK(a.status == JoinStatus::Unbounded);
    }
}

TEST_CASE("unbounded joins") {
  Group g(preset_system("I2:inf"));
  auto r = join(g, parse_all(g, {"s", "t"}));
  CHECK(r.status == JoinStatus::Unbounded);
  CHECK_FALSE(r.value.has_value());
  r = join_bruteforce(g, parse_all(g, {"s", "t"}), 6);
  CHECK(r.status == JoinStatus::NoUpperBoundWithinCap);
  CHECK(std::string(to_string(JoinStatus::Unbounded)) != to_string(JoinStatus::Found));
}

TEST_CASE("join below an upper bound") {
  Group g(preset_system("I2:5"));
  Element u = g.parse("ststs");
  CHECK(g.format(join_below(g, parse_all(g, {"st", "t"}), u)) == "ststs");
  CHECK(g.format(join_below(g, parse_all(g, {"st", "s"}), u)) == "st");
}

TEST_CASE("minimal prefix containing a root") {
  Group g(preset_system("I2:3"));
  Element w = g.parse("sts");
  int mid = id_of(g, {1, 1});
  // a_s + a_t lies in Phi(st) and Phi(ts).
  CHECK_THROWS(min_prefix_containing(g, w, mid));
  CHECK(g.format(min_prefix_containing(g, w, 0)) == "s");
  CHECK(g.format(min_prefix_containing(g, w, 1)) == "t");
  Group b(preset_system("affine-B2"));
  Element x = b.parse("stuts");
  for (int r : short_inversions_direct(b, x)) CHECK(min_prefix_containing(b, x, r) == min_prefix_containing_greedy(b, x, r));
  for (int b : short_inversions_direct(g, w)) CHECK(min_prefix_containing(g, w, b) == min_prefix_containing_greedy(g, w, b));
}

TEST_CASE("canonical join representation") {
  Group a2(preset_system("I2:3"));
  CHECK(names(a2, canonical_join_representation(a2, a2.parse("sts"))) == std::vector<std::string>{"s", "t"});
  CHECK(names(a2, canonical_join_representation(a2, a2.parse("st"))) == std::vector<std::string>{"st"});
  CHECK(canonical_join_representation(a2, a2.identity()).empty());
  Group a1(preset_system("I2:inf"));
  CHECK(names(a1, canonical_join_representation(a1, a1.parse("stst"))) == std::vector<std::string>{"stst"});
  auto d = phi1_decomposition(a2, a2.parse("sts"));
  REQUIRE(d.size() == 2);
  CHECK(a2.format(d.at(0)) == "s");
  CHECK(a2.format(d.at(1)) == "t");
}

TEST_CASE("geodesics and convexity") {
  Group g(preset_system("I2:3"));
  CHECK(geodesic_elements(g, g.identity(), g.parse("sts")).size() == 6);
  CHECK(names(g, geodesic_elements(g, g.identity(), g.parse("st"))) == std::vector<std::string>{"e", "s", "st"});
  CHECK(is_convex(g, parse_all(g, {"", "s"})));
  CHECK_FALSE(is_convex(g, parse_all(g, {"", "st"})));
  CHECK(is_convex(g, prefixes(g, g.parse("sts"))));
}

TEST_CASE("join-irreducibles") {
  Group g(preset_system("I2:3"));
  auto P = prefixes(g, g.parse("sts"));
  std::vector<std::string> want{"s", "st", "t", "ts"};
  CHECK(names(g, join_irreducibles(g, P)) == want);
  CHECK(names(g, single_lower_cover(g, P)) == want);
}
