#include "doctest.h"

#include "coxeter/verify.hpp"
#include "helpers.hpp"

using namespace coxeter;
using testing::id_of;
using testing::names;

TEST_CASE("infinite dihedral shadows") {
  Group g(preset_system("I2:inf"));
  Shadows sh(g);
  std::vector<std::string> esst{"e", "s", "t"}, st{"s", "t"};
  CHECK(names(g, sh.low().elements) == esst);
  CHECK(names(g, tight(g, sh.low()).elements) == st);
  CHECK(names(g, sh.algorithm1().tight_gates.elements) == st);
  CHECK(sh.algorithm1().super_elementary == RootSet{0, 1});
  CHECK(names(g, sh.smallest_garside_shadow().elements) == esst);
  CHECK(names(g, sh.ultra_low().elements) == esst);

  CHECK(sh.minimal_witness(g.parse("s"), 0) == g.parse("s"));
  int b = id_of(g, {2, 1});
  CHECK_FALSE(sh.minimal_witness(g.parse("st"), b).has_value());
  CHECK_FALSE(sh.is_gate(g.parse("st")));
  CHECK(sh.is_gate(g.parse("t")));
  CHECK_THROWS_AS(sh.minimal_witness(g.parse("s"), 1), std::invalid_argument);
  ShadowSet G = sh.smallest_garside_shadow();
  CHECK(sh.garside_projection(G, g.parse("stst")) == g.parse("s"));
  CHECK(sh.garside_projection(G, g.identity()).is_identity());
}

TEST_CASE("finite dihedral groups are their own shadow") {
  for (int m = 3; m <= 6; ++m) {
    CAPTURE(m);
    Group g(preset_system("I2:" + std::to_string(m)));
    Shadows sh(g);
    CHECK(sh.elementary().size() == static_cast<std::size_t>(m));
    CHECK(sh.low().size() == static_cast<std::size_t>(2 * m));
    CHECK(sh.smallest_garside_shadow().size() == static_cast<std::size_t>(2 * m));
  }
}

TEST_CASE("boundary roots") {
  Group g(preset_system("I2:3"));
  Shadows sh(g);
  CHECK(sh.boundary_roots(g.parse("sts")) == RootSet{0, 1});
  CHECK(sh.boundary_roots(g.identity()).empty());
}

TEST_CASE("affine A2") {
  Analysis a(preset_system("affine-A2"));
  CHECK(to_string(a.counts()) == "6 6 16 9 16 9");
  auto& sh = a.shadows();
  CHECK(is_suffix_closed(a.group(), a.low().elements));
  CHECK(names(a.group(), sh.smallest_garside_shadow().elements) == names(a.group(), a.gates().elements));
  CHECK(names(a.group(), smallest_garside_shadow_by_joins(a.group(), 40).elements) ==
        names(a.group(), a.gates().elements));
  CHECK(names(a.group(), sh.ultra_low().elements) == names(a.group(), a.gates().elements));
  // The pool search and a plain BFS find the same witnesses.
  for (const auto& x : a.low().elements)
    for (int beta : right_descent_roots(a.group(), x)) {
      auto bfs = sh.minimal_witness_bfs(x, beta);
      CHECK_FALSE(bfs.cap_exhausted);
      CHECK(bfs.witness == sh.minimal_witness(x, beta));
    }
  for (const auto& x : a.gates().elements) CHECK(sh.is_gate(x));
}

TEST_CASE("rank three ultra-low sets") {
  Analysis a(preset_system("rank3:II:5:5"));
  CHECK(a.gates().size() == 26);
  CHECK(names(a.group(), a.shadows().ultra_low().elements) == names(a.group(), a.gates().elements));
}

TEST_CASE("shadow kinds") {
  CHECK(std::string(to_string(ShadowKind::Gates)) != to_string(ShadowKind::Low));
  Group g(preset_system("I2:3"));
  ShadowSet X{ShadowKind::Custom, {g.identity(), g.parse("s")}};
  CHECK(X.contains(g.parse("s")));
  CHECK_FALSE(X.contains(g.parse("t")));
}
