#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "helpers.hpp"

using namespace coxeter;
using testing::root_of;

TEST_CASE("Coxeter matrix validation") {
  CHECK_NOTHROW(CoxeterMatrix({{1, 3}, {3, 1}}));
  CHECK_THROWS_AS(CoxeterMatrix({{1, 3}, {4, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(CoxeterMatrix({{2, 3}, {3, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(CoxeterMatrix({{1, 1}, {1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(CoxeterMatrix({{1, 3}, {3}}), std::invalid_argument);
  CHECK(CoxeterMatrix({{1, 3, 2}, {3, 1, 4}, {2, 4, 1}}).conductor() == 12);
  CHECK(CoxeterMatrix({{1, 0}, {0, 1}}).conductor() == 2);
  CHECK(CoxeterMatrix(std::vector<std::vector<int>>{{1}}).conductor() == 2);
}

TEST_CASE("system construction") {
  CoxeterSystem sys(linear_matrix({3, 7}), {"s", "t", "u"});
  CHECK(sys.rank() == 3);
  CHECK(sys.field()->conductor() == 42);
  CHECK(sys.generator_index("u") == 2);
  CHECK(sys.generator_index("x") == -1);
  for (int i = 0; i < 3; ++i) {
    CHECK(sys.gram()(i, i) == AlgebraicReal(1));
    for (int j = 0; j < 3; ++j) CHECK(sys.gram()(i, j) == sys.gram()(j, i));
  }
  CHECK(sys.gram()(0, 2).is_zero());
  CHECK_THROWS_AS(CoxeterSystem(linear_matrix({3}), {"s", "s"}), std::invalid_argument);
  CHECK_THROWS_AS(CoxeterSystem(linear_matrix({3}), {"s", "a,b"}), std::invalid_argument);
  CHECK_THROWS_AS(CoxeterSystem(linear_matrix({3}), {"s"}), std::invalid_argument);
  CHECK(default_generator_names(3) == std::vector<std::string>{"s", "t", "u"});
  CHECK(default_generator_names(10)[9] == "s9");
}

TEST_CASE("group files") {
  auto j = nlohmann::json::parse(R"({"generators": ["s","t","u"], "matrix": [[1,3,2],[3,1,"inf"],[2,0,1]]})");
  CoxeterSystem sys = system_from_json(j);
  CHECK(sys.matrix()(1, 2) == kInfinity);
  CHECK(sys.matrix()(2, 1) == kInfinity);
  CHECK_THROWS_AS(system_from_json(nlohmann::json::parse(R"({"matrix": [[1,3],[4,1]]})")), std::invalid_argument);
  CHECK_THROWS_AS(system_from_json(nlohmann::json::parse(R"({"matrix": [[1,"x"],["x",1]]})")), std::invalid_argument);
  CHECK(system_from_json(system_to_json(sys)).matrix().entries() == sys.matrix().entries());
  auto k = nlohmann::json::parse(R"({"matrix": [[1,5],[5,1]]})");
  CHECK(system_from_json(k).generators() == std::vector<std::string>{"s", "t"});
  CHECK_THROWS_WITH_AS(load_system_file("/nonexistent/file.json"), doctest::Contains("cannot open"), std::invalid_argument);
  std::string path = "coxeter_test_bad.json";
  std::ofstream(path) << "{ not json";
  CHECK_THROWS_WITH_AS(load_system_file(path), doctest::Contains("not valid JSON"), std::invalid_argument);
  std::remove(path.c_str());
}

TEST_CASE("presets") {
  CHECK(preset_system("affine-G2").matrix().entries() == linear_matrix({3, 6}).entries());
  CHECK(preset_system("I2:inf").matrix()(0, 1) == kInfinity);
  CHECK(preset_system("I2:5").matrix()(0, 1) == 5);
  CHECK(preset_system("affine-A1").matrix()(0, 1) == kInfinity);
  CHECK(preset_system("affine-A2").matrix().entries() == cycle_matrix({3, 3, 3}).entries());
  CHECK(preset_system("affine-F4").rank() == 5);
  CHECK(preset_system("affine-D4").rank() == 5);
  CHECK(preset_system("rank3:II:5:6").matrix()(1, 2) == 6);
  CHECK(preset_system("right-angled:4:0-1,1-2,2-3,3-0").matrix()(0, 1) == kInfinity);
  CHECK(preset_system("right-angled:4:0-1,1-2,2-3,3-0").matrix()(0, 2) == 2);
  CHECK(preset_system("complete:3:3,4,5").matrix()(1, 2) == 5);
  CHECK(preset_system("linear:3,inf").matrix()(1, 2) == kInfinity);
  CHECK_THROWS_AS(preset_system("rank3:I:3:6"), PresetError);
  CHECK_THROWS_AS(preset_system("rank3:II:4:5"), PresetError);
  CHECK_THROWS_AS(preset_system("rank3:III:4:4"), PresetError);
  CHECK_THROWS_AS(preset_system("affine-G3"), PresetError);
  CHECK_THROWS_AS(preset_system("bogus"), PresetError);
  CHECK_THROWS_AS(preset_system("I2:1"), PresetError);
  CHECK_FALSE(preset_help().empty());
}

TEST_CASE("reflections") {
  Group a2(preset_system("I2:3"));
  const auto& G = a2.system().gram();
  Root as = root_of(a2, {1, 0}), at = root_of(a2, {0, 1});
  CHECK(RootEqual{}(reflect(G, 0, as), root_of(a2, {-1, 0})));
  CHECK(RootEqual{}(reflect(G, 0, at), root_of(a2, {1, 1})));
  Group a1(preset_system("I2:inf"));
  CHECK(RootEqual{}(reflect(a1.system().gram(), 0, root_of(a1, {0, 1})), root_of(a1, {2, 1})));
}

TEST_CASE("action") {
  Group g(preset_system("I2:3"));
  Root at = root_of(g, {0, 1}), as = root_of(g, {1, 0});
  CHECK(RootEqual{}(g.act(g.identity(), at), at));
  CHECK(RootEqual{}(g.act(g.parse("st"), at), root_of(g, {-1, -1})));
  CHECK(RootEqual{}(g.act(g.parse("sts"), as), root_of(g, {0, -1})));
  // Root handles agree with vectors.
  CHECK(g.act(g.parse("st"), g.roots().simple(1)) == negate(g.roots().find(root_of(g, {1, 1}))));
}

TEST_CASE("normal forms") {
  Group g(preset_system("I2:3"));
  CHECK(g.parse("ss").is_identity());
  CHECK(g.format(g.parse("tst")) == "sts");
  CHECK(g.format(g.parse("stst")) == "ts");
  CHECK(g.format(g.normalize(std::vector<int>{1, 0, 1, 0})) == "st");
  CHECK(g.format(g.identity()) == "e");
  CHECK(g.parse("e").is_identity());
  CHECK(g.parse("").is_identity());
  CHECK_THROWS_WITH_AS(g.parse("sxt"), doctest::Contains("unknown generator"), WordError);
  CHECK_THROWS_AS(g.normalize(std::vector<int>{0, 5}), WordError);
  Element st = g.parse("st");
  CHECK(st.right_descents() == 0b10u);
  CHECK(st.left_descents() == 0b01u);
  CHECK(g.format(g.inverse(st)) == "ts");
  CHECK(g.parse("sts").length() == 3);
  CHECK(g.is_reduced(Word{0, 1, 0}));
  CHECK_FALSE(g.is_reduced(Word{0, 1, 0, 1}));
}

TEST_CASE("multi-character generator names") {
  Group g(CoxeterSystem(linear_matrix({3, 4}), {"a1", "a2", "b"}));
  Element x = g.parse("a1,a2,a1");
  CHECK(x.length() == 3);
  CHECK(g.format(x) == "a1,a2,a1");
  CHECK(g.format(g.parse("a2,a1,a2")) == "a1,a2,a1");
  CHECK_THROWS_AS(g.parse("a1,zz"), WordError);
}

TEST_CASE("rank one") {
  Group g(CoxeterSystem(CoxeterMatrix(std::vector<std::vector<int>>{{1}}), {"s"}));
  CHECK(g.parse("sss").length() == 1);
  CHECK(g.parse("ss").is_identity());
}

TEST_CASE("length and inverse agree with inversion counts") {
  Group g(preset_system("affine-B2"));
  for (const char* w : {"stutsu", "tutsut", "ustutsu", "s", "e"}) {
    Element x = g.parse(w);
    CHECK(g.inverse(x).length() == x.length());
    CHECK(g.multiply(x, g.inverse(x)).is_identity());
  }
}
