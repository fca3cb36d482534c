#include "doctest.h"

#include "coxeter/verify.hpp"
#include "helpers.hpp"

using namespace coxeter;

namespace {

// Reduced words of each length, counted by walking elements and their reduced words.
std::vector<std::string> growth_oracle(Group& g, int n) {
  std::vector<std::string> out;
  std::vector<std::size_t> counts(n + 1, 0);
  // Number of reduced words of w = sum over right descents s of words of ws.
  std::unordered_map<Element, std::size_t, ElementHash> words;
  for (auto& level : elements_up_to(g, n))
    for (auto& w : level) {
      std::size_t c = w.is_identity() ? 1 : 0;
      for (int s = 0; s < g.rank(); ++s)
        if (w.has_right_descent(s)) c += words.at(g.right_multiply(w, s));
      words[w] = c;
      counts[w.length()] += c;
    }
  for (auto c : counts) out.push_back(std::to_string(c));
  return out;
}

}  // namespace

TEST_CASE("small automata") {
  {
    Analysis a(preset_system("I2:inf"));
    CHECK(a.minimized().num_states() == 3);
    CHECK(growth_series(a.minimized(), 3) == std::vector<std::string>{"1", "2", "2", "2"});
  }
  {
    Analysis a(preset_system("I2:3"));
    CHECK(a.minimized().num_states() == 6);
    CHECK(growth_series(a.minimized(), 4) == std::vector<std::string>{"1", "2", "2", "2", "0"});
    CHECK(a.minimized().accepts(a.group().parse("sts").word()));
    CHECK_FALSE(a.minimized().accepts(Word{0, 1, 0, 1}));
  }
  {
    CoxeterSystem sys(CoxeterMatrix(std::vector<std::vector<int>>{{1}}), {"s"});
    Analysis a(sys);
    CHECK(a.minimized().num_states() == 2);
    CHECK(growth_series(a.minimized(), 2) == std::vector<std::string>{"1", "1", "0"});
  }
}

TEST_CASE("minimization and gates") {
  Analysis a(preset_system("affine-B2"));
  const auto& raw = a.raw_automaton();
  const auto& mz = a.minimization();
  CHECK(mz.automaton.minimized);
  CHECK(mz.automaton.num_states() == 24);
  CHECK(static_cast<int>(mz.state_map.size()) == raw.num_states());
  CHECK(a.gates().size() == 24);
  CHECK(isomorphic(minimize(mz.automaton).automaton, mz.automaton));
  CHECK(growth_series(a.minimized(), 6) == growth_oracle(a.group(), 6));
  CHECK(growth_series(raw, 6) == growth_oracle(a.group(), 6));
}

TEST_CASE("cone types") {
  Analysis a(preset_system("I2:inf"));
  Group& g = a.group();
  CHECK(cone_type_equal(a.minimized(), g.parse("s"), g.parse("sts")));
  CHECK_FALSE(cone_type_equal(a.minimized(), g.parse("s"), g.parse("t")));
  CHECK_FALSE(cone_type_equal(a.minimized(), g.identity(), g.parse("s")));
  const auto& tg = a.algorithm1().tight_gates.elements;
  CHECK(cone_type_equal_tight(g, tg, g.parse("s"), g.parse("sts")));
  CHECK_FALSE(cone_type_equal_tight(g, tg, g.parse("ts"), g.parse("st")));
}

TEST_CASE("export and round trip") {
  Analysis a(preset_system("affine-A2"));
  auto j = export_json(a.group(), a.minimized());
  CHECK(j.dump() == export_json(a.group(), a.minimized()).dump());
  auto back = import_json(j);
  CHECK(isomorphic(back, a.minimized()));
  CHECK(back.num_states() == a.minimized().num_states());
  std::string dot = export_dot(a.group(), a.minimized());
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("->") != std::string::npos);
  CHECK_THROWS(import_json(nlohmann::json::parse(R"({"alphabet": ["s"]})")));
}
