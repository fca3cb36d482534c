#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "CLI11.hpp"
#include "coxeter/presets.hpp"
#include "coxeter/serialize.hpp"
#include "coxeter/verify.hpp"

using namespace coxeter;
using nlohmann::json;

namespace {

constexpr int kOk = 0, kVerifyFailed = 1, kUsage = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string preset, matrix_file, format = "text";
  bool json() const { return format == "json"; }
};

CoxeterSystem load_group(const Options& o) {
  if (!o.preset.empty() && !o.matrix_file.empty()) throw InputError("give either --preset or --matrix, not both");
  if (o.preset.empty() && o.matrix_file.empty()) throw InputError("no group given: use --preset NAME or --matrix FILE");
  if (!o.preset.empty()) {
    try {
      return preset_system(o.preset);
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("bad preset: ") + e.what() + "\naccepted forms: " + preset_help());
    }
  }
  try {
    return load_system_file(o.matrix_file);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("bad group file: ") + e.what());
  }
}

Element parse_word(Group& g, const std::string& w) {
  try {
    return g.parse(w);
  } catch (const WordError& e) {
    throw InputError(e.what());
  }
}

void emit(const Options& o, const json& j, const std::string& text) {
  if (o.json())
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

json words_json(Group& g, const std::vector<Element>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(g.format(x));
  return a;
}

std::string words_text(Group& g, const std::vector<Element>& xs) {
  std::string out;
  for (const auto& x : xs) out += g.format(x) + "\n";
  return out;
}

void emit_elements(const Options& o, Group& g, const ShadowSet& X) {
  emit(o, shadow_json(g, X), words_text(g, X.elements));
}

void emit_roots(const Options& o, Group& g, const RootSet& R) {
  json a = json::array();
  std::string text;
  int i = 0;
  for (int r : R) {
    json j = root_json(g, r);
    j["index"] = i;
    j["text"] = root_text(g, r);
    a.push_back(j);
    text += std::to_string(i++) + "  " + root_text(g, r) + "\n";
  }
  emit(o, json{{"size", R.size()}, {"roots", a}}, text);
}

std::string label(int m) { return m == kInfinity ? "inf" : std::to_string(m); }

int cmd_info(const Options& o) {
  CoxeterSystem sys = load_group(o);
  json rows = json::array();
  std::ostringstream t;
  t << "rank " << sys.rank() << "\ngenerators";
  for (const auto& n : sys.generators()) t << " " << n;
  t << "\nmatrix\n";
  for (int i = 0; i < sys.rank(); ++i) {
    json row = json::array();
    for (int j = 0; j < sys.rank(); ++j) {
      int m = sys.matrix()(i, j);
      row.push_back(m == kInfinity ? json("inf") : json(m));
      t << (j ? " " : "  ") << label(m);
    }
    rows.push_back(row);
    t << "\n";
  }
  t << "field Q(2cos(pi/" << sys.field()->conductor() << ")) degree " << sys.field()->degree() << "\n";
  emit(o,
       {{"rank", sys.rank()},
        {"generators", sys.generators()},
        {"matrix", rows},
        {"conductor", sys.field()->conductor()},
        {"field_degree", sys.field()->degree()}},
       t.str());
  return kOk;
}

int cmd_automaton(const Options& o, bool raw, const std::string& dot, const std::string& json_file) {
  Analysis a(load_group(o));
  const ReducedWordAutomaton& A = raw ? a.raw_automaton() : a.minimized();
  auto write = [](const std::string& path, const std::string& body) {
    std::ofstream f(path);
    if (!f) throw InputError("cannot write '" + path + "'");
    f << body;
  };
  if (!dot.empty()) write(dot, export_dot(a.group(), A));
  if (!json_file.empty()) write(json_file, export_json(a.group(), A).dump(2) + "\n");
  std::ostringstream t;
  t << (raw ? "raw" : "minimized") << " automaton: " << A.num_states() << " states, start " << A.start << "\n";
  for (int q = 0; q < A.num_states(); ++q) {
    t << q << " [" << a.group().format_word(A.state_words[q]) << "]";
    for (std::size_t s = 0; s < A.alphabet.size(); ++s)
      if (A.delta[q][s] >= 0) t << " " << A.alphabet[s] << "->" << A.delta[q][s];
    t << "\n";
  }
  emit(o, export_json(a.group(), A), t.str());
  return kOk;
}

int cmd_canonical_join(const Options& o, const std::string& word) {
  Group g(load_group(o));
  auto parts = canonical_join_representation(g, parse_word(g, word));
  std::vector<std::string> names;
  for (const auto& x : parts) names.push_back(g.format(x));
  std::sort(names.begin(), names.end());
  std::string text = "{";
  for (std::size_t i = 0; i < names.size(); ++i) text += (i ? ", " : "") + names[i];
  emit(o, names, text + "}\n");
  return kOk;
}

int cmd_witness(const Options& o, const std::string& word, int index) {
  Group g(load_group(o));
  Element x = parse_word(g, word);
  auto seq = inversion_sequence(g, x.word());
  if (index < 1 || index > static_cast<int>(seq.size()))
    throw InputError("root index " + std::to_string(index) + " out of range: '" + g.format(x) + "' has inversions 1.." +
                     std::to_string(seq.size()));
  int beta = seq[index - 1];
  Shadows sh(g);
  auto w = sh.minimal_witness(x, beta);
  json j{{"element", g.format(x)}, {"root", root_json(g, beta)}, {"root_text", root_text(g, beta)}};
  j["witness"] = w ? json(g.format(*w)) : json(nullptr);
  emit(o, j, root_text(g, beta) + "\n" + (w ? g.format(*w) : std::string("none")) + "\n");
  return kOk;
}

int cmd_ultralow(const Options& o, const std::string& word) {
  Group g(load_group(o));
  Element x = parse_word(g, word);
  Shadows sh(g);
  json items = json::array();
  std::string text;
  bool all = true;
  for (int beta : short_inversions_evolution(g, x)) {
    auto w = sh.minimal_witness(x, beta);
    all = all && w.has_value();
    items.push_back({{"root_text", root_text(g, beta)}, {"witness", w ? json(g.format(*w)) : json(nullptr)}});
    text += root_text(g, beta) + "  " + (w ? g.format(*w) : std::string("none")) + "\n";
  }
  emit(o, {{"element", g.format(x)}, {"ultra_low", all}, {"short_inversions", items}},
       std::string(all ? "true" : "false") + "\n" + text);
  return kOk;
}

int cmd_conetype_equal(const Options& o, const std::string& w1, const std::string& w2) {
  Analysis a(load_group(o));
  Element x = parse_word(a.group(), w1), y = parse_word(a.group(), w2);
  bool eq = cone_type_equal(a.minimized(), x, y);
  emit(o, eq, eq ? "true\n" : "false\n");
  return kOk;
}

const std::vector<std::string> kTablePresets{"affine-A2", "affine-B2", "affine-G2",
                                             "affine-A3", "affine-B3", "affine-C3"};
const std::vector<std::string> kExtendedPresets{"affine-A4", "affine-D4", "affine-F4"};

int cmd_table(const Options& o, bool extended) {
  std::vector<std::pair<std::string, CoxeterSystem>> groups;
  if (!o.preset.empty() || !o.matrix_file.empty()) {
    groups.emplace_back(o.preset.empty() ? o.matrix_file : o.preset, load_group(o));
  } else {
    auto names = kTablePresets;
    if (extended) names.insert(names.end(), kExtendedPresets.begin(), kExtendedPresets.end());
    for (const auto& n : names) groups.emplace_back(n, preset_system(n));
  }
  json rows = json::array();
  std::string text = "# group E S L L0 Gamma Gamma0\n";
  for (auto& [name, sys] : groups) {
    std::cerr << "table: " << name << "\n";
    Analysis a(sys);
    CountRow r = a.counts();
    rows.push_back({{"group", name}, {"E", r.E}, {"S", r.S}, {"L", r.L}, {"L0", r.L0},
                    {"Gamma", r.Gamma}, {"Gamma0", r.Gamma0}});
    text += name + " " + to_string(r) + "\n";
  }
  emit(o, rows, text);
  return kOk;
}

int cmd_verify(const Options& o, const std::string& suite, bool optional) {
  SuiteOptions opt;
  opt.include_optional = optional;
  opt.threads = default_threads();
  opt.progress = &std::cerr;
  auto results = suite == "props" ? run_property_suite(opt) : run_paper_suite(opt);
  bool ok = true;
  json a = json::array();
  std::ostringstream t;
  for (const auto& r : results) {
    ok = ok && r.pass;
    a.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    t << (r.pass ? "PASS " : "FAIL ") << r.name << "  " << r.detail << "\n";
  }
  // Timings stay out of stdout so repeated runs are identical.
  emit(o, {{"suite", suite}, {"pass", ok}, {"checks", a}}, t.str());
  return ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in Coxeter groups: roots, low elements, Garside shadows, cone-type automata."};
  app.require_subcommand(1);
  Options o;
  app.add_option("--preset", o.preset, "named group, one of: " + preset_help());
  app.add_option("--matrix", o.matrix_file, "JSON group file {\"generators\": [...], \"matrix\": [[...]]}");
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));

  std::function<int()> run;
  auto sub = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  sub("info", "rank, labels and field")->callback([&] { run = [&] { return cmd_info(o); }; });
  sub("elementary", "elementary roots E")->callback([&] {
    run = [&] {
      Analysis a(load_group(o));
      emit_roots(o, a.group(), a.elementary());
      return kOk;
    };
  });
  sub("super-elementary", "super-elementary roots S")->callback([&] {
    run = [&] {
      Analysis a(load_group(o));
      emit_roots(o, a.group(), a.algorithm1().super_elementary);
      return kOk;
    };
  });
  sub("low", "low elements L")->callback([&] {
    run = [&] {
      Analysis a(load_group(o));
      emit_elements(o, a.group(), a.low());
      return kOk;
    };
  });
  sub("gates", "gates of the cone types (smallest Garside shadow)")->callback([&] {
    run = [&] {
      Analysis a(load_group(o));
      emit_elements(o, a.group(), a.gates());
      return kOk;
    };
  });
  sub("tight-gates", "tight gates, computed without the automaton")->callback([&] {
    run = [&] {
      Analysis a(load_group(o));
      emit_elements(o, a.group(), a.algorithm1().tight_gates);
      return kOk;
    };
  });

  bool raw = false, min = false;
  std::string dot_file, json_file;
  auto* aut = sub("automaton", "reduced-word automaton (minimized by default)");
  auto* raw_flag = aut->add_flag("--raw", raw, "unminimized automaton on elementary-root sets");
  aut->add_flag("--min", min, "minimized automaton")->excludes(raw_flag);
  aut->add_option("--dot", dot_file, "write Graphviz output to FILE");
  aut->add_option("--json", json_file, "write JSON output to FILE");
  aut->callback([&] { run = [&] { return cmd_automaton(o, raw, dot_file, json_file); }; });

  std::string w1, w2;
  int index = 0;
  auto* cj = sub("canonical-join", "canonical join representation of WORD");
  cj->add_option("WORD", w1)->required();
  cj->callback([&] { run = [&] { return cmd_canonical_join(o, w1); }; });

  auto* wit = sub("witness", "minimal witness for the ROOTINDEX-th inversion (1-based) of WORD");
  wit->add_option("WORD", w1)->required();
  wit->add_option("ROOTINDEX", index)->required();
  wit->callback([&] { run = [&] { return cmd_witness(o, w1, index); }; });

  auto* ul = sub("ultralow", "is WORD ultra-low; witnesses of its short inversions");
  ul->add_option("WORD", w1)->required();
  ul->callback([&] { run = [&] { return cmd_ultralow(o, w1); }; });

  auto* ce = sub("conetype-equal", "do two elements have the same cone type");
  ce->add_option("WORD1", w1)->required();
  ce->add_option("WORD2", w2)->required();
  ce->callback([&] { run = [&] { return cmd_conetype_equal(o, w1, w2); }; });

  bool extended = false;
  auto* tb = sub("table", "count row |E| |S| |L| |L0| |Gamma| |Gamma0|; all affine rows without a group");
  tb->add_flag("--extended", extended, "add affine A4, D4 and F4 to the default rows");
  tb->callback([&] { run = [&] { return cmd_table(o, extended); }; });

  std::string suite = "paper";
  bool optional = false;
  auto* vf = sub("verify", "run the acceptance or property checks");
  vf->add_option("--suite", suite, "paper or props")->check(CLI::IsMember({"paper", "props"}));
  vf->add_flag("--optional", optional, "include the slow optional rows");
  vf->callback([&] { run = [&] { return cmd_verify(o, suite, optional); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }
  try {
    return run();
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
