#include "coxeter/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "coxeter/presets.hpp"
#include "coxeter/weak_order.hpp"

namespace coxeter {

std::string to_string(const CountRow& r) {
  std::ostringstream os;
  os << r.E << " " << r.S << " " << r.L << " " << r.L0 << " " << r.Gamma << " " << r.Gamma0;
  return os.str();
}

Analysis::Analysis(CoxeterSystem sys)
    : g_(std::make_unique<Group>(std::move(sys))), sh_(std::make_unique<Shadows>(*g_)) {}

const ShadowSet& Analysis::tight_low() {
  if (!tight_low_) tight_low_ = tight(*g_, low());
  return *tight_low_;
}

const ReducedWordAutomaton& Analysis::raw_automaton() {
  if (!raw_) raw_ = build_bh_automaton(*g_, elementary());
  return *raw_;
}

const Minimization& Analysis::minimization() {
  if (!min_) min_ = minimize(raw_automaton());
  return *min_;
}

const GateTable& Analysis::gate_table() {
  if (!gate_table_) gate_table_ = coxeter::gates(*g_, minimized());
  return *gate_table_;
}

const ShadowSet& Analysis::gates() {
  if (!gates_) gates_ = ShadowSet{ShadowKind::Gates, gate_table().gates};
  return *gates_;
}

CountRow Analysis::counts() {
  return {elementary().size(),         algorithm1().super_elementary.size(), low().size(),
          tight_low().size(),          gates().size(),                       algorithm1().tight_gates.size()};
}

int default_threads() {
  if (const char* env = std::getenv("COXETER_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

namespace {

using Clock = std::chrono::steady_clock;

// A sub-check returns an empty string on success, otherwise what went wrong.
struct Task {
  std::string name;
  std::function<std::string()> fn;
  double limit = 0;  // seconds, 0 for none
};

std::vector<CheckResult> run_tasks(const std::vector<Task>& tasks, const SuiteOptions& opt) {
  std::vector<CheckResult> out(tasks.size());
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      const Task& t = tasks[i];
      auto t0 = Clock::now();
      std::string err;
      try {
        err = t.fn();
      } catch (const std::exception& e) {
        err = std::string("exception: ") + e.what();
      }
      double sec = std::chrono::duration<double>(Clock::now() - t0).count();
      if (err.empty() && t.limit > 0 && sec > t.limit) {
        std::ostringstream os;
        os << "took " << sec << " s, limit " << t.limit << " s";
        err = os.str();
      }
      out[i] = {t.name, err.empty(), err, sec};
      if (opt.progress) {
        std::lock_guard<std::mutex> lock(mu);
        *opt.progress << (err.empty() ? "  ok   " : "  FAIL ") << t.name << " (" << sec << " s)"
                      << (err.empty() ? "" : ": " + err) << "\n";
      }
    }
  };
  int n = std::max(1, std::min<int>(opt.threads, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return out;
}

// Folds sub-check results into one line.
CheckResult fold(const std::string& name, const std::vector<CheckResult>& subs, double wall, double limit = 0) {
  CheckResult r{name, true, "", wall};
  std::ostringstream os;
  int failed = 0;
  for (const auto& s : subs) {
    if (!s.pass) {
      r.pass = false;
      if (failed++ < 4) os << (failed > 1 ? "; " : "") << s.name << ": " << s.detail;
    }
  }
  if (limit > 0 && r.seconds > limit) {
    r.pass = false;
    os << (failed ? "; " : "") << "total " << r.seconds << " s over limit " << limit << " s";
  }
  if (r.pass) {
    std::ostringstream ok;
    ok << subs.size() << (subs.size() == 1 ? " check" : " checks");
    r.detail = ok.str();
  } else {
    if (failed > 4) os << "; and " << failed - 4 << " more";
    r.detail = os.str();
  }
  return r;
}

std::string words(Group& g, const std::vector<Element>& xs, std::size_t limit = 8) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size() && i < limit; ++i) s += (i ? "," : "") + g.format(xs[i]);
  if (xs.size() > limit) s += ",...";
  return s + "}";
}

std::vector<Element> sorted(std::vector<Element> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Set difference report for two sorted element lists.
std::string compare_sets(Group& g, const std::string& what, const std::vector<Element>& got,
                         const std::vector<Element>& want) {
  if (got == want) return "";
  std::vector<Element> extra, missing;
  std::set_difference(got.begin(), got.end(), want.begin(), want.end(), std::back_inserter(extra));
  std::set_difference(want.begin(), want.end(), got.begin(), got.end(), std::back_inserter(missing));
  std::ostringstream os;
  os << what << ": sizes " << got.size() << " vs " << want.size();
  if (!extra.empty()) os << ", extra " << words(g, extra);
  if (!missing.empty()) os << ", missing " << words(g, missing);
  return os.str();
}

Word alternating(int a, int b, int k) {
  Word w;
  for (int i = 0; i < k; ++i) w.push_back(static_cast<std::uint8_t>(i % 2 ? b : a));
  return w;
}

Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Elements of the parabolic subgroup W_{s,t}; m must be finite.
std::vector<Element> dihedral_parabolic(Group& g, int s, int t) {
  int m = g.system().matrix()(s, t);
  std::vector<Element> out;
  for (int k = 0; k <= m; ++k) {
    out.push_back(g.normalize(alternating(s, t, k)));
    out.push_back(g.normalize(alternating(t, s, k)));
  }
  return sorted(out);
}

std::vector<Element> generators_of(Group& g) {
  std::vector<Element> out;
  for (int s = 0; s < g.rank(); ++s) out.push_back(g.generator(s));
  return sorted(out);
}

std::vector<Element> all_elements(Group& g, int n) {
  std::vector<Element> out;
  for (auto& level : elements_up_to(g, n))
    for (auto& x : level) out.push_back(x);
  return out;
}

// 2cos(pi/m) as a field element.
AlgebraicReal two_cos(Group& g, int m) { return AlgebraicReal(-2) * embed_cos(g.system().field(), m); }

Root make_root(std::initializer_list<AlgebraicReal> c) {
  Root v(static_cast<Eigen::Index>(c.size()));
  Eigen::Index i = 0;
  for (const auto& x : c) v(i++) = x;
  return v;
}

// ------------------------------------------------------------------ criteria

struct PublishedRow {
  const char* preset;
  CountRow want;
  double limit;
};

const std::vector<PublishedRow>& published_rows() {
  static const std::vector<PublishedRow> rows = {
      {"affine-A2", {6, 6, 16, 9, 16, 9}, 10},
      {"affine-B2", {8, 8, 25, 14, 24, 13}, 10},
      {"affine-G2", {12, 12, 49, 26, 41, 21}, 10},
      {"affine-A3", {12, 12, 125, 28, 125, 28}, 300},
      {"affine-B3", {18, 18, 343, 66, 315, 58}, 300},
      {"affine-C3", {18, 18, 343, 66, 317, 58}, 300},
  };
  return rows;
}

const PublishedRow kAffineA4{"affine-A4", {20, 20, 1296, 75, 1296, 75}, 300};

std::string check_row(const PublishedRow& row) {
  Analysis a(preset_system(row.preset));
  CountRow got = a.counts();
  if (got == row.want) return "";
  return "got (" + to_string(got) + "), want (" + to_string(row.want) + ")";
}

struct UltraLowCase {
  const char* preset;
  std::size_t want;
};

std::string check_ultra_low(const UltraLowCase& c) {
  Analysis a(preset_system(c.preset));
  Group& g = a.group();
  const auto& gamma = a.gates().elements;
  ShadowSet U = a.shadows().ultra_low();
  std::ostringstream os;
  if (gamma.size() != c.want) os << "|Gamma| = " << gamma.size() << ", want " << c.want << "; ";
  if (U.size() != c.want) os << "|U| = " << U.size() << ", want " << c.want << "; ";
  std::string d = compare_sets(g, "U vs Gamma", U.elements, gamma);
  if (!d.empty()) os << d << "; ";
  for (const auto& x : gamma)
    if (!a.shadows().is_ultra_low(x)) {
      os << "gate " << g.format(x) << " is not ultra-low";
      break;
    }
  return os.str();
}

std::string check_tight_formula(const std::string& preset) {
  Analysis a(preset_system(preset));
  std::size_t E = a.elementary().size(), n = static_cast<std::size_t>(a.group().rank());
  std::size_t G0 = a.algorithm1().tight_gates.size();
  if (G0 == 2 * E - n) return "";
  std::ostringstream os;
  os << "|Gamma0| = " << G0 << " but 2|E| - |S| = " << 2 * E - n;
  return os.str();
}

std::string check_right_angled(const std::string& preset) {
  Analysis a(preset_system(preset));
  return compare_sets(a.group(), "Gamma0 vs S", a.algorithm1().tight_gates.elements, generators_of(a.group()));
}

std::string check_complete_graph(const std::string& preset) {
  Analysis a(preset_system(preset));
  Group& g = a.group();
  std::vector<Element> want;
  for (int s = 0; s < g.rank(); ++s)
    for (int t = s + 1; t < g.rank(); ++t) {
      int m = g.system().matrix()(s, t);
      if (m == kInfinity) continue;
      Element longest = g.normalize(alternating(s, t, m));
      for (const auto& x : dihedral_parabolic(g, s, t))
        if (!x.is_identity() && x != longest) want.push_back(x);
    }
  return compare_sets(g, "Gamma0 vs dihedral parabolics", a.algorithm1().tight_gates.elements, sorted(want));
}

// X from the rank-3 tables: both finite dihedral parabolics without e and longest elements.
std::vector<Element> dihedral_core(Group& g) {
  std::vector<Element> X;
  for (auto [s, t] : {std::pair{0, 1}, std::pair{1, 2}}) {
    Element longest = g.normalize(alternating(s, t, g.system().matrix()(s, t)));
    for (const auto& x : dihedral_parabolic(g, s, t))
      if (!x.is_identity() && x != longest) X.push_back(x);
  }
  return sorted(X);
}

struct Fixture {
  Word word;
  Root final_root;
};

std::string check_appendix(const std::string& preset, const std::function<std::vector<Fixture>(Group&)>& make) {
  Analysis a(preset_system(preset));
  Group& g = a.group();
  std::vector<Fixture> fx = make(g);
  std::vector<Element> X = dihedral_core(g);
  std::vector<Element> want = X;
  for (const auto& f : fx) want.push_back(g.normalize(f.word));
  want = sorted(want);
  std::ostringstream os;
  std::string d = compare_sets(g, "Gamma0", a.algorithm1().tight_gates.elements, want);
  if (!d.empty()) os << d << "; ";
  for (const auto& f : fx) {
    Element x = g.normalize(f.word);
    if (x.length() != static_cast<int>(f.word.size())) os << g.format_word(f.word) << " is not reduced; ";
    RootSet R = right_descent_roots(g, x);
    int id = g.roots().find(f.final_root);
    if (R.size() != 1 || id < 0 || R[0] != id) os << "final root of " << g.format(x) << " differs; ";
  }
  // Final roots of X are the positive roots of the two parabolic subsystems.
  RootSet finals, parabolic;
  for (const auto& x : X)
    for (int r : right_descent_roots(g, x)) finals.push_back(r);
  for (auto [s, t] : {std::pair{0, 1}, std::pair{1, 2}})
    for (int r : inversion_set(g, g.normalize(alternating(s, t, g.system().matrix()(s, t))))) parabolic.push_back(r);
  std::sort(finals.begin(), finals.end());
  finals.erase(std::unique(finals.begin(), finals.end()), finals.end());
  std::sort(parabolic.begin(), parabolic.end());
  parabolic.erase(std::unique(parabolic.begin(), parabolic.end()), parabolic.end());
  if (finals != parabolic) os << "final roots of X are not the parabolic positive roots; ";
  return os.str();
}

std::vector<Fixture> type_one_fixtures(Group& g) {
  const int s = 0, t = 1, u = 2, b = g.system().matrix()(1, 2);
  AlgebraicReal c = two_cos(g, b), one(1);
  Root r1 = make_root({one, one, c});
  Root r2 = make_root({c, c, c * c - one});
  Root r3 = make_root({c, c, one});
  Word tu2 = alternating(t, u, b - 2), tu1 = alternating(t, u, b - 1);
  return {{{u, t, s}, r1},
          {concat({s}, tu2), r2},
          {concat({u, s}, tu2), r3},
          {concat({t, u, s}, tu2), r3},
          {concat({u, t, u, s}, tu2), r2},
          {concat({s}, tu1), r1}};
}

std::vector<Fixture> type_two_fixtures(Group& g) {
  const int s = 0, t = 1, u = 2, a = g.system().matrix()(0, 1), b = g.system().matrix()(1, 2);
  Root r = make_root({two_cos(g, a), AlgebraicReal(1), two_cos(g, b)});
  return {{concat({u}, alternating(t, s, a - 1)), r}, {concat({s}, alternating(t, u, b - 1)), r}};
}

std::vector<Fixture> type_three_fixtures(Group& g) {
  const int s = 0, t = 1, u = 2, a = g.system().matrix()(0, 1), b = g.system().matrix()(1, 2);
  Root r = make_root({two_cos(g, a), AlgebraicReal(1), two_cos(g, b)});
  return {{{u, t, s, t}, r}, {concat({s}, alternating(t, u, b - 1)), r}};
}

std::string check_infinite_label(int a_label) {
  Analysis a(CoxeterSystem(linear_matrix({a_label, kInfinity}), default_generator_names(3)));
  Group& g = a.group();
  std::vector<Element> want = dihedral_parabolic(g, 0, 1);
  for (const auto& x : dihedral_parabolic(g, 0, 2)) want.push_back(x);
  want = sorted(want);
  std::ostringstream os;
  for (auto [what, got] : {std::pair{"L", &a.low().elements}, std::pair{"Gamma", &a.gates().elements}}) {
    std::string d = compare_sets(g, what, *got, want);
    if (!d.empty()) os << d << "; ";
  }
  std::string d = compare_sets(g, "U", a.shadows().ultra_low().elements, want);
  if (!d.empty()) os << d << "; ";
  if (want.size() != static_cast<std::size_t>(2 * a_label + 2)) os << "union has size " << want.size() << "; ";
  return os.str();
}

// The rank-4 compact hyperbolic group of the multiple-pairs example. Generators
// s,t,u,v on the cycle s-t-v-u-s, label 4 on u-v.
CoxeterSystem example_cycle_system() {
  return CoxeterSystem(CoxeterMatrix({{1, 3, 3, 2}, {3, 1, 2, 3}, {3, 2, 1, 4}, {2, 3, 4, 1}}),
                       default_generator_names(4));
}

std::string check_multiple_pairs() {
  Analysis an(example_cycle_system());
  Group& g = an.group();
  const auto& G0 = an.algorithm1().tight_gates;
  std::vector<Element> x;
  for (const char* w : {"tvutv", "uvutv", "utvutv", "vutv"}) x.push_back(g.parse(w));
  Root beta = make_root({AlgebraicReal(0), AlgebraicReal(1), two_cos(g, 4), AlgebraicReal(2)});
  int b = g.roots().find(beta);
  std::ostringstream os;
  if (b < 0) return "beta is not a root reached by the computation";
  const char* names[] = {"a", "b", "c", "d"};
  std::vector<RootSet> phi;
  for (int i = 0; i < 4; ++i) {
    if (!G0.contains(x[i])) os << names[i] << " is not a tight gate; ";
    if (right_descent_roots(g, x[i]) != RootSet{b}) os << "final roots of " << names[i] << " differ from {beta}; ";
    phi.push_back(inversion_set(g, x[i]));
  }
  if (set_intersection(phi[0], phi[1]) != RootSet{b}) os << "Phi(a) & Phi(b) != {beta}; ";
  if (set_intersection(phi[2], phi[3]) != RootSet{b}) os << "Phi(c) & Phi(d) != {beta}; ";
  if (set_intersection(phi[0], phi[3]) == RootSet{b}) os << "Phi(a) & Phi(d) == {beta}; ";
  if (set_intersection(phi[2], phi[1]) == RootSet{b}) os << "Phi(c) & Phi(b) == {beta}; ";
  return os.str();
}

std::string check_oracles(const std::string& preset) {
  Analysis a(preset_system(preset));
  Group& g = a.group();
  std::ostringstream os;
  std::string d = compare_sets(g, "Gamma0 vs tight(Gamma)", a.algorithm1().tight_gates.elements,
                               tight(g, a.gates()).elements);
  if (!d.empty()) os << d << "; ";
  d = compare_sets(g, "smallest Garside shadow vs Gamma", a.shadows().smallest_garside_shadow().elements,
                   a.gates().elements);
  if (!d.empty()) os << d << "; ";
  if (a.low().size() <= 60) {
    d = compare_sets(g, "join closure vs Gamma", smallest_garside_shadow_by_joins(g, 4 * a.shadows().max_low_length() + 4).elements,
                     a.gates().elements);
    if (!d.empty()) os << d << "; ";
  }
  return os.str();
}

std::vector<std::string> criterion_presets(bool optional) {
  std::vector<std::string> out;
  for (const auto& r : published_rows()) out.push_back(r.preset);
  if (optional) out.push_back(kAffineA4.preset);
  for (const char* p : {"rank3:I:3:7", "rank3:II:5:5", "rank3:III:4:5"}) out.push_back(p);
  for (int m = 3; m <= 8; ++m) out.push_back("I2:" + std::to_string(m));
  out.push_back("right-angled:4:0-1,1-2,2-3,3-0");
  out.push_back("complete:3:3,3,3");
  for (int a = 3; a <= 6; ++a) out.push_back("linear:" + std::to_string(a) + ",inf");
  return out;
}

// ------------------------------------------------------------------ properties

using Rng = std::mt19937_64;

Element random_element(Group& g, Rng& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), gen(0, g.rank() - 1);
  Word w(static_cast<std::size_t>(len(rng)));
  for (auto& c : w) c = static_cast<std::uint8_t>(gen(rng));
  return g.normalize(w);
}

AlgebraicReal random_value(const FieldPtr& f, Rng& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  std::vector<Rational> c(static_cast<std::size_t>(f->degree()));
  for (auto& q : c) q = Rational(num(rng), den(rng));
  return AlgebraicReal(f, c);
}

std::string prop_field(int N) {
  FieldPtr f = make_field(N);
  Rng rng(1000 + N);
  std::ostringstream os;
  for (int i = 0; i < 200; ++i) {
    AlgebraicReal x = random_value(f, rng), y = random_value(f, rng);
    if (sign(x * x) < 0) os << "sign(x*x) < 0 for " << x.to_string() << "; ";
    if (sign(x) + sign(-x) != 0) os << "sign(x) + sign(-x) != 0 for " << x.to_string() << "; ";
    if ((x + y) - y != x) os << "(x+y)-y != x; ";
    if (x * (y + 1) != x * y + x) os << "distributivity; ";
    if (!x.is_zero() && x * inv(x) != AlgebraicReal(1)) os << "x * inv(x) != 1 for " << x.to_string() << "; ";
    double d = x.to_double();
    if (std::abs(d) > 1e-6 && sign(d) != sign(x)) os << "sign disagrees with float for " << x.to_string() << "; ";
    if (!os.str().empty()) break;
  }
  // Double angle: (2cos(pi/m))^2 = 2cos(2pi/m) + 2 for every m dividing N.
  for (int m = 2; m <= N; ++m) {
    if (N % m) continue;
    AlgebraicReal c = AlgebraicReal(-2) * embed_cos(f, m);
    std::vector<Integer> d = dickson_polynomial(2 * N / m);
    AlgebraicReal c2(f, std::vector<Rational>(d.begin(), d.end()));
    if (c * c != c2 + 2) os << "double angle fails for m = " << m << "; ";
  }
  return os.str();
}

std::string prop_core(const std::string& preset) {
  Group g(preset_system(preset));
  Rng rng(7);
  std::ostringstream os;
  const GramMatrix& gram = g.system().gram();
  for (int s = 0; s < g.rank(); ++s)
    if (gram(s, s) != AlgebraicReal(1)) os << "gram diagonal is not 1; ";
  for (int s = 0; s < g.rank(); ++s)
    for (int t = 0; t < g.rank(); ++t)
      if (gram(s, t) != gram(t, s)) os << "gram is not symmetric; ";
  for (int i = 0; i < 150 && os.str().empty(); ++i) {
    Element w = random_element(g, rng, 10);
    Element v = random_element(g, rng, 10), u = random_element(g, rng, 10);
    if (w.length() != static_cast<int>(inversion_set(g, w).size())) os << "length != |Phi| for " << g.format(w) << "; ";
    if (w.length() != g.inverse(w).length()) os << "l(w) != l(w^-1) for " << g.format(w) << "; ";
    if (g.normalize(w.word()) != w) os << "normalize is not idempotent on " << g.format(w) << "; ";
    if (g.multiply(g.multiply(w, v), u) != g.multiply(w, g.multiply(v, u))) os << "multiplication is not associative; ";
    if (g.multiply(w, g.inverse(w)) != g.identity()) os << "w w^-1 != e; ";
    for (int s = 0; s < g.rank(); ++s) {
      Root r = g.act(w, g.roots().vector(g.roots().simple(s)));
      int sg = vector_sign(r);
      if (sg != 1 && sg != -1) os << "mixed signs in w alpha_s; ";
      if (bilinear(gram, r, r) != AlgebraicReal(1)) os << "<beta,beta> != 1; ";
      if ((sg < 0) != w.has_right_descent(s)) os << "right descent disagrees with sign of w alpha_s; ";
    }
    // Reflection is an involution and preserves the form.
    Root p = g.act(w, g.roots().vector(0)), q = g.act(v, g.roots().vector(g.rank() - 1));
    for (int s = 0; s < g.rank(); ++s) {
      Root sp = reflect(gram, s, p), sq = reflect(gram, s, q);
      if (!RootEqual{}(reflect(gram, s, sp), p)) os << "reflection is not an involution; ";
      if (bilinear(gram, sp, sq) != bilinear(gram, p, q)) os << "reflection does not preserve the form; ";
    }
  }
  return os.str();
}

std::string prop_short_inversions(const std::string& preset, int n) {
  Group g(preset_system(preset));
  std::ostringstream os;
  for (const auto& w : all_elements(g, n)) {
    RootSet d = short_inversions_direct(g, w), e = short_inversions_evolution(g, w);
    if (d != e) {
      os << "direct and evolution differ at " << g.format(w);
      break;
    }
    InversionData data = inversion_data(g, w);
    if (!is_subset(data.right_descent_roots, data.short_roots) || !is_subset(data.short_roots, data.roots))
      os << "descent roots not inside short inversions at " << g.format(w) << "; ";
    if (w.length() <= 6)
      for (int beta : data.roots)
        if (!cone_membership(g, beta, data.short_roots)) {
          os << "Phi(w) not in cone(Phi1(w)) at " << g.format(w) << "; ";
          break;
        }
    if (!os.str().empty()) break;
  }
  return os.str();
}

// Dominance three ways: the rank-2 procedure, the definition over all w of
// length <= cap, and the depth criterion <alpha,beta> >= 1, dp(alpha) < dp(beta).
std::string prop_dominance(const std::string& preset, int cap) {
  Group g(preset_system(preset));
  std::vector<RootSet> phis;
  for (const auto& w : all_elements(g, cap)) phis.push_back(inversion_set(g, w));
  std::set<int> roots;
  for (const auto& w : all_elements(g, 4))
    for (int r : inversion_set(g, w))
      if (depth(g, r) <= 4) roots.insert(r);
  const GramMatrix& gram = g.system().gram();
  for (int b : roots)
    for (int a : roots) {
      bool brute = a != b && std::all_of(phis.begin(), phis.end(), [&](const RootSet& p) {
                     return !contains(p, b) || contains(p, a);
                   });
      bool crit = a != b && bilinear(gram, g.roots().root(a), g.roots().root(b)) >= AlgebraicReal(1) &&
                  depth(g, a) < depth(g, b);
      bool d = dominates(g, b, a);
      if (d != brute || d != crit) {
        std::ostringstream os;
        os << "dominance of root " << b << " over " << a << ": procedure " << d << ", definition " << brute
           << ", depth criterion " << crit;
        return os.str();
      }
    }
  return "";
}

std::string prop_elementary(const std::string& preset) {
  Group g(preset_system(preset));
  RootSet E = elementary_roots(g);
  std::ostringstream os;
  const auto& m = g.system().matrix();
  for (int b : E) {
    // Support is a forest without infinite bonds.
    std::uint32_t J = support(g, b);
    int nodes = std::popcount(J), edges = 0;
    for (int s = 0; s < g.rank(); ++s)
      for (int t = s + 1; t < g.rank(); ++t)
        if ((J >> s & 1u) && (J >> t & 1u) && m(s, t) != 2) {
          ++edges;
          if (m(s, t) == kInfinity) os << "elementary root with an infinite bond in its support; ";
        }
    if (edges >= nodes) os << "elementary root with a circuit in its support; ";
    for (int s = 0; s < g.rank(); ++s) {
      if (b == s) continue;
      Pairing p = g.roots().pairing(s, b);
      RootRef r = g.roots().reflect(s, b);
      if (p == Pairing::AtMostMinusOne) {
        if (!dominates(g, root_id(r), s)) os << "s beta does not dominate alpha_s; ";
      } else if (p != Pairing::AtLeastOne && !contains(E, root_id(r))) {
        os << "elementary closure fails; ";
      }
    }
    if (!os.str().empty()) break;
  }
  return os.str();
}

std::string prop_joins(const std::string& preset, int n, bool exhaustive_refinement) {
  Group g(preset_system(preset));
  std::ostringstream os;
  for (const auto& w : all_elements(g, n)) {
    std::vector<Element> R = canonical_join_representation(g, w);
    if (R.size() != right_descent_roots(g, w).size()) os << "canonical join size != |Phi^R| at " << g.format(w) << "; ";
    for (const auto& r : R)
      if (right_descent_roots(g, r).size() != 1) os << "non join-irreducible member at " << g.format(w) << "; ";
    if (!R.empty() && join_below(g, R, w) != w) os << "canonical join does not give w at " << g.format(w) << "; ";
    for (std::size_t i = 0; i < R.size(); ++i) {
      std::vector<Element> rest = R;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      if (!rest.empty() && join_below(g, rest, w) == w) os << "canonical join is redundant at " << g.format(w) << "; ";
    }
    // Every other join representation refines.
    std::vector<Element> P = prefixes(g, w);
    P.erase(std::remove(P.begin(), P.end(), g.identity()), P.end());
    std::size_t k = P.size();
    std::vector<std::vector<std::size_t>> subsets;
    if (exhaustive_refinement && k <= 12) {
      for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < k; ++i)
          if (mask >> i & 1u) s.push_back(i);
        subsets.push_back(s);
      }
    } else {
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) subsets.push_back({i, j});
    }
    for (const auto& idx : subsets) {
      std::vector<Element> Y;
      for (auto i : idx) Y.push_back(P[i]);
      if (join_below(g, Y, w) != w) continue;
      for (const auto& z : R)
        if (std::none_of(Y.begin(), Y.end(), [&](const Element& y) { return is_prefix(g, z, y); })) {
          os << "join refinement fails at " << g.format(w) << " for " << words(g, Y) << "; ";
          break;
        }
    }
    if (!os.str().empty()) break;
  }
  return os.str();
}

// Joins of pairs: brute force agrees, inversion set facts hold.
std::string prop_join_pairs(const std::string& preset, int n) {
  Group g(preset_system(preset));
  std::ostringstream os;
  std::vector<Element> xs = all_elements(g, n);
  for (std::size_t i = 0; i < xs.size() && os.str().empty(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      const Element &x = xs[i], &y = xs[j];
      int cap = 2 * n + 4;
      JoinResult a = join(g, {x, y}, cap), b = join_bruteforce(g, {x, y}, cap);
      bool af = a.status == JoinStatus::Found, bf = b.status == JoinStatus::Found;
      if (af != bf || (af && *a.value != *b.value)) {
        os << "join disagrees with brute force for " << g.format(x) << ", " << g.format(y);
        break;
      }
      if (!af) continue;
      const Element& z = *a.value;
      RootSet U = set_union(inversion_set(g, x), inversion_set(g, y));
      RootSet Z = inversion_set(g, z);
      if (!is_subset(U, Z)) os << "join inversion set misses inputs; ";
      for (int beta : Z)
        if (!cone_membership(g, beta, U)) {
          os << "join inversion outside the cone; ";
          break;
        }
      RootSet S1 = set_union(short_inversions_direct(g, x), short_inversions_direct(g, y));
      if (!is_subset(short_inversions_direct(g, z), S1)) os << "short inversions of the join not inherited; ";
      if (!os.str().empty()) break;
    }
  return os.str();
}

std::string prop_convex_prefixes(const std::string& preset) {
  Group g(preset_system(preset));
  Rng rng(11);
  for (int i = 0; i < 12; ++i) {
    Element w = random_element(g, rng, 6);
    if (!is_convex(g, prefixes(g, w))) return "prefix set of " + g.format(w) + " is not convex";
  }
  return "";
}

std::string prop_shadows(const std::string& preset) {
  Analysis a(preset_system(preset));
  Group& g = a.group();
  Shadows& sh = a.shadows();
  std::ostringstream os;
  const ShadowSet& L = a.low();
  const ShadowSet& G = a.gates();
  const ShadowSet& G0 = a.algorithm1().tight_gates;
  const ShadowSet& L0 = a.tight_low();
  // Tight sets never hold e; closure is checked with e added.
  for (auto [name, X] : {std::pair{"L", &L}, std::pair{"Gamma", &G}, std::pair{"L0", &L0}, std::pair{"Gamma0", &G0}}) {
    std::vector<Element> with_e = X->elements;
    with_e.push_back(g.identity());
    if (!is_suffix_closed(g, with_e)) os << name << " is not suffix closed; ";
  }
  std::string d = compare_sets(g, "join-irreducibles of Gamma", sorted(join_irreducibles(g, G.elements)), G0.elements);
  if (!d.empty()) os << d << "; ";
  d = compare_sets(g, "join-irreducibles of L", sorted(join_irreducibles(g, L.elements)), L0.elements);
  if (!d.empty()) os << d << "; ";
  // Gates are joins of their tight-gate prefixes.
  for (const auto& x : G.elements) {
    if (!sh.is_gate(x)) os << "gate " << g.format(x) << " fails is_gate; ";
    if (x.is_identity()) continue;
    std::vector<Element> Y;
    for (const auto& y : G0.elements)
      if (is_prefix(g, y, x)) Y.push_back(y);
    if (Y.empty() || join_below(g, Y, x) != x) os << "gate " << g.format(x) << " is not a join of tight gates; ";
  }
  // Pairing of tight gates by final root.
  std::size_t nonsimple = 0;
  for (const auto& y : G0.elements) {
    int beta = right_descent_roots(g, y).at(0);
    RootSet py = inversion_set(g, y);
    std::vector<Element> partners;
    for (const auto& x : G0.elements)
      if (right_descent_roots(g, x) == RootSet{beta} && set_intersection(inversion_set(g, x), py) == RootSet{beta})
        partners.push_back(x);
    if (y.length() == 1) {
      if (partners != std::vector<Element>{y}) os << "simple generator not self-paired; ";
      continue;
    }
    ++nonsimple;
    if (partners.size() != 1 || partners[0] == y) os << "tight gate " << g.format(y) << " has " << partners.size() << " partners; ";
  }
  if (nonsimple % 2) os << "|Gamma0 \\ S| is odd; ";
  // Tightness descends along left descents.
  for (const auto& x : L.elements) {
    if (x.length() <= 1 || right_descent_roots(g, x).size() != 1) continue;
    for (int s = 0; s < g.rank(); ++s)
      if (x.has_left_descent(s) && right_descent_roots(g, g.left_multiply(s, x)).size() != 1)
        os << "tightness does not descend at " << g.format(x) << "; ";
  }
  // Minimal witnesses: BFS oracle, suffix descent.
  for (const auto& x : L.elements) {
    for (int beta : short_inversions_direct(g, x)) {
      auto y = sh.minimal_witness(x, beta);
      WitnessRecord rec = sh.minimal_witness_bfs(x, beta);
      if (y.has_value() != rec.witness.has_value() || (y && *y != *rec.witness)) {
        os << "witness index disagrees with BFS at " << g.format(x) << "; ";
        break;
      }
      if (!y) continue;
      if (!G0.contains(*y)) os << "minimal witness outside Gamma0; ";
      if (y->length() <= 1) continue;
      for (int s = 0; s < g.rank(); ++s) {
        if (!y->has_left_descent(s) || x.has_left_descent(s)) continue;
        Element sx = g.left_multiply(s, x), sy = g.left_multiply(s, *y);
        RootRef sb = g.roots().reflect(s, beta);
        if (is_negative(sb) || set_intersection(inversion_set(g, sx), inversion_set(g, sy)) != RootSet{root_id(sb)})
          os << "witness suffix descent fails at " << g.format(x) << "; ";
        if (!G0.contains(sy)) os << "s y not a tight gate at " << g.format(x) << "; ";
      }
    }
    if (!os.str().empty()) break;
  }
  return os.str();
}

// Witness sets are convex and have the minimal witness as their least element.
std::string prop_witness_convexity(const std::string& preset, int xcap, int ycap) {
  Group g(preset_system(preset));
  Shadows sh(g);
  std::ostringstream os;
  std::vector<Element> ys = all_elements(g, ycap);
  std::vector<RootSet> phis;
  for (const auto& y : ys) phis.push_back(inversion_set(g, y));
  for (const auto& x : all_elements(g, xcap)) {
    RootSet px = inversion_set(g, x);
    for (int beta : px) {
      std::vector<Element> W;
      for (std::size_t i = 0; i < ys.size(); ++i)
        if (set_intersection(px, phis[i]) == RootSet{beta}) W.push_back(ys[i]);
      auto m = sh.minimal_witness(x, beta);
      if (W.empty()) {
        if (m && m->length() <= ycap) os << "minimal witness missed by enumeration; ";
        continue;
      }
      if (!m || *m != W.front()) {
        os << "minimal witness is not the shortest witness at " << g.format(x) << "; ";
        continue;
      }
      for (const auto& y : W)
        if (!is_prefix(g, *m, y)) os << "minimal witness is not a prefix of " << g.format(y) << "; ";
      // Convexity inside the cap: geodesics between members stay in W.
      std::unordered_set<Element, ElementHash> in(W.begin(), W.end());
      for (std::size_t i = 0; i < W.size() && i < 12; ++i)
        for (std::size_t j = i + 1; j < W.size() && j < 12; ++j)
          for (const auto& z : geodesic_elements(g, W[i], W[j]))
            if (z.length() <= ycap && !in.count(z)) os << "witness set not convex at " << g.format(x) << "; ";
    }
    if (!os.str().empty()) break;
  }
  return os.str();
}

std::string prop_automaton(const std::string& preset, int n, int samples) {
  Analysis a(preset_system(preset));
  Group& g = a.group();
  std::ostringstream os;
  const auto& raw = a.raw_automaton();
  const auto& mn = a.minimized();
  // Language: accepted exactly when reduced.
  auto check_word = [&](const Word& w) {
    bool red = g.is_reduced(w);
    if (raw.accepts(w) != red || mn.accepts(w) != red) os << "acceptance differs from reducedness on " << g.format_word(w) << "; ";
  };
  if (samples == 0) {
    Word w;
    std::function<void(int)> rec = [&](int left) {
      check_word(w);
      if (left == 0 || !os.str().empty()) return;
      for (int s = 0; s < g.rank(); ++s) {
        w.push_back(static_cast<std::uint8_t>(s));
        rec(left - 1);
        w.pop_back();
      }
    };
    rec(n);
  } else {
    Rng rng(3);
    std::uniform_int_distribution<int> len(0, n), gen(0, g.rank() - 1);
    for (int i = 0; i < samples && os.str().empty(); ++i) {
      Word w(static_cast<std::size_t>(len(rng)));
      for (auto& c : w) c = static_cast<std::uint8_t>(gen(rng));
      check_word(w);
    }
  }
  if (minimize(mn).automaton.num_states() != mn.num_states()) os << "minimization is not stable; ";
  if (static_cast<std::size_t>(mn.num_states()) != a.gates().size()) os << "|states| != |Gamma|; ";
  // m_T is a suffix of every element of its class.
  const auto& gt = a.gate_table();
  std::vector<Element> xs = all_elements(g, std::min(n, 7));
  for (const auto& x : xs) {
    int q = mn.run(x.word());
    if (q < 0 || !is_suffix(g, gt.minimal[q], x)) os << "m_T is not a suffix of " << g.format(x) << "; ";
    if (a.shadows().is_gate(x) != a.gates().contains(x)) os << "is_gate disagrees with Gamma at " << g.format(x) << "; ";
    Element p = a.shadows().garside_projection(a.gates(), x);
    if (!a.gates().contains(p) || !is_prefix(g, p, x)) os << "projection of " << g.format(x) << " is wrong; ";
    if (!os.str().empty()) break;
  }
  // Cone types: two deciders agree; prefix monotonicity as language containment.
  std::vector<Element> short_xs = all_elements(g, 4);
  std::vector<Word> probes;
  for (const auto& w : all_elements(g, 5)) probes.push_back(w.word());
  const auto& G0 = a.algorithm1().tight_gates.elements;
  for (const auto& x : short_xs)
    for (const auto& y : short_xs) {
      if (cone_type_equal(mn, x, y) != cone_type_equal_tight(g, G0, x, y))
        os << "cone type deciders disagree on " << g.format(x) << ", " << g.format(y) << "; ";
      if (!is_prefix(g, x, y)) continue;
      Word xi = g.inverse(x).word(), yi = g.inverse(y).word();
      for (const auto& w : probes) {
        Word wy = concat(yi, w), wx = concat(xi, w);
        if (mn.accepts(wy) && !mn.accepts(wx)) {
          os << "prefix monotonicity fails for " << g.format(x) << " <= " << g.format(y) << "; ";
          break;
        }
      }
    }
  // Cone type of a join is the intersection of cone types.
  const auto& G = a.gates().elements;
  std::size_t limit = std::min<std::size_t>(G.size(), 20);
  for (std::size_t i = 0; i < limit; ++i)
    for (std::size_t j = i + 1; j < limit; ++j) {
      JoinResult r = join(g, {G[i], G[j]});
      if (r.status != JoinStatus::Found) continue;
      Word yi = g.inverse(*r.value).word(), ai = g.inverse(G[i]).word(), bi = g.inverse(G[j]).word();
      for (const auto& w : probes)
        if (mn.accepts(concat(yi, w)) != (mn.accepts(concat(ai, w)) && mn.accepts(concat(bi, w)))) {
          os << "cone type of the join differs for " << g.format(G[i]) << ", " << g.format(G[j]) << "; ";
          break;
        }
    }
  // Export round trip.
  if (!isomorphic(import_json(export_json(g, mn)), mn) || !isomorphic(import_json(export_json(g, raw)), raw))
    os << "json round trip is not isomorphic; ";
  return os.str();
}

}  // namespace

std::vector<CheckResult> run_property_suite(const SuiteOptions& opt) {
  std::vector<Task> t;
  for (int N : {2, 3, 4, 5, 7, 8, 12, 21, 30})
    t.push_back({"field Q(2cos(pi/" + std::to_string(N) + "))", [N] { return prop_field(N); }});
  for (const char* p : {"I2:5", "I2:inf", "affine-G2", "rank3:I:3:7", "affine-B3", "cycle:3,3,4,3"})
    t.push_back({std::string("group laws ") + p, [p] { return prop_core(p); }});
  for (const char* p : {"I2:3", "I2:7", "I2:inf", "affine-A2", "affine-G2", "rank3:II:5:5", "linear:3,inf"})
    t.push_back({std::string("short inversions to length 8 ") + p, [p] { return prop_short_inversions(p, 8); }});
  for (const char* p : {"I2:4", "I2:5", "I2:inf", "affine-B2", "rank3:I:3:7", "linear:3,inf"})
    t.push_back({std::string("dominance vs brute force ") + p, [p] { return prop_dominance(p, 12); }});
  for (const char* p : {"affine-A2", "affine-G2", "rank3:III:4:5", "affine-D4", "cycle:3,3,4,3", "right-angled:4:0-1,1-2,2-3,3-0"})
    t.push_back({std::string("elementary roots ") + p, [p] { return prop_elementary(p); }});
  t.push_back({"canonical joins I2:3", [] { return prop_joins("I2:3", 3, true); }});
  t.push_back({"canonical joins I2:4", [] { return prop_joins("I2:4", 4, true); }});
  t.push_back({"canonical joins I2:inf", [] { return prop_joins("I2:inf", 6, true); }});
  t.push_back({"canonical joins affine-G2", [] { return prop_joins("affine-G2", 6, false); }});
  for (const char* p : {"I2:3", "I2:inf", "affine-A2", "rank3:I:3:7"})
    t.push_back({std::string("pairwise joins ") + p, [p] { return prop_join_pairs(p, 4); }});
  for (const char* p : {"affine-A2", "affine-B2"})
    t.push_back({std::string("prefix convexity ") + p, [p] { return prop_convex_prefixes(p); }});
  for (const char* p : {"I2:5", "I2:inf", "affine-A2", "affine-B2", "affine-G2", "affine-A3", "affine-B3", "affine-C3",
                        "rank3:I:3:7", "rank3:II:5:5", "rank3:III:4:5", "linear:3,inf", "complete:3:3,3,3",
                        "right-angled:4:0-1,1-2,2-3,3-0", "cycle:3,3,4,3"})
    t.push_back({std::string("shadows ") + p, [p] { return prop_shadows(p); }});
  for (const char* p : {"I2:4", "I2:inf", "affine-A2", "affine-B2"})
    t.push_back({std::string("witness sets ") + p, [p] { return prop_witness_convexity(p, 3, 6); }});
  for (const char* p : {"I2:5", "I2:inf", "affine-A2", "affine-B2", "affine-G2", "rank3:I:3:7", "linear:3,inf"})
    t.push_back({std::string("automaton words to length 8 ") + p, [p] { return prop_automaton(p, 8, 0); }});
  for (const char* p : {"affine-A3", "affine-B3", "cycle:3,3,4,3"})
    t.push_back({std::string("automaton sampled words ") + p, [p] { return prop_automaton(p, 12, 20000); }});
  return run_tasks(t, opt);
}

std::vector<CheckResult> run_paper_suite(const SuiteOptions& opt) {
  std::vector<CheckResult> out;
  auto stage = [&](const std::string& name, const std::vector<Task>& tasks, double limit = 0) {
    if (opt.progress) *opt.progress << name << "\n";
    auto t0 = Clock::now();
    auto subs = run_tasks(tasks, opt);
    out.push_back(fold(name, subs, std::chrono::duration<double>(Clock::now() - t0).count(), limit));
  };

  std::vector<Task> rows;
  for (const auto& r : published_rows()) rows.push_back({r.preset, [r] { return check_row(r); }, r.limit});
  if (opt.include_optional) rows.push_back({kAffineA4.preset, [] { return check_row(kAffineA4); }, kAffineA4.limit});
  stage("1 count table", rows);

  std::vector<Task> ul;
  for (UltraLowCase c : {UltraLowCase{"rank3:I:3:7", 21 + 2 * 7}, UltraLowCase{"rank3:II:5:5", 6 + 2 * (5 + 5)},
                         UltraLowCase{"rank3:III:4:5", 15 + 2 * 5}})
    ul.push_back({c.preset, [c] { return check_ultra_low(c); }, 30});
  stage("2 rank-3 ultra-low counts", ul);

  std::vector<Task> tf;
  std::vector<std::string> formula_groups;
  for (int m = 3; m <= 8; ++m) formula_groups.push_back("I2:" + std::to_string(m));
  for (const char* p : {"rank3:I:3:7", "rank3:II:5:5", "rank3:III:4:5", "right-angled:4:0-1,1-2,2-3,3-0", "complete:3:3,3,3"})
    formula_groups.push_back(p);
  for (const auto& p : formula_groups) tf.push_back({p, [p] { return check_tight_formula(p); }});
  tf.push_back({"right-angled Gamma0 = S", [] { return check_right_angled("right-angled:4:0-1,1-2,2-3,3-0"); }});
  tf.push_back({"complete graph Gamma0", [] { return check_complete_graph("complete:3:3,3,3"); }});
  stage("3 tight-gate formula", tf, 60);

  stage("4 rank-3 tight-gate fixtures",
        {{"type I (3,7)", [] { return check_appendix("rank3:I:3:7", type_one_fixtures); }},
         {"type II (5,5)", [] { return check_appendix("rank3:II:5:5", type_two_fixtures); }},
         {"type III (4,5)", [] { return check_appendix("rank3:III:4:5", type_three_fixtures); }}},
        60);

  std::vector<Task> inf;
  for (int a = 3; a <= 6; ++a)
    inf.push_back({"linear:" + std::to_string(a) + ",inf", [a] { return check_infinite_label(a); }});
  stage("5 infinite-label rank 3", inf, 10);

  stage("6 multiple tight-gate pairs", {{"4-cycle with a 4", check_multiple_pairs}}, 60);

  std::vector<Task> orc;
  for (const auto& p : criterion_presets(opt.include_optional)) orc.push_back({p, [p] { return check_oracles(p); }});
  orc.push_back({"4-cycle example", [] {
                   Analysis a(example_cycle_system());
                   return compare_sets(a.group(), "Gamma0 vs tight(Gamma)", a.algorithm1().tight_gates.elements,
                                       tight(a.group(), a.gates()).elements);
                 }});
  stage("7 oracle equivalence", orc);

  if (opt.progress) *opt.progress << "8 property suites\n";
  auto t0 = Clock::now();
  auto props = run_property_suite(opt);
  out.push_back(fold("8 property suites", props, std::chrono::duration<double>(Clock::now() - t0).count(), 600));
  return out;
}

}  // namespace coxeter
