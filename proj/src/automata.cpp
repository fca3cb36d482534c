#include "coxeter/automata.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "coxeter/serialize.hpp"

namespace coxeter {

int ReducedWordAutomaton::run(const Word& w) const {
  int q = start;
  for (auto s : w) {
    if (s >= delta[q].size()) return -1;
    q = delta[q][s];
    if (q < 0) return -1;
  }
  return q;
}

namespace {

using Bits = std::vector<std::uint64_t>;

struct BitsHash {
  std::size_t operator()(const Bits& b) const {
    std::size_t h = 0;
    for (auto w : b) h = h * 0x100000001b3ULL ^ std::hash<std::uint64_t>()(w);
    return h;
  }
};

bool test(const Bits& b, int i) { return b[i / 64] >> (i % 64) & 1u; }
void set(Bits& b, int i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }

}  // namespace

ReducedWordAutomaton build_bh_automaton(Group& g, const RootSet& E) {
  const int n = g.rank(), m = static_cast<int>(E.size());
  const int words = std::max(1, (m + 63) / 64);
  std::unordered_map<int, int> eidx;
  for (int i = 0; i < m; ++i) eidx.emplace(E[i], i);
  // image[i][s]: E-index of s(beta_i), -1 if it leaves E or turns negative.
  std::vector<std::vector<int>> image(m, std::vector<int>(n, -1));
  for (int i = 0; i < m; ++i)
    for (int s = 0; s < n; ++s) {
      RootRef r = g.roots().reflect(s, E[i]);
      if (is_negative(r)) continue;
      auto it = eidx.find(r);
      if (it != eidx.end()) image[i][s] = it->second;
    }
  std::vector<int> simple_idx(n);
  for (int s = 0; s < n; ++s) simple_idx[s] = eidx.at(s);

  ReducedWordAutomaton a;
  a.alphabet = g.system().generators();
  std::vector<Bits> states{Bits(words, 0)};
  std::unordered_map<Bits, int, BitsHash> ids{{states[0], 0}};
  a.state_words.push_back({});
  for (std::size_t q = 0; q < states.size(); ++q) {
    std::vector<int> row(n, -1);
    for (int s = 0; s < n; ++s) {
      const Bits cur = states[q];
      if (test(cur, simple_idx[s])) continue;
      Bits next(words, 0);
      set(next, simple_idx[s]);
      for (int i = 0; i < m; ++i)
        if (test(cur, i) && image[i][s] >= 0) set(next, image[i][s]);
      auto [it, fresh] = ids.emplace(next, static_cast<int>(states.size()));
      if (fresh) {
        states.push_back(next);
        Word w = a.state_words[q];
        w.push_back(static_cast<std::uint8_t>(s));
        a.state_words.push_back(std::move(w));
      }
      row[s] = it->second;
    }
    a.delta.push_back(std::move(row));
  }
  for (const auto& b : states) {
    RootSet roots;
    for (int i = 0; i < m; ++i)
      if (test(b, i)) roots.push_back(E[i]);
    a.state_roots.push_back(std::move(roots));
  }
  return a;
}

Minimization minimize(const ReducedWordAutomaton& a) {
  const int n = a.num_states();
  const int k = static_cast<int>(a.alphabet.size());
  const int sink = n;
  std::vector<int> cls(n + 1, 0);
  cls[sink] = 1;
  int count = 2;
  for (;;) {
    std::map<std::vector<int>, int> sig_ids;
    std::vector<int> next(n + 1);
    for (int q = 0; q <= n; ++q) {
      std::vector<int> sig{cls[q]};
      for (int s = 0; s < k; ++s) {
        int t = q == sink ? sink : a.delta[q][s];
        sig.push_back(cls[t < 0 ? sink : t]);
      }
      auto [it, fresh] = sig_ids.emplace(std::move(sig), static_cast<int>(sig_ids.size()));
      next[q] = it->second;
    }
    int fresh_count = static_cast<int>(sig_ids.size());
    cls = std::move(next);
    if (fresh_count == count) break;
    count = fresh_count;
  }
  // Renumber accepting classes in BFS order from the start state.
  std::vector<int> renum(count, -1);
  renum[cls[a.start]] = 0;
  Minimization out;
  out.automaton.alphabet = a.alphabet;
  out.automaton.minimized = true;
  std::vector<int> rep{a.start};
  for (std::size_t i = 0; i < rep.size(); ++i) {
    int q = rep[i];
    for (int s = 0; s < k; ++s) {
      int t = a.delta[q][s];
      if (t < 0) continue;
      if (renum[cls[t]] < 0) {
        renum[cls[t]] = static_cast<int>(rep.size());
        rep.push_back(t);
      }
    }
  }
  for (int q : rep) {
    std::vector<int> row(k, -1);
    for (int s = 0; s < k; ++s) {
      int t = a.delta[q][s];
      if (t >= 0) row[s] = renum[cls[t]];
    }
    out.automaton.delta.push_back(std::move(row));
    out.automaton.state_words.push_back(q < static_cast<int>(a.state_words.size()) ? a.state_words[q] : Word{});
  }
  out.state_map.resize(n);
  for (int q = 0; q < n; ++q) out.state_map[q] = renum[cls[q]];
  return out;
}

GateTable gates(Group& g, const ReducedWordAutomaton& a) {
  const int n = a.num_states();
  std::vector<std::optional<Element>> m(n);
  m[a.start] = g.identity();
  std::vector<int> level{a.start};
  while (!level.empty()) {
    std::map<int, Element> cand;
    for (int c : level)
      for (int s = 0; s < static_cast<int>(a.alphabet.size()); ++s) {
        int t = a.delta[c][s];
        if (t < 0 || m[t]) continue;
        Element y = g.right_multiply(*m[c], s);
        auto [it, fresh] = cand.emplace(t, y);
        if (!fresh && it->second != y)
          throw std::logic_error("gates: two minimal elements of equal length share a cone type (" + g.format(y) +
                                 ", " + g.format(it->second) + ")");
      }
    level.clear();
    for (auto& [t, y] : cand) {
      m[t] = y;
      level.push_back(t);
    }
  }
  GateTable out;
  for (int c = 0; c < n; ++c) {
    if (!m[c]) throw std::logic_error("gates: unreachable class");
    out.minimal.push_back(*m[c]);
    out.gates.push_back(g.inverse(*m[c]));
  }
  std::sort(out.gates.begin(), out.gates.end());
  return out;
}

bool cone_type_equal(const ReducedWordAutomaton& a, const Element& x, const Element& y) {
  int qx = a.run(x.word()), qy = a.run(y.word());
  if (qx < 0 || qy < 0) throw std::logic_error("cone_type_equal: canonical word rejected by the automaton");
  return qx == qy;
}

namespace {

std::vector<char> tight_profile(Group& g, const std::vector<Element>& tight_gates, const Element& x) {
  // x in T(w^{-1}) iff Phi(w) and Phi(x) are disjoint; profile the inverse.
  Element xi = g.inverse(x);
  std::vector<char> out;
  out.reserve(tight_gates.size());
  for (const auto& w : tight_gates) {
    bool disjoint = true;
    for (int r : inversion_sequence(g, w.word()))
      if (g.is_inversion(xi, r)) {
        disjoint = false;
        break;
      }
    out.push_back(disjoint);
  }
  return out;
}

}  // namespace

bool cone_type_equal_tight(Group& g, const std::vector<Element>& tight_gates, const Element& x, const Element& y) {
  return tight_profile(g, tight_gates, x) == tight_profile(g, tight_gates, y);
}

std::vector<std::string> growth_series(const ReducedWordAutomaton& a, int n) {
  std::vector<mpz_class> cur(a.num_states(), 0);
  cur[a.start] = 1;
  std::vector<std::string> out;
  for (int len = 0; len <= n; ++len) {
    mpz_class total = 0;
    for (const auto& c : cur) total += c;
    out.push_back(total.get_str());
    if (len == n) break;
    std::vector<mpz_class> next(a.num_states(), 0);
    for (int q = 0; q < a.num_states(); ++q) {
      if (cur[q] == 0) continue;
      for (int t : a.delta[q])
        if (t >= 0) next[t] += cur[q];
    }
    cur = std::move(next);
  }
  return out;
}

std::string export_dot(Group& g, const ReducedWordAutomaton& a) {
  std::ostringstream os;
  os << "digraph " << (a.minimized ? "cone_types" : "bh_automaton") << " {\n";
  os << "  rankdir=LR;\n";
  for (int q = 0; q < a.num_states(); ++q) {
    std::string label;
    if (!a.minimized) {
      label = "{";
      for (std::size_t i = 0; i < a.state_roots[q].size(); ++i)
        label += (i ? ", " : "") + root_text(g, a.state_roots[q][i]);
      label += "}";
    } else {
      label = "T" + std::to_string(q) + ": " + g.format(g.inverse(g.from_reduced(a.state_words[q])));
    }
    os << "  q" << q << " [label=\"" << label << "\"" << (q == a.start ? ", shape=doublecircle" : "") << "];\n";
  }
  for (int q = 0; q < a.num_states(); ++q)
    for (std::size_t s = 0; s < a.delta[q].size(); ++s)
      if (a.delta[q][s] >= 0)
        os << "  q" << q << " -> q" << a.delta[q][s] << " [label=\"" << a.alphabet[s] << "\"];\n";
  os << "}\n";
  return os.str();
}

nlohmann::json export_json(Group& g, const ReducedWordAutomaton& a) {
  nlohmann::json states = nlohmann::json::array(), edges = nlohmann::json::array();
  for (int q = 0; q < a.num_states(); ++q) {
    nlohmann::json st{{"id", q}};
    if (a.minimized) {
      st["class"] = q;
    } else {
      nlohmann::json roots = nlohmann::json::array();
      for (int r : a.state_roots[q]) roots.push_back(root_json(g, r));
      st["roots"] = roots;
    }
    if (a.minimized && q < static_cast<int>(a.state_words.size()))
      st["gate_word"] = g.format(g.inverse(g.from_reduced(a.state_words[q])));
    states.push_back(std::move(st));
  }
  for (int q = 0; q < a.num_states(); ++q)
    for (std::size_t s = 0; s < a.delta[q].size(); ++s)
      if (a.delta[q][s] >= 0) edges.push_back({q, a.alphabet[s], a.delta[q][s]});
  return {{"alphabet", a.alphabet}, {"start", a.start}, {"states", states}, {"edges", edges}};
}

ReducedWordAutomaton import_json(const nlohmann::json& j) {
  ReducedWordAutomaton a;
  a.alphabet = j.at("alphabet").get<std::vector<std::string>>();
  a.start = j.at("start").get<int>();
  const auto& states = j.at("states");
  int n = static_cast<int>(states.size());
  a.delta.assign(n, std::vector<int>(a.alphabet.size(), -1));
  for (const auto& st : states) {
    int id = st.at("id").get<int>();
    if (id < 0 || id >= n) throw std::invalid_argument("automaton JSON: state id out of range");
    a.minimized = a.minimized || st.contains("class");
  }
  for (const auto& e : j.at("edges")) {
    int from = e.at(0).get<int>(), to = e.at(2).get<int>();
    auto name = e.at(1).get<std::string>();
    auto it = std::find(a.alphabet.begin(), a.alphabet.end(), name);
    if (it == a.alphabet.end()) throw std::invalid_argument("automaton JSON: unknown letter " + name);
    if (from < 0 || from >= n || to < 0 || to >= n) throw std::invalid_argument("automaton JSON: edge out of range");
    a.delta[from][it - a.alphabet.begin()] = to;
  }
  return a;
}

bool isomorphic(const ReducedWordAutomaton& a, const ReducedWordAutomaton& b) {
  if (a.alphabet != b.alphabet || a.num_states() != b.num_states()) return false;
  // Both are deterministic and reachable, so BFS from start fixes the bijection.
  std::vector<int> f(a.num_states(), -1), inv(b.num_states(), -1);
  std::vector<int> queue{a.start};
  f[a.start] = b.start;
  inv[b.start] = a.start;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    int q = queue[i];
    for (std::size_t s = 0; s < a.alphabet.size(); ++s) {
      int ta = a.delta[q][s], tb = b.delta[f[q]][s];
      if ((ta < 0) != (tb < 0)) return false;
      if (ta < 0) continue;
      if (f[ta] < 0 && inv[tb] < 0) {
        f[ta] = tb;
        inv[tb] = ta;
        queue.push_back(ta);
      } else if (f[ta] != tb) {
        return false;
      }
    }
  }
  return static_cast<int>(queue.size()) == a.num_states();
}

}  // namespace coxeter
