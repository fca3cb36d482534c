#include "coxeter/inversions.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace coxeter {

bool contains(const RootSet& a, int x) { return std::binary_search(a.begin(), a.end(), x); }

bool is_subset(const RootSet& a, const RootSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

RootSet set_intersection(const RootSet& a, const RootSet& b) {
  RootSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

RootSet set_union(const RootSet& a, const RootSet& b) {
  RootSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> inversion_sequence(Group& g, const Word& w) {
  std::vector<int> seq;
  seq.reserve(w.size());
  Word prefix;
  prefix.reserve(w.size());
  for (auto s : w) {
    RootRef r = g.act_word(prefix, s);
    if (is_negative(r)) throw std::invalid_argument("inversion_sequence: word is not reduced");
    seq.push_back(r);
    prefix.push_back(s);
  }
  return seq;
}

RootSet inversion_set(Group& g, const Element& w) {
  RootSet out = inversion_sequence(g, w.word());
  std::sort(out.begin(), out.end());
  return out;
}

RootSet right_descent_roots(Group& g, const Element& w) {
  RootSet out;
  for (int s = 0; s < g.rank(); ++s)
    if (w.has_right_descent(s)) out.push_back(root_id(g.act(w, s)));
  std::sort(out.begin(), out.end());
  return out;
}

RootSet left_descent_roots(Group&, const Element& w) {
  RootSet out;
  for (int s = 0; s < 32; ++s)
    if (w.has_left_descent(s)) out.push_back(s);
  return out;
}

RootSet short_inversions_direct(Group& g, const Element& w) {
  auto seq = inversion_sequence(g, w.word());
  RootSet out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    Word v = w.word();
    v.erase(v.begin() + static_cast<long>(i));
    if (g.is_reduced(v)) out.push_back(seq[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

RootSet short_inversions_step(Group& g, int s, const Word& x, const std::vector<int>& x_sequence,
                              const RootSet& x_short) {
  RootSet out{s};
  Word v;
  for (std::size_t i = 0; i < x_sequence.size(); ++i) {
    int beta = x_sequence[i];
    if (!contains(x_short, beta)) continue;
    // Keep beta when alpha_s is not an inversion of s_beta x.
    v = x;
    v.erase(v.begin() + static_cast<long>(i));
    if (!g.is_inversion_word(v, s)) out.push_back(root_id(g.roots().reflect(s, beta)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

RootSet short_inversions_evolution(Group& g, const Element& w) {
  const Word& word = w.word();
  if (word.empty()) return {};
  Word u{word.back()};
  std::vector<int> seq{word.back()};
  RootSet sh{word.back()};
  for (int j = static_cast<int>(word.size()) - 2; j >= 0; --j) {
    int s = word[j];
    sh = short_inversions_step(g, s, u, seq, sh);
    u.insert(u.begin(), static_cast<std::uint8_t>(s));
    std::vector<int> next{s};
    for (int b : seq) next.push_back(root_id(g.roots().reflect(s, b)));
    seq = std::move(next);
  }
  return sh;
}

InversionData inversion_data(Group& g, const Element& w) {
  InversionData d;
  d.sequence = inversion_sequence(g, w.word());
  d.roots = d.sequence;
  std::sort(d.roots.begin(), d.roots.end());
  d.short_roots = short_inversions_evolution(g, w);
  d.right_descent_roots = right_descent_roots(g, w);
  d.left_descent_roots = left_descent_roots(g, w);
  return d;
}

namespace {

int vector_depth(Group& g, const Root& v) { return g.roots().depth(root_id(g.roots().intern(v))); }

}  // namespace

bool dominates(Group& g, int beta, int alpha) {
  if (alpha == beta) return false;
  RootTable& rt = g.roots();
  const GramMatrix& gram = g.system().gram();
  Root a = rt.root(alpha), b = rt.root(beta);
  if ((bilinear(gram, a, b) - AlgebraicReal(1)).sign() < 0) return false;

  // Canonical simple roots of the dihedral reflection subgroup <s_alpha, s_beta>.
  int steps = 0;
  for (;;) {
    if (++steps > 100000) throw std::logic_error("dominates: canonical root search did not terminate");
    if (vector_depth(g, b) < vector_depth(g, a)) std::swap(a, b);
    Root c = reflect_in(gram, a, b);
    int sg = vector_sign(c);
    if (sg == 1) {
      b = std::move(c);
      break;
    }
    if (sg != -1) throw std::logic_error("dominates: reflection produced a non-root");
    b = -c;
  }

  int da = rt.depth(alpha), db = rt.depth(beta);
  int top = std::max(da, db);
  int cap = 2 * (da + db) + 4;
  // chain1: a, s_a b, s_a s_b a, ...; chain2: b, s_b a, s_b s_a b, ...
  std::vector<int> chain1{root_id(rt.intern(a))}, chain2{root_id(rt.intern(b))};
  Root x = a, y = b;
  for (int k = 1; k < cap; ++k) {
    Root nx = reflect_in(gram, a, y);
    Root ny = reflect_in(gram, b, x);
    x = std::move(nx);
    y = std::move(ny);
    int ix = root_id(rt.intern(x)), iy = root_id(rt.intern(y));
    chain1.push_back(ix);
    chain2.push_back(iy);
    if (rt.depth(ix) > top && rt.depth(iy) > top) break;
  }
  for (const auto* chain : {&chain1, &chain2}) {
    auto pa = std::find(chain->begin(), chain->end(), alpha);
    auto pb = std::find(chain->begin(), chain->end(), beta);
    if (pa != chain->end() && pb != chain->end()) return pb > pa;
    if (pa != chain->end() || pb != chain->end()) return false;
  }
  throw std::logic_error("dominates: roots not found on the dihedral chains");
}

std::vector<std::vector<Element>> elements_up_to(Group& g, int n) {
  std::vector<std::vector<Element>> levels{{g.identity()}};
  for (int k = 0; k < n; ++k) {
    std::unordered_set<Element, ElementHash> seen;
    std::vector<Element> next;
    for (const auto& x : levels.back())
      for (int s = 0; s < g.rank(); ++s) {
        if (x.has_right_descent(s)) continue;
        Element y = g.right_multiply(x, s);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    levels.push_back(std::move(next));
  }
  return levels;
}

bool dominates_bruteforce(Group& g, int beta, int alpha, int max_length) {
  if (alpha == beta) return false;
  for (const auto& level : elements_up_to(g, max_length))
    for (const auto& w : level)
      if (g.is_inversion(w, beta) && !g.is_inversion(w, alpha)) return false;
  return true;
}

RootSet elementary_roots(Group& g) {
  RootTable& rt = g.roots();
  std::unordered_set<int> seen;
  std::deque<int> queue;
  for (int s = 0; s < g.rank(); ++s) {
    seen.insert(s);
    queue.push_back(s);
  }
  while (!queue.empty()) {
    int beta = queue.front();
    queue.pop_front();
    for (int s = 0; s < g.rank(); ++s) {
      if (beta == s) continue;
      Pairing p = rt.pairing(s, beta);
      if (p == Pairing::AtMostMinusOne || p == Pairing::AtLeastOne || p == Pairing::Zero) continue;
      int next = root_id(rt.reflect(s, beta));
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  RootSet out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

int depth(Group& g, int beta) { return g.roots().depth(beta); }

std::uint32_t support(Group& g, int beta) { return g.roots().support(beta); }

bool cone_membership(Group&, const Root& beta, const std::vector<Root>& A) {
  if (A.empty()) return vector_sign(beta) == 0;
  GramMatrix M(beta.size(), static_cast<Eigen::Index>(A.size()));
  for (std::size_t j = 0; j < A.size(); ++j) M.col(static_cast<Eigen::Index>(j)) = A[j];
  return cone_feasible<AlgebraicReal>(M, beta);
}

bool cone_membership(Group& g, int beta, const RootSet& A) {
  if (contains(A, beta)) return true;
  std::vector<Root> cols;
  cols.reserve(A.size());
  for (int a : A) cols.push_back(g.roots().root(a));
  return cone_membership(g, g.roots().root(beta), cols);
}

}  // namespace coxeter
