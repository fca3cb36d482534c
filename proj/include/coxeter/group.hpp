#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "coxeter/roots.hpp"
#include "coxeter/system.hpp"

namespace coxeter {

using Word = std::vector<std::uint8_t>;
using GeneratorSet = std::uint32_t;

class WordError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Group element as its ShortLex-least reduced word.
class Element {
 public:
  Element() = default;

  const Word& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }
  bool is_identity() const { return word_.empty(); }
  GeneratorSet left_descents() const { return dl_; }
  GeneratorSet right_descents() const { return dr_; }
  bool has_left_descent(int s) const { return dl_ >> s & 1u; }
  bool has_right_descent(int s) const { return dr_ >> s & 1u; }

  friend bool operator==(const Element& a, const Element& b) { return a.word_ == b.word_; }
  friend bool operator!=(const Element& a, const Element& b) { return a.word_ != b.word_; }
  // Length first, then lexicographic.
  friend bool operator<(const Element& a, const Element& b) {
    if (a.word_.size() != b.word_.size()) return a.word_.size() < b.word_.size();
    return a.word_ < b.word_;
  }

 private:
  friend class Group;
  Word word_;
  GeneratorSet dl_ = 0, dr_ = 0;
};

struct ElementHash {
  std::size_t operator()(const Element& x) const {
    std::size_t h = 1469598103934665603ULL;
    for (auto c : x.word()) h = (h ^ c) * 1099511628211ULL;
    return h;
  }
};

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = 1469598103934665603ULL;
    for (auto c : w) h = (h ^ c) * 1099511628211ULL;
    return h;
  }
};

// A Coxeter system together with its root table. Not thread safe.
class Group {
 public:
  explicit Group(CoxeterSystem sys);
  Group(const Group&) = delete;
  Group& operator=(const Group&) = delete;

  const CoxeterSystem& system() const { return sys_; }
  int rank() const { return sys_.rank(); }
  RootTable& roots() { return roots_; }

  Element identity() const { return Element(); }
  Element generator(int s);
  Element normalize(const std::vector<int>& letters);
  Element normalize(const Word& letters);
  Element multiply(const Element& x, const Element& y);
  Element inverse(const Element& x);
  Element right_multiply(const Element& x, int s);
  Element left_multiply(int s, const Element& x);
  // The canonical element for a reduced word (not checked).
  Element from_reduced(Word w);

  RootRef act(const Element& w, RootRef r) { return act_word(w.word(), r); }
  RootRef act_inverse(const Element& w, RootRef r) { return act_inverse_word(w.word(), r); }
  RootRef act_word(const Word& w, RootRef r);
  RootRef act_inverse_word(const Word& w, RootRef r);
  Root act(const Element& w, const Root& v) const;

  // beta in Phi(w), i.e. w^{-1} beta < 0. beta is a positive root id.
  bool is_inversion(const Element& w, int beta) { return is_inversion_word(w.word(), beta); }
  bool is_inversion_word(const Word& w, int beta);
  // Position i with s_1..s_{i-1} alpha_{s_i} = beta, or -1.
  int inversion_position(const Word& w, int beta);
  bool is_reduced(const Word& w);

  Element parse(std::string_view text);
  std::string format(const Element& x) const { return format_word(x.word()); }
  std::string format_word(const Word& w) const;

 private:
  Word canonicalize(Word reduced);
  Element make(Word canonical);
  void append_reduced(Word& w, int s);

  CoxeterSystem sys_;
  RootTable roots_;
};

}  // namespace coxeter
