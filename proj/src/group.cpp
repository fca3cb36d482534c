#include "coxeter/group.hpp"

#include <algorithm>

namespace coxeter {

Group::Group(CoxeterSystem sys) : sys_(std::move(sys)), roots_(sys_) {}

RootRef Group::act_word(const Word& w, RootRef r) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) r = roots_.reflect(*it, r);
  return r;
}

RootRef Group::act_inverse_word(const Word& w, RootRef r) {
  for (auto s : w) r = roots_.reflect(s, r);
  return r;
}

Root Group::act(const Element& w, const Root& v) const {
  Root out = v;
  for (auto it = w.word().rbegin(); it != w.word().rend(); ++it) out = reflect(sys_.gram(), *it, out);
  return out;
}

int Group::inversion_position(const Word& w, int beta) {
  // gamma runs through s_{i-1}..s_1 beta; a hit on alpha_{s_i} marks position i.
  RootRef gamma = beta;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (gamma == w[i]) return static_cast<int>(i);
    gamma = roots_.reflect(w[i], gamma);
  }
  return -1;
}

bool Group::is_inversion_word(const Word& w, int beta) { return inversion_position(w, beta) >= 0; }

bool Group::is_reduced(const Word& w) {
  Word prefix;
  prefix.reserve(w.size());
  for (auto s : w) {
    if (is_negative(act_word(prefix, roots_.simple(s)))) return false;
    prefix.push_back(s);
  }
  return true;
}

Element Group::make(Word canonical) {
  Element x;
  x.word_ = std::move(canonical);
  for (int s = 0; s < rank(); ++s) {
    if (is_negative(act_word(x.word_, s))) x.dr_ |= 1u << s;
    if (is_inversion_word(x.word_, s)) x.dl_ |= 1u << s;
  }
  return x;
}

Word Group::canonicalize(Word rem) {
  // Peel off the least left descent until nothing remains.
  Word out;
  out.reserve(rem.size());
  while (!rem.empty()) {
    bool found = false;
    for (int s = 0; s < rank() && !found; ++s) {
      int pos = inversion_position(rem, s);
      if (pos < 0) continue;
      out.push_back(static_cast<std::uint8_t>(s));
      rem.erase(rem.begin() + pos);
      found = true;
    }
    if (!found) throw std::logic_error("canonicalize: nonempty word without left descent");
  }
  return out;
}

void Group::append_reduced(Word& w, int s) {
  // If w alpha_s < 0, the exchange condition deletes the letter i with
  // s_{i+1}..s_k alpha_s = alpha_{s_i}.
  RootRef gamma = s;
  for (int i = static_cast<int>(w.size()) - 1; i >= 0; --i) {
    if (gamma == w[i]) {
      w.erase(w.begin() + i);
      return;
    }
    gamma = roots_.reflect(w[i], gamma);
  }
  w.push_back(static_cast<std::uint8_t>(s));
}

Element Group::generator(int s) {
  if (s < 0 || s >= rank()) throw WordError("unknown generator index " + std::to_string(s));
  return make(Word{static_cast<std::uint8_t>(s)});
}

Element Group::normalize(const std::vector<int>& letters) {
  Word w;
  for (int s : letters) {
    if (s < 0 || s >= rank()) throw WordError("unknown generator index " + std::to_string(s));
    append_reduced(w, s);
  }
  return make(canonicalize(std::move(w)));
}

Element Group::normalize(const Word& letters) {
  return normalize(std::vector<int>(letters.begin(), letters.end()));
}

Element Group::from_reduced(Word w) { return make(canonicalize(std::move(w))); }

Element Group::multiply(const Element& x, const Element& y) {
  Word w = x.word();
  for (auto s : y.word()) append_reduced(w, s);
  return make(canonicalize(std::move(w)));
}

Element Group::inverse(const Element& x) {
  Word w(x.word().rbegin(), x.word().rend());
  return make(canonicalize(std::move(w)));
}

Element Group::right_multiply(const Element& x, int s) {
  Word w = x.word();
  append_reduced(w, s);
  return make(canonicalize(std::move(w)));
}

Element Group::left_multiply(int s, const Element& x) {
  Word w = x.word();
  int pos = inversion_position(w, s);
  if (pos >= 0) w.erase(w.begin() + pos);
  else w.insert(w.begin(), static_cast<std::uint8_t>(s));
  return make(canonicalize(std::move(w)));
}

Element Group::parse(std::string_view text) {
  const auto& names = sys_.generators();
  std::vector<int> letters;
  std::string t(text);
  if (t == "e" && sys_.generator_index("e") < 0) return identity();
  if (t.empty()) return identity();
  bool single = std::all_of(names.begin(), names.end(), [](const std::string& n) { return n.size() == 1; });
  if (single && t.find(',') == std::string::npos) {
    for (char c : t) {
      int s = sys_.generator_index(std::string(1, c));
      if (s < 0) throw WordError("malformed word '" + t + "': unknown generator '" + std::string(1, c) + "'");
      letters.push_back(s);
    }
  } else {
    std::size_t start = 0;
    for (;;) {
      std::size_t comma = t.find(',', start);
      std::string tok = t.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      int s = sys_.generator_index(tok);
      if (s < 0) throw WordError("malformed word '" + t + "': unknown generator '" + tok + "'");
      letters.push_back(s);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  return normalize(letters);
}

std::string Group::format_word(const Word& w) const {
  if (w.empty()) return "e";
  const auto& names = sys_.generators();
  bool single = std::all_of(names.begin(), names.end(), [](const std::string& n) { return n.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!single && i) out += ',';
    out += names[w[i]];
  }
  return out;
}

}  // namespace coxeter
