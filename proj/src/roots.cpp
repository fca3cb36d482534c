#include "coxeter/roots.hpp"

#include <stdexcept>

namespace coxeter {

namespace {
constexpr std::int8_t kPairingUnset = -1;
}

RootTable::RootTable(const CoxeterSystem& sys) : sys_(sys), rank_(sys.rank()) {
  for (int s = 0; s < rank_; ++s) add(simple_root<AlgebraicReal>(rank_, s));
}

int RootTable::add(Root v) {
  int id = size();
  index_.emplace(v, id);
  roots_.push_back(std::move(v));
  refl_.resize(refl_.size() + rank_, kUnset);
  pairing_.resize(pairing_.size() + rank_, kPairingUnset);
  depth_.push_back(0);
  return id;
}

Root RootTable::vector(RootRef r) const {
  if (is_negative(r)) return -roots_[root_id(r)];
  return roots_[r];
}

int RootTable::find(const Root& v) const {
  auto it = index_.find(v);
  return it == index_.end() ? -1 : it->second;
}

RootRef RootTable::intern(const Root& v) {
  if (v.size() != rank_) throw std::invalid_argument("root has wrong dimension");
  int sg = vector_sign(v);
  if (sg == 2) throw std::invalid_argument("vector has mixed signs and is not a root");
  if (sg == 0) throw std::invalid_argument("zero vector is not a root");
  Root pos = sg > 0 ? v : Root(-v);
  int id = find(pos);
  if (id < 0) id = add(std::move(pos));
  return sg > 0 ? id : negate(id);
}

RootRef RootTable::reflect(int s, RootRef r) {
  int id = root_id(r);
  const std::size_t k = static_cast<std::size_t>(id) * rank_ + s;
  if (refl_[k] == kUnset) {
    if (id == s) {
      refl_[k] = negate(s);
    } else {
      // s permutes the positive roots other than alpha_s.
      Root v = coxeter::reflect(sys_.gram(), s, roots_[id]);
      int j = find(v);
      if (j < 0) j = add(std::move(v));
      refl_[k] = j;
      refl_[static_cast<std::size_t>(j) * rank_ + s] = id;
    }
  }
  RootRef out = refl_[k];
  return is_negative(r) ? negate(out) : out;
}

AlgebraicReal RootTable::pairing_value(int s, int id) const {
  return pairing_with_simple(sys_.gram(), s, roots_[id]);
}

Pairing RootTable::pairing(int s, int id) {
  std::int8_t& slot = pairing_[static_cast<std::size_t>(id) * rank_ + s];
  if (slot == kPairingUnset) {
    AlgebraicReal p = pairing_value(s, id);
    Pairing c;
    int sg = p.sign();
    if (sg == 0) {
      c = Pairing::Zero;
    } else if (sg < 0) {
      c = (p + AlgebraicReal(1)).sign() <= 0 ? Pairing::AtMostMinusOne : Pairing::Negative;
    } else {
      c = (p - AlgebraicReal(1)).sign() >= 0 ? Pairing::AtLeastOne : Pairing::Positive;
    }
    slot = static_cast<std::int8_t>(c);
  }
  return static_cast<Pairing>(slot);
}

int RootTable::depth(int id) {
  if (is_simple(id)) return 1;
  if (depth_[id]) return depth_[id];
  // Walk down: any s with <alpha_s, beta> > 0 lowers the depth by one.
  std::vector<int> chain;
  int cur = id;
  while (!is_simple(cur) && !depth_[cur]) {
    chain.push_back(cur);
    int next = -1;
    for (int s = 0; s < rank_ && next < 0; ++s) {
      Pairing p = pairing(s, cur);
      if (p == Pairing::Positive || p == Pairing::AtLeastOne) next = reflect(s, cur);
    }
    if (next < 0) throw std::logic_error("non-simple positive root with no positive simple pairing");
    cur = next;
  }
  int d = is_simple(cur) ? 1 : depth_[cur];
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) depth_[*it] = ++d;
  return depth_[id];
}

std::uint32_t RootTable::support(int id) const {
  std::uint32_t mask = 0;
  for (int s = 0; s < rank_; ++s)
    if (!roots_[id](s).is_zero()) mask |= 1u << s;
  return mask;
}

}  // namespace coxeter
