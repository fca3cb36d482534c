#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "coxeter/linalg.hpp"
#include "coxeter/system.hpp"

namespace coxeter {

struct RootHash {
  std::size_t operator()(const Root& r) const {
    std::size_t h = 0;
    for (Eigen::Index i = 0; i < r.size(); ++i) h = h * 1000003u ^ r(i).hash();
    return h;
  }
};

struct RootEqual {
  bool operator()(const Root& a, const Root& b) const {
    if (a.size() != b.size()) return false;
    for (Eigen::Index i = 0; i < a.size(); ++i)
      if (a(i) != b(i)) return false;
    return true;
  }
};

// Signed handle: id >= 0 is an interned positive root, ~id its negative.
using RootRef = std::int32_t;
inline bool is_negative(RootRef r) { return r < 0; }
inline int root_id(RootRef r) { return r < 0 ? ~r : r; }
inline RootRef negate(RootRef r) { return ~r; }

// Where <alpha_s, beta> sits relative to -1, 0, 1.
enum class Pairing : std::int8_t { AtMostMinusOne, Negative, Zero, Positive, AtLeastOne };

// Interned positive roots with lazily cached simple reflections.
// Not thread safe; one table per worker.
class RootTable {
 public:
  explicit RootTable(const CoxeterSystem& sys);

  int rank() const { return rank_; }
  int size() const { return static_cast<int>(roots_.size()); }
  const Root& root(int id) const { return roots_[id]; }
  Root vector(RootRef r) const;

  // Simple root alpha_s has id s.
  RootRef simple(int s) const { return s; }
  bool is_simple(int id) const { return id < rank_; }

  // Interns a root vector; throws if it is not a signed nonzero vector.
  RootRef intern(const Root& v);
  // -1 if the positive root v is not interned.
  int find(const Root& v) const;

  RootRef reflect(int s, RootRef r);
  Pairing pairing(int s, int id);
  AlgebraicReal pairing_value(int s, int id) const;
  int depth(int id);
  std::uint32_t support(int id) const;

 private:
  int add(Root v);

  const CoxeterSystem& sys_;
  int rank_;
  std::vector<Root> roots_;
  std::unordered_map<Root, int, RootHash, RootEqual> index_;
  std::vector<std::int32_t> refl_;  // rank_ entries per root
  std::vector<std::int8_t> pairing_;
  std::vector<std::int32_t> depth_;
};

constexpr std::int32_t kUnset = INT32_MIN;

}  // namespace coxeter
