#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace coxeter {

using Integer = mpz_class;
using Rational = mpq_class;

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero in number field") {}
};

class FieldMismatch : public std::invalid_argument {
 public:
  FieldMismatch() : std::invalid_argument("operands live in different number fields") {}
};

// Minimal polynomial of 2cos(pi/N), low degree first, monic.
std::vector<Integer> minimal_polynomial(int N);

// Dickson family C_0 = 2, C_1 = x, C_{j+1} = x C_j - C_{j-1}; C_k(2cos t) = 2cos(kt).
std::vector<Integer> dickson_polynomial(int k);

// Q(theta), theta = 2cos(pi/N).
class NumberField {
 public:
  explicit NumberField(int N);

  int conductor() const { return n_; }
  int degree() const { return static_cast<int>(psi_.size()) - 1; }
  const std::vector<Integer>& modulus() const { return psi_; }
  double theta_approx() const { return theta_; }

  // x^k mod psi for degree() <= k <= 2*degree()-2.
  const std::vector<Rational>& reduction(int k) const { return reductions_[k - degree()]; }

  // Rational enclosure lo < theta^k < hi, width shrinking with bits.
  std::pair<Rational, Rational> power_enclosure(int k, int bits) const;

 private:
  struct Enclosure {
    std::vector<std::pair<Rational, Rational>> powers;
  };
  const Enclosure& enclosure(int bits) const;

  int n_;
  std::vector<Integer> psi_;
  std::vector<std::vector<Rational>> reductions_;
  double theta_;
  mutable std::mutex mu_;
  mutable std::map<int, Enclosure> cache_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

FieldPtr make_field(int N);

// Exact element of Q(theta). A null field means a rational constant.
class AlgebraicReal {
 public:
  AlgebraicReal() = default;
  AlgebraicReal(long v) : AlgebraicReal(Rational(v)) {}  // NOLINT
  AlgebraicReal(int v) : AlgebraicReal(Rational(v)) {}   // NOLINT
  AlgebraicReal(const Rational& q);                      // NOLINT
  AlgebraicReal(FieldPtr f, std::vector<Rational> coeffs);

  static AlgebraicReal generator(const FieldPtr& f);

  const FieldPtr& field() const { return f_; }
  // Trimmed: no trailing zeros, empty for 0.
  const std::vector<Rational>& coeffs() const { return c_; }
  // Padded to the field degree (degree 1 for rationals).
  std::vector<Rational> dense_coeffs() const;

  bool is_zero() const { return c_.empty(); }
  bool is_rational() const { return c_.size() <= 1; }
  int sign() const;
  double to_double() const;
  std::size_t hash() const;
  std::string to_string() const;

  AlgebraicReal operator-() const;
  AlgebraicReal& operator+=(const AlgebraicReal& o);
  AlgebraicReal& operator-=(const AlgebraicReal& o);
  AlgebraicReal& operator*=(const AlgebraicReal& o);
  AlgebraicReal& operator/=(const AlgebraicReal& o);

  friend AlgebraicReal operator+(AlgebraicReal a, const AlgebraicReal& b) { return a += b; }
  friend AlgebraicReal operator-(AlgebraicReal a, const AlgebraicReal& b) { return a -= b; }
  friend AlgebraicReal operator*(AlgebraicReal a, const AlgebraicReal& b) { return a *= b; }
  friend AlgebraicReal operator/(AlgebraicReal a, const AlgebraicReal& b) { return a /= b; }
  friend bool operator==(const AlgebraicReal& a, const AlgebraicReal& b) { return a.c_ == b.c_; }
  friend bool operator!=(const AlgebraicReal& a, const AlgebraicReal& b) { return !(a == b); }
  friend bool operator<(const AlgebraicReal& a, const AlgebraicReal& b) { return (a - b).sign() < 0; }
  friend bool operator>(const AlgebraicReal& a, const AlgebraicReal& b) { return b < a; }
  friend bool operator<=(const AlgebraicReal& a, const AlgebraicReal& b) { return !(b < a); }
  friend bool operator>=(const AlgebraicReal& a, const AlgebraicReal& b) { return !(a < b); }

 private:
  void trim();
  const FieldPtr& join_field(const AlgebraicReal& o) const;

  std::vector<Rational> c_;
  FieldPtr f_;
};

AlgebraicReal inv(const AlgebraicReal& x);
inline int sign(const AlgebraicReal& x) { return x.sign(); }
inline int sign(double x) { return (x > 0) - (x < 0); }
inline AlgebraicReal abs(const AlgebraicReal& x) { return x.sign() < 0 ? -x : x; }

// -cos(pi/m) in f; m == 0 encodes infinity and gives -1.
AlgebraicReal embed_cos(const FieldPtr& f, int m);

struct AlgebraicHash {
  std::size_t operator()(const AlgebraicReal& x) const { return x.hash(); }
};

}  // namespace coxeter
