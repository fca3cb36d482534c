#include "coxeter/field.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <numeric>
#include <sstream>

namespace coxeter {

namespace {

using BigFloat = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<400>>;

using IntPoly = std::vector<Integer>;
using RatPoly = std::vector<Rational>;

void trim_poly(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Integer round_to_integer(const BigFloat& x) {
  BigFloat r = boost::multiprecision::round(x);
  std::string s = r.str(0, std::ios_base::fixed);
  auto dot = s.find('.');
  if (dot != std::string::npos) s.resize(dot);
  if (s == "-0") s = "0";
  return Integer(s);
}

// Remainder of a by monic b, both integer polynomials.
IntPoly int_remainder(IntPoly a, const IntPoly& b) {
  int db = static_cast<int>(b.size()) - 1;
  for (int k = static_cast<int>(a.size()) - 1; k >= db; --k) {
    Integer c = a[k];
    if (c == 0) continue;
    for (int i = 0; i <= db; ++i) a[k - db + i] -= c * b[i];
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Rational eval(const IntPoly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

int rsign(const Rational& q) { return sgn(q); }

// Polynomial division helpers over Q for the extended Euclid in inv().
void poly_divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r) {
  r = a;
  trim_poly(r);
  int db = static_cast<int>(b.size()) - 1;
  q.assign(std::max<int>(0, static_cast<int>(r.size()) - db), Rational(0));
  const Rational& lead = b.back();
  while (static_cast<int>(r.size()) - 1 >= db && !r.empty()) {
    int k = static_cast<int>(r.size()) - 1;
    Rational c = r.back() / lead;
    q[k - db] = c;
    for (int i = 0; i <= db; ++i) r[k - db + i] -= c * b[i];
    trim_poly(r);
  }
  trim_poly(q);
}

RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim_poly(out);
  return out;
}

RatPoly poly_sub(RatPoly a, const RatPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim_poly(a);
  return a;
}

}  // namespace

std::vector<Integer> dickson_polynomial(int k) {
  IntPoly prev{2}, cur{0, 1};
  if (k == 0) return prev;
  for (int j = 1; j < k; ++j) {
    IntPoly next(cur.size() + 1, Integer(0));
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<Integer> minimal_polynomial(int N) {
  if (N < 1) throw std::invalid_argument("minimal_polynomial: N must be positive");
  const BigFloat pi = boost::math::constants::pi<BigFloat>();
  std::vector<BigFloat> poly{BigFloat(1)};
  for (int k = 1; k <= N; ++k) {
    if (std::gcd(k, 2 * N) != 1) continue;
    BigFloat root = 2 * boost::multiprecision::cos(pi * k / N);
    std::vector<BigFloat> next(poly.size() + 1, BigFloat(0));
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= root * poly[i];
    }
    poly = std::move(next);
  }
  IntPoly psi;
  psi.reserve(poly.size());
  for (const auto& c : poly) psi.push_back(round_to_integer(c));

  IntPoly target = dickson_polynomial(N);
  target[0] += 2;
  if (!int_remainder(target, psi).empty())
    throw std::logic_error("minimal_polynomial: rounded product does not divide C_N + 2");
  return psi;
}

NumberField::NumberField(int N) : n_(N), psi_(minimal_polynomial(N)) {
  theta_ = 2.0 * std::cos(M_PI / N);
  int d = degree();
  if (d >= 2) {
    RatPoly xk(d, Rational(0));
    for (int i = 0; i < d; ++i) xk[i] = -Rational(psi_[i]);
    reductions_.push_back(xk);
    for (int k = d + 1; k <= 2 * d - 2; ++k) {
      RatPoly next(d, Rational(0));
      Rational top = xk[d - 1];
      for (int i = d - 1; i >= 1; --i) next[i] = xk[i - 1];
      for (int i = 0; i < d; ++i) next[i] += top * reductions_[0][i];
      reductions_.push_back(next);
      xk = std::move(next);
    }
  }
}

const NumberField::Enclosure& NumberField::enclosure(int bits) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto found = cache_.find(bits);
  if (found != cache_.end()) return found->second;

  // Start from the tightest cached interval, otherwise from a float bracket.
  Rational lo, hi;
  if (!cache_.empty()) {
    const auto& best = cache_.rbegin()->second.powers.at(1);
    lo = best.first;
    hi = best.second;
  } else {
    double eps = 1e-9;
    for (;;) {
      lo = Rational(theta_ - eps);
      hi = Rational(theta_ + eps);
      if (rsign(eval(psi_, lo)) * rsign(eval(psi_, hi)) < 0) break;
      eps *= 2;
      if (eps > 1e-3) throw std::logic_error("NumberField: cannot bracket theta");
    }
  }
  int slo = rsign(eval(psi_, lo));
  Rational width;
  mpq_class bound(1);
  mpz_class den(1);
  den <<= bits;
  bound /= den;
  for (;;) {
    width = hi - lo;
    if (width <= bound) break;
    Rational mid = (lo + hi) / 2;
    int sm = rsign(eval(psi_, mid));
    if (sm == 0) {
      // theta is rational only for degree one, which never reaches here.
      throw std::logic_error("NumberField: midpoint hit a root");
    }
    if (sm == slo) lo = mid; else hi = mid;
  }
  Enclosure e;
  int d = degree();
  e.powers.reserve(d);
  Rational plo = 1, phi = 1;
  for (int k = 0; k < std::max(d, 2); ++k) {
    e.powers.emplace_back(plo, phi);
    plo *= lo;
    phi *= hi;
  }
  return cache_.emplace(bits, std::move(e)).first->second;
}

std::pair<Rational, Rational> NumberField::power_enclosure(int k, int bits) const {
  return enclosure(bits).powers.at(k);
}

FieldPtr make_field(int N) { return std::make_shared<const NumberField>(N); }

AlgebraicReal::AlgebraicReal(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c != 0) c_.push_back(std::move(c));
}

AlgebraicReal::AlgebraicReal(FieldPtr f, std::vector<Rational> coeffs) : c_(std::move(coeffs)), f_(std::move(f)) {
  for (auto& q : c_) q.canonicalize();
  int d = f_ ? f_->degree() : 1;
  if (static_cast<int>(c_.size()) > d) {
    RatPoly psi(f_->modulus().begin(), f_->modulus().end());
    RatPoly q, r;
    poly_divmod(c_, psi, q, r);
    c_ = std::move(r);
  }
  trim();
}

AlgebraicReal AlgebraicReal::generator(const FieldPtr& f) { return AlgebraicReal(f, {Rational(0), Rational(1)}); }

std::vector<Rational> AlgebraicReal::dense_coeffs() const {
  std::vector<Rational> out = c_;
  out.resize(f_ ? f_->degree() : 1, Rational(0));
  return out;
}

void AlgebraicReal::trim() { trim_poly(c_); }

const FieldPtr& AlgebraicReal::join_field(const AlgebraicReal& o) const {
  if (!f_) return o.f_;
  if (!o.f_ || f_ == o.f_ || f_->conductor() == o.f_->conductor()) return f_;
  throw FieldMismatch();
}

AlgebraicReal AlgebraicReal::operator-() const {
  AlgebraicReal r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

AlgebraicReal& AlgebraicReal::operator+=(const AlgebraicReal& o) {
  f_ = join_field(o);
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

AlgebraicReal& AlgebraicReal::operator-=(const AlgebraicReal& o) {
  f_ = join_field(o);
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

AlgebraicReal& AlgebraicReal::operator*=(const AlgebraicReal& o) {
  f_ = join_field(o);
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  if (o.c_.size() == 1) {
    for (auto& q : c_) q *= o.c_[0];
    return *this;
  }
  if (c_.size() == 1) {
    Rational k = c_[0];
    c_ = o.c_;
    for (auto& q : c_) q *= k;
    return *this;
  }
  RatPoly prod = poly_mul(c_, o.c_);
  int d = f_->degree();
  if (static_cast<int>(prod.size()) > d) {
    RatPoly low(prod.begin(), prod.begin() + d);
    for (int k = d; k < static_cast<int>(prod.size()); ++k) {
      if (prod[k] == 0) continue;
      const auto& red = f_->reduction(k);
      for (int i = 0; i < d; ++i) low[i] += prod[k] * red[i];
    }
    prod = std::move(low);
  }
  c_ = std::move(prod);
  trim();
  return *this;
}

AlgebraicReal& AlgebraicReal::operator/=(const AlgebraicReal& o) { return *this *= inv(o); }

AlgebraicReal inv(const AlgebraicReal& x) {
  if (x.is_zero()) throw DivisionByZero();
  if (x.is_rational()) return AlgebraicReal(x.field(), {1 / x.coeffs()[0]});
  const FieldPtr& f = x.field();
  // Extended Euclid: track s with s*x == r (mod psi).
  RatPoly r0(f->modulus().begin(), f->modulus().end()), r1 = x.coeffs();
  RatPoly s0, s1{Rational(1)};
  while (r1.size() > 1) {
    RatPoly q, r;
    poly_divmod(r0, r1, q, r);
    RatPoly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r1 is a nonzero constant since psi is irreducible.
  Rational c = r1.at(0);
  for (auto& q : s1) q /= c;
  return AlgebraicReal(f, s1);
}

int AlgebraicReal::sign() const {
  if (c_.empty()) return 0;
  if (c_.size() == 1) return sgn(c_[0]);
  for (int bits = 64;; bits *= 2) {
    Rational lo = 0, hi = 0;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      auto [plo, phi] = f_->power_enclosure(static_cast<int>(i), bits);
      if (c_[i] > 0) {
        lo += c_[i] * plo;
        hi += c_[i] * phi;
      } else {
        lo += c_[i] * phi;
        hi += c_[i] * plo;
      }
    }
    if (lo > 0) return 1;
    if (hi < 0) return -1;
  }
}

double AlgebraicReal::to_double() const {
  double t = f_ ? f_->theta_approx() : 0.0, p = 1, acc = 0;
  for (const auto& q : c_) {
    acc += q.get_d() * p;
    p *= t;
  }
  return acc;
}

std::size_t AlgebraicReal::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (const auto& q : c_) {
    const mpz_srcptr num = q.get_num_mpz_t();
    const mpz_srcptr den = q.get_den_mpz_t();
    mix(static_cast<std::size_t>(num->_mp_size));
    mix(mpz_size(num) ? static_cast<std::size_t>(mpz_getlimbn(num, 0)) : 0);
    mix(static_cast<std::size_t>(mpz_getlimbn(den, 0)));
  }
  return h;
}

std::string AlgebraicReal::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Rational q = c_[i];
    if (!first) os << (q < 0 ? " - " : " + ");
    else if (q < 0) os << "-";
    q = abs(q);
    first = false;
    if (i == 0) {
      os << q;
      continue;
    }
    if (q != 1) os << q << "*";
    os << "T";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

AlgebraicReal embed_cos(const FieldPtr& f, int m) {
  if (m == 0) return AlgebraicReal(-1);
  if (m == 1) return AlgebraicReal(1);
  if (m == 2) return AlgebraicReal(0);
  if (!f || f->conductor() % m != 0)
    throw std::invalid_argument("embed_cos: label " + std::to_string(m) + " does not divide the field conductor");
  int k = f->conductor() / m;
  auto ck = dickson_polynomial(k);
  std::vector<Rational> coeffs;
  coeffs.reserve(ck.size());
  for (const auto& z : ck) coeffs.emplace_back(-z, 2);
  return AlgebraicReal(f, std::move(coeffs));
}

}  // namespace coxeter
