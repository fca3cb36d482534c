#include "doctest.h"

#include <cmath>
#include <numeric>

#include "coxeter/field.hpp"
#include "coxeter/system.hpp"

using namespace coxeter;

namespace {

// Independent oracle: long double product over the distinct conjugates, rounded.
std::vector<long> conjugate_product(int N) {
  std::vector<long double> p{1.0L};
  const long double pi = std::acos(-1.0L);
  for (int k = 1; k < N; ++k) {
    if (std::gcd(k, 2 * N) != 1) continue;
    long double r = 2 * std::cos(k * pi / N);
    std::vector<long double> q(p.size() + 1, 0.0L);
    for (std::size_t i = 0; i < p.size(); ++i) {
      q[i + 1] += p[i];
      q[i] -= r * p[i];
    }
    p = q;
  }
  std::vector<long> out;
  for (auto c : p) out.push_back(std::lround(c));
  return out;
}

std::vector<long> as_long(const std::vector<Integer>& v) {
  std::vector<long> out;
  for (const auto& c : v) out.push_back(c.get_si());
  return out;
}

}  // namespace

TEST_CASE("minimal polynomial of 2cos(pi/N)") {
  CHECK(as_long(minimal_polynomial(2)) == std::vector<long>{0, 1});
  CHECK(as_long(minimal_polynomial(3)) == std::vector<long>{-1, 1});
  CHECK(as_long(minimal_polynomial(5)) == std::vector<long>{-1, -1, 1});
  CHECK(as_long(minimal_polynomial(4)) == std::vector<long>{-2, 0, 1});
  for (int N = 2; N <= 40; ++N) {
    CAPTURE(N);
    CHECK(as_long(minimal_polynomial(N)) == conjugate_product(N));
  }
  // 2cos(pi) = -2.
  CHECK(as_long(minimal_polynomial(1)) == std::vector<long>{2, 1});
}

TEST_CASE("Dickson polynomials") {
  CHECK(as_long(dickson_polynomial(0)) == std::vector<long>{2});
  CHECK(as_long(dickson_polynomial(1)) == std::vector<long>{0, 1});
  CHECK(as_long(dickson_polynomial(2)) == std::vector<long>{-2, 0, 1});
  CHECK(as_long(dickson_polynomial(3)) == std::vector<long>{0, -3, 0, 1});
}

TEST_CASE("embed_cos") {
  FieldPtr f = make_field(12);
  CHECK(embed_cos(f, 2).is_zero());
  CHECK(embed_cos(f, 3) == AlgebraicReal(Rational(-1, 2)));
  CHECK(embed_cos(f, kInfinity) == AlgebraicReal(-1));
  CHECK(embed_cos(f, 1) == AlgebraicReal(-1) * AlgebraicReal(-1));
  AlgebraicReal r2 = AlgebraicReal(-2) * embed_cos(f, 4);
  CHECK(r2 * r2 == AlgebraicReal(2));
  CHECK(std::abs(embed_cos(f, 12).to_double() + std::cos(M_PI / 12)) < 1e-12);
}

TEST_CASE("arithmetic in Q(2cos(pi/5))") {
  FieldPtr f = make_field(5);
  AlgebraicReal t = AlgebraicReal::generator(f);
  CHECK(t * t == t + 1);
  CHECK((t + (-t)).is_zero());
  CHECK(inv(AlgebraicReal(1)) == AlgebraicReal(1));
  CHECK(inv(t) == t - 1);
  CHECK_THROWS_AS(inv(AlgebraicReal(0)), DivisionByZero);
  CHECK_THROWS_AS(t / (t - t), DivisionByZero);
  CHECK((t * t).to_string() == "1 + T");
  CHECK(AlgebraicReal(Rational(3, 4)).to_string() == "3/4");
  CHECK(t.dense_coeffs().size() == 2);
  CHECK_THROWS_AS(t + AlgebraicReal::generator(make_field(7)), FieldMismatch);
}

TEST_CASE("sign") {
  FieldPtr f = make_field(5);
  AlgebraicReal t = AlgebraicReal::generator(f);
  CHECK(sign(AlgebraicReal(0)) == 0);
  CHECK(sign(t - 1) == 1);
  CHECK(sign(AlgebraicReal(Rational(-1, 2))) == -1);
  // 2cos(pi/5)^2 - 2cos(pi/5) - 1 is exactly 0; nearby values are not.
  CHECK(sign(t * t - t - 1) == 0);
  CHECK(sign(t - Rational(1618033, 1000000)) == 1);
  CHECK(sign(t - Rational(1618034, 1000000)) == -1);
  // Small gaps need more than the starting precision.
  FieldPtr g = make_field(30);
  AlgebraicReal th = AlgebraicReal::generator(g);
  double approx = 2 * std::cos(M_PI / 30);
  Rational below(Integer(static_cast<long>(approx * 1e15) - 1), Integer(1000000000000000L));
  CHECK(sign(th - below) == 1);
  CHECK(th > below);
  CHECK(abs(-th) == th);
}
