#pragma once

#include <Eigen/Core>

#include <optional>
#include <vector>

#include "coxeter/field.hpp"

namespace Eigen {

template <>
struct NumTraits<coxeter::AlgebraicReal> : GenericNumTraits<coxeter::AlgebraicReal> {
  using Real = coxeter::AlgebraicReal;
  using NonInteger = coxeter::AlgebraicReal;
  using Nested = coxeter::AlgebraicReal;
  using Literal = coxeter::AlgebraicReal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 64
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace coxeter {

template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Root = Vector<AlgebraicReal>;
using GramMatrix = Matrix<AlgebraicReal>;

template <class Scalar>
Scalar bilinear(const Matrix<Scalar>& gram, const Vector<Scalar>& u, const Vector<Scalar>& v) {
  Scalar acc(0);
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    if (u(i) == Scalar(0)) continue;
    for (Eigen::Index j = 0; j < v.size(); ++j) {
      if (v(j) == Scalar(0) || gram(i, j) == Scalar(0)) continue;
      acc += u(i) * gram(i, j) * v(j);
    }
  }
  return acc;
}

// <v, alpha_s> without forming alpha_s.
template <class Scalar>
Scalar pairing_with_simple(const Matrix<Scalar>& gram, int s, const Vector<Scalar>& v) {
  Scalar acc(0);
  for (Eigen::Index j = 0; j < v.size(); ++j) {
    if (v(j) == Scalar(0) || gram(s, j) == Scalar(0)) continue;
    acc += gram(s, j) * v(j);
  }
  return acc;
}

template <class Scalar>
Vector<Scalar> reflect(const Matrix<Scalar>& gram, int s, Vector<Scalar> v) {
  Scalar p = pairing_with_simple(gram, s, v);
  v(s) -= Scalar(2) * p;
  return v;
}

// Reflection in an arbitrary root gamma: v - 2<v,gamma> gamma.
template <class Scalar>
Vector<Scalar> reflect_in(const Matrix<Scalar>& gram, const Vector<Scalar>& gamma, const Vector<Scalar>& v) {
  Scalar p = bilinear(gram, v, gamma);
  Vector<Scalar> out = v;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (gamma(i) != Scalar(0)) out(i) -= Scalar(2) * p * gamma(i);
  return out;
}

template <class Scalar>
Vector<Scalar> simple_root(int rank, int s) {
  Vector<Scalar> v = Vector<Scalar>::Constant(rank, Scalar(0));
  v(s) = Scalar(1);
  return v;
}

// Sign of a vector with no mixed entries: +1, -1, or 0 for the zero vector.
// Mixed vectors give 2.
template <class Scalar>
int vector_sign(const Vector<Scalar>& v) {
  int pos = 0, neg = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    int s = sign(v(i));
    pos += s > 0;
    neg += s < 0;
  }
  if (pos && neg) return 2;
  return pos ? 1 : (neg ? -1 : 0);
}

// Phase I simplex with Bland's rule: is there lambda >= 0 with A lambda = b?
// Exact when Scalar is exact.
template <class Scalar>
bool cone_feasible(const Matrix<Scalar>& A, const Vector<Scalar>& b) {
  const Eigen::Index m = A.rows(), n = A.cols();
  // Tableau columns: n structural, m artificial, then rhs.
  Matrix<Scalar> T = Matrix<Scalar>::Constant(m, n + m + 1, Scalar(0));
  for (Eigen::Index i = 0; i < m; ++i) {
    bool flip = sign(b(i)) < 0;
    for (Eigen::Index j = 0; j < n; ++j) T(i, j) = flip ? Scalar(-A(i, j)) : A(i, j);
    T(i, n + i) = Scalar(1);
    T(i, n + m) = flip ? Scalar(-b(i)) : b(i);
  }
  std::vector<Eigen::Index> basis(m);
  for (Eigen::Index i = 0; i < m; ++i) basis[i] = n + i;

  // Objective: minimize sum of artificials; reduced costs for structural columns.
  auto reduced_cost = [&](Eigen::Index j) {
    Scalar c = (j >= n) ? Scalar(1) : Scalar(0);
    for (Eigen::Index i = 0; i < m; ++i)
      if (basis[i] >= n && T(i, j) != Scalar(0)) c -= T(i, j);
    return c;
  };

  for (;;) {
    Eigen::Index enter = -1;
    for (Eigen::Index j = 0; j < n + m; ++j) {
      bool in_basis = false;
      for (auto bj : basis) in_basis |= (bj == j);
      if (in_basis) continue;
      if (sign(reduced_cost(j)) < 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;
    Eigen::Index leave = -1;
    Scalar best(0);
    for (Eigen::Index i = 0; i < m; ++i) {
      if (sign(T(i, enter)) <= 0) continue;
      Scalar ratio = T(i, n + m) / T(i, enter);
      if (leave < 0) {
        leave = i;
        best = ratio;
        continue;
      }
      int c = sign(Scalar(ratio - best));
      if (c < 0 || (c == 0 && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) break;  // unbounded direction cannot occur for phase I
    Scalar piv = T(leave, enter);
    for (Eigen::Index j = 0; j <= n + m; ++j)
      if (T(leave, j) != Scalar(0)) T(leave, j) = T(leave, j) / piv;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (i == leave || T(i, enter) == Scalar(0)) continue;
      Scalar f = T(i, enter);
      for (Eigen::Index j = 0; j <= n + m; ++j)
        if (T(leave, j) != Scalar(0)) T(i, j) -= f * T(leave, j);
    }
    basis[leave] = enter;
  }
  Scalar infeas(0);
  for (Eigen::Index i = 0; i < m; ++i)
    if (basis[i] >= n) infeas += T(i, n + m);
  return sign(infeas) == 0;
}

}  // namespace coxeter
