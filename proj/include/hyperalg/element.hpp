#pragma once

#include <cmath>
#include <ostream>

#include <Eigen/Core>

#include "hyperalg/algebra.hpp"

namespace hyperalg {

template <typename Scalar>
using Coefficients = Eigen::Matrix<Scalar, Eigen::Dynamic, 1, Eigen::ColMajor, 8, 1>;

/// An element of H(gamma1, gamma2) or O(alpha, beta, gamma): coefficients over the
/// basis {1, e1, e2, e3} or {1, f1, ..., f7}, tagged with the algebra they live in.
template <typename Scalar>
class Element {
 public:
  using Coeffs = Coefficients<Scalar>;

  Element(const AlgebraParams<Scalar>& algebra, Coeffs coeffs)
      : algebra_(algebra), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != algebra_.dimension())
      throw AlgebraError(ErrorCode::InvalidParameter, "coefficient count does not match the algebra");
    for (Eigen::Index i = 0; i < coeffs_.size(); ++i)
      if (!std::isfinite(static_cast<double>(coeffs_[i])))
        throw AlgebraError(ErrorCode::InvalidParameter, "coefficients must be finite");
  }

  Element(const AlgebraParams<Scalar>& algebra, std::initializer_list<Scalar> values)
      : Element(algebra, from_list(values)) {}

  static Element zero(const AlgebraParams<Scalar>& algebra) {
    return Element(algebra, Coeffs::Zero(algebra.dimension()));
  }
  static Element real(const AlgebraParams<Scalar>& algebra, Scalar value) {
    Coeffs c = Coeffs::Zero(algebra.dimension());
    c[0] = value;
    return Element(algebra, c);
  }
  static Element one(const AlgebraParams<Scalar>& algebra) { return real(algebra, Scalar(1)); }
  static Element basis(const AlgebraParams<Scalar>& algebra, int index, Scalar scale = Scalar(1)) {
    if (index < 0 || index >= algebra.dimension())
      throw AlgebraError(ErrorCode::InvalidParameter, "basis index out of range");
    Coeffs c = Coeffs::Zero(algebra.dimension());
    c[index] = scale;
    return Element(algebra, c);
  }

  const AlgebraParams<Scalar>& algebra() const { return algebra_; }
  const Coeffs& coeffs() const { return coeffs_; }
  int dimension() const { return algebra_.dimension(); }
  Scalar operator[](int i) const { return coeffs_[i]; }

  Scalar scalar_part() const { return coeffs_[0]; }
  Element vector_part() const {
    Coeffs c = coeffs_;
    c[0] = Scalar(0);
    return Element(algebra_, c);
  }

  /// Plain Euclidean norm of the coefficient vector (not the algebra norm).
  Scalar euclidean_norm() const { return coeffs_.norm(); }
  Scalar vector_euclidean_norm() const { return coeffs_.tail(coeffs_.size() - 1).norm(); }

  Element& operator+=(const Element& other) {
    require_same(other);
    coeffs_ += other.coeffs_;
    return *this;
  }
  Element& operator-=(const Element& other) {
    require_same(other);
    coeffs_ -= other.coeffs_;
    return *this;
  }
  Element& operator*=(Scalar s) {
    coeffs_ *= s;
    return *this;
  }
  Element& operator/=(Scalar s) {
    coeffs_ /= s;
    return *this;
  }

  void require_same(const Element& other) const {
    if (!(algebra_ == other.algebra_))
      throw AlgebraError(ErrorCode::AlgebraMismatch, algebra_.describe() + " vs " + other.algebra_.describe());
  }

 private:
  static Coeffs from_list(std::initializer_list<Scalar> values) {
    Coeffs c(static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (Scalar v : values) c[i++] = v;
    return c;
  }

  AlgebraParams<Scalar> algebra_;
  Coeffs coeffs_;
};

using Elementd = Element<double>;
using AlgebraParamsd = AlgebraParams<double>;

template <typename Scalar>
Element<Scalar> operator+(Element<Scalar> a, const Element<Scalar>& b) {
  return a += b;
}
template <typename Scalar>
Element<Scalar> operator-(Element<Scalar> a, const Element<Scalar>& b) {
  return a -= b;
}
template <typename Scalar>
Element<Scalar> operator-(Element<Scalar> a) {
  return a *= Scalar(-1);
}
template <typename Scalar>
Element<Scalar> operator*(Element<Scalar> a, Scalar s) {
  return a *= s;
}
template <typename Scalar>
Element<Scalar> operator*(Scalar s, Element<Scalar> a) {
  return a *= s;
}
template <typename Scalar>
Element<Scalar> operator/(Element<Scalar> a, Scalar s) {
  return a /= s;
}

/// Bilinear product through the structure-constant table (row element times column element).
template <typename Scalar>
Element<Scalar> mul(const Element<Scalar>& x, const Element<Scalar>& y) {
  x.require_same(y);
  const auto& alg = x.algebra();
  const int d = alg.dimension();
  typename Element<Scalar>::Coeffs out = Element<Scalar>::Coeffs::Zero(d);
  for (int i = 0; i < d; ++i) {
    const Scalar xi = x[i];
    if (xi == Scalar(0)) continue;
    for (int j = 0; j < d; ++j) {
      const Scalar yj = y[j];
      if (yj == Scalar(0)) continue;
      const auto [k, c] = alg.product(i, j);
      out[k] += c * xi * yj;
    }
  }
  return Element<Scalar>(alg, out);
}

template <typename Scalar>
Element<Scalar> operator*(const Element<Scalar>& x, const Element<Scalar>& y) {
  return mul(x, y);
}

template <typename Scalar>
Element<Scalar> conjugate(const Element<Scalar>& a) {
  auto c = a.coeffs();
  c.tail(c.size() - 1) *= Scalar(-1);
  return Element<Scalar>(a.algebra(), c);
}

template <typename Scalar>
Scalar trace(const Element<Scalar>& a) {
  return Scalar(2) * a.scalar_part();
}

/// N(a) = a * conj(a): the parameter-weighted sum of squared coefficients.
template <typename Scalar>
Scalar norm_form(const Element<Scalar>& a) {
  Scalar n(0);
  for (int i = 0; i < a.dimension(); ++i) n += a.algebra().weight(i) * a[i] * a[i];
  return n;
}

/// Norm form of the vector part alone; v^2 = -pure_norm_form(v) for pure v.
template <typename Scalar>
Scalar pure_norm_form(const Element<Scalar>& a) {
  return norm_form(a) - a.scalar_part() * a.scalar_part();
}

template <typename Scalar>
struct NormSignature {
  Scalar value;
  Scalar trace;
};

template <typename Scalar>
NormSignature<Scalar> norm_signature(const Element<Scalar>& a) {
  return {norm_form(a), trace(a)};
}

template <typename Scalar>
Element<Scalar> inverse(const Element<Scalar>& a, const Tolerance<Scalar>& tol = {}) {
  const Scalar n = norm_form(a);
  if (std::abs(n) <= tol.absolute)
    throw AlgebraError(ErrorCode::NotInvertible, "norm form vanishes");
  return conjugate(a) / n;
}

/// sqrt(N(a)); defined only where the norm form is nonnegative.
template <typename Scalar>
Scalar weighted_abs(const Element<Scalar>& a) {
  const Scalar n = norm_form(a);
  if (n < Scalar(0)) throw AlgebraError(ErrorCode::NegativeNorm, "norm form is negative");
  return std::sqrt(n);
}

/// a^2 - t(a) a + N(a); identically zero in a quadratic algebra.
template <typename Scalar>
Element<Scalar> quadratic_residual(const Element<Scalar>& a) {
  return mul(a, a) - trace(a) * a + Element<Scalar>::real(a.algebra(), norm_form(a));
}

/// True when the vector part is negligible relative to the scalar part.
template <typename Scalar>
bool is_real(const Element<Scalar>& a, const Tolerance<Scalar>& tol = {}) {
  return a.vector_euclidean_norm() <= tol.band * (Scalar(1) + std::abs(a.scalar_part()));
}

template <typename Scalar>
Scalar distance(const Element<Scalar>& a, const Element<Scalar>& b) {
  a.require_same(b);
  return (a.coeffs() - b.coeffs()).norm();
}

template <typename Scalar>
std::ostream& operator<<(std::ostream& os, const Element<Scalar>& a) {
  os << a.algebra().describe() << "[";
  for (int i = 0; i < a.dimension(); ++i) os << (i ? ", " : "") << a[i];
  return os << "]";
}

}  // namespace hyperalg
