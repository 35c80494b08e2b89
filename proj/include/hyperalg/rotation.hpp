#pragma once

#include <cmath>

#include "hyperalg/element.hpp"

namespace hyperalg {

template <typename Scalar>
struct VectorDecomposition {
  Scalar scalar;
  Element<Scalar> vector;

  Element<Scalar> recombine() const { return Element<Scalar>::real(vector.algebra(), scalar) + vector; }
};

template <typename Scalar>
VectorDecomposition<Scalar> split_scalar_vector(const Element<Scalar>& x) {
  return {x.scalar_part(), x.vector_part()};
}

/// conj(u) x u with u = cos(t/2) + axis sin(t/2), grouped as (conj(u) x) u.
///
/// The axis must be pure with N(axis) = 1. The scalar part of x is fixed.
template <typename Scalar>
Element<Scalar> rotate(const Element<Scalar>& x, const Element<Scalar>& axis, Scalar angle,
                       const Tolerance<Scalar>& tol = {}) {
  x.require_same(axis);
  if (std::abs(axis.scalar_part()) > tol.absolute || std::abs(norm_form(axis) - Scalar(1)) > tol.absolute)
    throw AlgebraError(ErrorCode::InvalidParameter, "rotation axis must be a pure unit element");
  const auto u = std::cos(angle / Scalar(2)) * Element<Scalar>::one(x.algebra()) + std::sin(angle / Scalar(2)) * axis;
  return mul(mul(conjugate(u), x), u);
}

/// xy = x0 y0 + x0 y_v + y0 x_v + <x_v, y_v> + x_v * y_v, where the inner and cross
/// products are the scalar and pure parts of x_v y_v.
template <typename Scalar>
struct ProductParts {
  Scalar scalar_product;
  Element<Scalar> x0_y;
  Element<Scalar> y0_x;
  Scalar inner;
  Element<Scalar> cross;

  Element<Scalar> sum() const {
    return Element<Scalar>::real(cross.algebra(), scalar_product + inner) + x0_y + y0_x + cross;
  }
};

template <typename Scalar>
ProductParts<Scalar> product_decomposition(const Element<Scalar>& x, const Element<Scalar>& y) {
  x.require_same(y);
  const auto xv = x.vector_part();
  const auto yv = y.vector_part();
  const auto vv = mul(xv, yv);
  return {x.scalar_part() * y.scalar_part(), x.scalar_part() * yv, y.scalar_part() * xv, vv.scalar_part(),
          vv.vector_part()};
}

}  // namespace hyperalg
