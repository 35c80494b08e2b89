#pragma once

#include <cmath>
#include <optional>

#include "hyperalg/element.hpp"

namespace hyperalg {

enum class SplitClass { Spacelike, Timelike, Lightlike };

constexpr const char* to_string(SplitClass c) {
  switch (c) {
    case SplitClass::Spacelike: return "spacelike";
    case SplitClass::Timelike: return "timelike";
    case SplitClass::Lightlike: return "lightlike";
  }
  return "";
}

enum class PolarVariant { Circular, HyperbolicSpacelike, HyperbolicTimelike };

constexpr const char* to_string(PolarVariant v) {
  switch (v) {
    case PolarVariant::Circular: return "circular";
    case PolarVariant::HyperbolicSpacelike: return "hyperbolic-spacelike";
    case PolarVariant::HyperbolicTimelike: return "hyperbolic-timelike";
  }
  return "";
}

/// a = modulus (cos t + w sin t)            for Circular,            w^2 = -1
/// a = modulus (sinh t + w cosh t)          for HyperbolicSpacelike, w^2 = +1
/// a = sign * modulus (cosh t + w sinh t)   for HyperbolicTimelike,  w^2 = +1
///
/// `scalar_sign` is -1 only for a timelike hyperbolic element with negative scalar
/// part; the angle is then taken on -a.
template <typename Scalar>
struct PolarForm {
  Scalar modulus;
  PolarVariant variant;
  Scalar angle;
  Element<Scalar> axis;
  int scalar_sign = 1;
};

template <typename Scalar>
SplitClass classify_split(const Element<Scalar>& a, const Tolerance<Scalar>& tol = {}) {
  const Scalar n = norm_form(a);
  const Scalar band = tol.band * (Scalar(1) + a.coeffs().squaredNorm());
  if (n < -band) return SplitClass::Spacelike;
  if (n > band) return SplitClass::Timelike;
  return SplitClass::Lightlike;
}

namespace detail {

template <typename Scalar>
struct PolarAttempt {
  std::optional<PolarForm<Scalar>> form;
  ErrorCode failure = ErrorCode::InvalidParameter;
};

template <typename Scalar>
PolarAttempt<Scalar> try_polar(const Element<Scalar>& a, const Tolerance<Scalar>& tol) {
  if (is_real(a, tol)) return {std::nullopt, ErrorCode::ScalarInput};
  if (classify_split(a, tol) == SplitClass::Lightlike) return {std::nullopt, ErrorCode::LightlikeInput};

  const Element<Scalar> v = a.vector_part();
  const Scalar a0 = a.scalar_part();
  const Scalar nv = pure_norm_form(a);
  Scalar spread(0);
  for (int i = 1; i < a.dimension(); ++i) spread += std::abs(a.algebra().weight(i)) * a[i] * a[i];
  if (std::abs(nv) <= tol.band * spread) return {std::nullopt, ErrorCode::DegenerateAxis};

  if (nv > 0) {
    const Scalar r = std::sqrt(nv);
    const Scalar q = std::sqrt(a0 * a0 + nv);
    return {PolarForm<Scalar>{q, PolarVariant::Circular, std::atan2(r, a0), v / r, 1}};
  }
  const Scalar r = std::sqrt(-nv);
  const Scalar n = a0 * a0 + nv;
  if (n < 0) {
    const Scalar m = std::sqrt(-n);
    return {PolarForm<Scalar>{m, PolarVariant::HyperbolicSpacelike, std::asinh(a0 / m), v / r, 1}};
  }
  const Scalar m = std::sqrt(n);
  const int s = a0 < 0 ? -1 : 1;
  return {PolarForm<Scalar>{m, PolarVariant::HyperbolicTimelike, std::asinh(r / m), (Scalar(s) / r) * v, s}};
}

/// x^n for n >= 0 by binary powering; valid by power associativity.
template <typename Scalar>
Element<Scalar> power_by_squaring(Element<Scalar> base, long long n) {
  Element<Scalar> result = Element<Scalar>::one(base.algebra());
  while (n > 0) {
    if (n & 1) result = mul(result, base);
    n >>= 1;
    if (n) base = mul(base, base);
  }
  return result;
}

}  // namespace detail

template <typename Scalar>
PolarForm<Scalar> polar_decompose(const Element<Scalar>& a, const Tolerance<Scalar>& tol = {}) {
  auto attempt = detail::try_polar(a, tol);
  if (!attempt.form) throw AlgebraError(attempt.failure, "element has no polar form");
  return *attempt.form;
}

template <typename Scalar>
Element<Scalar> reconstruct(const PolarForm<Scalar>& p) {
  const auto one = Element<Scalar>::one(p.axis.algebra());
  switch (p.variant) {
    case PolarVariant::Circular:
      return p.modulus * (std::cos(p.angle) * one + std::sin(p.angle) * p.axis);
    case PolarVariant::HyperbolicSpacelike:
      return p.modulus * (std::sinh(p.angle) * one + std::cosh(p.angle) * p.axis);
    case PolarVariant::HyperbolicTimelike:
      return (Scalar(p.scalar_sign) * p.modulus) * (std::cosh(p.angle) * one + std::sinh(p.angle) * p.axis);
  }
  return one;
}

enum class ExpMode { ClosedForm, Series };

/// e^{t w} for a pure w with N(w) = +1 (w^2 = -1) or N(w) = -1 (w^2 = +1).
template <typename Scalar>
Element<Scalar> exp_element(Scalar t, const Element<Scalar>& w, ExpMode mode = ExpMode::ClosedForm,
                            const Tolerance<Scalar>& tol = {}) {
  const Scalar n = norm_form(w);
  if (std::abs(w.scalar_part()) > tol.absolute || std::abs(std::abs(n) - Scalar(1)) > tol.absolute)
    throw AlgebraError(ErrorCode::InvalidParameter, "exponent axis must be pure with |N| = 1");

  const auto one = Element<Scalar>::one(w.algebra());
  if (mode == ExpMode::ClosedForm) {
    if (n > 0) return std::cos(t) * one + std::sin(t) * w;
    return std::cosh(t) * one + std::sinh(t) * w;
  }

  const Element<Scalar> tw = t * w;
  Element<Scalar> sum = one;
  Element<Scalar> term = one;
  for (int k = 1; k < 1000; ++k) {
    term = mul(term, tw) / Scalar(k);
    sum += term;
    if (term.euclidean_norm() < Scalar(1e-15)) break;
  }
  return sum;
}

/// a^n through the polar form; repeated multiplication where no polar form exists.
template <typename Scalar>
Element<Scalar> demoivre_pow(const Element<Scalar>& a, long long n, const Tolerance<Scalar>& tol = {}) {
  if (n == 0) return Element<Scalar>::one(a.algebra());
  if (n < 0) return demoivre_pow(inverse(a, tol), -n, tol);

  const auto attempt = detail::try_polar(a, tol);
  if (!attempt.form) return detail::power_by_squaring(a, n);

  const auto& p = *attempt.form;
  const auto one = Element<Scalar>::one(a.algebra());
  const Scalar t = Scalar(n) * p.angle;
  const Scalar scale = std::pow(p.modulus, Scalar(n));
  switch (p.variant) {
    case PolarVariant::Circular:
      return scale * (std::cos(t) * one + std::sin(t) * p.axis);
    case PolarVariant::HyperbolicTimelike: {
      const Scalar sign = (p.scalar_sign < 0 && (n & 1)) ? Scalar(-1) : Scalar(1);
      return (sign * scale) * (std::cosh(t) * one + std::sinh(t) * p.axis);
    }
    case PolarVariant::HyperbolicSpacelike:
      if (n & 1) return scale * (std::sinh(t) * one + std::cosh(t) * p.axis);
      return scale * (std::cosh(t) * one + std::sinh(t) * p.axis);
  }
  return one;
}

}  // namespace hyperalg
