#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <variant>
#include <vector>

#include "hyperalg/element.hpp"
#include "hyperalg/polar.hpp"
#include "hyperalg/polynomial.hpp"

namespace hyperalg {

namespace detail {

// Indefiniteness scale of a vector: sum of |N(b_i)| x_i^2 over the non-scalar basis.
template <typename Scalar>
Scalar weighted_spread(const Element<Scalar>& a) {
  Scalar s(0);
  for (int i = 1; i < a.dimension(); ++i) s += std::abs(a.algebra().weight(i)) * a[i] * a[i];
  return s;
}

/// Pure element with N(v) = target, drawn from a Gaussian direction. A zero target
/// lands on the null cone (split algebras only).
template <typename Scalar, typename Rng>
Element<Scalar> sample_pure_with_norm(const AlgebraParams<Scalar>& alg, Scalar target, Rng& rng,
                                      const Tolerance<Scalar>& tol) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  const int d = alg.dimension();
  const bool null_target = std::abs(target) <= tol.band;
  if (alg.is_division() && (target < 0 || null_target))
    throw AlgebraError(ErrorCode::InvalidParameter, "a definite norm form has no such pure elements");

  for (int attempt = 0; attempt < 100000; ++attempt) {
    typename Element<Scalar>::Coeffs u = Element<Scalar>::Coeffs::Zero(d);
    for (int i = 1; i < d; ++i) u[i] = Scalar(gauss(rng)) / std::sqrt(std::abs(alg.weight(i)));
    Element<Scalar> v(alg, u);
    const Scalar spread = weighted_spread(v);
    if (null_target) {
      Scalar pos(0), neg(0);
      for (int i = 1; i < d; ++i) (alg.weight(i) > 0 ? pos : neg) += std::abs(alg.weight(i)) * u[i] * u[i];
      if (pos < Scalar(0.05) * spread || neg < Scalar(0.05) * spread) continue;
      const Scalar f = std::sqrt(pos / neg);
      for (int i = 1; i < d; ++i)
        if (alg.weight(i) < 0) u[i] *= f;
      return Element<Scalar>(alg, u);
    }
    const Scalar n = norm_form(v);
    if ((n > 0) != (target > 0) || std::abs(n) < Scalar(0.05) * spread) continue;
    return v * std::sqrt(target / n);
  }
  throw AlgebraError(ErrorCode::InvalidParameter, "could not sample the requested quadric");
}

}  // namespace detail

/// The roots modulus * (cos t_r + eps sin t_r) for every angle t_r and every pure eps
/// with N(eps) = 1. Members for angles with sin t_r = 0 are the real roots.
template <typename Scalar>
struct RootFamily {
  AlgebraParams<Scalar> algebra;
  Scalar modulus;
  std::vector<Scalar> angles;
  std::vector<Element<Scalar>> real_roots;
  /// Scalar part and quadric radius of the first non-real branch.
  Scalar scalar_part;
  Scalar quadric_radius;

  bool is_real_branch(std::size_t r) const {
    return std::abs(std::sin(angles[r])) <= Scalar(1e-12);
  }

  Element<Scalar> member(std::size_t r, const Element<Scalar>& unit_axis) const {
    const auto one = Element<Scalar>::one(algebra);
    return modulus * (std::cos(angles[r]) * one + std::sin(angles[r]) * unit_axis);
  }

  /// k members over the non-real branches with random unit axes, deterministic in seed.
  std::vector<Element<Scalar>> sample(std::size_t k, std::uint64_t seed, const Tolerance<Scalar>& tol = {}) const {
    std::vector<std::size_t> branches;
    for (std::size_t r = 0; r < angles.size(); ++r)
      if (!is_real_branch(r)) branches.push_back(r);
    std::vector<Element<Scalar>> out;
    if (branches.empty()) return out;
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < k; ++i) {
      const auto axis = detail::sample_pure_with_norm(algebra, Scalar(1), rng, tol);
      out.push_back(member(branches[i % branches.size()], axis));
    }
    return out;
  }
};

template <typename Scalar>
class RootSet {
 public:
  explicit RootSet(std::vector<Element<Scalar>> roots) : data_(std::move(roots)) {}
  explicit RootSet(RootFamily<Scalar> family) : data_(std::move(family)) {}

  bool is_finite() const { return std::holds_alternative<std::vector<Element<Scalar>>>(data_); }
  const std::vector<Element<Scalar>>& roots() const { return std::get<std::vector<Element<Scalar>>>(data_); }
  const RootFamily<Scalar>& family() const { return std::get<RootFamily<Scalar>>(data_); }

 private:
  std::variant<std::vector<Element<Scalar>>, RootFamily<Scalar>> data_;
};

namespace detail {

template <typename Scalar>
RootSet<Scalar> finite_roots(std::vector<Element<Scalar>> candidates, const Tolerance<Scalar>& tol) {
  std::vector<Element<Scalar>> out;
  for (auto& c : candidates) {
    bool seen = false;
    for (const auto& r : out) seen = seen || distance(r, c) <= tol.dedup;
    if (!seen) out.push_back(std::move(c));
  }
  return RootSet<Scalar>(std::move(out));
}

template <typename Scalar>
RootSet<Scalar> real_rhs_roots(const Element<Scalar>& a, int n, const Tolerance<Scalar>& tol) {
  const auto& alg = a.algebra();
  const Scalar a0 = a.scalar_part();
  if (a0 == Scalar(0) || std::abs(a0) <= tol.band) {
    if (alg.is_split()) throw AlgebraError(ErrorCode::LightlikeInput, "zero right-hand side in a split algebra");
    return RootSet<Scalar>(std::vector<Element<Scalar>>{Element<Scalar>::zero(alg)});
  }
  if (n == 1) return RootSet<Scalar>(std::vector<Element<Scalar>>{Element<Scalar>::real(alg, a0)});
  if (a0 < 0 && n % 2 == 0 && alg.is_division())
    throw AlgebraError(ErrorCode::NoRealizableRoots, "even root of a negative real");

  constexpr Scalar pi = std::numbers::pi_v<Scalar>;
  const Scalar lambda = a0 > 0 ? Scalar(0) : pi;
  RootFamily<Scalar> fam{alg, std::pow(std::abs(a0), Scalar(1) / Scalar(n)), {}, {}, Scalar(0), Scalar(0)};
  bool have_branch = false;
  for (int r = 0; r < n; ++r) {
    fam.angles.push_back((lambda + Scalar(2) * pi * Scalar(r)) / Scalar(n));
    const std::size_t idx = fam.angles.size() - 1;
    if (fam.is_real_branch(idx)) {
      const Scalar c = std::cos(fam.angles[idx]) > 0 ? Scalar(1) : Scalar(-1);
      fam.real_roots.push_back(Element<Scalar>::real(alg, c * fam.modulus));
    } else if (!have_branch) {
      fam.scalar_part = fam.modulus * std::cos(fam.angles[idx]);
      fam.quadric_radius = fam.modulus * std::abs(std::sin(fam.angles[idx]));
      have_branch = true;
    }
  }
  if (!have_branch) return finite_roots(fam.real_roots, tol);
  return RootSet<Scalar>(std::move(fam));
}

// a = a0 + v with v^2 = 0: (b + u)^n = b^n + n b^(n-1) u for u parallel to v.
template <typename Scalar>
RootSet<Scalar> null_vector_roots(const Element<Scalar>& a, int n, const Tolerance<Scalar>& tol) {
  const Scalar a0 = a.scalar_part();
  if (n % 2 == 0 && a0 < 0) throw AlgebraError(ErrorCode::NoRealizableRoots, "even root of a negative null element");
  const Scalar b = std::copysign(std::pow(std::abs(a0), Scalar(1) / Scalar(n)), a0);
  const auto x = Element<Scalar>::real(a.algebra(), b) + a.vector_part() / (Scalar(n) * std::pow(b, Scalar(n - 1)));
  if (n % 2 == 0) return finite_roots({x, -x}, tol);
  return finite_roots({x}, tol);
}

}  // namespace detail

/// Solutions of x^n = a.
///
/// Circular elements have n roots, ordered by the angle index r. Timelike hyperbolic
/// elements, and spacelike ones for odd n, have exactly one. Real right-hand sides
/// give a RootFamily.
template <typename Scalar>
RootSet<Scalar> nth_roots(const Element<Scalar>& a, int n, const Tolerance<Scalar>& tol = {}) {
  if (n < 1) throw AlgebraError(ErrorCode::InvalidParameter, "root order must be positive");
  if (is_real(a, tol)) return detail::real_rhs_roots(a, n, tol);
  if (classify_split(a, tol) == SplitClass::Lightlike)
    throw AlgebraError(ErrorCode::LightlikeInput, "roots of a lightlike element");

  const auto attempt = detail::try_polar(a, tol);
  if (!attempt.form) return detail::null_vector_roots(a, n, tol);

  const auto& p = *attempt.form;
  const auto one = Element<Scalar>::one(a.algebra());
  const Scalar root_mod = std::pow(p.modulus, Scalar(1) / Scalar(n));
  std::vector<Element<Scalar>> out;
  switch (p.variant) {
    case PolarVariant::Circular: {
      constexpr Scalar pi = std::numbers::pi_v<Scalar>;
      for (int r = 0; r < n; ++r) {
        const Scalar t = (p.angle + Scalar(2) * pi * Scalar(r)) / Scalar(n);
        out.push_back(root_mod * (std::cos(t) * one + std::sin(t) * p.axis));
      }
      break;
    }
    case PolarVariant::HyperbolicTimelike: {
      if (p.scalar_sign < 0 && n % 2 == 0)
        throw AlgebraError(ErrorCode::NoRealizableRoots, "even root of a timelike element with negative scalar part");
      const Scalar t = p.angle / Scalar(n);
      out.push_back((Scalar(p.scalar_sign) * root_mod) * (std::cosh(t) * one + std::sinh(t) * p.axis));
      break;
    }
    case PolarVariant::HyperbolicSpacelike: {
      if (n % 2 == 0) throw AlgebraError(ErrorCode::EvenPowerSpacelike, "no even power is spacelike");
      const Scalar t = p.angle / Scalar(n);
      out.push_back(root_mod * (std::sinh(t) * one + std::cosh(t) * p.axis));
      break;
    }
  }
  return detail::finite_roots(std::move(out), tol);
}

enum class QuadRootTag { Ellipsoidal, Hyperboloidal, Isolated, NotApplicable };

constexpr const char* to_string(QuadRootTag t) {
  switch (t) {
    case QuadRootTag::Ellipsoidal: return "ellipsoidal";
    case QuadRootTag::Hyperboloidal: return "hyperboloidal";
    case QuadRootTag::Isolated: return "isolated";
    case QuadRootTag::NotApplicable: return "not-applicable";
  }
  return "";
}

/// Root structure of x^2 + a x + b = 0. For real coefficients the non-real roots are
/// scalar_part + v with N(v) = pure_norm, pure_norm = (4b - a^2)/4.
template <typename Scalar>
struct QuadRootClass {
  QuadRootTag tag;
  std::optional<Scalar> criterion_value;
  Scalar scalar_part = Scalar(0);
  Scalar pure_norm = Scalar(0);

  Scalar quadric_radius() const { return std::sqrt(std::abs(pure_norm)); }
};

template <typename Scalar>
QuadRootClass<Scalar> quad_root_classify(const Element<Scalar>& a, const Element<Scalar>& b,
                                         const Tolerance<Scalar>& tol = {}) {
  a.require_same(b);
  if (!is_real(a, tol) || !is_real(b, tol)) return {QuadRootTag::NotApplicable, std::nullopt};
  const Scalar ar = a.scalar_part();
  const Scalar br = b.scalar_part();
  const Scalar disc = ar * ar - Scalar(4) * br;
  QuadRootClass<Scalar> out{QuadRootTag::Isolated, disc, -ar / Scalar(2), -disc / Scalar(4)};
  if (a.algebra().is_split())
    out.tag = QuadRootTag::Hyperboloidal;
  else if (disc < 0)
    out.tag = QuadRootTag::Ellipsoidal;
  return out;
}

/// k elements with the scalar part of x0 whose pure parts share its norm form.
template <typename Scalar>
std::vector<Element<Scalar>> quadric_orbit_samples(const Element<Scalar>& x0, std::size_t k, std::uint64_t seed,
                                                   const Tolerance<Scalar>& tol = {}) {
  if (is_real(x0, tol)) throw AlgebraError(ErrorCode::ScalarInput, "orbit of a real element");
  const auto v = x0.vector_part();
  Scalar target = pure_norm_form(x0);
  if (std::abs(target) <= tol.band * detail::weighted_spread(v)) target = Scalar(0);

  std::mt19937_64 rng(seed);
  std::vector<Element<Scalar>> out;
  out.reserve(k);
  const auto base = Element<Scalar>::real(x0.algebra(), x0.scalar_part());
  for (std::size_t i = 0; i < k; ++i)
    out.push_back(base + detail::sample_pure_with_norm(x0.algebra(), target, rng, tol));
  return out;
}

}  // namespace hyperalg
