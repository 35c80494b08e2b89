#pragma once

#include <algorithm>
#include <vector>

#include "hyperalg/element.hpp"

namespace hyperalg {

/// a_0 x a_1 x ... a_{t-1} x a_t, stored as the coefficient chain (a_0, ..., a_t).
template <typename Scalar>
struct Monomial {
  std::vector<Element<Scalar>> chain;

  int degree() const { return static_cast<int>(chain.size()) - 1; }
};

/// Sum of monomials plus a constant, all coefficients in one algebra.
///
/// Lower-degree terms live in the same monomial list as the leading one.
template <typename Scalar>
class NoncommutativePolynomial {
 public:
  explicit NoncommutativePolynomial(const AlgebraParams<Scalar>& algebra)
      : algebra_(algebra), constant_(Element<Scalar>::zero(algebra)) {}

  const AlgebraParams<Scalar>& algebra() const { return algebra_; }
  const std::vector<Monomial<Scalar>>& monomials() const { return monomials_; }
  const Element<Scalar>& constant() const { return constant_; }

  NoncommutativePolynomial& add_monomial(std::vector<Element<Scalar>> chain) {
    if (chain.size() < 2)
      throw AlgebraError(ErrorCode::InvalidParameter, "a monomial chain needs at least two coefficients");
    for (const auto& c : chain) require(c);
    monomials_.push_back(Monomial<Scalar>{std::move(chain)});
    return *this;
  }

  NoncommutativePolynomial& set_constant(Element<Scalar> c) {
    require(c);
    constant_ = std::move(c);
    return *this;
  }

  int degree() const {
    int d = 0;
    for (const auto& m : monomials_) d = std::max(d, m.degree());
    return d;
  }

  /// x^n + c, the polynomial of the equation x^n = -c.
  static NoncommutativePolynomial power(const AlgebraParams<Scalar>& algebra, int n,
                                        const Element<Scalar>& c) {
    NoncommutativePolynomial f(algebra);
    f.add_monomial(std::vector<Element<Scalar>>(static_cast<std::size_t>(n) + 1, Element<Scalar>::one(algebra)));
    f.set_constant(c);
    return f;
  }

  /// x^2 + a x + b.
  static NoncommutativePolynomial quadratic(const Element<Scalar>& a, const Element<Scalar>& b) {
    const auto& alg = a.algebra();
    const auto one = Element<Scalar>::one(alg);
    NoncommutativePolynomial f(alg);
    f.add_monomial({one, one, one});
    f.add_monomial({a, one});
    f.set_constant(b);
    return f;
  }

 private:
  void require(const Element<Scalar>& c) const {
    if (!(c.algebra() == algebra_))
      throw AlgebraError(ErrorCode::AlgebraMismatch, "polynomial coefficient from another algebra");
  }

  AlgebraParams<Scalar> algebra_;
  std::vector<Monomial<Scalar>> monomials_;
  Element<Scalar> constant_;
};

/// Evaluates a monomial strictly left to right: ((a_0 x) a_1) x ... a_t.
template <typename Scalar>
Element<Scalar> eval_monomial(const Monomial<Scalar>& m, const Element<Scalar>& x) {
  Element<Scalar> acc = m.chain.front();
  for (std::size_t i = 1; i < m.chain.size(); ++i) acc = mul(mul(acc, x), m.chain[i]);
  return acc;
}

template <typename Scalar>
Element<Scalar> eval_polynomial(const NoncommutativePolynomial<Scalar>& f, const Element<Scalar>& x) {
  if (!(x.algebra() == f.algebra()))
    throw AlgebraError(ErrorCode::AlgebraMismatch, "argument and polynomial live in different algebras");
  Element<Scalar> acc = f.constant();
  for (const auto& m : f.monomials()) acc += eval_monomial(m, x);
  return acc;
}

/// Euclidean size of f(x); zero within tolerance certifies x as a root.
template <typename Scalar>
Scalar verify_root(const NoncommutativePolynomial<Scalar>& f, const Element<Scalar>& x) {
  return eval_polynomial(f, x).euclidean_norm();
}

}  // namespace hyperalg
