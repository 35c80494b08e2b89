#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "hyperalg/element.hpp"
#include "hyperalg/polynomial.hpp"

namespace hyperalg {

/// Basis-change operators onto the canonical algebras H(1,1), H(1,-1), O(1,1,1), O(1,1,-1).
enum class MapKind { A, B, C, D, A1, A2, A3, A4, A5, A6, A7, A8 };

constexpr const char* to_string(MapKind kind) {
  constexpr const char* names[] = {"A", "B", "C", "D", "A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8"};
  return names[static_cast<int>(kind)];
}

enum class Direction { Forward, Inverse };

namespace detail {

// Image index and sign of each non-scalar basis vector; the scale of b_i is sqrt|N(b_i)|.
struct OperatorRow {
  std::array<int, 7> target;
  std::array<int, 7> sign;
};

constexpr OperatorRow operator_row(MapKind kind) {
  switch (kind) {
    case MapKind::A: return {{1, 2, 3}, {1, 1, 1}};
    case MapKind::B: return {{3, 2, 1}, {1, 1, 1}};
    case MapKind::C: return {{1, 2, 3}, {1, 1, 1}};
    case MapKind::D: return {{3, 1, 2}, {1, 1, 1}};
    case MapKind::A1:
    case MapKind::A2: return {{1, 2, 3, 4, 5, 6, 7}, {1, 1, 1, 1, 1, 1, 1}};
    // A3..A8: the images of f1, f2, f4 are taken positive; the remaining signs follow
    // from f3 = f1 f2, f5 = f1 f4, f6 = f2 f4, f7 = f3 f4.
    case MapKind::A3: return {{1, 4, 5, 2, 3, 6, 7}, {1, 1, 1, 1, 1, -1, -1}};
    case MapKind::A4: return {{1, 4, 5, 6, 7, 2, 3}, {1, 1, 1, 1, -1, -1, 1}};
    case MapKind::A5: return {{4, 1, 5, 2, 6, 3, 7}, {1, 1, -1, 1, -1, 1, 1}};
    case MapKind::A6: return {{4, 1, 5, 6, 2, 7, 3}, {1, 1, -1, 1, -1, -1, -1}};
    case MapKind::A7: return {{4, 5, 1, 2, 6, 7, 3}, {1, 1, -1, 1, -1, -1, -1}};
    case MapKind::A8: return {{4, 5, 1, 6, 2, 3, 7}, {1, 1, -1, 1, -1, 1, 1}};
  }
  return {};
}

template <typename Scalar>
MapKind dispatch(const AlgebraParams<Scalar>& p) {
  const bool s0 = p.param(0) > 0;
  const bool s1 = p.param(1) > 0;
  if (p.kind() == AlgebraKind::Quaternion) {
    if (s0 && s1) return MapKind::A;
    if (!s0 && !s1) return MapKind::B;
    return s0 ? MapKind::C : MapKind::D;
  }
  const bool s2 = p.param(2) > 0;
  const int code = (s0 ? 0 : 4) + (s1 ? 0 : 2) + (s2 ? 0 : 1);
  return static_cast<MapKind>(static_cast<int>(MapKind::A1) + code);
}

}  // namespace detail

/// Where basis vector b_i of the source goes: sign * scale * b'_index in the target.
template <typename Scalar>
struct ImageTerm {
  int index;
  int sign;
  Scalar scale;
};

/// Algebra isomorphism from a generalized algebra onto its canonical representative.
template <typename Scalar>
class IsomorphismMap {
 public:
  MapKind kind() const { return kind_; }
  const AlgebraParams<Scalar>& source() const { return source_; }
  const AlgebraParams<Scalar>& target() const { return target_; }
  const ImageTerm<Scalar>& image(int i) const { return images_[static_cast<std::size_t>(i)]; }
  int dimension() const { return source_.dimension(); }

  Element<Scalar> apply(const Element<Scalar>& x) const {
    if (!(x.algebra() == source_))
      throw AlgebraError(ErrorCode::AlgebraMismatch, "element is not in the map's source algebra");
    typename Element<Scalar>::Coeffs out = Element<Scalar>::Coeffs::Zero(dimension());
    for (int i = 0; i < dimension(); ++i) {
      const auto& t = image(i);
      out[t.index] += Scalar(t.sign) * t.scale * x[i];
    }
    return Element<Scalar>(target_, out);
  }

  Element<Scalar> apply_inverse(const Element<Scalar>& y) const {
    if (!(y.algebra() == target_))
      throw AlgebraError(ErrorCode::AlgebraMismatch, "element is not in the map's target algebra");
    typename Element<Scalar>::Coeffs out = Element<Scalar>::Coeffs::Zero(dimension());
    for (int i = 0; i < dimension(); ++i) {
      const auto& t = image(i);
      out[i] = Scalar(t.sign) * y[t.index] / t.scale;
    }
    return Element<Scalar>(source_, out);
  }

  template <typename S>
  friend IsomorphismMap<S> canonical_map(const AlgebraParams<S>& p);

 private:
  IsomorphismMap(MapKind kind, const AlgebraParams<Scalar>& source, const AlgebraParams<Scalar>& target)
      : kind_(kind), source_(source), target_(target) {
    const auto row = detail::operator_row(kind);
    images_[0] = {0, 1, Scalar(1)};
    for (int i = 1; i < source.dimension(); ++i) {
      const auto k = static_cast<std::size_t>(i - 1);
      images_[static_cast<std::size_t>(i)] = {row.target[k], row.sign[k], std::sqrt(std::abs(source.weight(i)))};
    }
    self_test();
  }

  // Every basis product must be carried to the product of the images.
  void self_test() const {
    const int d = dimension();
    for (int i = 1; i < d; ++i) {
      for (int j = 1; j < d; ++j) {
        const auto bi = Element<Scalar>::basis(source_, i);
        const auto bj = Element<Scalar>::basis(source_, j);
        const auto lhs = apply(mul(bi, bj));
        const auto rhs = mul(apply(bi), apply(bj));
        const Scalar scale = Scalar(1) + lhs.euclidean_norm();
        if (distance(lhs, rhs) > Scalar(1e-9) * scale)
          throw std::logic_error(std::string("operator ") + to_string(kind_) + " is not multiplicative on (" +
                                 std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }

  MapKind kind_;
  AlgebraParams<Scalar> source_;
  AlgebraParams<Scalar> target_;
  std::array<ImageTerm<Scalar>, 8> images_{};
};

template <typename Scalar>
AlgebraParams<Scalar> canonical_target(const AlgebraParams<Scalar>& p) {
  if (p.kind() == AlgebraKind::Quaternion)
    return AlgebraParams<Scalar>::quaternion(Scalar(1), p.is_division() ? Scalar(1) : Scalar(-1));
  return AlgebraParams<Scalar>::octonion(Scalar(1), Scalar(1), p.is_division() ? Scalar(1) : Scalar(-1));
}

/// Picks A, B, C, D (quaternions) or A1..A8 (octonions) from the parameter signs.
template <typename Scalar>
IsomorphismMap<Scalar> canonical_map(const AlgebraParams<Scalar>& p) {
  return IsomorphismMap<Scalar>(detail::dispatch(p), p, canonical_target(p));
}

template <typename Scalar>
Element<Scalar> apply_map(const IsomorphismMap<Scalar>& m, const Element<Scalar>& x) {
  return m.apply(x);
}

template <typename Scalar>
Element<Scalar> apply_inverse(const IsomorphismMap<Scalar>& m, const Element<Scalar>& y) {
  return m.apply_inverse(y);
}

/// Maps every coefficient of f through the isomorphism, keeping the chain structure.
/// A root x of f corresponds to the root m(x) (forward) or m^-1(x) (inverse) of the result.
template <typename Scalar>
NoncommutativePolynomial<Scalar> transport_polynomial(const NoncommutativePolynomial<Scalar>& f,
                                                      const IsomorphismMap<Scalar>& m, Direction direction) {
  const bool forward = direction == Direction::Forward;
  const auto& from = forward ? m.source() : m.target();
  if (!(f.algebra() == from))
    throw AlgebraError(ErrorCode::AlgebraMismatch, "polynomial is not over the map's domain");
  auto send = [&](const Element<Scalar>& c) { return forward ? m.apply(c) : m.apply_inverse(c); };

  NoncommutativePolynomial<Scalar> out(forward ? m.target() : m.source());
  for (const auto& mono : f.monomials()) {
    std::vector<Element<Scalar>> chain;
    chain.reserve(mono.chain.size());
    for (const auto& c : mono.chain) chain.push_back(send(c));
    out.add_monomial(std::move(chain));
  }
  out.set_constant(send(f.constant()));
  return out;
}

}  // namespace hyperalg
