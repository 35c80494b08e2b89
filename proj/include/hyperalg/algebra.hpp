#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>

#include "hyperalg/error.hpp"

namespace hyperalg {

enum class AlgebraKind { Quaternion, Octonion };

constexpr const char* to_string(AlgebraKind kind) {
  return kind == AlgebraKind::Quaternion ? "quaternion" : "octonion";
}

constexpr int dimension_of(AlgebraKind kind) { return kind == AlgebraKind::Quaternion ? 4 : 8; }
constexpr int param_count_of(AlgebraKind kind) { return kind == AlgebraKind::Quaternion ? 2 : 3; }

/// One cell of a multiplication table: b_i * b_j = sign * monomial * b_target.
///
/// `monomial` is a bitmask over the structure parameters (bit 0 = gamma1 / alpha,
/// bit 1 = gamma2 / beta, bit 2 = gamma); mask 0 is the constant 1.
struct ProductEntry {
  int target;
  int sign;
  unsigned monomial;
};

namespace tables {

using QuaternionTable = std::array<std::array<ProductEntry, 4>, 4>;
using OctonionTable = std::array<std::array<ProductEntry, 8>, 8>;

// Rows are the left factor, columns the right factor.
inline constexpr QuaternionTable quaternion = {{
    {{{0, +1, 0}, {1, +1, 0}, {2, +1, 0}, {3, +1, 0}}},
    {{{1, +1, 0}, {0, -1, 1}, {3, +1, 0}, {2, -1, 1}}},
    {{{2, +1, 0}, {3, -1, 0}, {0, -1, 2}, {1, +1, 2}}},
    {{{3, +1, 0}, {2, +1, 1}, {1, -1, 2}, {0, -1, 3}}},
}};

// a = 1, b = 2, g = 4 in the monomial mask.
inline constexpr OctonionTable octonion = {{
    {{{0, +1, 0}, {1, +1, 0}, {2, +1, 0}, {3, +1, 0}, {4, +1, 0}, {5, +1, 0}, {6, +1, 0}, {7, +1, 0}}},
    {{{1, +1, 0}, {0, -1, 1}, {3, +1, 0}, {2, -1, 1}, {5, +1, 0}, {4, -1, 1}, {7, -1, 0}, {6, +1, 1}}},
    {{{2, +1, 0}, {3, -1, 0}, {0, -1, 2}, {1, +1, 2}, {6, +1, 0}, {7, +1, 0}, {4, -1, 2}, {5, -1, 2}}},
    {{{3, +1, 0}, {2, +1, 1}, {1, -1, 2}, {0, -1, 3}, {7, +1, 0}, {6, -1, 1}, {5, +1, 2}, {4, -1, 3}}},
    {{{4, +1, 0}, {5, -1, 0}, {6, -1, 0}, {7, -1, 0}, {0, -1, 4}, {1, +1, 4}, {2, +1, 4}, {3, +1, 4}}},
    {{{5, +1, 0}, {4, +1, 1}, {7, -1, 0}, {6, +1, 1}, {1, -1, 4}, {0, -1, 5}, {3, -1, 4}, {2, +1, 5}}},
    {{{6, +1, 0}, {7, +1, 0}, {4, +1, 2}, {5, -1, 2}, {2, -1, 4}, {3, +1, 4}, {0, -1, 6}, {1, -1, 6}}},
    {{{7, +1, 0}, {6, -1, 1}, {5, +1, 2}, {4, +1, 3}, {3, -1, 4}, {2, -1, 5}, {1, +1, 6}, {0, -1, 7}}},
}};

constexpr ProductEntry entry(AlgebraKind kind, int i, int j) {
  return kind == AlgebraKind::Quaternion ? quaternion[i][j] : octonion[i][j];
}

}  // namespace tables

/// Structure parameters of H(gamma1, gamma2) or O(alpha, beta, gamma).
///
/// All parameters are nonzero and finite. The eight signed-monomial values used by
/// the multiplication table are evaluated once at construction.
template <typename Scalar>
class AlgebraParams {
 public:
  static AlgebraParams quaternion(Scalar gamma1, Scalar gamma2) {
    return AlgebraParams(AlgebraKind::Quaternion, {gamma1, gamma2, Scalar(1)});
  }

  static AlgebraParams octonion(Scalar alpha, Scalar beta, Scalar gamma) {
    return AlgebraParams(AlgebraKind::Octonion, {alpha, beta, gamma});
  }

  static AlgebraParams from_span(AlgebraKind kind, std::span<const Scalar> values) {
    if (static_cast<int>(values.size()) != param_count_of(kind)) {
      throw AlgebraError(ErrorCode::InvalidParameter,
                         std::string(to_string(kind)) + " algebra takes " +
                             std::to_string(param_count_of(kind)) + " parameters");
    }
    std::array<Scalar, 3> p{Scalar(1), Scalar(1), Scalar(1)};
    for (std::size_t i = 0; i < values.size(); ++i) p[i] = values[i];
    return AlgebraParams(kind, p);
  }

  AlgebraKind kind() const { return kind_; }
  int dimension() const { return dimension_of(kind_); }
  int param_count() const { return param_count_of(kind_); }
  Scalar param(int i) const { return params_[static_cast<std::size_t>(i)]; }
  std::span<const Scalar> params() const {
    return {params_.data(), static_cast<std::size_t>(param_count())};
  }

  Scalar monomial(unsigned mask) const { return monomials_[mask]; }

  /// Norm weight of basis vector i: N(b_i) = weight(i). Index and monomial mask coincide.
  Scalar weight(int i) const { return monomials_[static_cast<unsigned>(i)]; }

  bool is_division() const {
    for (int i = 0; i < param_count(); ++i)
      if (params_[static_cast<std::size_t>(i)] < Scalar(0)) return false;
    return true;
  }
  bool is_split() const { return !is_division(); }

  /// Coefficient c and index k with b_i * b_j = c * b_k.
  std::pair<int, Scalar> product(int i, int j) const {
    const ProductEntry e = tables::entry(kind_, i, j);
    return {e.target, Scalar(e.sign) * monomials_[e.monomial]};
  }

  std::string describe() const {
    std::string out = kind_ == AlgebraKind::Quaternion ? "H(" : "O(";
    for (int i = 0; i < param_count(); ++i) {
      if (i) out += ",";
      out += std::to_string(static_cast<double>(param(i)));
    }
    return out + ")";
  }

  friend bool operator==(const AlgebraParams& a, const AlgebraParams& b) {
    return a.kind_ == b.kind_ && a.params_ == b.params_;
  }

 private:
  AlgebraParams(AlgebraKind kind, std::array<Scalar, 3> params) : kind_(kind), params_(params) {
    for (int i = 0; i < param_count(); ++i) {
      const Scalar v = params_[static_cast<std::size_t>(i)];
      if (!(v != Scalar(0)) || !std::isfinite(static_cast<double>(v)))
        throw AlgebraError(ErrorCode::InvalidParameter, "structure parameters must be nonzero and finite");
    }
    for (unsigned mask = 0; mask < 8; ++mask) {
      Scalar m(1);
      for (unsigned bit = 0; bit < 3; ++bit)
        if (mask & (1u << bit)) m *= params_[bit];
      monomials_[mask] = m;
    }
  }

  AlgebraKind kind_;
  std::array<Scalar, 3> params_;
  std::array<Scalar, 8> monomials_{};
};

/// Comparison thresholds shared by the numeric predicates of the library.
template <typename Scalar>
struct Tolerance {
  /// Absolute tolerance, scaled by (1 + operand magnitudes) where it applies.
  Scalar absolute = Scalar(1e-9);
  /// Relative band around zero for lightlike and real-element detection, scaled by (1 + |a|^2).
  Scalar band = Scalar(1e-12);
  /// Two roots closer than this (Euclidean, on coefficients) are the same root.
  Scalar dedup = Scalar(1e-6);
};

}  // namespace hyperalg
