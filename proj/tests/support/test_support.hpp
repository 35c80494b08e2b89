#pragma once

// Random generators and independent oracles shared by the test binaries. Nothing here
// calls into the polar, root or isomorphism code it is used to check.

#include <array>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperalg/element.hpp"

namespace hyperalg::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
inline double gauss(Rng& rng) { return std::normal_distribution<double>(0.0, 1.0)(rng); }

/// Parameters with magnitudes in [0.3, 4] and the given sign pattern (bit k set = param k negative).
inline AlgebraParamsd random_params(Rng& rng, AlgebraKind kind, unsigned negative_mask) {
  std::array<double, 3> p{};
  for (int i = 0; i < param_count_of(kind); ++i) {
    p[static_cast<std::size_t>(i)] = uniform(rng, 0.3, 4.0) * ((negative_mask >> i) & 1u ? -1.0 : 1.0);
  }
  return kind == AlgebraKind::Quaternion ? AlgebraParamsd::quaternion(p[0], p[1])
                                         : AlgebraParamsd::octonion(p[0], p[1], p[2]);
}

inline int sign_regime_count(AlgebraKind kind) { return kind == AlgebraKind::Quaternion ? 4 : 8; }

inline Elementd random_element(Rng& rng, const AlgebraParamsd& alg, double scale = 1.0) {
  Coefficients<double> c(alg.dimension());
  for (int i = 0; i < alg.dimension(); ++i) c[i] = scale * gauss(rng);
  return Elementd(alg, c);
}

/// Norm form written out from the weight formula, independent of the library.
inline double weighted_square(const Elementd& a, int first = 0) {
  const auto& alg = a.algebra();
  double s = 0;
  for (int i = first; i < a.dimension(); ++i) {
    double w = 1;
    for (int bit = 0; bit < alg.param_count(); ++bit)
      if (i & (1 << bit)) w *= alg.param(bit);
    s += w * a[i] * a[i];
  }
  return s;
}

/// Pure element with weighted square +1 or -1, by rejection on Gaussian directions.
inline Elementd random_unit_pure(Rng& rng, const AlgebraParamsd& alg, int norm_sign) {
  for (;;) {
    Coefficients<double> c = Coefficients<double>::Zero(alg.dimension());
    for (int i = 1; i < alg.dimension(); ++i) c[i] = gauss(rng) / std::sqrt(std::abs(alg.weight(i)));
    Elementd v(alg, c);
    const double n = weighted_square(v, 1);
    double spread = 0;
    for (int i = 1; i < alg.dimension(); ++i) spread += std::abs(alg.weight(i)) * c[i] * c[i];
    if (n * norm_sign < 0.2 * spread) continue;
    return v / std::sqrt(std::abs(n));
  }
}

enum class Regime { Circular, Spacelike, Timelike };

/// m (cos t + w sin t), m (sinh t + w cosh t) or +-m (cosh t + w sinh t) for a random
/// unit pure w of the matching sign; the algebra must admit such a w.
inline Elementd make_regime(Rng& rng, const AlgebraParamsd& alg, Regime regime) {
  const double m = uniform(rng, 0.3, 2.0);
  const double t = uniform(rng, -2.0, 2.0);
  const auto one = Elementd::one(alg);
  switch (regime) {
    case Regime::Circular:
      return m * (std::cos(t) * one + std::sin(t) * random_unit_pure(rng, alg, 1));
    case Regime::Spacelike:
      return m * (std::sinh(t) * one + std::cosh(t) * random_unit_pure(rng, alg, -1));
    case Regime::Timelike:
      return (rng() % 2 ? m : -m) * (std::cosh(t) * one + std::sinh(t) * random_unit_pure(rng, alg, -1));
  }
  return one;
}

/// x^n by n-fold left-to-right multiplication; negative n through conj(x)/N(x).
inline Elementd naive_power(const Elementd& x, int n) {
  Elementd base = x;
  if (n < 0) {
    Coefficients<double> c = x.coeffs();
    for (int i = 1; i < x.dimension(); ++i) c[i] = -c[i];
    base = Elementd(x.algebra(), c) / weighted_square(x);
    n = -n;
  }
  Elementd acc = Elementd::one(x.algebra());
  for (int i = 0; i < n; ++i) acc = mul(acc, base);
  return acc;
}

// ---------------------------------------------------------------------------
// Multiplication tables transcribed as strings, for symbolic comparison.
// Entries read "[-][g1*][g2*]e2" (quaternion) or "[-][a*][b*][g*]f5" (octonion);
// a bare monomial like "-a*b" is a multiple of 1.

inline const std::array<std::array<const char*, 3>, 3> kPrintedQuaternionTable = {{
    {"-g1", "e3", "-g1*e2"},
    {"-e3", "-g2", "g2*e1"},
    {"g1*e2", "-g2*e1", "-g1*g2"},
}};

inline const std::array<std::array<const char*, 7>, 7> kPrintedOctonionTable = {{
    {"-a", "f3", "-a*f2", "f5", "-a*f4", "-f7", "a*f6"},
    {"-f3", "-b", "b*f1", "f6", "f7", "-b*f4", "-b*f5"},
    {"a*f2", "-b*f1", "-a*b", "f7", "-a*f6", "b*f5", "-a*b*f4"},
    {"-f5", "-f6", "-f7", "-g", "g*f1", "g*f2", "g*f3"},
    {"a*f4", "-f7", "a*f6", "-g*f1", "-a*g", "-g*f3", "a*g*f2"},
    {"f7", "b*f4", "-b*f5", "-g*f2", "g*f3", "-b*g", "-b*g*f1"},
    {"-a*f6", "b*f5", "a*b*f4", "-g*f3", "-a*g*f2", "b*g*f1", "-a*b*g"},
}};

struct PrintedEntry {
  int target = 0;
  double coefficient = 1;
};

inline PrintedEntry parse_printed_entry(std::string text, const AlgebraParamsd& alg) {
  PrintedEntry e;
  if (!text.empty() && text[0] == '-') {
    e.coefficient = -1;
    text.erase(0, 1);
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t star = text.find('*', pos);
    const std::string tok = text.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
    if (tok == "a" || tok == "g1") e.coefficient *= alg.param(0);
    else if (tok == "b" || tok == "g2") e.coefficient *= alg.param(1);
    else if (tok == "g") e.coefficient *= alg.param(2);
    else if (tok.size() == 2 && (tok[0] == 'e' || tok[0] == 'f')) e.target = tok[1] - '0';
    else throw std::logic_error("bad table token " + tok);
    if (star == std::string::npos) break;
    pos = star + 1;
  }
  return e;
}

/// Printed entry as target, sign and parameter bitmask (a/g1 = 1, b/g2 = 2, g = 4).
inline ProductEntry parse_printed_symbolic(std::string text) {
  ProductEntry e{0, 1, 0u};
  if (!text.empty() && text[0] == '-') {
    e.sign = -1;
    text.erase(0, 1);
  }
  std::size_t pos = 0;
  for (;;) {
    const std::size_t star = text.find('*', pos);
    const std::string tok = text.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
    if (tok == "a" || tok == "g1") e.monomial |= 1u;
    else if (tok == "b" || tok == "g2") e.monomial |= 2u;
    else if (tok == "g") e.monomial |= 4u;
    else if (tok.size() == 2 && (tok[0] == 'e' || tok[0] == 'f')) e.target = tok[1] - '0';
    else throw std::logic_error("bad table token " + tok);
    if (star == std::string::npos) break;
    pos = star + 1;
  }
  return e;
}

inline ProductEntry printed_symbolic(AlgebraKind kind, int i, int j) {
  if (i == 0) return {j, 1, 0u};
  if (j == 0) return {i, 1, 0u};
  return parse_printed_symbolic(kind == AlgebraKind::Quaternion ? kPrintedQuaternionTable[i - 1][j - 1]
                                                                 : kPrintedOctonionTable[i - 1][j - 1]);
}

/// Printed product b_i * b_j, rows/columns 0 being the identity.
inline PrintedEntry printed_product(const AlgebraParamsd& alg, int i, int j) {
  if (i == 0) return {j, 1};
  if (j == 0) return {i, 1};
  const char* text = alg.kind() == AlgebraKind::Quaternion ? kPrintedQuaternionTable[i - 1][j - 1]
                                                           : kPrintedOctonionTable[i - 1][j - 1];
  return parse_printed_entry(text, alg);
}

}  // namespace hyperalg::testing
