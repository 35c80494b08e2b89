#include "hyperalg/reference_examples.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "hyperalg/hyperalg.hpp"

namespace hyperalg {

namespace {

constexpr double kExact = 1e-12;

CheckResult compare(std::string name, const Elementd& got, const Elementd& want, double tol = kExact) {
  const double err = distance(got, want);
  std::ostringstream os;
  os << "error " << err;
  return {std::move(name), err <= tol, os.str()};
}

CheckResult compare(std::string name, double got, double want, double tol = kExact) {
  std::ostringstream os;
  os << "got " << got << ", want " << want;
  return {std::move(name), std::abs(got - want) <= tol, os.str()};
}

Elementd unit_octonion_quarter_turn() {
  const auto o = AlgebraParamsd::octonion(1, 1, 1);
  const double c = 1.0 / std::sqrt(14.0);
  return Elementd(o, {std::sqrt(2.0) / 2, c, c, c, c, c, c, c});
}

}  // namespace

std::vector<CheckResult> run_reference_examples() {
  std::vector<CheckResult> out;
  const auto h23 = AlgebraParamsd::quaternion(2, 3);
  const auto e = [&](int i) { return Elementd::basis(h23, i); };
  out.push_back(compare("H(2,3): e1 e2 = e3", e(1) * e(2), e(3)));
  out.push_back(compare("H(2,3): e2 e1 = -e3", e(2) * e(1), -e(3)));
  out.push_back(compare("H(2,3): e1 e1 = -2", e(1) * e(1), Elementd::real(h23, -2)));
  out.push_back(compare("H(2,3): e3 e3 = -6", e(3) * e(3), Elementd::real(h23, -6)));

  const auto o111 = AlgebraParamsd::octonion(1, 1, 1);
  const auto f = [&](int i) { return Elementd::basis(o111, i); };
  out.push_back(compare("O(1,1,1): (f1 f2) f4 = f7", (f(1) * f(2)) * f(4), f(7)));
  out.push_back(compare("O(1,1,1): f1 (f2 f4) = -f7", f(1) * (f(2) * f(4)), -f(7)));

  const auto o247 = AlgebraParamsd::octonion(2, 4, 7);
  out.push_back(compare("O(2,4,7): N(1 + f1) = 3", norm_form(Elementd(o247, {1, 1, 0, 0, 0, 0, 0, 0})), 3.0));

  const auto hm23 = AlgebraParamsd::quaternion(-2, 3);
  const auto d = canonical_map(hm23);
  const auto h1m1 = AlgebraParamsd::quaternion(1, -1);
  out.push_back(compare("D: e1 -> sqrt2 i3", d.apply(Elementd::basis(hm23, 1)), Elementd::basis(h1m1, 3, std::sqrt(2.0))));
  out.push_back(compare("D: e2 -> sqrt3 i1", d.apply(Elementd::basis(hm23, 2)), Elementd::basis(h1m1, 1, std::sqrt(3.0))));
  out.push_back(compare("D: e3 -> sqrt6 i2", d.apply(Elementd::basis(hm23, 3)), Elementd::basis(h1m1, 2, std::sqrt(6.0))));

  // Unit octonion a = sqrt2/2 + (f1 + ... + f7)/sqrt14.
  const auto a = unit_octonion_quarter_turn();
  const auto v = Elementd(o111, {0, 1, 1, 1, 1, 1, 1, 1}) / std::sqrt(7.0);
  const auto polar = polar_decompose(a);
  out.push_back({"unit octonion: circular polar form", polar.variant == PolarVariant::Circular, to_string(polar.variant)});
  out.push_back(compare("unit octonion: modulus 1", polar.modulus, 1.0));
  out.push_back(compare("unit octonion: angle pi/4", polar.angle, std::numbers::pi / 4));
  out.push_back(compare("unit octonion: axis (f1+...+f7)/sqrt7", polar.axis, v));
  out.push_back(compare("unit octonion: rotation element for angle pi/2",
                        std::cos(std::numbers::pi / 4) * Elementd::one(o111) + std::sin(std::numbers::pi / 4) * v, a));
  out.push_back(compare("unit octonion: a^8 = 1", demoivre_pow(a, 8), Elementd::one(o111)));

  const auto a1 = canonical_map(o247);
  const double s2 = std::sqrt(2.0), s7 = std::sqrt(7.0), s14 = std::sqrt(14.0);
  const Elementd b_expected(o247, {s2 / 2, 1 / (2 * s7), 1 / (2 * s14), 1 / (4 * s7), 1 / (7 * s2), 1.0 / 14,
                                    1 / (14 * s2), 1.0 / 28});
  const auto b = a1.apply_inverse(a);
  out.push_back(compare("O(2,4,7): A1^-1(a) coefficients", b, b_expected));
  out.push_back(compare("O(2,4,7): N(A1^-1(a)) = 1", norm_form(b), 1.0));
  out.push_back(compare("O(2,4,7): A1(A1^-1(a)) = a", a1.apply(b), a));

  const auto o11m1 = AlgebraParamsd::octonion(1, 1, -1);
  const auto f4 = Elementd::basis(o11m1, 4);
  const auto rhs = std::cosh(2.0) * Elementd::one(o11m1) + std::sinh(2.0) * f4;
  const auto roots = nth_roots(rhs, 2);
  const bool single = roots.is_finite() && roots.roots().size() == 1;
  out.push_back({"O(1,1,-1): x^2 = cosh2 + f4 sinh2 has one root", single, ""});
  if (single)
    out.push_back(compare("O(1,1,-1): that root is cosh1 + f4 sinh1", roots.roots().front(),
                          std::cosh(1.0) * Elementd::one(o11m1) + std::sinh(1.0) * f4));
  return out;
}

}  // namespace hyperalg
