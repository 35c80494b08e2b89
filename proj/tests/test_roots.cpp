#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numbers>

#include "hyperalg/isomorphism.hpp"
#include "hyperalg/roots.hpp"
#include "support/test_support.hpp"

using namespace hyperalg;
using namespace hyperalg::testing;

namespace {

constexpr double pi = std::numbers::pi;

const auto h11 = AlgebraParamsd::quaternion(1, 1);
const auto h23 = AlgebraParamsd::quaternion(2, 3);
const auto h1m1 = AlgebraParamsd::quaternion(1, -1);
const auto o11m1 = AlgebraParamsd::octonion(1, 1, -1);

void check_close(const Elementd& a, const Elementd& b, double tol = 1e-12) {
  INFO(a << " vs " << b);
  CHECK(distance(a, b) <= tol);
}

ErrorCode code_of(const auto& fn) {
  try {
    fn();
  } catch (const AlgebraError& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidParameter;
}

bool contains(const std::vector<Elementd>& set, const Elementd& x, double tol = 1e-9) {
  for (const auto& y : set)
    if (distance(x, y) <= tol) return true;
  return false;
}

}  // namespace

TEST_CASE("square roots of i") {
  const auto roots = nth_roots(Elementd::basis(h11, 1), 2);
  REQUIRE(roots.is_finite());
  REQUIRE(roots.roots().size() == 2);
  const Elementd r(h11, {std::sqrt(0.5), std::sqrt(0.5), 0, 0});
  CHECK(contains(roots.roots(), r));
  CHECK(contains(roots.roots(), -r));
}

TEST_CASE("cube roots of 1 in H(2,3) form a family") {
  const auto roots = nth_roots(Elementd::one(h23), 3);
  REQUIRE_FALSE(roots.is_finite());
  const auto& fam = roots.family();
  CHECK(fam.modulus == doctest::Approx(1.0));
  REQUIRE(fam.angles.size() == 3);
  CHECK(fam.angles[1] == doctest::Approx(2 * pi / 3));
  REQUIRE(fam.real_roots.size() == 1);
  check_close(fam.real_roots[0], Elementd::one(h23), 0);
  CHECK(fam.scalar_part == doctest::Approx(-0.5));
  CHECK(fam.quadric_radius == doctest::Approx(std::sqrt(3.0) / 2));

  const auto samples = fam.sample(50, 3);
  CHECK(samples.size() == 50);
  for (const auto& s : samples) {
    CHECK(s.scalar_part() == doctest::Approx(-0.5));
    CHECK(distance(naive_power(s, 3), Elementd::one(h23)) <= 1e-12);
  }
  const auto again = fam.sample(50, 3);
  for (std::size_t i = 0; i < samples.size(); ++i) check_close(samples[i], again[i], 0);
}

TEST_CASE("real right-hand sides") {
  SUBCASE("even root of a negative real in a division algebra") {
    CHECK(code_of([] { nth_roots(Elementd::real(h11, -1), 2); }) == ErrorCode::NoRealizableRoots);
    CHECK(code_of([] { nth_roots(Elementd::real(AlgebraParamsd::octonion(2, 3, 5), -4), 4); }) ==
          ErrorCode::NoRealizableRoots);
  }

  SUBCASE("odd root of a negative real") {
    const auto roots = nth_roots(Elementd::real(h23, -8), 3);
    REQUIRE_FALSE(roots.is_finite());
    REQUIRE(roots.family().real_roots.size() == 1);
    check_close(roots.family().real_roots[0], Elementd::real(h23, -2));
    for (const auto& s : roots.family().sample(20, 1))
      CHECK(distance(naive_power(s, 3), Elementd::real(h23, -8)) <= 1e-11);
  }

  SUBCASE("split algebras") {
    const auto family = nth_roots(Elementd::real(h1m1, -1), 2);
    REQUIRE_FALSE(family.is_finite());
    CHECK(family.family().real_roots.empty());
    for (const auto& s : family.family().sample(20, 2))
      CHECK(distance(s * s, Elementd::real(h1m1, -1)) <= 1e-12);

    const auto plus = nth_roots(Elementd::one(h1m1), 2);
    REQUIRE(plus.is_finite());
    CHECK(plus.roots().size() == 2);
    CHECK(code_of([] { nth_roots(Elementd::zero(h1m1), 3); }) == ErrorCode::LightlikeInput);
  }

  SUBCASE("zero and first roots") {
    const auto zero = nth_roots(Elementd::zero(h23), 4);
    REQUIRE(zero.is_finite());
    REQUIRE(zero.roots().size() == 1);
    check_close(zero.roots()[0], Elementd::zero(h23), 0);
    const auto first = nth_roots(Elementd::real(h23, 5), 1);
    REQUIRE(first.is_finite());
    check_close(first.roots()[0], Elementd::real(h23, 5), 0);
  }
}

TEST_CASE("hyperbolic right-hand sides") {
  const auto f4 = Elementd::basis(o11m1, 4);
  const auto one = Elementd::one(o11m1);

  SUBCASE("the timelike square root is unique") {
    const auto roots = nth_roots(std::cosh(2.0) * one + std::sinh(2.0) * f4, 2);
    REQUIRE(roots.is_finite());
    REQUIRE(roots.roots().size() == 1);
    check_close(roots.roots()[0], std::cosh(1.0) * one + std::sinh(1.0) * f4);
  }

  SUBCASE("negative timelike") {
    const auto a = -(std::cosh(1.5) * one + std::sinh(1.5) * f4);
    CHECK(code_of([&] { nth_roots(a, 2); }) == ErrorCode::NoRealizableRoots);
    const auto cube = nth_roots(a, 3);
    REQUIRE(cube.roots().size() == 1);
    check_close(naive_power(cube.roots()[0], 3), a);
  }

  SUBCASE("spacelike") {
    const auto a = 0.5 * one + 2.0 * f4;
    CHECK(code_of([&] { nth_roots(a, 2); }) == ErrorCode::EvenPowerSpacelike);
    const auto cube = nth_roots(a, 3);
    REQUIRE(cube.roots().size() == 1);
    check_close(naive_power(cube.roots()[0], 3), a);
  }

  SUBCASE("lightlike and invalid orders") {
    CHECK(code_of([&] { nth_roots(one + f4, 2); }) == ErrorCode::LightlikeInput);
    CHECK(code_of([&] { nth_roots(one, 0); }) == ErrorCode::InvalidParameter);
  }
}

TEST_CASE("null vector part") {
  // 4 + (i1 + i2) in H(1,-1): v^2 = 0, so (2 + v/4)^2 = 4 + v.
  const Elementd a(h1m1, {4, 1, 1, 0});
  const auto roots = nth_roots(a, 2);
  REQUIRE(roots.is_finite());
  REQUIRE(roots.roots().size() == 2);
  const Elementd r(h1m1, {2, 0.25, 0.25, 0});
  CHECK(contains(roots.roots(), r));
  CHECK(contains(roots.roots(), -r));

  const auto cube = nth_roots(Elementd(h1m1, {-8, 1, 1, 0}), 3);
  REQUIRE(cube.roots().size() == 1);
  check_close(naive_power(cube.roots()[0], 3), Elementd(h1m1, {-8, 1, 1, 0}));
  CHECK(code_of([] { nth_roots(Elementd(h1m1, {-4, 1, 1, 0}), 2); }) == ErrorCode::NoRealizableRoots);
}

TEST_CASE("non-real division elements have n distinct roots") {
  Rng rng(31);
  for (int t = 0; t < 40; ++t) {
    const auto alg = random_params(rng, t % 2 ? AlgebraKind::Octonion : AlgebraKind::Quaternion, 0);
    const auto a = random_element(rng, alg);
    for (int n = 2; n <= 7; ++n) {
      const auto roots = nth_roots(a, n);
      REQUIRE(roots.is_finite());
      CHECK(roots.roots().size() == static_cast<std::size_t>(n));
      for (const auto& r : roots.roots()) CHECK(distance(naive_power(r, n), a) <= 1e-8 * (1 + a.euclidean_norm()));
    }
  }
}

TEST_CASE("solving commutes with the canonical map") {
  Rng rng(33);
  for (auto kind : {AlgebraKind::Quaternion, AlgebraKind::Octonion}) {
    for (int regime = 0; regime < sign_regime_count(kind); ++regime) {
      const auto alg = random_params(rng, kind, static_cast<unsigned>(regime));
      const auto m = canonical_map(alg);
      const auto a = uniform(rng, 0.5, 2) * (std::cos(0.8) * Elementd::one(alg) + std::sin(0.8) * random_unit_pure(rng, alg, 1));
      for (int n = 2; n <= 4; ++n) {
        const auto here = nth_roots(a, n).roots();
        const auto there = nth_roots(m.apply(a), n).roots();
        REQUIRE(here.size() == there.size());
        for (const auto& r : here) CHECK(contains(there, m.apply(r)));
      }
    }
  }
}

TEST_CASE("quadratic classification") {
  const auto real = [](const AlgebraParamsd& alg, double v) { return Elementd::real(alg, v); };

  SUBCASE("x^2 + 1 in H(1,1)") {
    const auto c = quad_root_classify(real(h11, 0), real(h11, 1));
    CHECK(c.tag == QuadRootTag::Ellipsoidal);
    REQUIRE(c.criterion_value);
    CHECK(*c.criterion_value == doctest::Approx(-4));
    CHECK(c.scalar_part == 0.0);
    CHECK(c.pure_norm == doctest::Approx(1));
    CHECK(c.quadric_radius() == doctest::Approx(1));
  }

  SUBCASE("x^2 - 3x + 2 in H(2,3)") {
    const auto c = quad_root_classify(real(h23, -3), real(h23, 2));
    CHECK(c.tag == QuadRootTag::Isolated);
    CHECK(*c.criterion_value == doctest::Approx(1));
    CHECK(c.scalar_part == doctest::Approx(1.5));
    CHECK(c.pure_norm == doctest::Approx(-0.25));
  }

  SUBCASE("split algebras") {
    CHECK(quad_root_classify(real(h1m1, 0), real(h1m1, 1)).tag == QuadRootTag::Hyperboloidal);
    CHECK(quad_root_classify(real(o11m1, -3), real(o11m1, 2)).tag == QuadRootTag::Hyperboloidal);
  }

  SUBCASE("non-real coefficients") {
    const auto c = quad_root_classify(Elementd::basis(h11, 1), real(h11, 1));
    CHECK(c.tag == QuadRootTag::NotApplicable);
    CHECK_FALSE(c.criterion_value);
    CHECK_THROWS_AS(quad_root_classify(real(h11, 0), real(h23, 1)), AlgebraError);
  }
}

TEST_CASE("polynomial evaluation") {
  const auto i = Elementd::basis(h11, 1);
  const auto j = Elementd::basis(h11, 2);
  const auto k = Elementd::basis(h11, 3);

  NoncommutativePolynomial<double> f(h11);
  f.add_monomial({i, j});
  // (i k) j = -j j = 1
  check_close(eval_polynomial(f, k), Elementd::one(h11), 0);
  CHECK(f.degree() == 1);

  const auto sq = NoncommutativePolynomial<double>::quadratic(Elementd::zero(h11), Elementd::one(h11));
  CHECK(sq.degree() == 2);
  for (const auto& x : {i, j, k}) CHECK(verify_root(sq, x) == 0.0);
  CHECK(verify_root(sq, Elementd::one(h11)) == doctest::Approx(2));

  const auto p = NoncommutativePolynomial<double>::power(h23, 3, Elementd::real(h23, -8));
  CHECK(verify_root(p, Elementd::real(h23, 2)) == 0.0);
  CHECK_THROWS_AS(eval_polynomial(p, i), AlgebraError);
  CHECK_THROWS_AS(f.add_monomial({i}), AlgebraError);
}

TEST_CASE("quadric orbit samples") {
  SUBCASE("ellipsoid") {
    const auto x0 = Elementd::basis(h11, 1);
    const auto sq = NoncommutativePolynomial<double>::quadratic(Elementd::zero(h11), Elementd::one(h11));
    const auto samples = quadric_orbit_samples(x0, 30, 9);
    CHECK(samples.size() == 30);
    for (const auto& s : samples) {
      CHECK(s.scalar_part() == 0.0);
      CHECK(norm_form(s) == doctest::Approx(1.0));
      CHECK(verify_root(sq, s) <= 1e-12);
    }
    const auto again = quadric_orbit_samples(x0, 30, 9);
    for (std::size_t n = 0; n < samples.size(); ++n) check_close(samples[n], again[n], 0);
  }

  SUBCASE("hyperboloid") {
    const Elementd x0(o11m1, {0.5, 0, 0, 0, 1, 0, 0, 0});
    const double pn = pure_norm_form(x0);
    for (const auto& s : quadric_orbit_samples(x0, 30, 11)) {
      CHECK(s.scalar_part() == 0.5);
      CHECK(pure_norm_form(s) == doctest::Approx(pn));
    }
  }

  SUBCASE("real seeds") {
    CHECK(code_of([] { quadric_orbit_samples(Elementd::real(h11, 2), 3, 0); }) == ErrorCode::ScalarInput);
  }
}
