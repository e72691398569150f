#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bior/poly.hpp"
#include "test_util.hpp"

using namespace bior;

namespace {
Poly<Rat> P(std::vector<long> c) {
  std::vector<Rat> v;
  for (long x : c) v.push_back(Rat(x));
  return Poly<Rat>(std::move(v));
}
const Poly<Rat> x = Poly<Rat>::identity();
}  // namespace

TEST_CASE("addition") {
  CHECK((x + (-x)).is_zero());
  CHECK(P({1, 1}) + P({1, -1}) == P({2}));
  CHECK(P({-1, 0, 1}) + P({0, 3}) == P({-1, 3, 1}));
}

TEST_CASE("multiplication") {
  CHECK(P({-1, 1}) * P({1, 1}) == P({-1, 0, 1}));
  const Poly<Rat> p = P({3, 0, 2});
  CHECK(p * P({1}) == p);
  CHECK(x * x * x == P({0, 0, 0, 1}));
  CHECK((p * Poly<Rat>()).is_zero());
}

TEST_CASE("degree bookkeeping") {
  CHECK(Poly<Rat>().degree() == -1);
  CHECK(P({5}).degree() == 0);
  CHECK(P({0, 0, 3}).degree() == 2);
  CHECK(Poly<Rat>(std::vector<Rat>{Rat(1), Rat(0), Rat(0)}).degree() == 0);
  // exact-field product degrees add
  std::mt19937 rng(11);
  for (int i = 0; i < 50; ++i) {
    Poly<Rat> p = testutil::random_poly(rng, 6), q = testutil::random_poly(rng, 6);
    if (p.is_zero() || q.is_zero()) continue;
    CHECK((p * q).degree() == p.degree() + q.degree());
  }
}

TEST_CASE("derivative") {
  CHECK(P({-1, 0, 1}).derivative() == P({0, 2}));
  CHECK(P({42}).derivative().is_zero());
  CHECK(P({0, -3, 0, 1}).derivative() == P({-3, 0, 3}));
}

TEST_CASE("affine substitution") {
  CHECK(P({0, 0, 1}).affine(Rat(1), Rat(0)) == P({0, 0, 1}));
  CHECK(x.affine(Rat(2), Rat(3)) == P({3, 2}));
  // (x/2 + 1)^2 - 1 = x^2/4 + x
  CHECK(P({-1, 0, 1}).affine(rat(1, 2), Rat(1)) ==
        Poly<Rat>(std::vector<Rat>{Rat(0), Rat(1), rat(1, 4)}));
}

TEST_CASE("evaluation") {
  CHECK(P({-1, 0, 1})(Rat(2)) == Rat(3));
  const Poly<Rat> p = P({7, -2, 5});
  CHECK(p(Rat(0)) == Rat(7));
  CHECK(P({0, -3, 0, 1})(rat(1, 2)) == rat(-11, 8));
}

TEST_CASE("sup error on a grid") {
  std::vector<Rat> grid;
  for (long k = -2; k <= 2; ++k) grid.push_back(Rat(k));
  const Poly<Rat> p = P({1, 2, 3});
  CHECK(sup_error_on_grid(p, p, grid) == 0.0);
  CHECK(sup_error_on_grid(x, Poly<Rat>(), grid) == 2.0);
  const Poly<Rat> q = P({0, 0, 1});
  const Poly<Rat> q_off = q + Poly<Rat>::constant(rat(1, 100));
  CHECK(sup_error_on_grid(q, q_off, grid) == doctest::Approx(0.01).epsilon(1e-14));
  CHECK_THROWS_AS(sup_error_on_grid(p, q, std::vector<Rat>{}), std::invalid_argument);
}

TEST_CASE("product rule holds for random polynomials") {
  std::mt19937 rng(23);
  for (int i = 0; i < 100; ++i) {
    const Poly<Rat> p = testutil::random_poly(rng, 8), q = testutil::random_poly(rng, 8);
    CHECK((p * q).derivative() == p.derivative() * q + p * q.derivative());
  }
}

TEST_CASE("affine substitution inverts and composes with evaluation") {
  std::mt19937 rng(29);
  for (int i = 0; i < 100; ++i) {
    const Poly<Rat> p = testutil::random_poly(rng, 8);
    const Rat a = testutil::random_nonzero_rat(rng), b = testutil::random_rat(rng);
    CHECK(p.affine(a, b).affine(Rat(1) / a, Rat(-b / a)) == p);
    const Rat t = testutil::random_rat(rng);
    CHECK(p.affine(a, b)(t) == p(Rat(a * t + b)));
  }
}

TEST_CASE("float coefficients trim exact zeros only") {
  Poly<double> p(std::vector<double>{1.0, 2.0, 0.0, 0.0});
  CHECK(p.degree() == 1);
  // a genuinely tiny leading coefficient survives
  Poly<double> q(std::vector<double>{1.0, 0.0, 1e-30});
  CHECK(q.degree() == 2);
  CHECK(q(2.0) == doctest::Approx(1.0));
}

TEST_CASE("monomial and constant constructors") {
  CHECK(Poly<Rat>::monomial(Rat(3), 2) == P({0, 0, 3}));
  CHECK(Poly<Rat>::constant(Rat(0)).is_zero());
  CHECK(Poly<Rat>::monomial(Rat(0), 5).is_zero());
}
