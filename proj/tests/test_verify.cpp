#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "bior/sqrt_scale.hpp"
#include "bior/verify.hpp"
#include "test_util.hpp"

using namespace bior;

namespace {
const std::vector<long> kLadder{16, 32, 64, 128};
}

TEST_CASE("grid specification") {
  const auto g = GridSpec::parse("-2:2:41");
  CHECK(g.count == 41);
  const auto pts = g.points();
  CHECK(pts.front() == Rat(-2));
  CHECK(pts.back() == Rat(2));
  CHECK(pts[1] - pts[0] == rat(1, 10));
  CHECK(GridSpec::parse("0:8:41").points()[40] == Rat(8));
  CHECK(GridSpec::parse("1:1:1").points() == std::vector<Rat>{Rat(1)});
  CHECK_THROWS_AS(GridSpec::parse("0:1"), std::invalid_argument);
  CHECK_THROWS_AS(GridSpec::parse("0:1:0"), std::invalid_argument);
}

TEST_CASE("sqrt-carrying affine normalization") {
  // sigma^{-1} L_1(sigma x + N) with sigma = sqrt(2N) and a (-1) prefactor
  // equals x - (2N)^{-1/2}.
  const long N = 8;
  const Poly<Rat> l1(std::vector<Rat>{Rat(N + 1), Rat(-1)});
  const auto s = sqrt_normalized_affine(l1, 1, Rat(2 * N), 1, Rat(N), rat(1, 2 * N), -1);
  CHECK(s.rational_part == Poly<Rat>::identity());
  CHECK(s.root_part == Poly<Rat>::constant(Rat(-1)));
  CHECK(s.root_sq == rat(1, 2 * N));
  CHECK(s.eval(Rat(0)) == doctest::Approx(-1.0 / std::sqrt(16.0)));
  // parity case: no loose root
  const Poly<Rat> b1(std::vector<Rat>{Rat(-4), Rat(1)});  // x - N/2 at N = 8
  const auto t = sqrt_normalized_affine(b1, 1, rat(8, 12), 1, Rat(4), rat(12, 8), 1);
  CHECK(t.root_free());
  CHECK(t.rational_part == Poly<Rat>::identity());
  // requires the cross product of the squares to be a perfect square
  CHECK_THROWS_AS(sqrt_normalized_affine(l1, 1, Rat(2), 1, Rat(0), Rat(1), 1),
                  std::invalid_argument);
}

TEST_CASE("polys from a generating pair") {
  const std::size_t order = 8;
  SUBCASE("trivial denominator gives monomials") {
    const GeneratingPair pair{exp_xz_series(order), series_one<Rat>(order)};
    const auto polys = polys_from_pair(pair, order);
    for (std::size_t m = 0; m <= order; ++m)
      CHECK(polys[m] == Poly<Rat>::monomial(Rat(1), m));
  }
  SUBCASE("gaussian denominator gives Hermite") {
    Series<Rat> e(order);
    e.coeff(2) = rat(1, 2);
    const GeneratingPair pair{exp_xz_series(order), series_exp(e)};
    CHECK(polys_from_pair(pair, order) == hermite(order));
  }
  SUBCASE("B-spline denominator gives the Bernoulli construction exactly") {
    for (long N : {1L, 4L, 8L}) {
      const GeneratingPair pair{
          exp_xz_series(order),
          series_pow_int(builtin_series(BuiltinSeries::expm1_over_z, order), N)};
      CHECK(polys_from_pair(pair, order) == gen_bernoulli(N, order));
    }
  }
  SUBCASE("input validation") {
    CHECK_THROWS_AS(polys_from_pair({exp_xz_series(4), series_one<Rat>(5)}, 3),
                    std::invalid_argument);
    Series<Rat> bad = series_one<Rat>(4);
    bad.coeff(0) = Rat(2);
    CHECK_THROWS_AS(polys_from_pair({exp_xz_series(4), bad}, 3), std::invalid_argument);
  }
}

TEST_CASE("every hermite-limit case is exact at degree zero and documented degrees") {
  const auto grid = GridSpec::hermite_default();
  for (auto* fn : {&converge_bernoulli_hermite, &converge_euler_hermite,
                   &converge_buchholz_hermite, &converge_gegenbauer_hermite}) {
    for (std::size_t m : {0u, 1u}) {
      const auto rep = fn(m, kLadder, grid);
      CHECK(rep.passed);
      for (const auto& e : rep.entries) CHECK(e.sup_error == 0.0);
    }
  }
  const auto lag0 = converge_laguerre_hermite(0, kLadder, grid);
  CHECK(lag0.passed);
  for (const auto& e : lag0.entries) CHECK(e.sup_error == 0.0);
}

TEST_CASE("laguerre-to-hermite degree one follows the exact error curve") {
  const auto rep = converge_laguerre_hermite(1, kLadder, GridSpec::hermite_default());
  REQUIRE(rep.entries.size() == 4);
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(rep.entries[i].sup_error ==
          doctest::Approx(1.0 / std::sqrt(2.0 * kLadder[i])).epsilon(1e-12));
  CHECK(rep.passed);  // decreasing, ratio 1/sqrt(2), rate -1/2
  CHECK(*rep.empirical_rate == doctest::Approx(-0.5).epsilon(1e-6));
}

TEST_CASE("hermite-limit ladders decrease at the documented rates") {
  const auto grid = GridSpec::hermite_default();
  struct Case {
    ConvergenceReport (*fn)(std::size_t, const std::vector<long>&, const GridSpec&);
    std::size_t m;
  };
  const Case cases[] = {{&converge_bernoulli_hermite, 4}, {&converge_euler_hermite, 3},
                        {&converge_buchholz_hermite, 4},  {&converge_gegenbauer_hermite, 5},
                        {&converge_laguerre_hermite, 4}};
  for (const auto& c : cases) {
    const auto rep = c.fn(c.m, kLadder, grid);
    CHECK(rep.passed);
    CHECK(rep.entries.size() == 4);
    for (std::size_t i = 1; i < rep.entries.size(); ++i)
      CHECK(rep.entries[i].sup_error < rep.entries[i - 1].sup_error);
    CHECK(rep.entries.back().sup_error <= 0.75 * rep.entries[2].sup_error);
    CHECK(rep.empirical_rate.has_value());
  }
  // bernoulli at degree 4 contracts at roughly 1/N
  const auto bern = converge_bernoulli_hermite(4, kLadder, grid);
  CHECK(*bern.empirical_rate > -1.5);
  CHECK(*bern.empirical_rate < -0.5);
}

TEST_CASE("mismatched target is detected (falsifiability)") {
  // compare normalized E_3^N against H_4 instead of H_3: the error must not
  // shrink toward zero.
  const auto h4 = hermite(4).back();
  double smallest = 1e300;
  for (long N : kLadder) {
    const auto e3 = gen_euler(N, 3).back();
    const auto scaled = sqrt_normalized_affine(e3, 3, rat(N, 4), 1, rat(N, 2), rat(4, N), 1);
    double sup = 0.0;
    for (const Rat& x : GridSpec::hermite_default().points())
      sup = std::max(sup, scaled.error_vs(h4, x));
    smallest = std::min(smallest, sup);
  }
  CHECK(smallest > 0.5);
}

TEST_CASE("ladder preconditions") {
  const auto grid = GridSpec::hermite_default();
  CHECK_THROWS_AS(converge_bernoulli_hermite(2, {32, 16}, grid), std::invalid_argument);
  CHECK_THROWS_AS(converge_bernoulli_hermite(2, {}, grid), std::invalid_argument);
  CHECK_THROWS_AS(converge_bernoulli_hermite(2, {0, 4}, grid), std::invalid_argument);
  CHECK_THROWS_AS(converge_mp_laguerre(1, Rat(0), {0.1, 0.2}, grid), std::invalid_argument);
  CHECK_THROWS_AS(converge_mp_laguerre(1, Rat(0), {0.2, -0.1}, grid), std::invalid_argument);
  CHECK_THROWS_AS(
      converge_meixner_laguerre(1, Rat(0), {rat(19, 20), rat(9, 10)}, grid),
      std::invalid_argument);
  CHECK_THROWS_AS(converge_meixner_laguerre(1, Rat(0), {rat(3, 2)}, grid),
                  std::invalid_argument);
}

TEST_CASE("meixner-pollaczek to laguerre") {
  const std::vector<double> omegas{0.2, 0.1, 0.05, 0.025};
  const auto grid = GridSpec::laguerre_default();
  SUBCASE("degree zero is exact") {
    const auto rep = converge_mp_laguerre(0, Rat(1), omegas, grid);
    CHECK(rep.passed);
    for (const auto& e : rep.entries) CHECK(e.sup_error <= 1e-12);
  }
  SUBCASE("degree one contracts quadratically in omega") {
    const auto rep = converge_mp_laguerre(1, Rat(1), omegas, grid);
    CHECK(rep.passed);
    REQUIRE(rep.empirical_rate.has_value());
    CHECK(*rep.empirical_rate > -3.0);
    CHECK(*rep.empirical_rate < -1.0);
  }
  SUBCASE("degree three decreases") {
    const auto rep = converge_mp_laguerre(3, Rat(1), omegas, grid);
    CHECK(rep.passed);
    for (std::size_t i = 1; i < rep.entries.size(); ++i)
      CHECK(rep.entries[i].sup_error < rep.entries[i - 1].sup_error);
  }
}

TEST_CASE("meixner to laguerre") {
  const std::vector<Rat> cs{rat(9, 10), rat(19, 20), rat(39, 40)};
  const auto grid = GridSpec::laguerre_default();
  SUBCASE("degrees zero and one are exact for every c") {
    for (std::size_t n : {0u, 1u}) {
      const auto rep = converge_meixner_laguerre(n, Rat(2), cs, grid);
      CHECK(rep.passed);
      for (const auto& e : rep.entries) CHECK(e.sup_error <= 1e-12);
    }
  }
  SUBCASE("degree three decreases toward c = 1") {
    const auto rep = converge_meixner_laguerre(3, Rat(2), cs, grid);
    CHECK(rep.passed);
    for (std::size_t i = 1; i < rep.entries.size(); ++i)
      CHECK(rep.entries[i].sup_error < rep.entries[i - 1].sup_error);
  }
}

TEST_CASE("sinc powers approach the gaussian series") {
  const auto dev16 = sinc_power_deviations(16, 8);
  CHECK(dev16[0] == Rat(0));
  CHECK(dev16[2] == Rat(0));
  CHECK(sgn(dev16[4]) > 0);
  const auto dev32 = sinc_power_deviations(32, 8);
  // fourth-coefficient deviation roughly halves when N doubles
  const double ratio = to_double(dev32[4]) / to_double(dev16[4]);
  CHECK(ratio > 0.4);
  CHECK(ratio < 0.6);

  const auto rep = sinc_lemma_check(kLadder, 8);
  CHECK(rep.passed);
  CHECK_THROWS_AS(sinc_lemma_check(kLadder, 7), std::invalid_argument);
}

TEST_CASE("sinc-power z^2 coefficient matches the variance exactly") {
  // sinc(z sqrt(12/N)/2)^N has z^2 coefficient exactly -1/2 for every N
  for (long N : {3L, 10L, 127L}) {
    const auto scaled =
        series_scale_var_sq(builtin_series(BuiltinSeries::sinc, 4), rat(3, N));
    CHECK(series_pow_int(scaled, N).coeff(2) == rat(-1, 2));
  }
}

TEST_CASE("gaussian-limit report") {
  const auto rep = converge_gaussian(0, {8, 16, 32, 64}, GridSpec::gaussian_default());
  CHECK(rep.passed);
  REQUIRE(rep.empirical_rate.has_value());
  CHECK(*rep.empirical_rate > -1.5);
  CHECK(*rep.empirical_rate < -0.5);
}

TEST_CASE("bernoulli-euler identity") {
  // hand case: m = 1, N = 1: (E_0 B_1 + E_1 B_0)/2 = x - 1/2 = B_1
  CHECK(identity_bernoulli_euler(1, 1));
  CHECK(identity_bernoulli_euler(16, 10));
  // perturbed control
  auto b = gen_bernoulli(4, 6);
  auto e = gen_euler(4, 6);
  CHECK(bernoulli_euler_identity_lists(b, e, 6));
  e[3] += Poly<Rat>::constant(rat(1, 7));
  CHECK(!bernoulli_euler_identity_lists(b, e, 6));
  CHECK_THROWS_AS(identity_bernoulli_euler(0, 3), std::invalid_argument);
}

TEST_CASE("two-scale characterization") {
  SUBCASE("euler mask against bernoulli at alpha = 2") {
    CHECK(scaling_characterization(gen_euler(4, 8), gen_bernoulli(4, 8), Rat(2), 8));
  }
  SUBCASE("point-mass self-similarity") {
    std::vector<Poly<Rat>> monomials;
    for (std::size_t m = 0; m <= 6; ++m) monomials.push_back(Poly<Rat>::monomial(Rat(1), m));
    CHECK(scaling_characterization(monomials, monomials, Rat(2), 6));
  }
  SUBCASE("unrelated pair fails") {
    CHECK(!scaling_characterization(hermite(6), gen_bernoulli(3, 6), Rat(2), 6));
  }
}

TEST_CASE("laguerre derivative recurrence") {
  const auto l = laguerre(Rat(0), 1);
  CHECK(l[1].derivative() == Poly<Rat>::constant(Rat(-1)));
  CHECK(identity_laguerre_recurrence(Rat(0), 20));
  CHECK(identity_laguerre_recurrence(rat(1, 2), 12));
  // perturbed control
  auto seq = laguerre(Rat(0), 6);
  seq[4] += Poly<Rat>::identity();
  CHECK(!laguerre_type_appell_relation(seq, 6));
  // the generating-function construction satisfies the same relation
  for (const Rat& alpha : {Rat(0), Rat(2), rat(1, 2)})
    CHECK(laguerre_type_appell_relation(laguerre_by_series(alpha, 10), 10));
}

TEST_CASE("laguerre orthogonality gram matrix") {
  const auto g0 = laguerre_orthogonality(0, 3);
  CHECK(g0[0][0] == Rat(1));
  CHECK(g0[0][1] == Rat(0));
  const auto g1 = laguerre_orthogonality(1, 3);
  CHECK(g1[2][2] == Rat(3));  // Gamma(4)/2!
  for (long alpha : {0L, 1L, 3L}) {
    const auto g = laguerre_orthogonality(alpha, 5);
    for (std::size_t m = 0; m <= 5; ++m)
      for (std::size_t n = 0; n <= 5; ++n) {
        const Rat expected =
            m == n ? Rat(factorial(static_cast<unsigned long>(alpha) + n) / factorial(n))
                   : Rat(0);
        CHECK(g[m][n] == expected);
      }
    CHECK(g == laguerre_orthogonality_serial(alpha, 5));
  }
  CHECK_THROWS_AS(laguerre_orthogonality(-1, 3), std::invalid_argument);
}
