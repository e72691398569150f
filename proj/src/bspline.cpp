#include "bior/bspline.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bior/families.hpp"
#include "bior/parallel.hpp"

namespace bior {

namespace {

// One convolution step: B_next(x) = F(x) - F(x-1) with F the running
// integral of B.  On [i, i+1), F(x) = cum_i + A_i(x) - A_i(i) where A_i is
// the piece antiderivative, F = 0 left of the support and F = total mass to
// the right of it.
PiecewisePoly convolve_step(const PiecewisePoly& b, bool parallel) {
  const long n = b.piece_count();
  std::vector<Poly<Rat>> anti(n);
  for (long i = 0; i < n; ++i) anti[i] = b.pieces[i].antiderivative();

  std::vector<Rat> cum(n + 1, Rat(0));
  for (long i = 0; i < n; ++i)
    cum[i + 1] = cum[i] + anti[i](Rat(i + 1)) - anti[i](Rat(i));

  // F restricted to [i, i+1) as a polynomial; constant 0 / mass outside.
  auto running = [&](long i) -> Poly<Rat> {
    if (i < 0) return Poly<Rat>();
    if (i >= n) return Poly<Rat>::constant(cum[n]);
    return anti[i] + Poly<Rat>::constant(cum[i] - anti[i](Rat(i)));
  };

  PiecewisePoly out;
  out.pieces.assign(static_cast<std::size_t>(n) + 1, Poly<Rat>());
  auto piece = [&](std::size_t i) {
    const long ii = static_cast<long>(i);
    const Poly<Rat> left = running(ii - 1).affine(Rat(1), Rat(-1));  // F(x-1)
    out.pieces[i] = running(ii) - left;
  };
  if (parallel)
    par::parallel_for(static_cast<std::size_t>(n) + 1, piece, 8);
  else
    for (std::size_t i = 0; i <= static_cast<std::size_t>(n); ++i) piece(i);
  return out;
}

PiecewisePoly build(long N, bool parallel) {
  if (N < 1) throw std::invalid_argument("bspline: N must be >= 1");
  PiecewisePoly b{{Poly<Rat>::constant(Rat(1))}};
  for (long k = 2; k <= N; ++k) b = convolve_step(b, parallel);
  return b;
}

}  // namespace

PiecewisePoly bspline(long N) { return build(N, true); }

PiecewisePoly bspline_serial(long N) { return build(N, false); }

std::vector<PiecewisePoly> bspline_ladder(long N) {
  if (N < 1) throw std::invalid_argument("bspline_ladder: N must be >= 1");
  std::vector<PiecewisePoly> ladder;
  ladder.reserve(N);
  ladder.push_back(PiecewisePoly{{Poly<Rat>::constant(Rat(1))}});
  for (long k = 2; k <= N; ++k) ladder.push_back(convolve_step(ladder.back(), true));
  return ladder;
}

Rat pp_eval(const PiecewisePoly& pp, const Rat& x) {
  if (sgn(x) < 0) return Rat(0);
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  if (fl >= pp.piece_count()) return Rat(0);
  return pp.pieces[fl.get_ui()](x);
}

PiecewisePoly pp_derivative(const PiecewisePoly& pp) {
  PiecewisePoly out;
  out.pieces.reserve(pp.pieces.size());
  for (const auto& p : pp.pieces) out.pieces.push_back(p.derivative());
  return out;
}

Rat pp_integrate_against(const PiecewisePoly& pp, const Poly<Rat>& p) {
  Rat acc(0);
  for (long i = 0; i < pp.piece_count(); ++i) {
    const Poly<Rat> anti = (pp.pieces[static_cast<std::size_t>(i)] * p).antiderivative();
    acc += anti(Rat(i + 1)) - anti(Rat(i));
  }
  return acc;
}

std::vector<Rat> pp_moments(const PiecewisePoly& pp, std::size_t k_max) {
  std::vector<Rat> mu(k_max + 1);
  par::parallel_for(
      k_max + 1,
      [&](std::size_t k) {
        mu[k] = pp_integrate_against(pp, Poly<Rat>::monomial(Rat(1), k));
      },
      8);
  return mu;
}

Series<Rat> pp_moment_series(const PiecewisePoly& pp, std::size_t order) {
  const auto mu = pp_moments(pp, order);
  Series<Rat> s(order);
  for (std::size_t j = 0; j <= order; ++j) s.coeff(j) = mu[j] / factorial(j);
  return s;
}

bool mgf_consistency(long N, std::size_t order) {
  if (N < 1) throw std::invalid_argument("mgf_consistency: N must be >= 1");
  const auto lhs = pp_moment_series(bspline(N), order);
  const auto rhs = series_pow_int(builtin_series(BuiltinSeries::expm1_over_z, order), N);
  return lhs == rhs;
}

bool refinement_check_mask(long N, const std::vector<Rat>& mask) {
  if (N < 1) throw std::invalid_argument("refinement_check: N must be >= 1");
  const PiecewisePoly b = bspline(N);
  // Compare on [h/2, (h+1)/2): the left side is piece floor(h/2), the right
  // side is 2 sum_j mask_j B_N(2x - j) with 2x - j falling in piece h - j.
  for (long h = 0; h < 2 * N; ++h) {
    Poly<Rat> rhs;
    for (std::size_t j = 0; j < mask.size(); ++j) {
      const long pi = h - static_cast<long>(j);
      if (pi < 0 || pi >= N) continue;
      rhs += mask[j] * b.pieces[static_cast<std::size_t>(pi)].affine(
                           Rat(2), Rat(-static_cast<long>(j)));
    }
    if (Rat(2) * rhs != b.pieces[static_cast<std::size_t>(h / 2)]) return false;
  }
  return true;
}

bool refinement_check(long N) {
  std::vector<Rat> mask(static_cast<std::size_t>(N) + 1);
  const Rat scale = rat_pow(Rat(1, 2), N);
  for (std::size_t j = 0; j < mask.size(); ++j) mask[j] = scale * binomial(N, j);
  return refinement_check_mask(N, mask);
}

double gaussian_limit_error(long N, int k, const std::vector<double>& grid) {
  if (k < 0) throw std::invalid_argument("gaussian_limit_error: k must be >= 0");
  if (N <= k + 2) throw std::invalid_argument("gaussian_limit_error: requires N > k + 2");
  PiecewisePoly d = bspline(N);
  for (int i = 0; i < k; ++i) d = pp_derivative(d);

  const auto he = hermite(static_cast<std::size_t>(k));
  const Poly<double> hk = poly_to_double(he.back());
  const double sigma = std::sqrt(N / 12.0);
  const double prefactor = std::pow(N / 12.0, (k + 1) / 2.0);
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  const double norm = 1.0 / std::sqrt(2.0 * std::numbers::pi);

  std::vector<double> err(grid.size());
  par::parallel_for(
      grid.size(),
      [&](std::size_t i) {
        const double x = grid[i];
        // Exact evaluation at the (exactly represented) double point.
        const Rat u(sigma * x + N / 2.0);
        const double lhs = prefactor * to_double(pp_eval(d, u));
        const double target = sign * norm * hk(x) * std::exp(-x * x / 2.0);
        err[i] = std::abs(lhs - target);
      },
      8);
  double sup = 0.0;
  for (double e : err) sup = std::max(sup, e);
  return sup;
}

}  // namespace bior
