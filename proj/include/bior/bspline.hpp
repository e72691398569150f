#pragma once

#include <vector>

#include "bior/poly.hpp"
#include "bior/series.hpp"

namespace bior {

// Exact piecewise polynomial on integer breakpoints: piece i is valid on
// [i, i+1), the support is [0, pieces.size()], and the function is zero
// outside it.
struct PiecewisePoly {
  std::vector<Poly<Rat>> pieces;

  long piece_count() const { return static_cast<long>(pieces.size()); }
};

// Uniform B-spline of order N (degree N-1, support [0, N]), built by
// B_N(x) = integral of B_{N-1} over [x-1, x], starting from the unit
// indicator B_1.
PiecewisePoly bspline(long N);
PiecewisePoly bspline_serial(long N);
// All of B_1..B_N in one pass of the recursion.
std::vector<PiecewisePoly> bspline_ladder(long N);

Rat pp_eval(const PiecewisePoly& pp, const Rat& x);
PiecewisePoly pp_derivative(const PiecewisePoly& pp);

// Exact integral of pp * p over the support.
Rat pp_integrate_against(const PiecewisePoly& pp, const Poly<Rat>& p);

// Moments mu_k = integral of x^k pp(x) dx for k = 0..k_max.
std::vector<Rat> pp_moments(const PiecewisePoly& pp, std::size_t k_max);

// The moment generating series sum_j mu_j z^j / j! up to the given order.
Series<Rat> pp_moment_series(const PiecewisePoly& pp, std::size_t order);

// True iff the moment series of B_N equals ((e^z - 1)/z)^N to the given
// order, exactly.
bool mgf_consistency(long N, std::size_t order);

// Two-scale identity B_N(x) = 2 sum_j 2^{-N} C(N,j) B_N(2x - j), compared
// piece by piece on the half-integer grid.
bool refinement_check(long N);
// Same comparison with an arbitrary mask w_0..w_N in place of the binomial
// weights; used as a falsifiability control.
bool refinement_check_mask(long N, const std::vector<Rat>& mask);

// Sup over the grid of
//   |(N/12)^{(k+1)/2} B_N^(k)(sqrt(N/12) x + N/2) - G^(k)(x)|
// where G is the standard Gaussian density.  The derivative is exact and
// evaluated at exact rational points; requires N > k + 2.
double gaussian_limit_error(long N, int k, const std::vector<double>& grid);

}  // namespace bior
