#pragma once

#include <vector>

#include "bior/appell.hpp"
#include "bior/poly.hpp"

namespace bior {

// Probabilists' Hermite polynomials H_0..H_m, from the three-term
// recurrence H_{m+1} = x H_m - m H_{m-1}.
std::vector<Poly<Rat>> hermite(std::size_t m_max);
// Same polynomials extracted from the series e^{xz - z^2/2}; an independent
// construction kept for cross-checks.
std::vector<Poly<Rat>> hermite_by_series(std::size_t m_max);

// Generalized Laguerre L_0^(a)..L_n^(a) by the explicit Pochhammer formula;
// alpha must avoid the poles -1, -2, .., -n.
std::vector<Poly<Rat>> laguerre(const Rat& alpha, std::size_t n_max);
// Same family extracted from (1-z)^{-alpha-1} e^{-zx/(1-z)}.
std::vector<Poly<Rat>> laguerre_by_series(const Rat& alpha, std::size_t n_max);

// Generalized Bernoulli polynomials of order N: the Appell sequence of the
// uniform B-spline distribution.  Coefficient of w^m carries 1/m!.
std::vector<Poly<Rat>> gen_bernoulli(long N, std::size_t m_max);
// Generalized Euler polynomials of order N: the Appell sequence of the
// symmetric binomial mask.  Coefficient of w^m carries 1/m!.
std::vector<Poly<Rat>> gen_euler(long N, std::size_t m_max);

// Buchholz polynomials from e^{x(cot z - 1/z)/2} (sin z / z)^N; the
// generating sum carries no 1/m!, so P_m is the plain z^m coefficient.
std::vector<Poly<Rat>> buchholz(long N, std::size_t m_max);

// Gegenbauer (ultraspherical) polynomials from (1 - 2xz + z^2)^{-N}; N may
// be any rational.  Plain z^m coefficients, no 1/m!.
std::vector<Poly<Rat>> gegenbauer(const Rat& N, std::size_t m_max);

// Meixner polynomials M_n(x; beta, c): (1 - z/c)^x (1-z)^{-beta-x} expanded
// as sum (beta)_n/n! M_n z^n.  Requires c not in {0,1} and (beta)_n != 0.
std::vector<Poly<Rat>> meixner(const Rat& beta, const Rat& c, std::size_t n_max);

// Meixner-Pollaczek polynomials from
// (1 - e^{iw} z)^{-lambda+ix} (1 - e^{-iw} z)^{-lambda-ix}; float-only since
// e^{iw} is transcendental.  max_imag is the largest imaginary residue seen
// when realifying; residues above 1e-9 throw.
struct MeixnerPollaczekResult {
  std::vector<Poly<double>> polys;
  double max_imag = 0.0;
};
MeixnerPollaczekResult meixner_pollaczek(double lambda, double omega, std::size_t n_max);

}  // namespace bior
