#pragma once

#include <string>
#include <vector>

#include "bior/builtin.hpp"
#include "bior/series.hpp"

namespace bior {

// A compactly supported distribution, represented by its exact moment
// generating series: coefficient j of mgf is mu_j / j!.  The constant term
// is normalized to 1.
struct MomentDistribution {
  Series<Rat> mgf;
  std::string name;
  long order_param = 0;  // family order N where applicable

  Rat moment(std::size_t k) const;
  Rat mean() const;      // mu_1
  Rat variance() const;  // mu_2 - mu_1^2
};

// Validates the unit constant term.
MomentDistribution make_distribution(Series<Rat> mgf, std::string name = "",
                                     long order_param = 0);

MomentDistribution point_mass_distribution(std::size_t order);
// Moment series ((e^z - 1)/z)^N of the uniform B-spline of order N.
MomentDistribution bspline_distribution(long N, std::size_t order);
// Moment series ((e^z + 1)/2)^N of the symmetric binomial mask on {0..N}.
MomentDistribution binomial_half_distribution(long N, std::size_t order);
// Truncated e^{z^2/2}, the moment series of the standard Gaussian.
MomentDistribution gaussian_distribution(std::size_t order);

// Monic polynomials P_0..P_m with P_m of degree m and P'_m = m P_{m-1},
// extracted from e^{xz} / mgf.
struct AppellSequence {
  std::vector<Poly<Rat>> polys;
  MomentDistribution source;

  std::size_t m_max() const { return polys.size() - 1; }
};

AppellSequence appell_from_distribution(const MomentDistribution& phi, std::size_t m_max);
AppellSequence appell_from_distribution_serial(const MomentDistribution& phi,
                                               std::size_t m_max);

// <(-1)^n phi^(n), p> = <phi, p^(n)> = sum_k coeff_k(p^(n)) mu_k.
Rat pair_derivative(const MomentDistribution& phi, std::size_t n, const Poly<Rat>& p);

// Gram matrix G[n][m] = <(-1)^n phi^(n), P_m/m!>; exactly the identity when
// seq is the Appell sequence of phi.
std::vector<std::vector<Rat>> biorthogonality_gram(const MomentDistribution& phi,
                                                   const AppellSequence& seq,
                                                   std::size_t n_max, std::size_t m_max);
std::vector<std::vector<Rat>> biorthogonality_gram_serial(const MomentDistribution& phi,
                                                          const AppellSequence& seq,
                                                          std::size_t n_max,
                                                          std::size_t m_max);

bool is_identity_matrix(const std::vector<std::vector<Rat>>& g);

// Affine renormalization P~_m(x) = sigma^{-m} P_m(sigma x + mu); the source
// distribution is standardized alongside, so the pair stays biorthogonal.
AppellSequence standardize(const AppellSequence& seq, const Rat& mu, const Rat& sigma);

}  // namespace bior
