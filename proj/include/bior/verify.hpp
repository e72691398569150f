#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bior/appell.hpp"
#include "bior/bspline.hpp"
#include "bior/families.hpp"
#include "bior/sqrt_scale.hpp"

namespace bior {

// Inclusive equispaced evaluation grid with exact rational endpoints.
struct GridSpec {
  Rat start{0};
  Rat stop{0};
  std::size_t count = 0;

  static GridSpec parse(const std::string& text);  // "start:stop:count"
  static GridSpec hermite_default();               // [-2, 2], 41 points
  static GridSpec laguerre_default();              // [0, 8], 41 points
  static GridSpec gaussian_default();              // [-3, 3], 41 points

  std::vector<Rat> points() const;
  std::vector<double> points_double() const;
};

struct ConvergenceEntry {
  std::string param;  // exact parameter text: "16", "9/10", "0.2", ...
  double axis;        // sharpness parameter used for the rate fit
  double sup_error;
};

// One limit-theorem experiment: sup errors over a parameter ladder, the
// empirical rate (least-squares slope of log error against log of the
// sharpness parameter: N, 1/omega, or 1/(1-c)), and the pass verdict for
// the case's acceptance rule.
struct ConvergenceReport {
  std::string case_id;
  std::size_t degree = 0;
  std::vector<double> grid;
  std::vector<ConvergenceEntry> entries;
  std::optional<double> empirical_rate;
  bool passed = false;
};

// Numerator f(x,z) and denominator phi_hat(iz) of a generating pair; the
// polynomials are m! times the z^m coefficients of f / phi_hat.
struct GeneratingPair {
  Series<Poly<Rat>> numerator;
  Series<Rat> denominator;  // constant term must be 1
};

std::vector<Poly<Rat>> polys_from_pair(const GeneratingPair& pair, std::size_t m_max);

// e^{xz} over the polynomial-coefficient ring: coefficient j is x^j / j!.
Series<Poly<Rat>> exp_xz_series(std::size_t order);

// deg P_m = m and P'_m = m P_{m-1} for the whole list.
bool appell_property(const std::vector<Poly<Rat>>& polys);
bool monic_all(const std::vector<Poly<Rat>>& polys);

// Hermite-target limits.  Exact cases (m <= 1, for the Laguerre route only
// m = 0) must sit below 1e-12; the rest must decrease strictly with a final
// doubling ratio <= 0.75 (the Laguerre route additionally keeps its rate
// inside [-1.5, -0.25]).
ConvergenceReport converge_bernoulli_hermite(std::size_t m, const std::vector<long>& N_list,
                                             const GridSpec& grid);
ConvergenceReport converge_euler_hermite(std::size_t m, const std::vector<long>& N_list,
                                         const GridSpec& grid);
ConvergenceReport converge_buchholz_hermite(std::size_t m, const std::vector<long>& N_list,
                                            const GridSpec& grid);
ConvergenceReport converge_gegenbauer_hermite(std::size_t m, const std::vector<long>& N_list,
                                              const GridSpec& grid);
ConvergenceReport converge_laguerre_hermite(std::size_t m, const std::vector<long>& N_list,
                                            const GridSpec& grid);

// Laguerre-target limits: Meixner-Pollaczek as omega -> 0 (float path) and
// Meixner as c -> 1 (exact substitution path, n <= 1 exact).
ConvergenceReport converge_mp_laguerre(std::size_t n, const Rat& alpha,
                                       const std::vector<double>& omega_list,
                                       const GridSpec& grid);
ConvergenceReport converge_meixner_laguerre(std::size_t n, const Rat& alpha,
                                            const std::vector<Rat>& c_list,
                                            const GridSpec& grid);

// Coefficient deviations of sinc^N(z sqrt(12/N)/2) from e^{-z^2/2} through
// the given order; entries 0 and 2 are exactly zero.
std::vector<Rat> sinc_power_deviations(long N, std::size_t order);
ConvergenceReport sinc_lemma_check(const std::vector<long>& N_list, std::size_t order);

// Gaussian limit of B-spline derivatives; passes when errors decrease
// strictly with empirical rate in [-1.5, -0.5].
ConvergenceReport converge_gaussian(int k, const std::vector<long>& N_list,
                                    const GridSpec& grid);

// B_m^N = 2^{-m} sum_k C(m,k) E_k^N B_{m-k}^N, exactly.
bool identity_bernoulli_euler(long N, std::size_t m_max);
bool bernoulli_euler_identity_lists(const std::vector<Poly<Rat>>& bernoulli,
                                    const std::vector<Poly<Rat>>& euler,
                                    std::size_t m_max);

// sum_k alpha^{-m} C(m,k) P_k(alpha x) Q_{m-k}(alpha x) = Q_m(2x) for all
// m <= m_max; the two-scale characterization of Appell pairs.
bool scaling_characterization(const std::vector<Poly<Rat>>& P,
                              const std::vector<Poly<Rat>>& Q, const Rat& alpha,
                              std::size_t m_max);

// L'_n = L'_{n-1} - L_{n-1}.
bool identity_laguerre_recurrence(const Rat& alpha, std::size_t n_max);
bool laguerre_type_appell_relation(const std::vector<Poly<Rat>>& seq, std::size_t m_max);

// Exact Gram matrix of the Laguerre family under the weight x^alpha e^{-x}
// on [0, inf); diagonal (alpha+n)!/n!, zero elsewhere.  Integer alpha >= 0
// keeps the weight moments rational.
std::vector<std::vector<Rat>> laguerre_orthogonality(long alpha, std::size_t m_max);
std::vector<std::vector<Rat>> laguerre_orthogonality_serial(long alpha, std::size_t m_max);

}  // namespace bior
