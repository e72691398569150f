#include "bior/appell.hpp"

#include <stdexcept>
#include <utility>

#include "bior/parallel.hpp"

namespace bior {

Rat MomentDistribution::moment(std::size_t k) const {
  if (k > mgf.order())
    throw std::invalid_argument("MomentDistribution::moment: insufficient series order");
  return factorial(k) * mgf.coeff(k);
}

Rat MomentDistribution::mean() const { return moment(1); }

Rat MomentDistribution::variance() const { return moment(2) - moment(1) * moment(1); }

MomentDistribution make_distribution(Series<Rat> mgf, std::string name, long order_param) {
  if (mgf.coeff(0) != Rat(1))
    throw std::invalid_argument("make_distribution: constant term must be 1");
  return MomentDistribution{std::move(mgf), std::move(name), order_param};
}

MomentDistribution point_mass_distribution(std::size_t order) {
  return make_distribution(series_one<Rat>(order), "point_mass");
}

MomentDistribution bspline_distribution(long N, std::size_t order) {
  if (N < 1) throw std::invalid_argument("bspline_distribution: N must be >= 1");
  auto base = builtin_series(BuiltinSeries::expm1_over_z, order);
  return make_distribution(series_pow_int(base, N), "bspline", N);
}

MomentDistribution binomial_half_distribution(long N, std::size_t order) {
  if (N < 1) throw std::invalid_argument("binomial_half_distribution: N must be >= 1");
  auto base = builtin_series(BuiltinSeries::half_plus_half_exp, order);
  return make_distribution(series_pow_int(base, N), "binomial_half", N);
}

MomentDistribution gaussian_distribution(std::size_t order) {
  Series<Rat> e(order);
  if (order >= 2) e.coeff(2) = Rat(1, 2);
  return make_distribution(series_exp(e), "gaussian");
}

namespace {

// P_m(x) = sum_{k<=m} (m!/k!) b_{m-k} x^k where b = 1/mgf.
Poly<Rat> extract_poly(const Series<Rat>& recip_mgf, std::size_t m) {
  std::vector<Rat> coeffs(m + 1);
  Rat ratio = factorial(m);  // m!/k!, updated as k grows
  for (std::size_t k = 0; k <= m; ++k) {
    coeffs[k] = ratio * recip_mgf.coeff(m - k);
    if (k < m) ratio /= Rat(static_cast<long>(k) + 1);
  }
  return Poly<Rat>(std::move(coeffs));
}

}  // namespace

AppellSequence appell_from_distribution(const MomentDistribution& phi, std::size_t m_max) {
  if (phi.mgf.order() < m_max)
    throw std::invalid_argument("appell_from_distribution: insufficient series order");
  const Series<Rat> b = series_recip(series_truncate(phi.mgf, m_max));
  AppellSequence seq{std::vector<Poly<Rat>>(m_max + 1), phi};
  par::parallel_for(
      m_max + 1, [&](std::size_t m) { seq.polys[m] = extract_poly(b, m); }, 4);
  return seq;
}

AppellSequence appell_from_distribution_serial(const MomentDistribution& phi,
                                               std::size_t m_max) {
  if (phi.mgf.order() < m_max)
    throw std::invalid_argument("appell_from_distribution: insufficient series order");
  const Series<Rat> b = series_recip(series_truncate(phi.mgf, m_max));
  AppellSequence seq{std::vector<Poly<Rat>>(m_max + 1), phi};
  for (std::size_t m = 0; m <= m_max; ++m) seq.polys[m] = extract_poly(b, m);
  return seq;
}

Rat pair_derivative(const MomentDistribution& phi, std::size_t n, const Poly<Rat>& p) {
  if (p.degree() > static_cast<int>(phi.mgf.order()))
    throw std::invalid_argument("pair_derivative: insufficient moments");
  Poly<Rat> q = p;
  for (std::size_t i = 0; i < n && !q.is_zero(); ++i) q = q.derivative();
  Rat acc(0);
  for (int k = 0; k <= q.degree(); ++k)
    acc += q.coeff(static_cast<std::size_t>(k)) * phi.moment(static_cast<std::size_t>(k));
  return acc;
}

std::vector<std::vector<Rat>> biorthogonality_gram(const MomentDistribution& phi,
                                                   const AppellSequence& seq,
                                                   std::size_t n_max, std::size_t m_max) {
  if (m_max >= seq.polys.size())
    throw std::invalid_argument("biorthogonality_gram: sequence too short");
  std::vector<std::vector<Rat>> g(n_max + 1, std::vector<Rat>(m_max + 1));
  par::parallel_for(
      (n_max + 1) * (m_max + 1),
      [&](std::size_t idx) {
        const std::size_t n = idx / (m_max + 1), m = idx % (m_max + 1);
        g[n][m] = pair_derivative(phi, n, seq.polys[m]) / factorial(m);
      },
      8);
  return g;
}

std::vector<std::vector<Rat>> biorthogonality_gram_serial(const MomentDistribution& phi,
                                                          const AppellSequence& seq,
                                                          std::size_t n_max,
                                                          std::size_t m_max) {
  if (m_max >= seq.polys.size())
    throw std::invalid_argument("biorthogonality_gram: sequence too short");
  std::vector<std::vector<Rat>> g(n_max + 1, std::vector<Rat>(m_max + 1));
  for (std::size_t n = 0; n <= n_max; ++n)
    for (std::size_t m = 0; m <= m_max; ++m)
      g[n][m] = pair_derivative(phi, n, seq.polys[m]) / factorial(m);
  return g;
}

bool is_identity_matrix(const std::vector<std::vector<Rat>>& g) {
  for (std::size_t n = 0; n < g.size(); ++n)
    for (std::size_t m = 0; m < g[n].size(); ++m)
      if (g[n][m] != (n == m ? Rat(1) : Rat(0))) return false;
  return true;
}

AppellSequence standardize(const AppellSequence& seq, const Rat& mu, const Rat& sigma) {
  if (sgn(sigma) == 0) throw std::invalid_argument("standardize: sigma must be nonzero");
  AppellSequence out;
  out.polys.reserve(seq.polys.size());
  Rat scale(1);
  const Rat inv_sigma = Rat(1) / sigma;
  for (std::size_t m = 0; m < seq.polys.size(); ++m) {
    out.polys.push_back(scale * seq.polys[m].affine(sigma, mu));
    scale *= inv_sigma;
  }
  // Standardized distribution: mgf(z/sigma) * e^{-mu z / sigma}.
  Series<Rat> shift(seq.source.mgf.order());
  if (shift.order() >= 1) shift.coeff(1) = -mu * inv_sigma;
  out.source = make_distribution(
      series_mul(series_scale_var(seq.source.mgf, inv_sigma), series_exp(shift)),
      seq.source.name.empty() ? "" : "standardized " + seq.source.name,
      seq.source.order_param);
  return out;
}

}  // namespace bior
