#include "bior/families.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bior {

std::vector<Poly<Rat>> hermite(std::size_t m_max) {
  std::vector<Poly<Rat>> h;
  h.reserve(m_max + 1);
  h.push_back(Poly<Rat>::constant(Rat(1)));
  if (m_max == 0) return h;
  h.push_back(Poly<Rat>::identity());
  const Poly<Rat> x = Poly<Rat>::identity();
  for (std::size_t m = 1; m < m_max; ++m)
    h.push_back(x * h[m] - Rat(static_cast<long>(m)) * h[m - 1]);
  return h;
}

std::vector<Poly<Rat>> hermite_by_series(std::size_t m_max) {
  return appell_from_distribution(gaussian_distribution(m_max), m_max).polys;
}

std::vector<Poly<Rat>> laguerre(const Rat& alpha, std::size_t n_max) {
  for (std::size_t j = 1; j <= n_max; ++j)
    if (alpha + Rat(static_cast<long>(j)) == Rat(0))
      throw std::domain_error("laguerre: Pochhammer pole at alpha = " + rat_str(alpha));
  std::vector<Poly<Rat>> out;
  out.reserve(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    // L_n = ((alpha+1)_n / n!) sum_j ((-n)_j / (alpha+1)_j) x^j / j!
    const Rat lead = pochhammer(alpha + 1, n) / factorial(n);
    std::vector<Rat> coeffs(n + 1);
    Rat term(1);  // (-n)_j / ((alpha+1)_j j!)
    for (std::size_t j = 0; j <= n; ++j) {
      coeffs[j] = lead * term;
      if (j < n)
        term *= Rat(-(static_cast<long>(n) - static_cast<long>(j))) /
                ((alpha + Rat(static_cast<long>(j) + 1)) * Rat(static_cast<long>(j) + 1));
    }
    out.push_back(Poly<Rat>(std::move(coeffs)));
  }
  return out;
}

std::vector<Poly<Rat>> laguerre_by_series(const Rat& alpha, std::size_t n_max) {
  const Poly<Rat> x = Poly<Rat>::identity();
  // exponent of e^{-zx/(1-z)}: -x (z + z^2 + ...)
  Series<Poly<Rat>> expo(n_max);
  for (std::size_t j = 1; j <= n_max; ++j) expo.coeff(j) = -x;
  Series<Rat> base(n_max);
  base.coeff(0) = Rat(1);
  if (n_max >= 1) base.coeff(1) = Rat(-1);
  const auto front = series_pow(base, Rat(-alpha - 1));  // (1-z)^{-alpha-1}
  const auto prod = series_mul(series_lift(front), series_exp(expo));
  std::vector<Poly<Rat>> out;
  out.reserve(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) out.push_back(prod.coeff(n));
  return out;
}

std::vector<Poly<Rat>> gen_bernoulli(long N, std::size_t m_max) {
  if (N < 1) throw std::invalid_argument("gen_bernoulli: N must be >= 1");
  return appell_from_distribution(bspline_distribution(N, m_max), m_max).polys;
}

std::vector<Poly<Rat>> gen_euler(long N, std::size_t m_max) {
  if (N < 1) throw std::invalid_argument("gen_euler: N must be >= 1");
  return appell_from_distribution(binomial_half_distribution(N, m_max), m_max).polys;
}

std::vector<Poly<Rat>> buchholz(long N, std::size_t m_max) {
  if (N < 1) throw std::invalid_argument("buchholz: N must be >= 1");
  const auto cmi = builtin_series(BuiltinSeries::cot_minus_inv, m_max);
  const auto half_x = Poly<Rat>::monomial(Rat(1, 2), 1);
  const auto exp_part = series_exp(series_lift_times(cmi, half_x));
  const auto sinc_n = series_pow_int(builtin_series(BuiltinSeries::sinc, m_max), N);
  const auto prod = series_mul(exp_part, series_lift(sinc_n));
  return {prod.coeffs().begin(), prod.coeffs().end()};
}

std::vector<Poly<Rat>> gegenbauer(const Rat& N, std::size_t m_max) {
  Series<Poly<Rat>> base(m_max);
  base.coeff(0) = Poly<Rat>::constant(Rat(1));
  if (m_max >= 1) base.coeff(1) = Poly<Rat>::monomial(Rat(-2), 1);
  if (m_max >= 2) base.coeff(2) = Poly<Rat>::constant(Rat(1));
  const auto s = series_pow(base, Poly<Rat>::constant(Rat(-N)));
  return {s.coeffs().begin(), s.coeffs().end()};
}

std::vector<Poly<Rat>> meixner(const Rat& beta, const Rat& c, std::size_t n_max) {
  if (c == Rat(0) || c == Rat(1))
    throw std::invalid_argument("meixner: c must avoid 0 and 1");
  const auto log1m = builtin_series(BuiltinSeries::log1m, n_max);
  const Poly<Rat> x = Poly<Rat>::identity();
  // (1 - z/c)^x = exp(x log(1 - z/c))
  const auto f1 = series_exp(series_lift_times(series_scale_var(log1m, Rat(Rat(1) / c)), x));
  // (1 - z)^{-beta-x} = exp((-beta - x) log(1 - z))
  const auto f2 =
      series_exp(series_lift_times(log1m, Poly<Rat>(std::vector<Rat>{-beta, Rat(-1)})));
  const auto prod = series_mul(f1, f2);
  std::vector<Poly<Rat>> out;
  out.reserve(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    const Rat poch = pochhammer(beta, n);
    if (sgn(poch) == 0)
      throw std::domain_error("meixner: (beta)_n vanishes at n = " + std::to_string(n));
    out.push_back((factorial(n) / poch) * prod.coeff(n));
  }
  return out;
}

MeixnerPollaczekResult meixner_pollaczek(double lambda, double omega, std::size_t n_max) {
  if (!(omega > 0.0 && omega < std::numbers::pi))
    throw std::invalid_argument("meixner_pollaczek: omega must lie in (0, pi)");
  const Cplx eio = std::polar(1.0, omega);
  const Poly<Cplx> x = Poly<Cplx>::identity();
  auto factor = [&](const Cplx& rot, const Cplx& i_sign) {
    // (1 - rot z)^{-lambda + i_sign x} = exp((-lambda + i_sign x) log(1 - rot z))
    Series<Cplx> lg(n_max);
    Cplx p = 1.0;
    for (std::size_t j = 1; j <= n_max; ++j) {
      p *= rot;
      lg.coeff(j) = -p / static_cast<double>(j);
    }
    Poly<Cplx> expo = i_sign * x;
    expo += Poly<Cplx>::constant(Cplx{-lambda, 0.0});
    return series_exp(series_lift_times(lg, expo));
  };
  const auto prod =
      series_mul(factor(eio, Cplx{0.0, 1.0}), factor(std::conj(eio), Cplx{0.0, -1.0}));

  MeixnerPollaczekResult result;
  result.polys.reserve(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    const Poly<Cplx>& p = prod.coeff(n);
    std::vector<double> re(p.coeffs().size());
    for (std::size_t k = 0; k < re.size(); ++k) {
      result.max_imag = std::max(result.max_imag, std::abs(p.coeffs()[k].imag()));
      re[k] = p.coeffs()[k].real();
    }
    result.polys.push_back(Poly<double>(std::move(re)));
  }
  if (result.max_imag >= 1e-9)
    throw std::runtime_error("meixner_pollaczek: imaginary residue above tolerance");
  return result;
}

}  // namespace bior
