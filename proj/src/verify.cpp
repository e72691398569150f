#include "bior/verify.hpp"

#include <cmath>
#include <numbers>
#include <cstdio>
#include <functional>
#include <stdexcept>

#include "bior/parallel.hpp"

namespace bior {

GridSpec GridSpec::parse(const std::string& text) {
  const auto c1 = text.find(':');
  const auto c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw std::invalid_argument("GridSpec: expected start:stop:count");
  GridSpec g;
  g.start = rat_parse(text.substr(0, c1));
  g.stop = rat_parse(text.substr(c1 + 1, c2 - c1 - 1));
  const long n = std::stol(text.substr(c2 + 1));
  if (n < 1) throw std::invalid_argument("GridSpec: count must be >= 1");
  g.count = static_cast<std::size_t>(n);
  return g;
}

GridSpec GridSpec::hermite_default() { return {Rat(-2), Rat(2), 41}; }
GridSpec GridSpec::laguerre_default() { return {Rat(0), Rat(8), 41}; }
GridSpec GridSpec::gaussian_default() { return {Rat(-3), Rat(3), 41}; }

std::vector<Rat> GridSpec::points() const {
  std::vector<Rat> pts;
  pts.reserve(count);
  if (count == 1) {
    pts.push_back(start);
    return pts;
  }
  const Rat step = (stop - start) / Rat(static_cast<long>(count) - 1);
  for (std::size_t i = 0; i < count; ++i) pts.push_back(start + Rat(static_cast<long>(i)) * step);
  return pts;
}

std::vector<double> GridSpec::points_double() const {
  std::vector<double> pts;
  for (const Rat& x : points()) pts.push_back(to_double(x));
  return pts;
}

std::vector<Poly<Rat>> polys_from_pair(const GeneratingPair& pair, std::size_t m_max) {
  if (pair.numerator.order() != pair.denominator.order())
    throw std::invalid_argument("polys_from_pair: order mismatch");
  if (pair.numerator.order() < m_max)
    throw std::invalid_argument("polys_from_pair: insufficient order");
  if (pair.denominator.coeff(0) != Rat(1))
    throw std::invalid_argument("polys_from_pair: denominator constant term must be 1");
  const auto prod =
      series_mul(pair.numerator, series_lift(series_recip(pair.denominator)));
  std::vector<Poly<Rat>> out;
  out.reserve(m_max + 1);
  for (std::size_t m = 0; m <= m_max; ++m) out.push_back(factorial(m) * prod.coeff(m));
  return out;
}

Series<Poly<Rat>> exp_xz_series(std::size_t order) {
  Series<Poly<Rat>> s(order);
  for (std::size_t j = 0; j <= order; ++j)
    s.coeff(j) = Poly<Rat>::monomial(Rat(1) / factorial(j), j);
  return s;
}

bool appell_property(const std::vector<Poly<Rat>>& polys) {
  for (std::size_t m = 0; m < polys.size(); ++m) {
    if (polys[m].degree() != static_cast<int>(m)) return false;
    if (m > 0 && polys[m].derivative() != Rat(static_cast<long>(m)) * polys[m - 1])
      return false;
  }
  return true;
}

bool monic_all(const std::vector<Poly<Rat>>& polys) {
  for (const auto& p : polys)
    if (p.is_zero() || p.leading() != Rat(1)) return false;
  return true;
}

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

bool all_below(const std::vector<ConvergenceEntry>& e, double tol) {
  for (const auto& x : e)
    if (!(x.sup_error <= tol)) return false;
  return true;
}

bool strictly_decreasing(const std::vector<ConvergenceEntry>& e) {
  for (std::size_t i = 1; i < e.size(); ++i)
    if (!(e[i].sup_error < e[i - 1].sup_error)) return false;
  return true;
}

double final_ratio(const std::vector<ConvergenceEntry>& e) {
  const double prev = e[e.size() - 2].sup_error;
  return prev > 0.0 ? e.back().sup_error / prev : 0.0;
}

std::optional<double> fit_rate(const std::vector<ConvergenceEntry>& e) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& x : e)
    if (x.sup_error > 0.0) pts.emplace_back(std::log(x.axis), std::log(x.sup_error));
  if (pts.size() < 2) return std::nullopt;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto [x, y] : pts) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = static_cast<double>(pts.size());
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

void require_ascending(const std::vector<long>& N_list, const char* what) {
  if (N_list.empty()) throw std::invalid_argument(std::string(what) + ": empty ladder");
  for (std::size_t i = 0; i < N_list.size(); ++i) {
    if (N_list[i] < 1) throw std::invalid_argument(std::string(what) + ": N must be >= 1");
    if (i && N_list[i] <= N_list[i - 1])
      throw std::invalid_argument(std::string(what) + ": N ladder must ascend");
  }
}

struct HermiteLimitCase {
  const char* id;
  // family member of degree m at order N
  std::function<Poly<Rat>(long N, std::size_t m)> member;
  // normalization parameters at order N
  std::function<void(long N, Rat& scale_sq, int& scale_sign, Rat& shift,
                     Rat& prefactor_sq, int& prefactor_sign)>
      normalization;
  bool target_over_mfact = false;  // target H_m/m! instead of H_m
  std::size_t exact_through = 1;   // degrees whose error is exactly zero
  bool rate_window = false;        // gate the rate inside [-1.5, -0.25]
};

ConvergenceReport run_hermite_case(const HermiteLimitCase& c, std::size_t m,
                                   const std::vector<long>& N_list, const GridSpec& grid) {
  require_ascending(N_list, c.id);
  Poly<Rat> target = hermite(m).back();
  if (c.target_over_mfact) target = (Rat(1) / factorial(m)) * target;
  const auto pts = grid.points();

  ConvergenceReport rep;
  rep.case_id = c.id;
  rep.degree = m;
  rep.grid = grid.points_double();
  rep.entries.assign(N_list.size(), {});
  par::parallel_for(
      N_list.size(),
      [&](std::size_t i) {
        const long N = N_list[i];
        Rat scale_sq, prefactor_sq, shift;
        int scale_sign = 1, prefactor_sign = 1;
        c.normalization(N, scale_sq, scale_sign, shift, prefactor_sq, prefactor_sign);
        const auto scaled = sqrt_normalized_affine(c.member(N, m), m, scale_sq, scale_sign,
                                                   shift, prefactor_sq, prefactor_sign);
        double sup = 0.0;
        for (const Rat& x : pts) sup = std::max(sup, scaled.error_vs(target, x));
        rep.entries[i] = {std::to_string(N), static_cast<double>(N), sup};
      },
      2);

  rep.empirical_rate = fit_rate(rep.entries);
  if (m <= c.exact_through) {
    rep.passed = all_below(rep.entries, 1e-12);
  } else {
    rep.passed = strictly_decreasing(rep.entries) &&
                 (rep.entries.size() < 2 || final_ratio(rep.entries) <= 0.75);
    if (c.rate_window && rep.passed) {
      rep.passed = rep.empirical_rate && *rep.empirical_rate >= -1.5 &&
                   *rep.empirical_rate <= -0.25;
    }
  }
  return rep;
}

}  // namespace

ConvergenceReport converge_bernoulli_hermite(std::size_t m, const std::vector<long>& N_list,
                                             const GridSpec& grid) {
  HermiteLimitCase c;
  c.id = "bernoulli-hermite";
  c.member = [](long N, std::size_t mm) { return gen_bernoulli(N, mm).back(); };
  c.normalization = [](long N, Rat& s, int& ss, Rat& sh, Rat& p, int& ps) {
    s = rat(N, 12);
    ss = 1;
    sh = rat(N, 2);
    p = rat(12, N);
    ps = 1;
  };
  return run_hermite_case(c, m, N_list, grid);
}

ConvergenceReport converge_euler_hermite(std::size_t m, const std::vector<long>& N_list,
                                         const GridSpec& grid) {
  HermiteLimitCase c;
  c.id = "euler-hermite";
  c.member = [](long N, std::size_t mm) { return gen_euler(N, mm).back(); };
  c.normalization = [](long N, Rat& s, int& ss, Rat& sh, Rat& p, int& ps) {
    s = rat(N, 4);
    ss = 1;
    sh = rat(N, 2);
    p = rat(4, N);
    ps = 1;
  };
  return run_hermite_case(c, m, N_list, grid);
}

ConvergenceReport converge_buchholz_hermite(std::size_t m, const std::vector<long>& N_list,
                                            const GridSpec& grid) {
  HermiteLimitCase c;
  c.id = "buchholz-hermite";
  c.member = [](long N, std::size_t mm) { return buchholz(N, mm).back(); };
  c.normalization = [](long N, Rat& s, int& ss, Rat& sh, Rat& p, int& ps) {
    s = Rat(12 * N);  // substitution -2 sqrt(3N) x
    ss = -1;
    sh = Rat(0);
    p = rat(3, N);
    ps = 1;
  };
  c.target_over_mfact = true;
  return run_hermite_case(c, m, N_list, grid);
}

ConvergenceReport converge_gegenbauer_hermite(std::size_t m, const std::vector<long>& N_list,
                                              const GridSpec& grid) {
  HermiteLimitCase c;
  c.id = "gegenbauer-hermite";
  c.member = [](long N, std::size_t mm) { return gegenbauer(Rat(N), mm).back(); };
  c.normalization = [](long N, Rat& s, int& ss, Rat& sh, Rat& p, int& ps) {
    s = rat(1, 2 * N);
    ss = 1;
    sh = Rat(0);
    p = rat(1, 2 * N);
    ps = 1;
  };
  c.target_over_mfact = true;
  return run_hermite_case(c, m, N_list, grid);
}

ConvergenceReport converge_laguerre_hermite(std::size_t m, const std::vector<long>& N_list,
                                            const GridSpec& grid) {
  HermiteLimitCase c;
  c.id = "laguerre-hermite";
  c.member = [](long N, std::size_t mm) { return laguerre(Rat(N), mm).back(); };
  c.normalization = [](long N, Rat& s, int& ss, Rat& sh, Rat& p, int& ps) {
    s = Rat(2 * N);
    ss = 1;
    sh = Rat(N);
    p = rat(1, 2 * N);
    ps = -1;  // (-1)^m prefactor
  };
  c.target_over_mfact = true;
  c.exact_through = 0;
  c.rate_window = true;
  return run_hermite_case(c, m, N_list, grid);
}

ConvergenceReport converge_mp_laguerre(std::size_t n, const Rat& alpha,
                                       const std::vector<double>& omega_list,
                                       const GridSpec& grid) {
  if (omega_list.empty())
    throw std::invalid_argument("converge_mp_laguerre: empty ladder");
  for (std::size_t i = 0; i < omega_list.size(); ++i) {
    if (!(omega_list[i] > 0.0 && omega_list[i] < std::numbers::pi))
      throw std::invalid_argument("converge_mp_laguerre: omega must lie in (0, pi)");
    if (i && !(omega_list[i] < omega_list[i - 1]))
      throw std::invalid_argument("converge_mp_laguerre: omega ladder must descend");
  }
  const double lambda = to_double(Rat(alpha + 1)) / 2.0;
  const auto target = poly_to_double(laguerre(alpha, n).back());
  const auto pts = grid.points_double();

  ConvergenceReport rep;
  rep.case_id = "mp-laguerre";
  rep.degree = n;
  rep.grid = pts;
  rep.entries.assign(omega_list.size(), {});
  par::parallel_for(
      omega_list.size(),
      [&](std::size_t i) {
        const double w = omega_list[i];
        const auto mp = meixner_pollaczek(lambda, w, n);
        const auto sub = mp.polys.back().affine(-1.0 / (2.0 * w), 0.0);
        rep.entries[i] = {fmt17(w), 1.0 / w, sup_error_on_grid(sub, target, pts)};
      },
      2);
  rep.empirical_rate = fit_rate(rep.entries);
  rep.passed = n == 0 ? all_below(rep.entries, 1e-12) : strictly_decreasing(rep.entries);
  return rep;
}

ConvergenceReport converge_meixner_laguerre(std::size_t n, const Rat& alpha,
                                            const std::vector<Rat>& c_list,
                                            const GridSpec& grid) {
  if (c_list.empty())
    throw std::invalid_argument("converge_meixner_laguerre: empty ladder");
  for (std::size_t i = 0; i < c_list.size(); ++i) {
    if (!(sgn(c_list[i]) > 0 && c_list[i] < Rat(1)))
      throw std::invalid_argument("converge_meixner_laguerre: c must lie in (0, 1)");
    if (i && !(c_list[i] > c_list[i - 1]))
      throw std::invalid_argument("converge_meixner_laguerre: c ladder must ascend");
  }
  const auto lag = laguerre(alpha, n).back();
  const Rat l0 = pochhammer(Rat(alpha + 1), n) / factorial(n);
  const Poly<Rat> target = (Rat(1) / l0) * lag;
  const auto pts = grid.points();

  ConvergenceReport rep;
  rep.case_id = "meixner-laguerre";
  rep.degree = n;
  rep.grid = grid.points_double();
  rep.entries.assign(c_list.size(), {});
  par::parallel_for(
      c_list.size(),
      [&](std::size_t i) {
        const Rat& c = c_list[i];
        const auto mx = meixner(Rat(alpha + 1), c, n);
        const auto sub = mx.back().affine(Rat(c / (Rat(1) - c)), Rat(0));
        rep.entries[i] = {rat_str(c), to_double(Rat(Rat(1) / (Rat(1) - c))),
                          sup_error_on_grid(sub, target, pts)};
      },
      2);
  rep.empirical_rate = fit_rate(rep.entries);
  rep.passed = n <= 1 ? all_below(rep.entries, 1e-12) : strictly_decreasing(rep.entries);
  return rep;
}

std::vector<Rat> sinc_power_deviations(long N, std::size_t order) {
  if (N < 1) throw std::invalid_argument("sinc_power_deviations: N must be >= 1");
  const auto sinc = builtin_series(BuiltinSeries::sinc, order);
  const auto scaled = series_scale_var_sq(sinc, rat(3, N));  // lambda^2 = 3/N
  const auto powed = series_pow_int(scaled, N);
  Series<Rat> gauss(order);
  if (order >= 2) gauss.coeff(2) = rat(-1, 2);
  const auto target = series_exp(gauss);  // e^{-z^2/2}
  std::vector<Rat> dev(order + 1);
  for (std::size_t j = 0; j <= order; ++j) dev[j] = abs(powed.coeff(j) - target.coeff(j));
  return dev;
}

ConvergenceReport sinc_lemma_check(const std::vector<long>& N_list, std::size_t order) {
  if (order < 2 || order % 2 != 0)
    throw std::invalid_argument("sinc_lemma_check: order must be even and >= 2");
  require_ascending(N_list, "sinc_lemma_check");
  ConvergenceReport rep;
  rep.case_id = "sinc";
  rep.degree = order;
  rep.entries.assign(N_list.size(), {});
  std::vector<char> low_exact(N_list.size(), 0);
  par::parallel_for(
      N_list.size(),
      [&](std::size_t i) {
        const auto dev = sinc_power_deviations(N_list[i], order);
        low_exact[i] = sgn(dev[0]) == 0 && sgn(dev[2]) == 0;
        Rat worst(0);
        for (const Rat& d : dev) worst = std::max(worst, d);
        rep.entries[i] = {std::to_string(N_list[i]), static_cast<double>(N_list[i]),
                          to_double(worst)};
      },
      2);
  rep.empirical_rate = fit_rate(rep.entries);
  bool ok = true;
  for (char b : low_exact) ok = ok && b != 0;
  for (std::size_t i = 1; i < rep.entries.size(); ++i)
    ok = ok && rep.entries[i].sup_error <= 0.6 * rep.entries[i - 1].sup_error;
  rep.passed = ok;
  return rep;
}

ConvergenceReport converge_gaussian(int k, const std::vector<long>& N_list,
                                    const GridSpec& grid) {
  require_ascending(N_list, "converge_gaussian");
  const auto pts = grid.points_double();
  ConvergenceReport rep;
  rep.case_id = "bspline-gaussian";
  rep.degree = static_cast<std::size_t>(k);
  rep.grid = pts;
  rep.entries.assign(N_list.size(), {});
  par::parallel_for(
      N_list.size(),
      [&](std::size_t i) {
        rep.entries[i] = {std::to_string(N_list[i]), static_cast<double>(N_list[i]),
                          gaussian_limit_error(N_list[i], k, pts)};
      },
      2);
  rep.empirical_rate = fit_rate(rep.entries);
  rep.passed = strictly_decreasing(rep.entries) && rep.empirical_rate &&
               *rep.empirical_rate >= -1.5 && *rep.empirical_rate <= -0.5;
  return rep;
}

bool bernoulli_euler_identity_lists(const std::vector<Poly<Rat>>& bernoulli,
                                    const std::vector<Poly<Rat>>& euler,
                                    std::size_t m_max) {
  if (bernoulli.size() <= m_max || euler.size() <= m_max)
    throw std::invalid_argument("bernoulli_euler_identity: sequences too short");
  for (std::size_t m = 0; m <= m_max; ++m) {
    Poly<Rat> rhs;
    for (std::size_t k = 0; k <= m; ++k)
      rhs += binomial(m, k) * (euler[k] * bernoulli[m - k]);
    if (rat_pow(rat(1, 2), static_cast<long>(m)) * rhs != bernoulli[m]) return false;
  }
  return true;
}

bool identity_bernoulli_euler(long N, std::size_t m_max) {
  if (N < 1) throw std::invalid_argument("identity_bernoulli_euler: N must be >= 1");
  return bernoulli_euler_identity_lists(gen_bernoulli(N, m_max), gen_euler(N, m_max),
                                        m_max);
}

bool scaling_characterization(const std::vector<Poly<Rat>>& P,
                              const std::vector<Poly<Rat>>& Q, const Rat& alpha,
                              std::size_t m_max) {
  if (P.size() <= m_max || Q.size() <= m_max)
    throw std::invalid_argument("scaling_characterization: sequences too short");
  if (sgn(alpha) == 0)
    throw std::invalid_argument("scaling_characterization: alpha must be nonzero");
  for (std::size_t m = 0; m <= m_max; ++m) {
    Poly<Rat> lhs;
    for (std::size_t k = 0; k <= m; ++k)
      lhs += binomial(m, k) *
             (P[k].affine(alpha, Rat(0)) * Q[m - k].affine(alpha, Rat(0)));
    lhs = rat_pow(alpha, -static_cast<long>(m)) * lhs;
    if (lhs != Q[m].affine(Rat(2), Rat(0))) return false;
  }
  return true;
}

bool laguerre_type_appell_relation(const std::vector<Poly<Rat>>& seq, std::size_t m_max) {
  if (seq.size() <= m_max)
    throw std::invalid_argument("laguerre_type_appell_relation: sequence too short");
  for (std::size_t m = 1; m <= m_max; ++m)
    if (seq[m].derivative() != seq[m - 1].derivative() - seq[m - 1]) return false;
  return true;
}

bool identity_laguerre_recurrence(const Rat& alpha, std::size_t n_max) {
  return laguerre_type_appell_relation(laguerre(alpha, n_max), n_max);
}

namespace {

std::vector<std::vector<Rat>> laguerre_gram(long alpha, std::size_t m_max, bool parallel) {
  if (alpha < 0)
    throw std::invalid_argument("laguerre_orthogonality: alpha must be a non-negative integer");
  const auto lag = laguerre(Rat(alpha), m_max);
  // Weight moments: integral of x^t x^alpha e^{-x} over [0,inf) = (t+alpha)!.
  std::vector<Rat> wm(2 * m_max + 1);
  for (std::size_t t = 0; t < wm.size(); ++t)
    wm[t] = factorial(t + static_cast<unsigned long>(alpha));
  std::vector<std::vector<Rat>> g(m_max + 1, std::vector<Rat>(m_max + 1));
  auto entry = [&](std::size_t idx) {
    const std::size_t m = idx / (m_max + 1), n = idx % (m_max + 1);
    Rat acc(0);
    for (int j = 0; j <= lag[m].degree(); ++j)
      for (int k = 0; k <= lag[n].degree(); ++k)
        acc += lag[m].coeff(j) * lag[n].coeff(k) * wm[static_cast<std::size_t>(j + k)];
    g[m][n] = acc;
  };
  if (parallel)
    par::parallel_for((m_max + 1) * (m_max + 1), entry, 8);
  else
    for (std::size_t i = 0; i < (m_max + 1) * (m_max + 1); ++i) entry(i);
  return g;
}

}  // namespace

std::vector<std::vector<Rat>> laguerre_orthogonality(long alpha, std::size_t m_max) {
  return laguerre_gram(alpha, m_max, true);
}

std::vector<std::vector<Rat>> laguerre_orthogonality_serial(long alpha, std::size_t m_max) {
  return laguerre_gram(alpha, m_max, false);
}

}  // namespace bior
