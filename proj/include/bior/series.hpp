#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bior/parallel.hpp"
#include "bior/poly.hpp"
#include "bior/rational.hpp"

namespace bior {

// Coefficient rings for truncated power series: the scalar fields, or
// polynomials over a scalar field.
template <class R>
struct ring_ops {
  static R zero() { return field_traits<R>::zero(); }
  static R one() { return field_traits<R>::one(); }
  static R from_int(long k) { return field_traits<R>::from_int(k); }
  static bool is_zero(const R& a) { return field_traits<R>::is_zero(a); }
  static bool is_unit(const R& a) { return !is_zero(a); }
  static R invert(const R& a) {
    if (!is_unit(a)) throw std::domain_error("ring invert: not a unit");
    return one() / a;
  }
  static R div_int(const R& a, long k) { return a / from_int(k); }
};

template <class F>
struct ring_ops<Poly<F>> {
  static Poly<F> zero() { return Poly<F>(); }
  static Poly<F> one() { return Poly<F>::constant(field_traits<F>::one()); }
  static Poly<F> from_int(long k) { return Poly<F>::constant(field_traits<F>::from_int(k)); }
  static bool is_zero(const Poly<F>& a) { return a.is_zero(); }
  // Units are the nonzero constant polynomials.
  static bool is_unit(const Poly<F>& a) { return a.degree() == 0; }
  static Poly<F> invert(const Poly<F>& a) {
    if (!is_unit(a)) throw std::domain_error("ring invert: not a unit");
    return Poly<F>::constant(field_traits<F>::one() / a.coeff(0));
  }
  static Poly<F> div_int(const Poly<F>& a, long k) {
    const F s = field_traits<F>::one() / field_traits<F>::from_int(k);
    return s * a;
  }
};

// Truncated formal power series in z: exactly order+1 coefficients
// c_0..c_order, all identities holding modulo z^{order+1}.  Binary
// operations require matching orders.
template <class R>
class Series {
 public:
  Series() : Series(0) {}

  explicit Series(std::size_t order)
      : order_(order), c_(order + 1, ring_ops<R>::zero()) {}

  Series(std::size_t order, std::vector<R> coeffs)
      : order_(order), c_(std::move(coeffs)) {
    if (c_.size() != order_ + 1)
      throw std::invalid_argument("Series: coefficient count must be order+1");
  }

  std::size_t order() const { return order_; }
  const std::vector<R>& coeffs() const { return c_; }

  const R& coeff(std::size_t j) const {
    if (j > order_) throw std::out_of_range("Series::coeff");
    return c_[j];
  }
  R& coeff(std::size_t j) {
    if (j > order_) throw std::out_of_range("Series::coeff");
    return c_[j];
  }

  friend bool operator==(const Series& s, const Series& t) {
    return s.order_ == t.order_ && s.c_ == t.c_;
  }

 private:
  std::size_t order_;
  std::vector<R> c_;
};

namespace detail {
template <class R>
void require_same_order(const Series<R>& s, const Series<R>& t, const char* op) {
  if (s.order() != t.order())
    throw std::invalid_argument(std::string(op) + ": order mismatch");
}
}  // namespace detail

template <class R>
Series<R> series_one(std::size_t order) {
  Series<R> s(order);
  s.coeff(0) = ring_ops<R>::one();
  return s;
}

template <class R>
Series<R> series_add(const Series<R>& s, const Series<R>& t) {
  detail::require_same_order(s, t, "series_add");
  Series<R> out(s.order());
  for (std::size_t j = 0; j <= s.order(); ++j) out.coeff(j) = s.coeff(j) + t.coeff(j);
  return out;
}

template <class R>
Series<R> series_sub(const Series<R>& s, const Series<R>& t) {
  detail::require_same_order(s, t, "series_sub");
  Series<R> out(s.order());
  for (std::size_t j = 0; j <= s.order(); ++j) out.coeff(j) = s.coeff(j) - t.coeff(j);
  return out;
}

// Truncated Cauchy product, one independent convolution per output
// coefficient; this is the hot loop of every generating-function build.
template <class R>
Series<R> series_mul(const Series<R>& s, const Series<R>& t) {
  detail::require_same_order(s, t, "series_mul");
  Series<R> out(s.order());
  par::parallel_for(
      s.order() + 1,
      [&](std::size_t n) {
        R acc = ring_ops<R>::zero();
        for (std::size_t k = 0; k <= n; ++k) acc += s.coeff(k) * t.coeff(n - k);
        out.coeff(n) = acc;
      },
      32);
  return out;
}

// Reference implementation of series_mul without the parallel dispatch.
template <class R>
Series<R> series_mul_serial(const Series<R>& s, const Series<R>& t) {
  detail::require_same_order(s, t, "series_mul");
  Series<R> out(s.order());
  for (std::size_t n = 0; n <= s.order(); ++n) {
    R acc = ring_ops<R>::zero();
    for (std::size_t k = 0; k <= n; ++k) acc += s.coeff(k) * t.coeff(n - k);
    out.coeff(n) = acc;
  }
  return out;
}

// Multiplicative inverse: t with s*t = 1 mod z^{order+1}, by the recursion
// t_n = -(1/c_0) * sum_{k=1..n} c_k t_{n-k}.
template <class R>
Series<R> series_recip(const Series<R>& s) {
  if (!ring_ops<R>::is_unit(s.coeff(0)))
    throw std::domain_error("series_recip: constant term is not invertible");
  const R u = ring_ops<R>::invert(s.coeff(0));
  Series<R> t(s.order());
  t.coeff(0) = u;
  for (std::size_t n = 1; n <= s.order(); ++n) {
    R acc = ring_ops<R>::zero();
    for (std::size_t k = 1; k <= n; ++k) acc += s.coeff(k) * t.coeff(n - k);
    t.coeff(n) = -(u * acc);
  }
  return t;
}

// exp(s) for series with zero constant term, via the recurrence
// (exp s)' = s' exp s; needs only ring operations and division by 1..order.
template <class R>
Series<R> series_exp(const Series<R>& s) {
  if (!ring_ops<R>::is_zero(s.coeff(0)))
    throw std::domain_error("series_exp: constant term must be zero");
  Series<R> y(s.order());
  y.coeff(0) = ring_ops<R>::one();
  for (std::size_t n = 1; n <= s.order(); ++n) {
    R acc = ring_ops<R>::zero();
    for (std::size_t k = 1; k <= n; ++k)
      acc += (ring_ops<R>::from_int(static_cast<long>(k)) * s.coeff(k)) * y.coeff(n - k);
    y.coeff(n) = ring_ops<R>::div_int(acc, static_cast<long>(n));
  }
  return y;
}

// log(s) for series with unit constant term 1, via s * (log s)' = s'.
template <class R>
Series<R> series_log(const Series<R>& s) {
  if (!(s.coeff(0) == ring_ops<R>::one()))
    throw std::domain_error("series_log: constant term must be one");
  Series<R> t(s.order());
  for (std::size_t n = 1; n <= s.order(); ++n) {
    R acc = ring_ops<R>::zero();
    for (std::size_t k = 1; k < n; ++k)
      acc += (ring_ops<R>::from_int(static_cast<long>(k)) * t.coeff(k)) * s.coeff(n - k);
    t.coeff(n) = s.coeff(n) - ring_ops<R>::div_int(acc, static_cast<long>(n));
  }
  return t;
}

// Coefficient-wise multiple by a ring element.
template <class R>
Series<R> series_scale(const Series<R>& s, const R& a) {
  Series<R> out(s.order());
  for (std::size_t j = 0; j <= s.order(); ++j) out.coeff(j) = a * s.coeff(j);
  return out;
}

// s^e = exp(e * log s); the exponent may be any ring element (a rational, a
// float, or a polynomial such as a linear form in x).
template <class R>
Series<R> series_pow(const Series<R>& s, const R& e) {
  return series_exp(series_scale(series_log(s), e));
}

// Integer power by square-and-multiply; negative exponents go through
// series_recip.  Cross-checks the exp/log route in tests.
template <class R>
Series<R> series_pow_int(const Series<R>& s, long e) {
  if (e < 0) return series_pow_int(series_recip(s), -e);
  Series<R> acc = series_one<R>(s.order());
  Series<R> base = s;
  unsigned long n = static_cast<unsigned long>(e);
  while (n) {
    if (n & 1) acc = series_mul(acc, base);
    n >>= 1;
    if (n) base = series_mul(base, base);
  }
  return acc;
}

// z -> lambda * z substitution: c_j -> c_j * lambda^j.
template <class R>
Series<R> series_scale_var(const Series<R>& s, const R& lambda) {
  Series<R> out(s.order());
  R p = ring_ops<R>::one();
  for (std::size_t j = 0; j <= s.order(); ++j) {
    out.coeff(j) = p * s.coeff(j);
    if (j < s.order()) p = p * lambda;
  }
  return out;
}

// z -> lambda * z with lambda^2 = lambda_sq, valid for even series (odd
// coefficients must vanish); keeps rational coefficients rational when
// lambda itself is a square root.
template <class R>
Series<R> series_scale_var_sq(const Series<R>& s, const R& lambda_sq) {
  Series<R> out(s.order());
  R p = ring_ops<R>::one();
  for (std::size_t j = 0; j <= s.order(); ++j) {
    if (j % 2 == 1) {
      if (!ring_ops<R>::is_zero(s.coeff(j)))
        throw std::domain_error("series_scale_var_sq: series has odd terms");
      continue;
    }
    out.coeff(j) = p * s.coeff(j);
    if (j + 2 <= s.order()) p = p * lambda_sq;
  }
  return out;
}

template <class R>
Series<R> series_derivative(const Series<R>& s) {
  if (s.order() == 0) return Series<R>(0);
  Series<R> out(s.order() - 1);
  for (std::size_t j = 0; j + 1 <= s.order(); ++j)
    out.coeff(j) = ring_ops<R>::from_int(static_cast<long>(j + 1)) * s.coeff(j + 1);
  return out;
}

template <class R>
Series<R> series_truncate(const Series<R>& s, std::size_t order) {
  if (order > s.order()) throw std::invalid_argument("series_truncate: order too large");
  Series<R> out(order);
  for (std::size_t j = 0; j <= order; ++j) out.coeff(j) = s.coeff(j);
  return out;
}

// Embeds a scalar series into the polynomial-coefficient ring.
template <class F>
Series<Poly<F>> series_lift(const Series<F>& s) {
  Series<Poly<F>> out(s.order());
  for (std::size_t j = 0; j <= s.order(); ++j)
    if (!field_traits<F>::is_zero(s.coeff(j))) out.coeff(j) = Poly<F>::constant(s.coeff(j));
  return out;
}

// Embeds a scalar series with every coefficient multiplied by p.
template <class F>
Series<Poly<F>> series_lift_times(const Series<F>& s, const Poly<F>& p) {
  Series<Poly<F>> out(s.order());
  for (std::size_t j = 0; j <= s.order(); ++j) out.coeff(j) = s.coeff(j) * p;
  return out;
}

template <class To, class From, class Fn>
Series<To> series_cast(const Series<From>& s, Fn&& convert) {
  Series<To> out(s.order());
  for (std::size_t j = 0; j <= s.order(); ++j) out.coeff(j) = convert(s.coeff(j));
  return out;
}

}  // namespace bior
