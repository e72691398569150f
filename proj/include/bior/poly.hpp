#pragma once

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bior/rational.hpp"

namespace bior {

// Dense univariate polynomial over a scalar field F.  Coefficients are
// indexed by power of x and trailing zeros are trimmed, so the zero
// polynomial is the empty list and a nonzero polynomial has a nonzero
// leading coefficient.
template <class F>
class Poly {
 public:
  Poly() = default;

  explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(const F& c) { return Poly(std::vector<F>{c}); }

  static Poly monomial(const F& c, std::size_t k) {
    std::vector<F> v(k + 1, field_traits<F>::zero());
    v[k] = c;
    return Poly(std::move(v));
  }

  // The identity polynomial x.
  static Poly identity() { return monomial(field_traits<F>::one(), 1); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<F>& coeffs() const { return c_; }

  F coeff(std::size_t k) const {
    return k < c_.size() ? c_[k] : field_traits<F>::zero();
  }

  F leading() const {
    if (c_.empty()) throw std::domain_error("Poly::leading: zero polynomial");
    return c_.back();
  }

  Poly operator-() const {
    Poly r(*this);
    for (F& a : r.c_) a = -a;
    return r;
  }

  friend Poly operator+(const Poly& p, const Poly& q) {
    std::vector<F> v(std::max(p.c_.size(), q.c_.size()), field_traits<F>::zero());
    for (std::size_t i = 0; i < p.c_.size(); ++i) v[i] = p.c_[i];
    for (std::size_t i = 0; i < q.c_.size(); ++i) v[i] += q.c_[i];
    return Poly(std::move(v));
  }

  friend Poly operator-(const Poly& p, const Poly& q) { return p + (-q); }

  friend Poly operator*(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) return Poly();
    std::vector<F> v(p.c_.size() + q.c_.size() - 1, field_traits<F>::zero());
    for (std::size_t i = 0; i < p.c_.size(); ++i)
      for (std::size_t j = 0; j < q.c_.size(); ++j) v[i + j] += p.c_[i] * q.c_[j];
    return Poly(std::move(v));
  }

  Poly& operator+=(const Poly& q) { return *this = *this + q; }
  Poly& operator-=(const Poly& q) { return *this = *this - q; }
  Poly& operator*=(const Poly& q) { return *this = *this * q; }

  // Scalar multiple.
  friend Poly operator*(const F& s, const Poly& p) {
    if (field_traits<F>::is_zero(s)) return Poly();
    std::vector<F> v = p.c_;
    for (F& a : v) a = s * a;
    return Poly(std::move(v));
  }

  friend bool operator==(const Poly& p, const Poly& q) { return p.c_ == q.c_; }

  // Horner evaluation.
  F operator()(const F& x) const {
    F acc = field_traits<F>::zero();
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<F> v(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k)
      v[k - 1] = field_traits<F>::from_int(static_cast<long>(k)) * c_[k];
    return Poly(std::move(v));
  }

  // Antiderivative with zero constant term.
  Poly antiderivative() const {
    if (c_.empty()) return Poly();
    std::vector<F> v(c_.size() + 1, field_traits<F>::zero());
    for (std::size_t k = 0; k < c_.size(); ++k)
      v[k + 1] = c_[k] / field_traits<F>::from_int(static_cast<long>(k + 1));
    return Poly(std::move(v));
  }

  // p(a*x + b) by Horner rebasing; O(deg^2) field operations.
  Poly affine(const F& a, const F& b) const {
    Poly r;
    for (std::size_t i = c_.size(); i-- > 0;) {
      r = r.mul_linear(a, b);
      r += constant(c_[i]);
    }
    return r;
  }

  Poly pow(unsigned e) const {
    Poly r = constant(field_traits<F>::one());
    for (unsigned i = 0; i < e; ++i) r *= *this;
    return r;
  }

  friend std::ostream& operator<<(std::ostream& os, const Poly& p) {
    os << "[";
    for (std::size_t i = 0; i < p.c_.size(); ++i) {
      if (i) os << ", ";
      os << p.c_[i];
    }
    return os << "]";
  }

 private:
  // this * (a*x + b)
  Poly mul_linear(const F& a, const F& b) const {
    if (c_.empty()) return Poly();
    std::vector<F> v(c_.size() + 1, field_traits<F>::zero());
    for (std::size_t i = 0; i < c_.size(); ++i) {
      v[i + 1] += a * c_[i];
      v[i] += b * c_[i];
    }
    return Poly(std::move(v));
  }

  void trim() {
    while (!c_.empty() && field_traits<F>::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<F> c_;
};

template <class To, class From, class Fn>
Poly<To> poly_cast(const Poly<From>& p, Fn&& convert) {
  std::vector<To> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.push_back(convert(c));
  return Poly<To>(std::move(v));
}

inline Poly<double> poly_to_double(const Poly<Rat>& p) {
  return poly_cast<double>(p, [](const Rat& c) { return to_double(c); });
}

// Max over the grid of |p(x) - q(x)|, evaluated exactly and converted to
// float at the end.
inline double sup_error_on_grid(const Poly<Rat>& p, const Poly<Rat>& q,
                                const std::vector<Rat>& grid) {
  if (grid.empty()) throw std::invalid_argument("sup_error_on_grid: empty grid");
  const Poly<Rat> d = p - q;
  double sup = 0.0;
  for (const Rat& x : grid) sup = std::max(sup, std::abs(to_double(d(x))));
  return sup;
}

inline double sup_error_on_grid(const Poly<double>& p, const Poly<double>& q,
                                const std::vector<double>& grid) {
  if (grid.empty()) throw std::invalid_argument("sup_error_on_grid: empty grid");
  double sup = 0.0;
  for (double x : grid) sup = std::max(sup, std::abs(p(x) - q(x)));
  return sup;
}

}  // namespace bior
