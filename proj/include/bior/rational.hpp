#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdlib>
#include <optional>
#include <string>

namespace bior {

// Exact arbitrary-precision rational scalar.  mpq_class keeps results in
// lowest terms with a positive denominator as long as its inputs are
// canonical; every constructor in this project goes through rat() or
// rat_parse(), which canonicalize.
using Rat = mpq_class;
using Cplx = std::complex<double>;

Rat rat(long num, long den = 1);
Rat rat_parse(const std::string& text);  // accepts "p/q", "-3", "0.9375"
std::string rat_str(const Rat& q);       // "p" or "p/q"
double to_double(const Rat& q);

Rat rat_pow(const Rat& base, long exp);  // exp < 0 requires base != 0
Rat factorial(unsigned long n);
Rat binomial(unsigned long n, unsigned long k);
Rat pochhammer(const Rat& a, unsigned long n);  // rising factorial, (a)_0 = 1

// Engaged iff q is the square of a rational, in which case the non-negative
// root is returned.
std::optional<Rat> exact_sqrt(const Rat& q);

// Scalar fields usable as polynomial / series coefficients.
template <class F>
struct field_traits;

template <>
struct field_traits<Rat> {
  static constexpr bool exact = true;
  static Rat zero() { return Rat(0); }
  static Rat one() { return Rat(1); }
  static Rat from_int(long k) { return Rat(k); }
  static bool is_zero(const Rat& a) { return sgn(a) == 0; }
  static double abs_approx(const Rat& a) { return std::abs(a.get_d()); }
  static constexpr const char* name = "rational";
};

template <>
struct field_traits<double> {
  static constexpr bool exact = false;
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static double from_int(long k) { return static_cast<double>(k); }
  static bool is_zero(double a) { return a == 0.0; }
  static double abs_approx(double a) { return std::abs(a); }
  static constexpr const char* name = "real";
};

template <>
struct field_traits<Cplx> {
  static constexpr bool exact = false;
  static Cplx zero() { return {0.0, 0.0}; }
  static Cplx one() { return {1.0, 0.0}; }
  static Cplx from_int(long k) { return {static_cast<double>(k), 0.0}; }
  static bool is_zero(const Cplx& a) { return a == Cplx{0.0, 0.0}; }
  static double abs_approx(const Cplx& a) { return std::abs(a); }
  static constexpr const char* name = "complex";
};

}  // namespace bior
