#include "bior/builtin.hpp"

#include <stdexcept>
#include <string>

namespace bior {

Series<Rat> builtin_series(BuiltinSeries which, std::size_t order) {
  Series<Rat> s(order);
  switch (which) {
    case BuiltinSeries::exp_z:
      for (std::size_t j = 0; j <= order; ++j) s.coeff(j) = Rat(1) / factorial(j);
      break;
    case BuiltinSeries::expm1_over_z:
      for (std::size_t j = 0; j <= order; ++j) s.coeff(j) = Rat(1) / factorial(j + 1);
      break;
    case BuiltinSeries::half_plus_half_exp:
      s.coeff(0) = Rat(1);
      for (std::size_t j = 1; j <= order; ++j) s.coeff(j) = Rat(1, 2) / factorial(j);
      break;
    case BuiltinSeries::sinc:
      for (std::size_t j = 0; j <= order; j += 2) {
        Rat c = Rat(1) / factorial(j + 1);
        s.coeff(j) = (j / 2) % 2 ? Rat(-c) : c;
      }
      break;
    case BuiltinSeries::cot_minus_inv: {
      // (z cos z - sin z)/z^2 divided by sin(z)/z.
      Series<Rat> num(order);
      for (std::size_t j = 1; j <= order; j += 2) {
        const std::size_t i = (j + 1) / 2;  // numerator term z^{2i+1} shifted down by z^2
        Rat c = Rat(1) / factorial(2 * i) - Rat(1) / factorial(2 * i + 1);
        num.coeff(j) = i % 2 ? Rat(-c) : c;
      }
      s = series_mul(num, series_recip(builtin_series(BuiltinSeries::sinc, order)));
      break;
    }
    case BuiltinSeries::log1m:
      for (std::size_t j = 1; j <= order; ++j) s.coeff(j) = Rat(-1) / Rat(static_cast<long>(j));
      break;
  }
  return s;
}

Series<Rat> builtin_series(std::string_view name, std::size_t order) {
  if (name == "exp_z") return builtin_series(BuiltinSeries::exp_z, order);
  if (name == "expm1_over_z") return builtin_series(BuiltinSeries::expm1_over_z, order);
  if (name == "half_plus_half_exp")
    return builtin_series(BuiltinSeries::half_plus_half_exp, order);
  if (name == "sinc") return builtin_series(BuiltinSeries::sinc, order);
  if (name == "cot_minus_inv") return builtin_series(BuiltinSeries::cot_minus_inv, order);
  if (name == "log1m") return builtin_series(BuiltinSeries::log1m, order);
  throw std::invalid_argument("builtin_series: unknown name '" + std::string(name) + "'");
}

}  // namespace bior
