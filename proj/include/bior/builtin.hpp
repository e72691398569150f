#pragma once

#include <string_view>

#include "bior/series.hpp"

namespace bior {

// Named exact series with rational coefficients:
//   exp_z              e^z
//   expm1_over_z       (e^z - 1)/z
//   half_plus_half_exp (e^z + 1)/2
//   sinc               sin(z)/z
//   cot_minus_inv      cot(z) - 1/z
//   log1m              log(1 - z)
enum class BuiltinSeries {
  exp_z,
  expm1_over_z,
  half_plus_half_exp,
  sinc,
  cot_minus_inv,
  log1m,
};

Series<Rat> builtin_series(BuiltinSeries which, std::size_t order);

// Lookup by the names above; throws std::invalid_argument on unknown names.
Series<Rat> builtin_series(std::string_view name, std::size_t order);

}  // namespace bior
