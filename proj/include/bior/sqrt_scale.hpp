#pragma once

#include "bior/poly.hpp"

namespace bior {

// A polynomial of the form A(x) + sqrt(r) B(x) with A, B rational and r a
// positive rational.  This is what the limit normalizations
// prefactor^m * p(scale*x + shift) produce when scale^2 and prefactor^2 are
// rational: splitting coefficients by parity leaves at most one loose
// square root.
struct SqrtScaledPoly {
  Poly<Rat> rational_part;
  Poly<Rat> root_part;
  Rat root_sq{1};

  bool root_free() const { return root_part.is_zero(); }
  double eval(const Rat& x) const;
  // |value(x) - target(x)| in double, with the rational difference taken
  // exactly first so exact coincidences report exactly zero.
  double error_vs(const Poly<Rat>& target, const Rat& x) const;
};

// prefactor^m * p(scale*x + shift), where scale = scale_sign*sqrt(scale_sq)
// and prefactor = prefactor_sign*sqrt(prefactor_sq).  Requires
// scale_sq * prefactor_sq to be a perfect rational square, which holds for
// every normalization used here.
SqrtScaledPoly sqrt_normalized_affine(const Poly<Rat>& p, std::size_t m,
                                      const Rat& scale_sq, int scale_sign,
                                      const Rat& shift, const Rat& prefactor_sq,
                                      int prefactor_sign);

}  // namespace bior
