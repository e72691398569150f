#include "bior/sqrt_scale.hpp"

#include <cmath>
#include <stdexcept>

namespace bior {

double SqrtScaledPoly::eval(const Rat& x) const {
  double v = to_double(rational_part(x));
  if (!root_part.is_zero())
    v += std::sqrt(to_double(root_sq)) * to_double(root_part(x));
  return v;
}

double SqrtScaledPoly::error_vs(const Poly<Rat>& target, const Rat& x) const {
  double v = to_double(Rat(rational_part(x) - target(x)));
  if (!root_part.is_zero())
    v += std::sqrt(to_double(root_sq)) * to_double(root_part(x));
  return std::abs(v);
}

SqrtScaledPoly sqrt_normalized_affine(const Poly<Rat>& p, std::size_t m,
                                      const Rat& scale_sq, int scale_sign,
                                      const Rat& shift, const Rat& prefactor_sq,
                                      int prefactor_sign) {
  if (sgn(scale_sq) <= 0 || sgn(prefactor_sq) <= 0)
    throw std::invalid_argument("sqrt_normalized_affine: squares must be positive");
  const auto cross = exact_sqrt(Rat(scale_sq * prefactor_sq));
  if (!cross)
    throw std::invalid_argument(
        "sqrt_normalized_affine: scale_sq * prefactor_sq must be a perfect square");

  const Poly<Rat> shifted = p.affine(Rat(1), shift);
  const long mm = static_cast<long>(m);

  SqrtScaledPoly out;
  out.root_sq = (m % 2 == 0) ? scale_sq : prefactor_sq;
  std::vector<Rat> rational(static_cast<std::size_t>(shifted.degree() + 1), Rat(0));
  std::vector<Rat> rooted = rational;
  for (long j = 0; j <= shifted.degree(); ++j) {
    Rat c = shifted.coeff(static_cast<std::size_t>(j));
    if (scale_sign < 0 && j % 2 == 1) c = -c;
    if (prefactor_sign < 0 && m % 2 == 1) c = -c;
    // c * sqrt(scale_sq)^j * sqrt(prefactor_sq)^m
    if ((j + mm) % 2 == 0) {
      // Both roots pair up: sqrt(S)^j sqrt(T)^m = S^{(j-r)/2} T^{(m-r)/2} (ST)^{r/2}
      // with r = j%2 = m%2.
      const long r = j % 2;
      Rat v = c * rat_pow(scale_sq, (j - r) / 2) * rat_pow(prefactor_sq, (mm - r) / 2);
      if (r) v *= *cross;
      rational[static_cast<std::size_t>(j)] = v;
    } else if (j % 2 == 1) {
      // Loose sqrt(scale_sq); here m is even.
      rooted[static_cast<std::size_t>(j)] =
          c * rat_pow(scale_sq, (j - 1) / 2) * rat_pow(prefactor_sq, mm / 2);
    } else {
      // Loose sqrt(prefactor_sq); here m is odd.
      rooted[static_cast<std::size_t>(j)] =
          c * rat_pow(scale_sq, j / 2) * rat_pow(prefactor_sq, (mm - 1) / 2);
    }
  }
  out.rational_part = Poly<Rat>(std::move(rational));
  out.root_part = Poly<Rat>(std::move(rooted));
  return out;
}

}  // namespace bior
