#include "bior/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace bior {

Rat rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rat rat_parse(const std::string& text) {
  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = (s[0] == '-');
    s = s.substr(1);
  }
  auto fail = [&]() -> Rat {
    throw std::invalid_argument("rat_parse: cannot parse '" + text + "'");
  };

  Rat value;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return fail();
    mpz_class n(num), d(den);
    if (d == 0) return fail();
    value = Rat(n, d);
    value.canonicalize();
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if (ip.empty()) ip = "0";
    if (!all_digits(ip) || !all_digits(fp)) return fail();
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
    mpz_class n = mpz_class(ip) * scale + (fp.empty() ? mpz_class(0) : mpz_class(fp));
    value = Rat(n, scale);
    value.canonicalize();
  } else {
    if (!all_digits(s)) return fail();
    value = Rat(mpz_class(s));
  }
  return negative ? Rat(-value) : value;
}

std::string rat_str(const Rat& q) { return q.get_str(); }

double to_double(const Rat& q) { return q.get_d(); }

Rat rat_pow(const Rat& base, long exp) {
  if (exp == 0) return Rat(1);
  if (exp < 0) {
    if (sgn(base) == 0) throw std::domain_error("rat_pow: negative power of zero");
    return Rat(1) / rat_pow(base, -exp);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exp));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exp));
  return Rat(num, den);  // canonical: powers of coprime integers stay coprime
}

Rat factorial(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rat(f);
}

Rat binomial(unsigned long n, unsigned long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rat(b);
}

Rat pochhammer(const Rat& a, unsigned long n) {
  Rat p(1);
  for (unsigned long i = 1; i <= n; ++i) p *= a + Rat(static_cast<long>(i) - 1);
  return p;
}

std::optional<Rat> exact_sqrt(const Rat& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (sgn(q) == 0) return Rat(0);
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), q.get_den_mpz_t());
  return Rat(rn, rd);
}

}  // namespace bior
