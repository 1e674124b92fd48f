#include "su3franel/exact_arith.hpp"

#include <stdexcept>

namespace su3franel {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer binomial(unsigned long n, long k) {
  if (k < 0 || static_cast<unsigned long>(k) > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
  return r;
}

Integer franel(unsigned long n) {
  Integer sum = 0;
  Integer c = 1;  // C(n, k), updated by exact division
  for (unsigned long k = 0;; ++k) {
    sum += c * c * c;
    if (k == n) break;
    c *= n - k;
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), k + 1);
  }
  return sum;
}

}  // namespace su3franel
