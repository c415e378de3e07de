#include "binoconv/binomial.hpp"

#include <stdexcept>

namespace binoconv {

Int factorial(const Int& m) {
  if (m < 0) throw std::domain_error("factorial: negative argument");
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(to_long(m, "factorial")));
  return r;
}

Int binom_int(const Int& n, const Int& m) {
  if (m < 0) return Int(0);
  const long mm = to_long(m, "binom_int lower index");
  Int res(1);
  for (long t = 0; t < mm; ++t) {
    // res * (n - t) is divisible by t + 1: both sides of
    // C(n,t) * (n-t) = C(n,t+1) * (t+1) are integral.
    Int factor = n - t;
    res *= factor;
    mpz_divexact_ui(res.get_mpz_t(), res.get_mpz_t(), static_cast<unsigned long>(t + 1));
  }
  return res;
}

Rat binom_rat(const Rat& x, const Int& m) {
  if (m < 0) return Rat(0);
  const long mm = to_long(m, "binom_rat lower index");
  Rat res(1);
  for (long t = 0; t < mm; ++t) {
    Rat factor = x - t;
    res *= factor;
  }
  return res * make_rat(Int(1), factorial(m));
}

Poly2 binom_poly(const Poly2& x, const Int& m) {
  if (m < 0) return Poly2();
  const long mm = to_long(m, "binom_poly lower index");
  Poly2 res(1L);
  for (long t = 0; t < mm; ++t) res *= x - Poly2(t);
  res *= make_rat(Int(1), factorial(m));
  return res;
}

Poly2 multichoose_poly(const Poly2& x, const Int& m) {
  if (m < 0) return Poly2();
  return binom_poly(x + Poly2(Int(m - 1)), m);
}

Rat poly_eval(const Poly2& p, const Rat& kval, const Rat& lval) { return p.eval(kval, lval); }

}  // namespace binoconv
