#ifndef BINOCONV_BINOMIAL_HPP
#define BINOCONV_BINOMIAL_HPP

#include "binoconv/numeric.hpp"
#include "binoconv/poly2.hpp"

namespace binoconv {

// m! for m >= 0.
Int factorial(const Int& m);

// Generalized binomial coefficient C(n, m) = n(n-1)...(n-m+1) / m! for any
// integer n (negative upper index included); 0 when m < 0.
Int binom_int(const Int& n, const Int& m);

// Generalized binomial at a rational upper index; 0 when m < 0.
Rat binom_rat(const Rat& x, const Int& m);

// Generalized binomial with a polynomial upper index:
// (1/m!) * prod_{t=0}^{m-1} (x - t); the zero polynomial when m < 0.
Poly2 binom_poly(const Poly2& x, const Int& m);

// Multiset coefficient ((x, m)) = C(x + m - 1, m); zero polynomial for m < 0.
Poly2 multichoose_poly(const Poly2& x, const Int& m);

// Exact substitution K := kval, L := lval.
Rat poly_eval(const Poly2& p, const Rat& kval, const Rat& lval);

}  // namespace binoconv

#endif
