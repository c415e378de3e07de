#ifndef BINOCONV_ORACLES_HPP
#define BINOCONV_ORACLES_HPP

#include <optional>

#include "binoconv/numeric.hpp"
#include "binoconv/poly2.hpp"

namespace binoconv {

// Independent brute-force verifiers. These deliberately avoid binom_int /
// binom_poly so that agreement with the main evaluators is evidence rather
// than a tautology.

// Signed count over pairs (T, A) with T an i-subset of [l] and A an
// (n-i)-subset of [l] \ T, weighted (-1)^|T|, obtained by explicit
// enumeration. Equals s_sum(1, n) evaluated at L = l.
// Enumeration scale: requires 0 <= n <= l <= 14.
Int inclusion_exclusion_sum(long l, long n);

struct GridWitness {
  Rat kval, lval;
  Rat fval, gval;
};

struct GridVerdict {
  bool equal = true;
  std::optional<GridWitness> witness;  // first disagreeing grid point
};

// Pointwise equality of f and g on the grid {0..dk} x {0..dl}. When dk, dl
// bound the degrees of f - g in K and L, this is equivalent to f = g.
// Rejects negative bounds.
GridVerdict grid_equal(const Poly2& f, const Poly2& g, long dk, long dl);

// conv_p(a, n) recomputed through a structurally different binomial routine:
// Pascal-row construction (repeated additions only), with negative upper
// indices folded in by upper negation. Requires n >= 0 and |a|*n <= 10^4.
Int naive_reference(const Int& a, const Int& n);

}  // namespace binoconv

#endif
