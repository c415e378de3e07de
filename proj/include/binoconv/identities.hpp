#ifndef BINOCONV_IDENTITIES_HPP
#define BINOCONV_IDENTITIES_HPP

#include <vector>

#include "binoconv/binomial.hpp"
#include "binoconv/poly2.hpp"
#include "binoconv/report.hpp"

namespace binoconv {

// Self-convolution of the sequence C(a*n, n):
//   P_a(n) = sum_{i+j=n} C(a*i, i) * C(a*j, j).
// Rejects n < 0.
Int conv_p(const Int& a, const Int& n);

// The four equivalent forms of the shifted convolution, as polynomials in
// the symbolic parameters K and L.

// sum_{i+j=n} C(a*i + K - L, i) * C(a*j + L, j), fully expanded.
Poly2 t1_lhs(const Int& a, const Int& n);

// sum_{i+j=n} C(a*i + K, i) * C(a*j, j); L-degree 0 by construction.
Poly2 t1_mid(const Int& a, const Int& n);

// sum_{i=0}^n (a-1)^(n-i) * C(a*n + K + 1, i), with 0^0 = 1.
Poly2 t1_eq6(const Int& a, const Int& n);

// sum_{i=0}^n a^(n-i) * C((a-1)*n + K + i, i), with 0^0 = 1.
Poly2 t1_eq7(const Int& a, const Int& n);

// Alternating sum S_{a,L}(n) = sum_{i=0}^n (-1)^i C(L-(a-1)i, i) C(L-a*i, n-i).
Poly2 s_sum(const Int& a, const Int& n);

// Alternating multiset sum
//   sum_{i+j=n} (-1)^i ((L - a*i, i)) * C(L - a*i, j)
// where ((x, m)) is the multiset coefficient.
Poly2 t2_lhs(const Int& a, const Int& n);

// Checks t1_lhs = t1_mid = t1_eq6 = t1_eq7. Symbolic mode compares canonical
// polynomials and additionally asserts the L-degree of t1_lhs is 0; grid mode
// compares evaluations on the (n+1) x (n+1) grid {0..n}^2, which suffices
// because every form has degree <= n in each indeterminate.
IdentityReport theorem1_check(const Int& a, const Int& n, CheckMode mode);

// Checks sum_{p=0}^n C(n,p) * s_sum(a,p) = s_sum(a+1,n) with L := L + n.
IdentityReport lemma1_check(const Int& a, const Int& n);

// Checks s_sum(a, n) is the constant (a-1)^n (0^0 = 1).
IdentityReport lemma2_check(const Int& a, const Int& n);

// Checks t2_lhs(a, n) is the constant a*(a-1)^(n-1) for n >= 1; for n = 0 the
// closed form does not apply and the report only records that the sum is 1.
IdentityReport thm2_check(const Int& a, const Int& n);

// Checks conv_p(2,n) = 4^n = sum_{i<=n} C(2n+1, i) = sum_{i<=n} 2^(n-i) C(n+i, i).
IdentityReport eq3_eq4_check(const Int& n);

// For a in {3, 4} checks the displayed forms
//   conv_p(a,n) = sum_{i+j=n} (a-1)^i C(a*n+1, j) = sum_{i+j=n} a^i C((a-1)*n+j, j),
// evaluated independently of t1_eq6/t1_eq7 (those reverse the summation index).
IdentityReport a34_display_check(const Int& a, const Int& n);

// Value-level evaluation strategies for P_a(n) at a rational shift k.
enum class EvalForm { Naive, Eq6, Eq7 };

const char* to_string(EvalForm f);

// Single value of the chosen form at rational k. All forms agree, and agree
// with poly_eval of the corresponding symbolic form at K = k.
Rat seq_value(EvalForm f, const Int& a, const Int& n, const Rat& k);

// P_a(0..n_max) at k = 0 in one pass; integer-only fast path used by the
// sequence and benchmark front ends.
std::vector<Int> form_series(EvalForm f, const Int& a, long n_max);

}  // namespace binoconv

#endif
