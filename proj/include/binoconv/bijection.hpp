#ifndef BINOCONV_BIJECTION_HPP
#define BINOCONV_BIJECTION_HPP

#include <functional>
#include <string>
#include <vector>

#include "binoconv/numeric.hpp"
#include "binoconv/report.hpp"

namespace binoconv {

// Subset of the ground set [1..m], kept strictly sorted. The ground size is
// part of the value, so "subset of [s-i]" and "subset of [t+i]" differ even
// when the elements coincide.
class FiniteSet {
 public:
  FiniteSet(long ground, std::vector<long> elements);
  static FiniteSet empty(long ground) { return FiniteSet(ground, {}); }

  long ground() const { return ground_; }
  const std::vector<long>& elements() const { return elements_; }
  long size() const { return static_cast<long>(elements_.size()); }
  bool contains(long x) const;

  friend bool operator==(const FiniteSet&, const FiniteSet&) = default;

  std::string str() const;  // "{1,4} in [5]"

 private:
  long ground_;
  std::vector<long> elements_;
};

// Codomain element of the subset split: i together with B over [s-i] of
// cardinality j-i and C over [t+i] of cardinality i.
struct SplitTriple {
  long i;
  FiniteSet b;
  FiniteSet c;

  friend bool operator==(const SplitTriple&, const SplitTriple&) = default;
  std::string str() const;
};

// The (s-j+1)-th smallest element of [s+t+1] not in A. Requires s, t >= 1,
// |A| = j and 0 <= j <= s; then exactly s-j non-elements of A lie below the
// returned pivot p, and p = s - i + 1 where i = #{x in A : x > p}.
long pivot(const FiniteSet& a, long s, long t, long j);

// Elements of S strictly below p, re-grounded on [p-1]. Requires p in the
// ground set and p not in S.
FiniteSet before(const FiniteSet& s, long p);

// { x - p : x in S, x > p }, grounded on [m-p] for S over [m]. Same
// preconditions as before().
FiniteSet after(const FiniteSet& s, long p);

// Splits A at its pivot: phi(A) = (i, before(A, p), after(A, p)).
SplitTriple phi(const FiniteSet& a, long s, long t, long j);

// Inverse of phi. Reconstructs the pivot as p = s - i + 1 and returns
// B union { c + p : c in C } over [s+t+1]. Rejects triples whose ground
// sizes or cardinalities are inconsistent with (s, t, j).
FiniteSet psi(const SplitTriple& x, long s, long t, long j);

// Exact counting identity C(s+t+1, j) = sum_{i=0}^j C(s-i, s-j) * C(t+i, i).
IdentityReport lemma3_count_check(const Int& s, const Int& t, const Int& j);

// Exhaustive check for one (s, t, j): every subset round-trips through
// phi/psi, images are pairwise distinct, the per-i image counts match
// C(s-i, s-j) * C(t+i, i), and every valid triple is hit by phi(psi(.)).
IdentityReport lemma3_bijection_check(long s, long t, long j);

// Per-i image sizes |{A : phi(A) has first component i}| for i = 0..j.
std::vector<Int> partition_sizes(long s, long t, long j);

// Enumerates every card-subset of [1..m] in lexicographic order.
void for_each_subset(long m, long card, const std::function<void(const FiniteSet&)>& fn);

// Every valid SplitTriple for (s, t, j), i ascending, lexicographic within.
std::vector<SplitTriple> all_split_triples(long s, long t, long j);

}  // namespace binoconv

#endif
