#include "binoconv/bijection.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "binoconv/binomial.hpp"

namespace binoconv {

FiniteSet::FiniteSet(long ground, std::vector<long> elements)
    : ground_(ground), elements_(std::move(elements)) {
  if (ground_ < 0) throw std::invalid_argument("FiniteSet: negative ground size");
  long prev = 0;
  for (long x : elements_) {
    if (x <= prev) throw std::invalid_argument("FiniteSet: elements must be strictly increasing and >= 1");
    if (x > ground_) throw std::invalid_argument("FiniteSet: element exceeds ground size");
    prev = x;
  }
}

bool FiniteSet::contains(long x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

std::string FiniteSet::str() const {
  std::string out = "{";
  for (size_t idx = 0; idx < elements_.size(); ++idx) {
    if (idx > 0) out += ",";
    out += std::to_string(elements_[idx]);
  }
  out += "} in [" + std::to_string(ground_) + "]";
  return out;
}

std::string SplitTriple::str() const {
  return "(i=" + std::to_string(i) + ", B=" + b.str() + ", C=" + c.str() + ")";
}

namespace {

void require_params(long s, long t, long j) {
  if (s < 1 || t < 1) throw std::invalid_argument("pivot/phi/psi: require s >= 1 and t >= 1");
  if (j < 0 || j > s) throw std::invalid_argument("pivot/phi/psi: require 0 <= j <= s");
}

}  // namespace

long pivot(const FiniteSet& a, long s, long t, long j) {
  require_params(s, t, j);
  if (a.ground() != s + t + 1) throw std::invalid_argument("pivot: A must be a subset of [s+t+1]");
  if (a.size() != j) throw std::invalid_argument("pivot: |A| must equal j");
  long seen = 0;
  for (long x = 1; x <= a.ground(); ++x) {
    if (a.contains(x)) continue;
    if (++seen == s - j + 1) return x;
  }
  // Unreachable: [s+t+1] holds s+t+1-j >= s-j+1 non-elements when t >= 1.
  throw std::logic_error("pivot: ran out of non-elements");
}

FiniteSet before(const FiniteSet& s, long p) {
  if (p < 1 || p > s.ground()) throw std::invalid_argument("before: p outside the ground set");
  if (s.contains(p)) throw std::invalid_argument("before: p must not belong to S");
  std::vector<long> kept;
  for (long x : s.elements())
    if (x < p) kept.push_back(x);
  return FiniteSet(p - 1, std::move(kept));
}

FiniteSet after(const FiniteSet& s, long p) {
  if (p < 1 || p > s.ground()) throw std::invalid_argument("after: p outside the ground set");
  if (s.contains(p)) throw std::invalid_argument("after: p must not belong to S");
  std::vector<long> shifted;
  for (long x : s.elements())
    if (x > p) shifted.push_back(x - p);
  return FiniteSet(s.ground() - p, std::move(shifted));
}

SplitTriple phi(const FiniteSet& a, long s, long t, long j) {
  const long p = pivot(a, s, t, j);
  long above = 0;
  for (long x : a.elements())
    if (x > p) ++above;
  // p = s - above + 1, so before() lands on [s-above] and after() on [t+above].
  return SplitTriple{above, before(a, p), after(a, p)};
}

FiniteSet psi(const SplitTriple& x, long s, long t, long j) {
  require_params(s, t, j);
  if (x.i < 0 || x.i > j) throw std::invalid_argument("psi: require 0 <= i <= j");
  if (x.b.ground() != s - x.i || x.b.size() != j - x.i)
    throw std::invalid_argument("psi: B must be a (j-i)-subset of [s-i]");
  if (x.c.ground() != t + x.i || x.c.size() != x.i)
    throw std::invalid_argument("psi: C must be an i-subset of [t+i]");
  const long p = s - x.i + 1;
  std::vector<long> elements = x.b.elements();
  for (long c : x.c.elements()) elements.push_back(c + p);
  return FiniteSet(s + t + 1, std::move(elements));
}

IdentityReport lemma3_count_check(const Int& s, const Int& t, const Int& j) {
  if (s < 1 || t < 1) throw std::invalid_argument("lemma3_count_check: require s, t >= 1");
  if (j < 0 || j > s) throw std::invalid_argument("lemma3_count_check: require 0 <= j <= s");
  IdentityReport rep;
  rep.id = IdentityId::Lemma3;
  rep.params = {{"s", s}, {"t", t}, {"j", j}};

  const Int lhs = binom_int(Int(s + t + 1), j);
  Int rhs(0);
  const long jj = to_long(j, "lemma3_count_check j");
  for (long i = 0; i <= jj; ++i) rhs += binom_int(Int(s - i), Int(s - j)) * binom_int(Int(t + i), Int(i));

  rep.holds = lhs == rhs;
  if (!rep.holds)
    rep.witness = Witness{"C(s+t+1, j) vs sum_i C(s-i, s-j) C(t+i, i)", to_string(lhs), to_string(rhs)};
  return rep;
}

void for_each_subset(long m, long card, const std::function<void(const FiniteSet&)>& fn) {
  if (m < 0 || card < 0 || card > m) return;
  std::vector<long> elems(static_cast<size_t>(card));
  for (long v = 0; v < card; ++v) elems[static_cast<size_t>(v)] = v + 1;
  while (true) {
    fn(FiniteSet(m, elems));
    long p = card - 1;
    while (p >= 0 && elems[static_cast<size_t>(p)] == m - card + p + 1) --p;
    if (p < 0) return;
    ++elems[static_cast<size_t>(p)];
    for (long q = p + 1; q < card; ++q) elems[static_cast<size_t>(q)] = elems[static_cast<size_t>(q - 1)] + 1;
  }
}

std::vector<SplitTriple> all_split_triples(long s, long t, long j) {
  require_params(s, t, j);
  std::vector<SplitTriple> out;
  for (long i = 0; i <= j; ++i) {
    std::vector<FiniteSet> bs;
    for_each_subset(s - i, j - i, [&](const FiniteSet& b) { bs.push_back(b); });
    for (const FiniteSet& b : bs)
      for_each_subset(t + i, i, [&](const FiniteSet& c) { out.push_back(SplitTriple{i, b, c}); });
  }
  return out;
}

std::vector<Int> partition_sizes(long s, long t, long j) {
  require_params(s, t, j);
  std::vector<Int> counts(static_cast<size_t>(j) + 1, Int(0));
  for_each_subset(s + t + 1, j, [&](const FiniteSet& a) {
    const SplitTriple x = phi(a, s, t, j);
    counts[static_cast<size_t>(x.i)] += 1;
  });
  return counts;
}

IdentityReport lemma3_bijection_check(long s, long t, long j) {
  require_params(s, t, j);
  IdentityReport rep;
  rep.id = IdentityId::Lemma3;
  rep.params = {{"s", Int(s)}, {"t", Int(t)}, {"j", Int(j)}};
  rep.holds = true;

  const auto fail = [&](const std::string& where, const std::string& lhs, const std::string& rhs) {
    rep.holds = false;
    rep.witness = Witness{where, lhs, rhs};
  };

  std::vector<Int> counts(static_cast<size_t>(j) + 1, Int(0));
  std::set<std::string> images;
  Int subsets(0);
  for_each_subset(s + t + 1, j, [&](const FiniteSet& a) {
    if (!rep.holds) return;
    const SplitTriple x = phi(a, s, t, j);
    const long p = pivot(a, s, t, j);
    long below = 0, above = 0;
    for (long e : a.elements()) (e < p ? below : above) += 1;
    if (below != j - x.i || above != x.i)
      return fail("pivot bookkeeping for A=" + a.str(),
                  std::to_string(below) + " below / " + std::to_string(above) + " above",
                  std::to_string(j - x.i) + " below / " + std::to_string(x.i) + " above");
    const FiniteSet back = psi(x, s, t, j);
    if (!(back == a)) return fail("psi(phi(A)) != A", back.str(), a.str());
    if (!images.insert(x.str()).second) return fail("duplicate image", x.str(), "distinct images");
    counts[static_cast<size_t>(x.i)] += 1;
    subsets += 1;
  });
  if (!rep.holds) return rep;

  for (long i = 0; i <= j; ++i) {
    const Int expected = binom_int(Int(s - i), Int(s - j)) * binom_int(Int(t + i), Int(i));
    if (counts[static_cast<size_t>(i)] != expected) {
      fail("image count at i=" + std::to_string(i), to_string(counts[static_cast<size_t>(i)]), to_string(expected));
      return rep;
    }
  }
  if (subsets != binom_int(Int(s + t + 1), Int(j))) {
    fail("total subsets", to_string(subsets), to_string(binom_int(Int(s + t + 1), Int(j))));
    return rep;
  }

  // Other direction: phi(psi(x)) = x for every valid triple.
  for (const SplitTriple& x : all_split_triples(s, t, j)) {
    const FiniteSet a = psi(x, s, t, j);
    const SplitTriple round = phi(a, s, t, j);
    if (!(round == x)) {
      fail("phi(psi(x)) != x", round.str(), x.str());
      return rep;
    }
  }

  rep.note = to_string(subsets) + " subsets round-tripped";
  return rep;
}

}  // namespace binoconv
