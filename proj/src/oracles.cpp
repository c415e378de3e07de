#include "binoconv/oracles.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace binoconv {

namespace {

// Walks every card-subset of {0..m-1} in lexicographic order.
template <typename Fn>
void for_each_combination(long m, long card, Fn&& fn) {
  if (card < 0 || card > m) return;
  std::vector<long> idx(static_cast<size_t>(card));
  for (long v = 0; v < card; ++v) idx[static_cast<size_t>(v)] = v;
  while (true) {
    fn(idx);
    long p = card - 1;
    while (p >= 0 && idx[static_cast<size_t>(p)] == m - card + p) --p;
    if (p < 0) return;
    ++idx[static_cast<size_t>(p)];
    for (long q = p + 1; q < card; ++q) idx[static_cast<size_t>(q)] = idx[static_cast<size_t>(q - 1)] + 1;
  }
}

}  // namespace

Int inclusion_exclusion_sum(long l, long n) {
  if (n < 0 || l < n || l > 14)
    throw std::domain_error("inclusion_exclusion_sum: requires 0 <= n <= l <= 14");
  Int total(0);
  for (long i = 0; i <= n; ++i) {
    Int pairs(0);
    for_each_combination(l, i, [&](const std::vector<long>&) {
      // The complement of T has l - i elements; enumerate its (n-i)-subsets A.
      for_each_combination(l - i, n - i, [&](const std::vector<long>&) { pairs += 1; });
    });
    if (i % 2 == 0)
      total += pairs;
    else
      total -= pairs;
  }
  return total;
}

GridVerdict grid_equal(const Poly2& f, const Poly2& g, long dk, long dl) {
  if (dk < 0 || dl < 0) throw std::domain_error("grid_equal: negative degree bound");
  for (long kv = 0; kv <= dk; ++kv)
    for (long lv = 0; lv <= dl; ++lv) {
      Rat fv = f.eval(Rat(kv), Rat(lv));
      Rat gv = g.eval(Rat(kv), Rat(lv));
      if (fv != gv) return {false, GridWitness{Rat(kv), Rat(lv), fv, gv}};
    }
  return {};
}

namespace {

// One pass over Pascal's triangle rows 0..max_row, answering C(row, col)
// queries as each row is materialized.
class PascalRows {
 public:
  void request(long row, long col, size_t slot) { queries_[row].push_back({col, slot}); }

  void run(std::vector<Int>& answers) const {
    if (queries_.empty()) return;
    const long max_row = queries_.rbegin()->first;
    std::vector<Int> row;
    row.reserve(static_cast<size_t>(max_row) + 1);
    row.push_back(1);
    for (long r = 0; r <= max_row; ++r) {
      if (r > 0) {
        row.push_back(1);
        for (long c = r - 1; c >= 1; --c) row[static_cast<size_t>(c)] += row[static_cast<size_t>(c - 1)];
      }
      const auto it = queries_.find(r);
      if (it == queries_.end()) continue;
      for (const auto& [col, slot] : it->second)
        answers[slot] = (col < 0 || col > r) ? Int(0) : row[static_cast<size_t>(col)];
    }
  }

 private:
  std::map<long, std::vector<std::pair<long, size_t>>> queries_;
};

}  // namespace

Int naive_reference(const Int& a, const Int& n) {
  if (n < 0) throw std::domain_error("naive_reference: n must be >= 0");
  const long nn = to_long(n, "naive_reference n");
  Int scale = a * n;
  if (abs(scale) > 10000) throw std::domain_error("naive_reference: |a|*n exceeds 10^4");

  // c[i] = C(a*i, i), served entirely from Pascal rows. Negative upper
  // indices use C(x, m) = (-1)^m C(m - x - 1, m).
  std::vector<Int> c(static_cast<size_t>(nn) + 1);
  std::vector<char> negate(static_cast<size_t>(nn) + 1, 0);
  PascalRows rows;
  for (long i = 0; i <= nn; ++i) {
    const long x = to_long(Int(a * i), "naive_reference upper index");
    if (x >= 0) {
      rows.request(x, i, static_cast<size_t>(i));
    } else {
      rows.request(i - x - 1, i, static_cast<size_t>(i));
      negate[static_cast<size_t>(i)] = (i % 2 != 0) ? 1 : 0;
    }
  }
  rows.run(c);
  for (long i = 0; i <= nn; ++i)
    if (negate[static_cast<size_t>(i)]) c[static_cast<size_t>(i)] = -c[static_cast<size_t>(i)];

  Int total(0);
  for (long i = 0; i <= nn; ++i) total += c[static_cast<size_t>(i)] * c[static_cast<size_t>(nn - i)];
  return total;
}

}  // namespace binoconv
