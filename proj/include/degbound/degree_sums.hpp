#pragma once

#include <vector>

#include "degbound/graphs.hpp"
#include "degbound/rational.hpp"

namespace degbound {

// Vertices excluded from a degree sum. Must be a proper subset of the vertex
// set it is applied to.
struct ExcludedSet {
  std::vector<int> vertices;  // sorted, unique
  static ExcludedSet of(std::vector<int> vs);
  bool contains(int w) const;
};

// Sum of the k largest degrees among vertices outside a. Defined for
// 0 <= k <= n - |a|; throws Error{range_error} outside that range.
long long lazy_degree_sum(const DegreeSequence& d, const ExcludedSet& a, long long k);

// Piecewise-linear extension of the lazy degree sum: linear between integer
// points, constant once every remaining vertex is counted. Defined here for
// x >= 0 only; x < 0 throws Error{domain_error}.
Rational degree_sum(const DegreeSequence& d, const ExcludedSet& a, const Rational& x);
Rational degree_sum(const DegreeSequence& d, const Rational& x);

// Average of the max{g_w - h_w, 1} largest entries of n_seq + l_seq. The two
// sequence pairs may live on different vertex sets; w indexes the (g, h) pair.
Rational alpha_value(const DegreeSequence& n_seq, const DegreeSequence& l_seq,
                     const DegreeSequence& g_seq, const DegreeSequence& h_seq, int w);

// alpha at a vertex minimizing g_w - h_w; a uniform upper bound on alpha over
// all vertices, itself at most the maximum entry of n_seq + l_seq.
Rational gamma_value(const DegreeSequence& n_seq, const DegreeSequence& l_seq,
                     const DegreeSequence& g_seq, const DegreeSequence& h_seq);

// Multiset of degree values supporting O(log max_value) "sum of the k largest"
// queries and single-element updates. Backs the incremental evaluation of
// bound chains, where the residual and conditioning sequences change by +-1 at
// two vertices per step.
class TopSumTracker {
 public:
  TopSumTracker() = default;
  explicit TopSumTracker(const std::vector<int>& values, int max_value_hint = 0);

  void add(int value);
  void remove(int value);
  void shift(int old_value, int new_value) {
    remove(old_value);
    add(new_value);
  }

  long long element_count() const { return count_; }
  long long total() const { return total_; }
  // Sum of the min(k, count) largest values.
  long long top_sum(long long k) const;
  // k-th largest value, 1-based; k must be in [1, count].
  int kth_value(long long k) const;
  // The piecewise-linear degree sum of this multiset at x >= 0.
  Rational degree_sum_at(const Rational& x) const;
  long long degree_sum_at_integer(long long k) const { return top_sum(k); }

 private:
  void ensure_capacity(int value);
  // Fenwick trees indexed by descending value: position p covers value
  // max_value_ - p + 1, so a prefix over positions is a suffix over values.
  std::vector<long long> cnt_bit_, sum_bit_;
  int max_value_ = -1;
  long long count_ = 0;
  long long total_ = 0;
};

}  // namespace degbound
