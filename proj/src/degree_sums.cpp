#include "degbound/degree_sums.hpp"

#include <algorithm>

namespace degbound {

ExcludedSet ExcludedSet::of(std::vector<int> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return ExcludedSet{std::move(vs)};
}

bool ExcludedSet::contains(int w) const {
  return std::binary_search(vertices.begin(), vertices.end(), w);
}

namespace {

// Degrees of vertices outside a, sorted non-increasing. Ties between equal
// degrees are broken by vertex label via the stable sort; the degree sum is
// tie-independent either way.
std::vector<int> remaining_degrees_desc(const DegreeSequence& d, const ExcludedSet& a) {
  for (int w : a.vertices)
    if (w < 0 || w >= d.size()) fail(ErrorKind::invalid_input, "excluded vertex out of range");
  if (static_cast<int>(a.vertices.size()) >= d.size() && d.size() > 0)
    fail(ErrorKind::invalid_input, "excluded set must be a proper subset of the vertex set");
  std::vector<int> out;
  out.reserve(d.size() - a.vertices.size());
  for (int i = 0; i < d.size(); ++i)
    if (!a.contains(i)) out.push_back(d[i]);
  std::stable_sort(out.begin(), out.end(), std::greater<int>());
  return out;
}

}  // namespace

long long lazy_degree_sum(const DegreeSequence& d, const ExcludedSet& a, long long k) {
  std::vector<int> degs = remaining_degrees_desc(d, a);
  if (k < 0 || k > static_cast<long long>(degs.size()))
    fail(ErrorKind::range_error, "lazy degree sum index outside [0, n - |A|]");
  long long sum = 0;
  for (long long j = 0; j < k; ++j) sum += degs[j];
  return sum;
}

Rational degree_sum(const DegreeSequence& d, const ExcludedSet& a, const Rational& x) {
  if (x < 0) fail(ErrorKind::domain_error, "degree sum evaluated at a negative point");
  std::vector<int> degs = remaining_degrees_desc(d, a);
  const long long r = static_cast<long long>(degs.size());
  if (x >= static_cast<long>(r)) {
    long long sum = 0;
    for (int v : degs) sum += v;
    return Rational(static_cast<long>(sum));
  }
  const long long k = floor_to_ll(x);
  long long prefix = 0;
  for (long long j = 0; j < k; ++j) prefix += degs[j];
  return Rational(static_cast<long>(degs[k])) * (x - Rational(static_cast<long>(k))) +
         Rational(static_cast<long>(prefix));
}

Rational degree_sum(const DegreeSequence& d, const Rational& x) { return degree_sum(d, ExcludedSet{}, x); }

Rational alpha_value(const DegreeSequence& n_seq, const DegreeSequence& l_seq,
                     const DegreeSequence& g_seq, const DegreeSequence& h_seq, int w) {
  if (g_seq.size() != h_seq.size() || w < 0 || w >= g_seq.size())
    fail(ErrorKind::invalid_input, "alpha vertex outside the (g, h) vertex set");
  const long long t = std::max<long long>(g_seq[w] - h_seq[w], 1);
  DegreeSequence nl = add(n_seq, l_seq);
  Rational top = degree_sum(nl, Rational(static_cast<long>(t)));
  return top / Rational(static_cast<long>(t));
}

Rational gamma_value(const DegreeSequence& n_seq, const DegreeSequence& l_seq,
                     const DegreeSequence& g_seq, const DegreeSequence& h_seq) {
  if (g_seq.size() != h_seq.size() || g_seq.size() == 0)
    fail(ErrorKind::invalid_input, "gamma needs a non-empty (g, h) vertex set");
  int w_min = 0;
  for (int w = 1; w < g_seq.size(); ++w)
    if (g_seq[w] - h_seq[w] < g_seq[w_min] - h_seq[w_min]) w_min = w;
  return alpha_value(n_seq, l_seq, g_seq, h_seq, w_min);
}

TopSumTracker::TopSumTracker(const std::vector<int>& values, int max_value_hint) {
  int mx = max_value_hint;
  for (int v : values) mx = std::max(mx, v);
  max_value_ = mx;
  cnt_bit_.assign(max_value_ + 2, 0);
  sum_bit_.assign(max_value_ + 2, 0);
  for (int v : values) add(v);
}

void TopSumTracker::ensure_capacity(int value) {
  if (value <= max_value_) return;
  // Rebuild with a larger value range; per-value counts are recovered from the
  // Fenwick tree before reindexing. Growth only happens when a caller skipped
  // the max_value_hint, so this path stays cold.
  std::vector<long long> counts(max_value_ + 2, 0);
  for (int v = 0; v <= max_value_; ++v) {
    long long c = 0;
    int lo = max_value_ - v + 1;
    for (int p = lo; p > 0; p -= p & -p) c += cnt_bit_[p];
    for (int p = lo - 1; p > 0; p -= p & -p) c -= cnt_bit_[p];
    counts[v] = c;
  }
  const int old_max = max_value_;
  max_value_ = std::max(value, 2 * max_value_ + 1);
  cnt_bit_.assign(max_value_ + 2, 0);
  sum_bit_.assign(max_value_ + 2, 0);
  count_ = 0;
  total_ = 0;
  for (int v = 0; v <= old_max; ++v)
    for (long long i = 0; i < counts[v]; ++i) add(v);
}

void TopSumTracker::add(int value) {
  if (value < 0) fail(ErrorKind::negative_degree, "tracker values must be non-negative");
  ensure_capacity(value);
  const int size = max_value_ + 1;
  for (int p = max_value_ - value + 1; p <= size; p += p & -p) {
    cnt_bit_[p] += 1;
    sum_bit_[p] += value;
  }
  ++count_;
  total_ += value;
}

void TopSumTracker::remove(int value) {
  if (value < 0 || value > max_value_) fail(ErrorKind::invalid_input, "removing a value never added");
  const int size = max_value_ + 1;
  for (int p = max_value_ - value + 1; p <= size; p += p & -p) {
    cnt_bit_[p] -= 1;
    sum_bit_[p] -= value;
  }
  --count_;
  total_ -= value;
}

long long TopSumTracker::top_sum(long long k) const {
  if (k <= 0) return 0;
  if (k >= count_) return total_;
  const int size = max_value_ + 1;
  int high = 1;
  while ((high << 1) <= size) high <<= 1;
  long long remaining = k, sum = 0;
  int pos = 0;
  for (int step = high; step > 0; step >>= 1) {
    int next = pos + step;
    if (next <= size && cnt_bit_[next] < remaining) {
      remaining -= cnt_bit_[next];
      sum += sum_bit_[next];
      pos = next;
    }
  }
  // remaining elements all carry the value at position pos + 1
  sum += remaining * static_cast<long long>(max_value_ - pos);
  return sum;
}

int TopSumTracker::kth_value(long long k) const {
  if (k < 1 || k > count_) fail(ErrorKind::range_error, "order statistic outside the multiset");
  const int size = max_value_ + 1;
  int high = 1;
  while ((high << 1) <= size) high <<= 1;
  long long remaining = k;
  int pos = 0;
  for (int step = high; step > 0; step >>= 1) {
    int next = pos + step;
    if (next <= size && cnt_bit_[next] < remaining) {
      remaining -= cnt_bit_[next];
      pos = next;
    }
  }
  return max_value_ - pos;
}

Rational TopSumTracker::degree_sum_at(const Rational& x) const {
  if (x < 0) fail(ErrorKind::domain_error, "degree sum evaluated at a negative point");
  if (x >= static_cast<long>(count_)) return Rational(static_cast<long>(total_));
  const long long k = floor_to_ll(x);
  const long long prefix = top_sum(k);
  const long long next = kth_value(k + 1);
  return Rational(static_cast<long>(next)) * (x - Rational(static_cast<long>(k))) +
         Rational(static_cast<long>(prefix));
}

}  // namespace degbound
