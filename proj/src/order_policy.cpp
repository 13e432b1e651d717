#include <algorithm>
#include <numeric>
#include <random>

#include "degbound/bounds_types.hpp"

namespace degbound {

std::vector<std::vector<int>> expand_edge_orders(int k, const EdgeOrder& order) {
  std::vector<int> identity(k);
  std::iota(identity.begin(), identity.end(), 0);
  if (order.policy == EdgeOrder::Policy::explicit_order) {
    std::vector<int> perm = order.permutation;
    std::vector<int> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != identity) fail(ErrorKind::invalid_input, "explicit order is not a permutation of the edges");
    return {perm};
  }
  if (order.policy == EdgeOrder::Policy::given || k <= 1) return {identity};
  std::mt19937_64 rng(order.seed);
  const int count = order.policy == EdgeOrder::Policy::random ? 1 : std::max(order.candidates, 1);
  std::vector<std::vector<int>> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    std::vector<int> perm = identity;
    std::shuffle(perm.begin(), perm.end(), rng);
    out.push_back(std::move(perm));
  }
  return out;
}

}  // namespace degbound
