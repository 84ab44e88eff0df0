#include "mindswap/keeler.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mindswap {

SwapSequence keeler_cycle_sigma(const std::vector<int>& cycle, int x, int y) {
  const int k = static_cast<int>(cycle.size());
  if (k < 2) throw std::invalid_argument("cycle must have length >= 2");
  std::vector<int> sorted = cycle;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("cycle entries must be distinct");
  if (x == y) throw std::invalid_argument("outsiders must be distinct");
  for (int label : cycle) {
    if (label == x || label == y)
      throw std::invalid_argument("outsider " + std::to_string(label) +
                                  " collides with a cycle entry");
  }
  SwapSequence seq;
  seq.reserve(k + 2);
  for (int i = 0; i + 1 < k; ++i) seq.emplace_back(x, cycle[i]);
  seq.emplace_back(y, cycle[k - 1]);
  seq.emplace_back(x, cycle[k - 1]);
  seq.emplace_back(y, cycle[0]);
  return seq;
}

UndoPlan keeler_undo(const Permutation& p) {
  if (p.is_identity())
    throw std::invalid_argument(
        "the identity permutation needs no undo plan");
  const int x = p.degree() + 1;
  const int y = p.degree() + 2;
  const CycleDecomposition dec = cycle_decompose(p);

  UndoPlan plan;
  plan.outsiders = {x, y};
  if (dec.cycle_count() % 2 == 1) plan.sequence.emplace_back(x, y);
  for (int i = dec.cycle_count() - 1; i >= 0; --i) {
    const SwapSequence sigma = keeler_cycle_sigma(dec.cycles[i], x, y);
    plan.sequence.insert(plan.sequence.end(), sigma.begin(), sigma.end());
  }

  if (!(compose(plan.sequence, y) * p.extended(y)).is_identity() ||
      !all_distinct(plan.sequence))
    throw std::logic_error("keeler construction failed its self-check");
  plan.verified = true;
  return plan;
}

}  // namespace mindswap
