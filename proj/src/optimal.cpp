#include "mindswap/optimal.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mindswap {

SwapSequence g_product(const std::vector<int>& cycle, int w) {
  if (cycle.empty()) throw std::invalid_argument("cycle must be non-empty");
  std::vector<int> sorted = cycle;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("cycle entries must be distinct");
  for (int label : cycle)
    if (label == w)
      throw std::invalid_argument("label " + std::to_string(w) +
                                  " collides with a cycle entry");
  SwapSequence seq;
  seq.reserve(cycle.size());
  for (int label : cycle) seq.emplace_back(label, w);
  return seq;
}

UndoPlan optimal_undo(const Permutation& p) {
  if (p.is_identity())
    throw std::invalid_argument(
        "the identity permutation needs no undo plan");
  const int x = p.degree() + 1;
  const int y = p.degree() + 2;
  const CycleDecomposition dec = cycle_decompose(p);
  const std::vector<int>& first = dec.cycles.front();

  UndoPlan plan;
  plan.outsiders = {x, y};
  SwapSequence& seq = plan.sequence;
  seq.emplace_back(x, y);
  for (int i = dec.cycle_count() - 1; i >= 1; --i) {
    const SwapSequence g = g_product(dec.cycles[i], x);
    seq.insert(seq.end(), g.begin(), g.end());
  }
  seq.emplace_back(first.back(), x);
  const SwapSequence g1 = g_product(first, y);
  seq.insert(seq.end(), g1.begin(), g1.end());
  seq.emplace_back(first.front(), x);
  for (int i = 1; i < dec.cycle_count(); ++i)
    seq.emplace_back(dec.cycles[i].front(), y);

  if (!(compose(seq, y) * p.extended(y)).is_identity() || !all_distinct(seq))
    throw std::logic_error("undo construction failed its self-check");
  plan.verified = true;
  return plan;
}

int optimal_length(const Permutation& p) {
  if (p.is_identity())
    throw std::invalid_argument(
        "the identity permutation needs no undo plan");
  const CycleDecomposition dec = cycle_decompose(p);
  return dec.support_size() + dec.cycle_count() + 2;
}

}  // namespace mindswap
