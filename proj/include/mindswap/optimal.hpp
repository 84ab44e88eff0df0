#ifndef MINDSWAP_OPTIMAL_HPP
#define MINDSWAP_OPTIMAL_HPP

#include "mindswap/perm.hpp"

namespace mindswap {

// (a1 w)(a2 w)...(ak w), one factor per cycle entry.
SwapSequence g_product(const std::vector<int>& cycle, int w);

// Two-outsider undo with exactly support + r + 2 factors, each touching an
// outsider (x = degree + 1, y = degree + 2). This is the smallest factor
// count any such undo can have. Throws std::invalid_argument for the
// identity.
UndoPlan optimal_undo(const Permutation& p);

// support + r + 2 for a nontrivial p with r nontrivial cycles.
int optimal_length(const Permutation& p);

}  // namespace mindswap

#endif  // MINDSWAP_OPTIMAL_HPP
