#ifndef MINDSWAP_KEELER_HPP
#define MINDSWAP_KEELER_HPP

#include "mindswap/perm.hpp"

namespace mindswap {

// (x a1)(x a2)...(x a_{k-1}) (y ak)(x ak)(y a1): the k+2 factors whose
// product with the cycle (a1 ... ak) is the single swap (x y).
SwapSequence keeler_cycle_sigma(const std::vector<int>& cycle, int x, int y);

// Keeler's two-outsider undo: outsiders x = degree + 1 and y = degree + 2,
// support + 2r factors (one more when r is odd), each touching an outsider.
// Throws std::invalid_argument for the identity.
UndoPlan keeler_undo(const Permutation& p);

}  // namespace mindswap

#endif  // MINDSWAP_KEELER_HPP
