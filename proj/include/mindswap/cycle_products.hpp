#ifndef MINDSWAP_CYCLE_PRODUCTS_HPP
#define MINDSWAP_CYCLE_PRODUCTS_HPP

#include "mindswap/perm.hpp"

namespace mindswap {

// (12)(23)...(n-1,n): adjacent swaps, composing to (12...n).
SwapSequence build_p1(int n);

// (n-1,n)...(2n)(1n): star swaps through n, composing to (12...n).
SwapSequence build_p2(int n);

// build_p2(n) followed by the identity written over all pairs of {1..n-1};
// uses every transposition on n labels and composes to (12...n). Defined
// for n >= 5 with n = 1 or 2 (mod 4).
SwapSequence build_p3(int n);

// Minimal-outsider undo of build_p1(n): no outsiders for n >= 5, one for
// n = 3 and 4, two for n = 2. n + 1 factors for n >= 3, five for n = 2.
UndoPlan undo_p1(int n);

// One-outsider undo of build_p2(n) with n + 1 factors (n >= 3); the n = 2
// case needs two outsiders and coincides with undo_p1(2).
UndoPlan undo_p2(int n);

}  // namespace mindswap

#endif  // MINDSWAP_CYCLE_PRODUCTS_HPP
