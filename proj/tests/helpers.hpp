#ifndef MINDSWAP_TESTS_HELPERS_HPP
#define MINDSWAP_TESTS_HELPERS_HPP

#include "mindswap/perm.hpp"

namespace mindswap::test {

// One concrete factorization of p: each cycle written as adjacent swaps.
inline SwapSequence factorization_of(const Permutation& p) {
  SwapSequence seq;
  for (const auto& cycle : cycle_decompose(p).cycles) {
    const SwapSequence part = cycle_to_sequence(cycle);
    seq.insert(seq.end(), part.begin(), part.end());
  }
  return seq;
}

}  // namespace mindswap::test

#endif  // MINDSWAP_TESTS_HELPERS_HPP
