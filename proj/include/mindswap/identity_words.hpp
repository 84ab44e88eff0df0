#ifndef MINDSWAP_IDENTITY_WORDS_HPP
#define MINDSWAP_IDENTITY_WORDS_HPP

#include <cstddef>

#include "mindswap/perm.hpp"

namespace mindswap {

// The identity written as a product of m pairwise-distinct transpositions.
struct IdentityWord {
  SwapSequence word;
  int m = 0;  // factor count, even
  int n = 0;  // universe the word is allowed to use
};

// m even and 6 <= m <= C(n, 2). These conditions are also necessary.
bool feasible(int m, int n);

// Replace the factor (ab) at index by (ac)(ab)(bc). The permutation is
// unchanged, the factor count grows by two and distinctness is preserved.
SwapSequence f_expand(const SwapSequence& word, std::size_t index, int c);

// Build a verified identity word by repeated f-expansion from the six-factor
// base word. The word depends only on m: it is generated inside the smallest
// universe n' with C(n', 2) >= m, so labels never exceed n'.
IdentityWord identity_word(int m, int n);

}  // namespace mindswap

#endif  // MINDSWAP_IDENTITY_WORDS_HPP
