#ifndef MINDSWAP_ORACLE_HPP
#define MINDSWAP_ORACLE_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "mindswap/perm.hpp"

namespace mindswap {

class BudgetExceededError : public std::runtime_error {
 public:
  explicit BudgetExceededError(long long nodes);
  long long nodes() const { return nodes_; }

 private:
  long long nodes_;
};

struct SearchSpec {
  Permutation target;                  // permutation to undo
  std::vector<Transposition> allowed;  // candidate factors, each usable once
  int max_length = 0;
  int universe_size = 0;  // 0: inferred from target and allowed labels
  long long node_budget = 100'000'000;
  bool parity_prune = true;
  bool distance_prune = true;
};

struct SearchOutcome {
  std::optional<UndoPlan> plan;  // shortest witness; empty = none within bound
  long long nodes_visited = 0;
};

// Iterative-deepening exhaustive search for a shortest product of pairwise
// distinct allowed factors composing to target^-1. Factors are tried in
// canonical (lo, hi) order, so the first witness at the minimal depth is
// returned and results are deterministic. Witness outsiders are the labels
// above target's degree. Throws BudgetExceededError rather than truncating.
SearchOutcome min_undo_search(const SearchSpec& spec);

struct EnumerateOptions {
  long long node_budget = 100'000'000;
  bool parity_prune = true;
  bool distance_prune = true;
};

// All ordered products of exactly `length` pairwise-distinct allowed factors
// equal to target, in search order.
std::vector<SwapSequence> enumerate_products(
    const Permutation& target, const std::vector<Transposition>& allowed,
    int length, int universe_size, const EnumerateOptions& opts = {});

// All length-(k-1) distinct-transposition factorizations of the k-cycle,
// 2 <= k <= 6, drawing factors from every pair of {1..universe_size}.
// universe_size = 0 uses the cycle's largest label.
std::vector<SwapSequence> enumerate_min_factorizations(
    const std::vector<int>& cycle, int universe_size = 0);

struct OutsiderSearch {
  int outsiders = 0;
  UndoPlan plan;
  long long nodes_visited = 0;
};

// Smallest j in {0, 1, 2} such that some product over {1..universe+j},
// factor-disjoint from the scramble, undoes it; with a shortest witness for
// that j. Two outsiders always suffice. universe_size = 0 uses the largest
// label in the scramble.
OutsiderSearch min_outsiders(const SwapSequence& scramble,
                             int universe_size = 0,
                             long long node_budget = 100'000'000);

// Every pair (i, j), 1 <= i < j <= n, in lexicographic order.
std::vector<Transposition> all_transpositions(int n);

// All n! permutations of {1..n} in lexicographic image order.
std::vector<Permutation> all_permutations(int n);

}  // namespace mindswap

#endif  // MINDSWAP_ORACLE_HPP
