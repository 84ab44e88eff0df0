#ifndef MINDSWAP_FACTOR_GRAPH_HPP
#define MINDSWAP_FACTOR_GRAPH_HPP

#include <optional>
#include <utility>
#include <vector>

#include "mindswap/perm.hpp"

namespace mindswap {

// Multigraph of a transposition product: one vertex per entry, one edge per
// factor, multiplicity preserved.
struct FactorGraph {
  std::vector<int> vertices;               // sorted, unique
  std::vector<std::pair<int, int>> edges;  // (lo, hi), one per factor
};

FactorGraph build_factor_graph(const SwapSequence& seq);

// Connected with exactly |V| - 1 edges.
bool is_tree(const FactorGraph& g);

// Findings for one factorization of a k-cycle. The entry-set and adjacent-
// factor checks only apply to minimal factorizations (t == k - 1).
struct Lemma1Report {
  int cycle_length = 0;          // k
  int factor_count = 0;          // t
  bool length_bound_ok = false;  // t >= k - 1
  bool minimal = false;          // t == k - 1
  std::optional<bool> entries_equal_cycle_set;
  std::optional<bool> has_adjacent_factor;  // some (a_i a_{i+1}), i < k
  std::optional<Transposition> adjacent_witness;
};

// seq must compose to the cycle (a1 ... ak); throws std::invalid_argument
// otherwise.
Lemma1Report check_lemma1(const SwapSequence& seq,
                          const std::vector<int>& cycle);

}  // namespace mindswap

#endif  // MINDSWAP_FACTOR_GRAPH_HPP
