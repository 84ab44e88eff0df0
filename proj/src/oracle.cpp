#include "mindswap/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>

namespace mindswap {

BudgetExceededError::BudgetExceededError(long long nodes)
    : std::runtime_error("search node budget exceeded after " +
                         std::to_string(nodes) + " nodes"),
      nodes_(nodes) {}

namespace {

struct Dfs {
  std::vector<Transposition> allowed;
  std::vector<int> goal;  // image table of the required product
  int universe = 0;
  long long budget = 0;
  long long nodes = 0;
  bool distance_prune = true;
  bool collect = false;

  std::vector<int> acc;      // prefix product so far
  std::vector<int> acc_inv;  // its inverse
  std::uint64_t used = 0;
  std::vector<std::size_t> chosen;
  std::vector<SwapSequence> results;
  std::vector<char> mark;

  void init() {
    acc.resize(universe);
    acc_inv.resize(universe);
    std::iota(acc.begin(), acc.end(), 1);
    std::iota(acc_inv.begin(), acc_inv.end(), 1);
    mark.resize(universe);
  }

  // Append t on the right of the prefix product; calling twice undoes it.
  void flip(const Transposition& t) {
    const int pa = acc[t.lo - 1];
    const int pb = acc[t.hi - 1];
    std::swap(acc_inv[pa - 1], acc_inv[pb - 1]);
    std::swap(acc[t.lo - 1], acc[t.hi - 1]);
  }

  // Fewest transpositions that can complete the prefix to the goal:
  // support minus cycle count of acc^-1 * goal.
  int suffix_distance() {
    std::fill(mark.begin(), mark.end(), 0);
    int d = 0;
    for (int i = 1; i <= universe; ++i) {
      if (mark[i - 1]) continue;
      int len = 0;
      for (int j = i; !mark[j - 1]; j = acc_inv[goal[j - 1] - 1]) {
        mark[j - 1] = 1;
        ++len;
      }
      d += len - 1;
    }
    return d;
  }

  void record() {
    SwapSequence seq;
    seq.reserve(chosen.size());
    for (std::size_t i : chosen) seq.push_back(allowed[i]);
    results.push_back(std::move(seq));
  }

  bool run(int remaining) {
    if (++nodes > budget) throw BudgetExceededError(nodes);
    if (remaining == 0) {
      if (acc == goal) {
        record();
        return !collect;
      }
      return false;
    }
    if (distance_prune && suffix_distance() > remaining) return false;
    for (std::size_t i = 0; i < allowed.size(); ++i) {
      if (used >> i & 1) continue;
      used |= std::uint64_t{1} << i;
      flip(allowed[i]);
      chosen.push_back(i);
      const bool done = run(remaining - 1);
      chosen.pop_back();
      flip(allowed[i]);
      used &= ~(std::uint64_t{1} << i);
      if (done) return true;
    }
    return false;
  }
};

std::vector<Transposition> canonical_factors(
    std::vector<Transposition> allowed) {
  std::sort(allowed.begin(), allowed.end());
  allowed.erase(std::unique(allowed.begin(), allowed.end()), allowed.end());
  if (allowed.size() > 64)
    throw std::invalid_argument(
        "factor set too large for the oracle (limit 64)");
  return allowed;
}

int resolve_universe(int requested, const Permutation& target,
                     const std::vector<Transposition>& allowed) {
  int needed = std::max(target.degree(), 1);
  for (const Transposition& t : allowed) needed = std::max(needed, t.hi);
  if (requested == 0) return needed;
  if (requested < needed)
    throw std::invalid_argument("universe too small for target and factors");
  return requested;
}

std::vector<int> used_outsiders(const SwapSequence& seq, int base) {
  std::vector<int> out;
  for (const Transposition& t : seq) {
    if (t.lo > base) out.push_back(t.lo);
    if (t.hi > base) out.push_back(t.hi);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

SearchOutcome min_undo_search(const SearchSpec& spec) {
  if (spec.max_length < 0)
    throw std::invalid_argument("max_length must be non-negative");
  Dfs dfs;
  dfs.allowed = canonical_factors(spec.allowed);
  dfs.universe = resolve_universe(spec.universe_size, spec.target, dfs.allowed);
  const Permutation goal = spec.target.inverse().extended(dfs.universe);
  dfs.goal = goal.images();
  dfs.budget = spec.node_budget;
  dfs.distance_prune = spec.distance_prune;
  dfs.init();

  const bool goal_even = goal.even();
  const int cap =
      std::min(spec.max_length, static_cast<int>(dfs.allowed.size()));
  SearchOutcome outcome;
  for (int len = 0; len <= cap; ++len) {
    if (spec.parity_prune && (len % 2 == 0) != goal_even) continue;
    if (dfs.run(len)) {
      UndoPlan plan;
      plan.sequence = dfs.results.front();
      plan.outsiders = used_outsiders(plan.sequence, spec.target.degree());
      plan.verified = true;
      outcome.plan = std::move(plan);
      break;
    }
  }
  outcome.nodes_visited = dfs.nodes;
  return outcome;
}

std::vector<SwapSequence> enumerate_products(
    const Permutation& target, const std::vector<Transposition>& allowed,
    int length, int universe_size, const EnumerateOptions& opts) {
  if (length < 0) throw std::invalid_argument("length must be non-negative");
  Dfs dfs;
  dfs.allowed = canonical_factors(allowed);
  dfs.universe = resolve_universe(universe_size, target, dfs.allowed);
  const Permutation goal = target.extended(dfs.universe);
  dfs.goal = goal.images();
  dfs.budget = opts.node_budget;
  dfs.distance_prune = opts.distance_prune;
  dfs.collect = true;
  dfs.init();
  if (length > static_cast<int>(dfs.allowed.size())) return {};
  if (opts.parity_prune && (length % 2 == 0) != goal.even()) return {};
  dfs.run(length);
  return std::move(dfs.results);
}

std::vector<SwapSequence> enumerate_min_factorizations(
    const std::vector<int>& cycle, int universe_size) {
  const int k = static_cast<int>(cycle.size());
  if (k < 2 || k > 6)
    throw std::invalid_argument("cycle length must be between 2 and 6");
  int universe = universe_size;
  for (int label : cycle) universe = std::max(universe, label);
  const Permutation target = Permutation::from_cycles(universe, {cycle});
  return enumerate_products(target, all_transpositions(universe), k - 1,
                            universe);
}

OutsiderSearch min_outsiders(const SwapSequence& scramble, int universe_size,
                             long long node_budget) {
  const int universe = std::max(universe_size, max_label(scramble));
  if (universe < 1) throw std::invalid_argument("scramble is empty");
  const Permutation p = compose(scramble, universe);
  if (p.is_identity())
    throw std::invalid_argument(
        "scramble composes to the identity; nothing to undo");
  const CycleDecomposition dec = cycle_decompose(p);
  const int guaranteed = dec.support_size() + dec.cycle_count() + 2;
  const std::set<Transposition> banned(scramble.begin(), scramble.end());

  long long nodes_total = 0;
  for (int j = 0; j <= 2; ++j) {
    std::vector<Transposition> allowed;
    for (const Transposition& t : all_transpositions(universe + j))
      if (!banned.count(t)) allowed.push_back(t);
    SearchSpec spec;
    spec.target = p;
    spec.allowed = allowed;
    // Two outsiders come with a construction of known length; with fewer the
    // whole factor set must be exhausted before reporting failure.
    spec.max_length =
        j == 2 ? guaranteed : static_cast<int>(allowed.size());
    spec.universe_size = universe + j;
    spec.node_budget = node_budget - nodes_total;
    SearchOutcome outcome = min_undo_search(spec);
    nodes_total += outcome.nodes_visited;
    if (outcome.plan)
      return OutsiderSearch{j, std::move(*outcome.plan), nodes_total};
  }
  throw std::logic_error("two outsiders always admit an undo");
}

std::vector<Transposition> all_transpositions(int n) {
  std::vector<Transposition> out;
  out.reserve(n < 2 ? 0 : n * (n - 1) / 2);
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) out.emplace_back(i, j);
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace mindswap
