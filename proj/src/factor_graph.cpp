#include "mindswap/factor_graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mindswap {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

FactorGraph build_factor_graph(const SwapSequence& seq) {
  FactorGraph g;
  for (const Transposition& t : seq) {
    g.edges.emplace_back(t.lo, t.hi);
    g.vertices.push_back(t.lo);
    g.vertices.push_back(t.hi);
  }
  std::sort(g.vertices.begin(), g.vertices.end());
  g.vertices.erase(std::unique(g.vertices.begin(), g.vertices.end()),
                   g.vertices.end());
  return g;
}

bool is_tree(const FactorGraph& g) {
  if (g.vertices.empty()) return false;
  if (g.edges.size() != g.vertices.size() - 1) return false;
  UnionFind uf(g.vertices.size());
  auto index = [&](int label) {
    return static_cast<std::size_t>(
        std::lower_bound(g.vertices.begin(), g.vertices.end(), label) -
        g.vertices.begin());
  };
  for (const auto& [a, b] : g.edges) uf.unite(index(a), index(b));
  const std::size_t root = uf.find(0);
  for (std::size_t v = 1; v < g.vertices.size(); ++v)
    if (uf.find(v) != root) return false;
  return true;
}

Lemma1Report check_lemma1(const SwapSequence& seq,
                          const std::vector<int>& cycle) {
  const int k = static_cast<int>(cycle.size());
  if (k < 2) throw std::invalid_argument("cycle must have length >= 2");
  int universe = max_label(seq);
  for (int label : cycle) universe = std::max(universe, label);
  const Permutation target = Permutation::from_cycles(universe, {cycle});
  if (!(compose(seq, universe) == target))
    throw std::invalid_argument(
        "sequence does not compose to the given cycle");

  Lemma1Report report;
  report.cycle_length = k;
  report.factor_count = static_cast<int>(seq.size());
  report.length_bound_ok = report.factor_count >= k - 1;
  report.minimal = report.factor_count == k - 1;
  if (!report.minimal) return report;

  std::vector<int> entries;
  for (const Transposition& t : seq) {
    entries.push_back(t.lo);
    entries.push_back(t.hi);
  }
  std::sort(entries.begin(), entries.end());
  entries.erase(std::unique(entries.begin(), entries.end()), entries.end());
  std::vector<int> cycle_set = cycle;
  std::sort(cycle_set.begin(), cycle_set.end());
  report.entries_equal_cycle_set = entries == cycle_set;

  for (const Transposition& factor : seq) {
    for (int i = 0; i + 1 < k; ++i) {
      if (factor == Transposition(cycle[i], cycle[i + 1])) {
        report.adjacent_witness = factor;
        break;
      }
    }
    if (report.adjacent_witness) break;
  }
  report.has_adjacent_factor = report.adjacent_witness.has_value();
  return report;
}

}  // namespace mindswap
