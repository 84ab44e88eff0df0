#include <doctest.h>

#include <stdexcept>

#include "mindswap/factor_graph.hpp"
#include "mindswap/oracle.hpp"

using namespace mindswap;

TEST_CASE("build_factor_graph keeps multiplicity") {
  const FactorGraph g = build_factor_graph({{1, 2}, {2, 3}});
  CHECK(g.vertices == std::vector<int>{1, 2, 3});
  CHECK(g.edges == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});

  CHECK(build_factor_graph({}).vertices.empty());
  CHECK(build_factor_graph({}).edges.empty());

  const FactorGraph doubled = build_factor_graph({{1, 2}, {1, 2}});
  CHECK(doubled.vertices == std::vector<int>{1, 2});
  CHECK(doubled.edges.size() == 2);
}

TEST_CASE("is_tree") {
  CHECK(is_tree(build_factor_graph({{1, 2}, {2, 3}, {3, 4}})));
  CHECK_FALSE(is_tree(build_factor_graph({{1, 2}, {2, 3}, {1, 3}})));  // cycle
  CHECK_FALSE(is_tree(build_factor_graph({{1, 2}, {3, 4}})));  // disconnected
  CHECK_FALSE(is_tree(build_factor_graph({})));
  CHECK(is_tree(build_factor_graph({{1, 7}})));
}

TEST_CASE("check_lemma1 on the three-cycle words") {
  const std::vector<int> cycle{1, 2, 3};

  const Lemma1Report a = check_lemma1({{1, 2}, {2, 3}}, cycle);
  CHECK(a.length_bound_ok);
  CHECK(a.minimal);
  CHECK(a.entries_equal_cycle_set == true);
  CHECK(a.has_adjacent_factor == true);
  CHECK(a.adjacent_witness == Transposition(1, 2));

  const Lemma1Report b = check_lemma1({{1, 3}, {1, 2}}, cycle);
  CHECK(b.length_bound_ok);
  CHECK(b.entries_equal_cycle_set == true);
  CHECK(b.has_adjacent_factor == true);
  CHECK(b.adjacent_witness == Transposition(1, 2));

  // k factors for a k-cycle: not minimal, set/adjacent checks do not apply
  const Lemma1Report c = check_lemma1({{1, 2}, {1, 2}, {1, 2}, {2, 3}}, cycle);
  CHECK(c.length_bound_ok);
  CHECK_FALSE(c.minimal);
  CHECK_FALSE(c.entries_equal_cycle_set.has_value());
  CHECK_FALSE(c.has_adjacent_factor.has_value());

  CHECK_THROWS_AS(check_lemma1({{1, 2}}, cycle), std::invalid_argument);
}

TEST_CASE("minimal factorizations of small cycles satisfy the lemma") {
  // every minimal word over a roomier universe still stays inside the cycle
  // entries, contains an adjacent factor and has a tree for its graph
  const std::vector<std::vector<int>> cycles{
      {1, 2}, {2, 4}, {1, 2, 3}, {2, 4, 3}, {1, 2, 3, 4}, {1, 3, 2, 4}};
  for (const auto& cycle : cycles) {
    const auto words = enumerate_min_factorizations(cycle, 4);
    CHECK(!words.empty());
    for (const SwapSequence& word : words) {
      const Lemma1Report report = check_lemma1(word, cycle);
      CHECK(report.minimal);
      CHECK(report.entries_equal_cycle_set == true);
      CHECK(report.has_adjacent_factor == true);
      CHECK(is_tree(build_factor_graph(word)));
    }
  }
}
