#include "mindswap/identity_words.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace mindswap {

namespace {

long long pair_count(long long n) { return n < 2 ? 0 : n * (n - 1) / 2; }

// Smallest universe that has at least m transpositions.
int min_universe(int m) {
  int k = 4;
  while (pair_count(k) < m) ++k;
  return k;
}

// Longest identity word that fits inside a universe of k labels.
int stage_cap(int k) { return static_cast<int>(pair_count(k)) & ~1; }

const SwapSequence& base_word() {
  static const SwapSequence base{{1, 2}, {2, 3}, {1, 4}, {1, 3}, {2, 4}, {3, 4}};
  return base;
}

struct PinnedStep {
  Transposition factor;
  int c;
};

// Expansion schedule taking the base word up to the full 28-factor word on
// eight labels. Each step names the factor to expand and the third label.
// The last step is the one atypical expansion against label 1.
const std::vector<PinnedStep>& pinned_steps() {
  static const std::vector<PinnedStep> steps{
      {{1, 2}, 5}, {{3, 4}, 5}, {{2, 3}, 6}, {{4, 5}, 6},
      {{1, 2}, 7}, {{3, 4}, 7}, {{5, 6}, 7}, {{2, 3}, 8},
      {{4, 5}, 8}, {{6, 7}, 8}, {{6, 8}, 1}};
  return steps;
}

std::size_t index_of(const SwapSequence& word, const Transposition& factor) {
  const auto it = std::find(word.begin(), word.end(), factor);
  if (it == word.end())
    throw std::logic_error("pinned expansion factor missing from word");
  return static_cast<std::size_t>(it - word.begin());
}

// Depth-first search over (factor, third label) expansion choices, tried in
// ascending order so results are deterministic.
bool extend(SwapSequence& word, std::set<Transposition>& used, int target_len,
            int max_label, long long& nodes) {
  if (static_cast<int>(word.size()) == target_len) return true;
  if (--nodes < 0)
    throw std::logic_error("identity word expansion search ran out of nodes");
  for (std::size_t idx = 0; idx < word.size(); ++idx) {
    const int a = word[idx].lo;
    const int b = word[idx].hi;
    for (int c = 1; c <= max_label; ++c) {
      if (c == a || c == b) continue;
      const Transposition ac(a, c);
      const Transposition bc(b, c);
      if (used.count(ac) || used.count(bc)) continue;
      word.insert(word.begin() + idx, ac);
      word.insert(word.begin() + idx + 2, bc);
      used.insert(ac);
      used.insert(bc);
      if (extend(word, used, target_len, max_label, nodes)) return true;
      used.erase(ac);
      used.erase(bc);
      word.erase(word.begin() + idx + 2);
      word.erase(word.begin() + idx);
    }
  }
  return false;
}

SwapSequence generate(int m) {
  if (m <= 28) {
    SwapSequence word = base_word();
    for (const PinnedStep& step : pinned_steps()) {
      if (static_cast<int>(word.size()) >= m) break;
      word = f_expand(word, index_of(word, step.factor), step.c);
    }
    return word;
  }
  const int k = min_universe(m);
  SwapSequence word = generate(stage_cap(k - 1));
  std::set<Transposition> used(word.begin(), word.end());
  long long nodes = 5'000'000;
  if (!extend(word, used, m, k, nodes))
    throw std::logic_error("no expansion schedule found for m=" +
                           std::to_string(m));
  return word;
}

}  // namespace

bool feasible(int m, int n) {
  return m % 2 == 0 && m >= 6 && m <= pair_count(n);
}

SwapSequence f_expand(const SwapSequence& word, std::size_t index, int c) {
  if (index >= word.size())
    throw std::invalid_argument("factor index out of range");
  const int a = word[index].lo;
  const int b = word[index].hi;
  if (c < 1) throw std::invalid_argument("labels must be positive");
  if (c == a || c == b)
    throw std::invalid_argument("expansion label " + std::to_string(c) +
                                " collides with the factor being expanded");
  const Transposition ac(a, c);
  const Transposition bc(b, c);
  if (std::find(word.begin(), word.end(), ac) != word.end() ||
      std::find(word.begin(), word.end(), bc) != word.end())
    throw std::invalid_argument("expansion would duplicate an existing factor");
  SwapSequence out;
  out.reserve(word.size() + 2);
  out.insert(out.end(), word.begin(), word.begin() + index);
  out.push_back(ac);
  out.push_back(word[index]);
  out.push_back(bc);
  out.insert(out.end(), word.begin() + index + 1, word.end());
  return out;
}

IdentityWord identity_word(int m, int n) {
  if (!feasible(m, n)) {
    if (m % 2 != 0)
      throw std::invalid_argument("factor count must be even, got m=" +
                                  std::to_string(m));
    if (m < 6)
      throw std::invalid_argument("factor count must be at least 6, got m=" +
                                  std::to_string(m));
    throw std::invalid_argument(
        "m=" + std::to_string(m) + " exceeds the " +
        std::to_string(pair_count(n)) + " distinct transpositions on " +
        std::to_string(n) + " labels");
  }
  SwapSequence word = generate(m);
  const int k = min_universe(m);
  if (static_cast<int>(word.size()) != m || !all_distinct(word) ||
      max_label(word) > k || !compose(word, k).is_identity())
    throw std::logic_error("identity word failed its self-check");
  return IdentityWord{std::move(word), m, n};
}

}  // namespace mindswap
