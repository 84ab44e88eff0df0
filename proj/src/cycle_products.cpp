#include "mindswap/cycle_products.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "mindswap/identity_words.hpp"

namespace mindswap {

namespace {

UndoPlan checked_plan(SwapSequence seq, std::vector<int> outsiders,
                      const SwapSequence& scramble, int universe,
                      const char* what) {
  UndoPlan plan{std::move(seq), std::move(outsiders)};
  if (!undoes(plan.sequence, scramble, universe))
    throw std::logic_error(std::string(what) + " failed its self-check");
  plan.verified = true;
  return plan;
}

}  // namespace

SwapSequence build_p1(int n) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  SwapSequence seq;
  seq.reserve(n - 1);
  for (int i = 1; i < n; ++i) seq.emplace_back(i, i + 1);
  return seq;
}

SwapSequence build_p2(int n) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  SwapSequence seq;
  seq.reserve(n - 1);
  for (int i = n - 1; i >= 1; --i) seq.emplace_back(i, n);
  return seq;
}

SwapSequence build_p3(int n) {
  if (n < 5 || (n % 4 != 1 && n % 4 != 2))
    throw std::invalid_argument(
        "p3 is defined for n >= 5 with n = 1 or 2 (mod 4), got n=" +
        std::to_string(n));
  SwapSequence seq = build_p2(n);
  const SwapSequence filler = identity_word((n - 1) * (n - 2) / 2, n - 1).word;
  seq.insert(seq.end(), filler.begin(), filler.end());
  return seq;
}

UndoPlan undo_p1(int n) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  if (n == 2)
    return checked_plan({{3, 4}, {2, 3}, {1, 4}, {2, 4}, {1, 3}}, {3, 4},
                        build_p1(2), 4, "undo_p1(2)");
  if (n == 3)
    return checked_plan({{1, 4}, {1, 3}, {2, 4}, {3, 4}}, {4}, build_p1(3), 4,
                        "undo_p1(3)");
  if (n == 4)
    return checked_plan({{1, 4}, {2, 5}, {2, 4}, {3, 5}, {4, 5}}, {5},
                        build_p1(4), 5, "undo_p1(4)");
  SwapSequence seq{{3, n}, {2, n - 1}, {1, n}, {1, 4}, {2, n}, {1, 3}};
  for (int j = 5; j <= n - 1; ++j) seq.emplace_back(3, j);
  return checked_plan(std::move(seq), {}, build_p1(n), n, "undo_p1");
}

UndoPlan undo_p2(int n) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  if (n == 2) return undo_p1(2);  // same product (12), same optimal undo
  SwapSequence seq;
  seq.reserve(n + 1);
  for (int i = 2; i <= n; ++i) seq.emplace_back(i, n + 1);
  seq.emplace_back(1, 2);
  seq.emplace_back(1, n + 1);
  return checked_plan(std::move(seq), {n + 1}, build_p2(n), n + 1, "undo_p2");
}

}  // namespace mindswap
