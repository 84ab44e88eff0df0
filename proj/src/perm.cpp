#include "mindswap/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mindswap {

Transposition::Transposition(int a, int b) {
  if (a < 1 || b < 1)
    throw std::invalid_argument("transposition labels must be positive, got (" +
                                std::to_string(a) + " " + std::to_string(b) +
                                ")");
  if (a == b)
    throw std::invalid_argument("degenerate transposition (" +
                                std::to_string(a) + " " + std::to_string(b) +
                                ")");
  lo = std::min(a, b);
  hi = std::max(a, b);
}

Permutation::Permutation(int degree) {
  if (degree < 0) throw std::invalid_argument("degree must be non-negative");
  images_.resize(degree);
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 1 || v > degree() || seen[v - 1])
      throw std::invalid_argument("mapping is not a bijection on {1.." +
                                  std::to_string(degree()) + "}");
    seen[v - 1] = 1;
  }
}

Permutation Permutation::from_cycles(
    int degree, const std::vector<std::vector<int>>& cycles) {
  Permutation p(degree);
  std::vector<char> used(degree, 0);
  for (const auto& cycle : cycles) {
    for (int label : cycle) {
      if (label < 1 || label > degree)
        throw std::invalid_argument("cycle entry " + std::to_string(label) +
                                    " outside {1.." + std::to_string(degree) +
                                    "}");
      if (used[label - 1])
        throw std::invalid_argument("cycle entry " + std::to_string(label) +
                                    " repeated");
      used[label - 1] = 1;
    }
    const int k = static_cast<int>(cycle.size());
    for (int i = 0; i < k; ++i)
      p.images_[cycle[i] - 1] = cycle[(i + 1) % k];
  }
  return p;
}

int Permutation::apply(int label) const {
  if (label < 1 || label > degree())
    throw std::out_of_range("label " + std::to_string(label) +
                            " outside {1.." + std::to_string(degree()) + "}");
  return images_[label - 1];
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= degree(); ++i)
    if (images_[i - 1] != i) return false;
  return true;
}

bool Permutation::even() const {
  std::vector<char> seen(images_.size(), 0);
  int swaps = 0;
  for (int i = 1; i <= degree(); ++i) {
    if (seen[i - 1] || images_[i - 1] == i) continue;
    int len = 0;
    for (int j = i; !seen[j - 1]; j = images_[j - 1]) {
      seen[j - 1] = 1;
      ++len;
    }
    swaps += len - 1;
  }
  return swaps % 2 == 0;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 1; i <= degree(); ++i) inv[images_[i - 1] - 1] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::extended(int new_degree) const {
  if (new_degree < degree())
    throw std::invalid_argument("cannot shrink a permutation's universe");
  std::vector<int> img = images_;
  img.resize(new_degree);
  std::iota(img.begin() + degree(), img.end(), degree() + 1);
  return Permutation(std::move(img));
}

std::vector<int> Permutation::support() const {
  std::vector<int> moved;
  for (int i = 1; i <= degree(); ++i)
    if (images_[i - 1] != i) moved.push_back(i);
  return moved;
}

Permutation operator*(const Permutation& f, const Permutation& g) {
  const int d = std::max(f.degree(), g.degree());
  const Permutation fe = f.extended(d);
  const Permutation ge = g.extended(d);
  std::vector<int> img(d);
  for (int i = 1; i <= d; ++i) img[i - 1] = fe.images_[ge.images_[i - 1] - 1];
  return Permutation(std::move(img));
}

int CycleDecomposition::support_size() const {
  int total = 0;
  for (const auto& cycle : cycles) total += static_cast<int>(cycle.size());
  return total;
}

Permutation compose(const SwapSequence& seq, int universe_size) {
  if (universe_size < 1)
    throw std::invalid_argument("universe size must be positive");
  std::vector<int> img(universe_size);
  std::iota(img.begin(), img.end(), 1);
  for (const Transposition& t : seq) {
    if (t.hi > universe_size)
      throw std::out_of_range("label " + std::to_string(t.hi) +
                              " outside universe {1.." +
                              std::to_string(universe_size) + "}");
    std::swap(img[t.lo - 1], img[t.hi - 1]);
  }
  return Permutation(std::move(img));
}

CycleDecomposition cycle_decompose(const Permutation& p) {
  CycleDecomposition dec;
  std::vector<char> seen(p.degree(), 0);
  for (int i = 1; i <= p.degree(); ++i) {
    if (seen[i - 1] || p.apply(i) == i) continue;
    std::vector<int> cycle;
    for (int j = i; !seen[j - 1]; j = p.apply(j)) {
      seen[j - 1] = 1;
      cycle.push_back(j);
    }
    dec.cycles.push_back(std::move(cycle));
  }
  return dec;
}

Parity parity(const SwapSequence& seq) {
  return seq.size() % 2 == 0 ? Parity::even : Parity::odd;
}

bool undoes(const SwapSequence& candidate, const SwapSequence& scramble,
            int universe_size) {
  if (!(compose(candidate, universe_size) * compose(scramble, universe_size))
           .is_identity())
    return false;
  if (!all_distinct(candidate)) return false;
  SwapSequence a = candidate;
  SwapSequence b = scramble;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  SwapSequence overlap;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(overlap));
  return overlap.empty();
}

bool all_distinct(const SwapSequence& seq) {
  SwapSequence sorted = seq;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

SwapSequence cycle_to_sequence(const std::vector<int>& cycle) {
  std::vector<int> sorted = cycle;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("cycle entries must be distinct");
  SwapSequence seq;
  for (std::size_t i = 0; i + 1 < cycle.size(); ++i)
    seq.emplace_back(cycle[i], cycle[i + 1]);
  return seq;
}

int max_label(const SwapSequence& seq) {
  int best = 0;
  for (const Transposition& t : seq) best = std::max(best, t.hi);
  return best;
}

}  // namespace mindswap
