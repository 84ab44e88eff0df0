#ifndef MINDSWAP_PERM_HPP
#define MINDSWAP_PERM_HPP

#include <compare>
#include <vector>

namespace mindswap {

// A transposition (ab): the unordered swap of two distinct body labels.
// Canonicalized so lo < hi; (ab) and (ba) compare equal.
struct Transposition {
  int lo = 0;
  int hi = 0;

  Transposition(int a, int b);

  bool touches(int label) const { return label == lo || label == hi; }
  int other(int label) const { return label == lo ? hi : lo; }

  friend bool operator==(const Transposition&, const Transposition&) = default;
  friend auto operator<=>(const Transposition&, const Transposition&) = default;
};

// A formal transposition product in textual order: factors[0] is the
// leftmost factor, factors.back() is applied first. A chronological swap
// log lists the factors of its product in the reverse of this order.
using SwapSequence = std::vector<Transposition>;

enum class Parity { even, odd };

// A bijection on {1..degree}. Labels are 1-based on every interface.
class Permutation {
 public:
  explicit Permutation(int degree = 0);  // identity
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree) { return Permutation(degree); }
  static Permutation from_cycles(int degree,
                                 const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int apply(int label) const;
  bool is_identity() const;
  bool even() const;
  Permutation inverse() const;
  Permutation extended(int new_degree) const;  // append fixed points
  std::vector<int> support() const;
  const std::vector<int>& images() const { return images_; }

  // Composition: (f * g)(i) == f(g(i)). Degrees may differ; the result
  // lives on the larger universe.
  friend Permutation operator*(const Permutation& f, const Permutation& g);
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;  // images_[i - 1] is the image of i
};

// Nontrivial disjoint cycles, each rotated to start at its smallest label
// and sorted by that label. Fixed points are omitted.
struct CycleDecomposition {
  std::vector<std::vector<int>> cycles;

  int cycle_count() const { return static_cast<int>(cycles.size()); }
  int support_size() const;
};

// A restoration plan: the sequence, the outsider labels it relies on, and
// whether it has been checked by composition.
struct UndoPlan {
  SwapSequence sequence;
  std::vector<int> outsiders;
  bool verified = false;

  int factor_count() const { return static_cast<int>(sequence.size()); }
};

// Applies the factors right to left over {1..universe_size}.
Permutation compose(const SwapSequence& seq, int universe_size);

CycleDecomposition cycle_decompose(const Permutation& p);

// Parity of the factor count. Any two transposition products equal to the
// same permutation agree on it.
Parity parity(const SwapSequence& seq);

// True iff candidate * scramble is the identity on {1..universe_size},
// candidate's factors are pairwise distinct, and no factor of candidate
// occurs in scramble.
bool undoes(const SwapSequence& candidate, const SwapSequence& scramble,
            int universe_size);

bool all_distinct(const SwapSequence& seq);

// (a1 a2)(a2 a3)...(a_{k-1} a_k), which composes to the cycle (a1 ... a_k).
SwapSequence cycle_to_sequence(const std::vector<int>& cycle);

// Largest label appearing in the sequence; 0 when empty.
int max_label(const SwapSequence& seq);

}  // namespace mindswap

#endif  // MINDSWAP_PERM_HPP
