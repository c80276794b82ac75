#pragma once

// Permutation values and the distance statistics the ranked-choice model is
// built on: Kendall tau, the reverse major index and its top-k /
// display-set restrictions, the L tail count, relabeling, and the psi
// normalizing product.

#include <vector>

namespace rmj {

using Item = int;

// Dispersion parameters are accepted on [kMinQ, kMaxQ] only; callers who
// want the uniform (q -> 1) or point-mass (q -> 0) limit must clamp
// explicitly.
inline constexpr double kMinQ = 1e-9;
inline constexpr double kMaxQ = 1.0 - 1e-9;

void validate_q(double q);

/// A strict ranking of the items 0..n-1. order()[i] is the item in
/// position i, i.e. the i-th most preferred; position_of is the inverse
/// view. Immutable after construction.
class Ranking {
 public:
  explicit Ranking(std::vector<Item> order);

  static Ranking identity(int n);
  static Ranking reversal(int n);

  int size() const { return static_cast<int>(order_.size()); }
  Item at(int position) const { return order_[position]; }
  int position_of(Item x) const { return position_[x]; }
  bool prefers(Item x, Item y) const { return position_[x] < position_[y]; }
  const std::vector<Item>& order() const { return order_; }

  Ranking inverse() const;

  /// Composition (this o other): position i holds this(other(i)).
  Ranking compose(const Ranking& other) const;

  bool operator==(const Ranking& other) const { return order_ == other.order_; }
  bool operator!=(const Ranking& other) const { return !(*this == other); }

 private:
  std::vector<Item> order_;
  std::vector<int> position_;
};

/// An ordered list of k distinct items out of a universe of size n; the
/// first k entries of some full ranking. 1 <= k <= n.
class TopKList {
 public:
  TopKList(std::vector<Item> items, int n);

  int k() const { return static_cast<int>(items_.size()); }
  int n() const { return n_; }
  Item at(int position) const { return items_[position]; }
  Item last() const { return items_.back(); }
  const std::vector<Item>& items() const { return items_; }
  bool contains(Item x) const;

  bool operator==(const TopKList& other) const {
    return n_ == other.n_ && items_ == other.items_;
  }

 private:
  std::vector<Item> items_;
  int n_;
};

/// The set of items offered to a participant; at least two, stored sorted
/// ascending.
class DisplaySet {
 public:
  explicit DisplaySet(std::vector<Item> items);

  int size() const { return static_cast<int>(items_.size()); }
  bool contains(Item x) const;
  /// Number of set members with a smaller label than x (x need not be a
  /// member).
  int rank_of(Item x) const;
  Item at(int index) const { return items_[index]; }
  const std::vector<Item>& items() const { return items_; }

  bool operator==(const DisplaySet& other) const { return items_ == other.items_; }

 private:
  std::vector<Item> items_;
};

// --- Distances to the identity ranking. ---

/// Number of pairwise disagreements with the identity.
int kendall_tau(const Ranking& pi);
/// Kendall tau between two rankings, computed on pi1^{-1} o pi2.
int kendall_tau(const Ranking& pi1, const Ranking& pi2);

/// Sum over adjacent descents of (n - i): adjacent disagreements weighted
/// toward the top positions.
int reverse_major_index(const Ranking& pi);
int reverse_major_index(const Ranking& pi1, const Ranking& pi2);

/// Sum over adjacent descents of i (the classical major index).
int major_index(const Ranking& pi);

/// Reverse major index truncated at position k.
int reverse_major_index(const TopKList& pk);

/// L(pi_k): how many excluded items have a smaller label than the last
/// listed item.
int excluded_below_last(const TopKList& pk);

// Display-set restrictions: the display is treated as the universe, so the
// descent weight becomes |S| - i and only excluded items inside S count.
// Every listed item must belong to the display.
int reverse_major_index(const TopKList& pk, const DisplaySet& s);
int excluded_below_last(const TopKList& pk, const DisplaySet& s);

// --- Relabeling ---

/// center^{-1} o pi: renames every item by its position under `center`, so
/// identity-centered formulas apply to an arbitrary central ranking.
Ranking relabel(const Ranking& pi, const Ranking& center);
TopKList relabel(const TopKList& pk, const Ranking& center);
DisplaySet relabel(const DisplaySet& s, const Ranking& center);

// --- Normalizing products ---

/// 1 + q + ... + q^{m-1}.
double geometric_sum(int m, double q);
/// psi(n, q) = prod_{i=1..n} (1 + q + ... + q^{i-1}); psi(0, q) = 1.
double psi(int n, double q);
double log_psi(int n, double q);

}  // namespace rmj
