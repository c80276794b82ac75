#pragma once

// The RMJ-distance ranking distribution: full and top-k probability mass,
// sequential next-item conditionals, the O(nk) sampler, and the four-branch
// conditional choice probability.

#include "rmj/ranking.hpp"
#include "rmj/rng.hpp"

namespace rmj {

/// Ranking distribution peaked at a central ranking, with mass decaying in
/// the reverse-major-index distance: P(pi) proportional to q^{d(center, pi)}.
/// Immutable; safe to share across threads.
class RmjModel {
 public:
  RmjModel(Ranking center, double q);

  int n() const { return center_.size(); }
  const Ranking& center() const { return center_; }
  double q() const { return q_; }
  /// Concentration view alpha = -ln q.
  double alpha() const;
  /// ln sum_pi q^{d(center, pi)}. Summed exactly over all n! rankings for
  /// n <= 8, and equal to ln psi(n, q) (the top-k telescoping identity at
  /// k = n) otherwise.
  double log_normalizer() const { return log_normalizer_; }

 private:
  Ranking center_;
  double q_;
  double log_normalizer_;
};

double log_pmf_full(const RmjModel& model, const Ranking& pi);
double pmf_full(const RmjModel& model, const Ranking& pi);

/// Marginal mass of all full rankings extending pi_k:
/// q^{d(pi_k) + L(pi_k)} psi(n-k, q) / psi(n, q) after relabeling by the
/// center.
double log_pmf_topk(const RmjModel& model, const TopKList& pk);
double pmf_topk(const RmjModel& model, const TopKList& pk);

struct ItemProbability {
  Item item;
  double probability;
};

/// Conditional distribution of the (k+1)-th item given a top-k prefix, one
/// entry per remaining item, sorted by item id, summing to 1. Requires
/// k < n.
std::vector<ItemProbability> next_item_distribution(const RmjModel& model,
                                                    const TopKList& prefix);
/// Empty-prefix case: distribution of the top item.
std::vector<ItemProbability> next_item_distribution(const RmjModel& model);

/// Draws a top-k list by sampling positions sequentially from the
/// next-item conditionals; O(n) amortized per position. Deterministic given
/// the rng state.
TopKList sample_topk(const RmjModel& model, int k, Rng& rng);

/// Draws a top-k ranked choice out of a display set, treating the display
/// as the universe (the set-relative distribution). Requires k <= |display|.
TopKList sample_topk(const RmjModel& model, const DisplaySet& display, int k,
                     Rng& rng);

/// Probability that a participant whose top-k list is `prefix` picks x out
/// of `display`, where the first k-1 prefix items are disjoint from the
/// display. Piecewise closed form, branching on whether the prefix's last
/// item lies in the display and on its relative position.
double conditional_choice(const RmjModel& model, const TopKList& prefix,
                          const DisplaySet& display, Item x);
/// Empty-prefix case; reduces to the plain choice probability.
double conditional_choice(const RmjModel& model, const DisplaySet& display,
                          Item x);

}  // namespace rmj
