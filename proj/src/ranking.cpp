#include "rmj/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace rmj {

void validate_q(double q) {
  if (!(q >= kMinQ && q <= kMaxQ)) {
    throw std::invalid_argument("dispersion q must lie in [1e-9, 1-1e-9], got " +
                                std::to_string(q));
  }
}

Ranking::Ranking(std::vector<Item> order) : order_(std::move(order)) {
  const int n = static_cast<int>(order_.size());
  position_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    const Item x = order_[i];
    if (x < 0 || x >= n) {
      throw std::invalid_argument("ranking entry " + std::to_string(x) +
                                  " outside 0.." + std::to_string(n - 1));
    }
    if (position_[x] != -1) {
      throw std::invalid_argument("ranking repeats item " + std::to_string(x));
    }
    position_[x] = i;
  }
}

Ranking Ranking::identity(int n) {
  std::vector<Item> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  return Ranking(std::move(order));
}

Ranking Ranking::reversal(int n) {
  std::vector<Item> order(n);
  for (int i = 0; i < n; ++i) order[i] = n - 1 - i;
  return Ranking(std::move(order));
}

Ranking Ranking::inverse() const {
  return Ranking(std::vector<Item>(position_.begin(), position_.end()));
}

Ranking Ranking::compose(const Ranking& other) const {
  if (size() != other.size()) {
    throw std::invalid_argument("cannot compose rankings of different sizes");
  }
  std::vector<Item> order(size());
  for (int i = 0; i < size(); ++i) order[i] = order_[other.order_[i]];
  return Ranking(std::move(order));
}

TopKList::TopKList(std::vector<Item> items, int n) : items_(std::move(items)), n_(n) {
  const int k = static_cast<int>(items_.size());
  if (k < 1 || k > n_) {
    throw std::invalid_argument("top-k list needs 1 <= k <= n, got k=" +
                                std::to_string(k) + " n=" + std::to_string(n_));
  }
  std::vector<bool> seen(n_, false);
  for (const Item x : items_) {
    if (x < 0 || x >= n_) {
      throw std::invalid_argument("top-k entry " + std::to_string(x) +
                                  " outside 0.." + std::to_string(n_ - 1));
    }
    if (seen[x]) {
      throw std::invalid_argument("top-k list repeats item " + std::to_string(x));
    }
    seen[x] = true;
  }
}

bool TopKList::contains(Item x) const {
  return std::find(items_.begin(), items_.end(), x) != items_.end();
}

DisplaySet::DisplaySet(std::vector<Item> items) : items_(std::move(items)) {
  std::sort(items_.begin(), items_.end());
  if (std::adjacent_find(items_.begin(), items_.end()) != items_.end()) {
    throw std::invalid_argument("display set repeats an item");
  }
  if (items_.size() < 2) {
    throw std::invalid_argument("display set needs at least two items");
  }
  if (items_.front() < 0) {
    throw std::invalid_argument("display set items must be nonnegative");
  }
}

bool DisplaySet::contains(Item x) const {
  return std::binary_search(items_.begin(), items_.end(), x);
}

int DisplaySet::rank_of(Item x) const {
  return static_cast<int>(std::lower_bound(items_.begin(), items_.end(), x) -
                          items_.begin());
}

int kendall_tau(const Ranking& pi) {
  const int n = pi.size();
  int d = 0;
  for (int i = 0; i < n - 1; ++i) {
    for (int j = i + 1; j < n; ++j) {
      d += pi.at(i) > pi.at(j);
    }
  }
  return d;
}

int kendall_tau(const Ranking& pi1, const Ranking& pi2) {
  return kendall_tau(relabel(pi2, pi1));
}

int reverse_major_index(const Ranking& pi) {
  const int n = pi.size();
  int d = 0;
  for (int i = 0; i + 1 < n; ++i) {
    if (pi.at(i) > pi.at(i + 1)) d += n - 1 - i;
  }
  return d;
}

int reverse_major_index(const Ranking& pi1, const Ranking& pi2) {
  return reverse_major_index(relabel(pi2, pi1));
}

int major_index(const Ranking& pi) {
  const int n = pi.size();
  int d = 0;
  for (int i = 0; i + 1 < n; ++i) {
    if (pi.at(i) > pi.at(i + 1)) d += i + 1;
  }
  return d;
}

int reverse_major_index(const TopKList& pk) {
  const int n = pk.n();
  int d = 0;
  for (int i = 0; i + 1 < pk.k(); ++i) {
    if (pk.at(i) > pk.at(i + 1)) d += n - 1 - i;
  }
  return d;
}

int excluded_below_last(const TopKList& pk) {
  const Item z = pk.last();
  int count = 0;
  for (Item x = 0; x < z; ++x) {
    if (!pk.contains(x)) ++count;
  }
  return count;
}

namespace {

void require_listed_in_display(const TopKList& pk, const DisplaySet& s) {
  for (const Item x : pk.items()) {
    if (!s.contains(x)) {
      throw std::invalid_argument("listed item " + std::to_string(x) +
                                  " is not in the display set");
    }
  }
}

}  // namespace

int reverse_major_index(const TopKList& pk, const DisplaySet& s) {
  require_listed_in_display(pk, s);
  const int m = s.size();
  int d = 0;
  for (int i = 0; i + 1 < pk.k(); ++i) {
    if (pk.at(i) > pk.at(i + 1)) d += m - 1 - i;
  }
  return d;
}

int excluded_below_last(const TopKList& pk, const DisplaySet& s) {
  require_listed_in_display(pk, s);
  const Item z = pk.last();
  int count = 0;
  for (const Item x : s.items()) {
    if (x >= z) break;
    if (!pk.contains(x)) ++count;
  }
  return count;
}

Ranking relabel(const Ranking& pi, const Ranking& center) {
  if (pi.size() != center.size()) {
    throw std::invalid_argument("relabel: size mismatch");
  }
  std::vector<Item> order(pi.size());
  for (int i = 0; i < pi.size(); ++i) order[i] = center.position_of(pi.at(i));
  return Ranking(std::move(order));
}

TopKList relabel(const TopKList& pk, const Ranking& center) {
  if (pk.n() != center.size()) {
    throw std::invalid_argument("relabel: size mismatch");
  }
  std::vector<Item> items(pk.k());
  for (int i = 0; i < pk.k(); ++i) items[i] = center.position_of(pk.at(i));
  return TopKList(std::move(items), pk.n());
}

DisplaySet relabel(const DisplaySet& s, const Ranking& center) {
  std::vector<Item> items;
  items.reserve(s.size());
  for (const Item x : s.items()) {
    if (x >= center.size()) {
      throw std::invalid_argument("relabel: display item outside universe");
    }
    items.push_back(center.position_of(x));
  }
  return DisplaySet(std::move(items));
}

double geometric_sum(int m, double q) {
  double sum = 0.0, p = 1.0;
  for (int j = 0; j < m; ++j) {
    sum += p;
    p *= q;
  }
  return sum;
}

double psi(int n, double q) {
  validate_q(q);
  double value = 1.0;
  for (int i = 1; i <= n; ++i) value *= geometric_sum(i, q);
  return value;
}

double log_psi(int n, double q) {
  validate_q(q);
  double value = 0.0;
  for (int i = 1; i <= n; ++i) value += std::log(geometric_sum(i, q));
  return value;
}

}  // namespace rmj
