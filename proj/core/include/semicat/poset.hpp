#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semicat/util.hpp"

namespace semicat {

/// Finite poset on elements 0..size-1 given by its full order relation.
class Poset {
 public:
  Poset() = default;
  explicit Poset(BoolMatrix leq);

  int size() const { return leq_.rows(); }
  bool leq(int a, int b) const { return leq_.at(a, b); }
  const BoolMatrix& matrix() const { return leq_; }

  bool operator==(const Poset&) const = default;

  /// Greatest lower bound, if it exists.
  std::optional<int> meet(int a, int b) const;
  bool is_meet_semilattice() const;
  std::optional<int> top() const;
  std::vector<int> maximal_elements() const;

  /// True iff `subset` (sorted element list) is downward closed; on failure
  /// reports a pair (missing element, member it sits below).
  bool is_down_set(const std::vector<int>& subset,
                   std::pair<int, int>* witness = nullptr) const;

  /// Restriction to a sorted element subset (indices renumbered in order).
  Poset restrict(const std::vector<int>& subset) const;

  /// Linear extension listing maximal elements first (deterministic:
  /// least index among available choices).
  std::vector<int> linear_extension_top_down() const;

  /// Exhaustive order-isomorphism search; returns the lexicographically least
  /// witness mapping this->other, if any.
  std::optional<std::vector<int>> order_isomorphism(const Poset& other) const;

  /// Checks that `map` is a bijection with a <= b  <=>  map[a] <= map[b].
  bool is_order_isomorphism(const Poset& other, const std::vector<int>& map) const;

 private:
  BoolMatrix leq_;
};

}  // namespace semicat
