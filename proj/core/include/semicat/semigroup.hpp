#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "semicat/poset.hpp"
#include "semicat/util.hpp"

namespace semicat {

inline constexpr int kDefaultSizeCap = 512;

/// A finite semigroup presented by its full multiplication table.
/// Elements are dense 0-based indices; table entry (a,b) is the index of ab.
/// Immutable after construction; associativity is verified on construction.
class FiniteSemigroup {
 public:
  static FiniteSemigroup from_table(const std::vector<std::vector<int>>& table,
                                    std::vector<std::string> labels = {},
                                    int size_cap = kDefaultSizeCap);
  static FiniteSemigroup from_flat_table(int n, std::vector<int> table,
                                         std::vector<std::string> labels = {},
                                         int size_cap = kDefaultSizeCap);

  int size() const { return size_; }
  int mul(int a, int b) const { return table_[static_cast<size_t>(a) * size_ + b]; }
  int mul(int a, int b, int c) const { return mul(mul(a, b), c); }
  std::optional<int> identity() const { return identity_; }
  bool is_monoid() const { return identity_.has_value(); }

  bool has_labels() const { return !labels_.empty(); }
  const std::string& label(int a) const;
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

  const std::vector<int>& flat_table() const { return table_; }

  bool operator==(const FiniteSemigroup& other) const {
    return size_ == other.size_ && table_ == other.table_;
  }

 private:
  FiniteSemigroup() = default;
  int size_ = 0;
  std::vector<int> table_;  // row-major, size_ x size_
  std::vector<std::string> labels_;
  std::optional<int> identity_;
};

/// The opposite semigroup (transposed table).  Labels are carried over.
FiniteSemigroup opposite(const FiniteSemigroup& s);

/// Green's data of a finite semigroup: the quasi-orders, the four standard
/// equivalences as class-index maps, the idempotents, and the natural partial
/// order (the intersection of the two quasi-orders; a genuine partial order on
/// the idempotents).
struct GreensData {
  BoolMatrix leq_l;   // a <=_l b  iff  a in S^1 b
  BoolMatrix leq_r;   // a <=_r b  iff  a in b S^1
  BoolMatrix nat_leq; // leq_l AND leq_r
  std::vector<int> l_class, r_class, h_class, d_class;
  int n_l_classes = 0, n_r_classes = 0, n_h_classes = 0, n_d_classes = 0;
  std::vector<int> idempotents;  // sorted

  bool l_related(int a, int b) const { return l_class[a] == l_class[b]; }
  bool r_related(int a, int b) const { return r_class[a] == r_class[b]; }
  bool h_related(int a, int b) const { return h_class[a] == h_class[b]; }
  bool d_related(int a, int b) const { return d_class[a] == d_class[b]; }
  /// Elements of the given class, ascending.
  std::vector<int> l_class_members(int cls) const;
  std::vector<int> r_class_members(int cls) const;
};

GreensData greens(const FiniteSemigroup& s);

bool is_regular(const FiniteSemigroup& s);
/// V(a) = { x : axa = a and xax = x }, ascending.
std::vector<int> inverses(const FiniteSemigroup& s, int a);

/// True iff a |-> (x |-> xa) is injective.
bool is_left_reductive(const FiniteSemigroup& s);
/// True iff a |-> (x |-> ax) is injective.
bool is_right_reductive(const FiniteSemigroup& s);
/// First pair of elements inducing the same right translation, if any.
std::optional<std::pair<int, int>> left_reductive_failure(const FiniteSemigroup& s);

struct ClassFlags {
  bool regular = false;
  bool left_reductive = false;
  bool right_reductive = false;
  bool l_unipotent = false;
  bool r_unipotent = false;
  bool inverse = false;
  bool band = false;
  bool right_regular_band = false;
  bool left_regular_band = false;
  bool monoid = false;

  bool operator==(const ClassFlags&) const = default;
};

ClassFlags classify(const FiniteSemigroup& s);
ClassFlags classify(const FiniteSemigroup& s, const GreensData& g);

/// The seven equivalent characterisations of L-unipotency for a regular
/// semigroup, each evaluated independently:
///   0: every L-class contains exactly one idempotent
///   1: eS ∩ fS = efS = feS for all idempotents e, f
///   2: efe = fe for all idempotents e, f
///   3: a'a = a''a for all a and a', a'' in V(a)
///   4: the idempotent a'a is the unique idempotent in L_a
///   5: a'ea = a''ea for all a, idempotent e, a', a'' in V(a)
///   6: aa'ea = ea for all a, a' in V(a), idempotent e
std::array<bool, 7> l_unipotent_conditions(const FiniteSemigroup& s);

/// The four equivalent characterisations of inverse semigroups for a regular
/// semigroup, each evaluated independently:
///   0: idempotents commute
///   1: every element has exactly one inverse
///   2: the idempotents form a meet-semilattice under the natural order
///   3: every L-class and every R-class contains exactly one idempotent
std::array<bool, 4> inverse_conditions(const FiniteSemigroup& s);

/// Poset of R-classes under  R_a ⊑ R_b  iff  aS ⊆ bS.  Requires regularity.
Poset quotient_poset_r(const FiniteSemigroup& s);
Poset quotient_poset_r(const FiniteSemigroup& s, const GreensData& g);

/// Least idempotent in each L-class (requires regular), indexed by L-class.
std::vector<int> l_class_idempotent_reps(const FiniteSemigroup& s, const GreensData& g);
std::vector<int> r_class_idempotent_reps(const FiniteSemigroup& s, const GreensData& g);

}  // namespace semicat
