#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "semicat/category.hpp"
#include "semicat/left_right.hpp"
#include "semicat/semigroup.hpp"

namespace semicat {

inline constexpr std::size_t kDefaultConeSearchCap = 1000000;

/// A cone: one morphism into the vertex from every object, compatible with
/// inclusions, with at least one isomorphism component.
struct Cone {
  int vertex = -1;
  std::vector<int> components;  // object -> morphism id in hom(object, vertex)

  bool operator==(const Cone&) const = default;
  auto operator<=>(const Cone&) const = default;
};

struct ConeCheck {
  bool ok = true;
  std::string reason;
  int obj_a = -1, obj_b = -1;  // witness pair when commutativity fails
};

/// Checks the two cone conditions exhaustively.
ConeCheck is_cone(const FiniteCategory& c, const Cone& candidate);

/// γ ∗ f for an epimorphism f out of the vertex: component-wise composition.
Cone star(const FiniteCategory& c, const Cone& gamma, int epi);

/// Cone composition γ · δ = γ ∗ (δ(z_γ))°.
Cone compose_cones(const FiniteCategory& c, const Cone& gamma, const Cone& delta);

/// `vertex; c0:k c1:k ...` with k the local index within hom(c, vertex).
std::string serialize_cone(const Cone& cone, const FiniteCategory& c);

/// The semigroup of cones of a normal category (or a subsemigroup of it),
/// with its multiplication table, Green's data and R-class poset.
class ConeSemigroup {
 public:
  std::shared_ptr<const FiniteCategory> category;
  std::vector<Cone> cones;  // sorted canonical order
  FiniteSemigroup sg;       // table over cone indices
  GreensData greens_data;
  Poset r_poset;            // R-classes under inclusion of right ideals

  /// For a subsemigroup: element i corresponds to parent cone parent_index[i].
  std::vector<int> parent_index;

  int size() const { return static_cast<int>(cones.size()); }
  int index_of(const Cone& cone) const;  // -1 if absent
  bool is_idempotent(int i) const { return sg.mul(i, i) == i; }
  int r_class_of(int i) const { return greens_data.r_class[i]; }

 private:
  friend ConeSemigroup make_cone_semigroup(std::shared_ptr<const FiniteCategory>,
                                           std::vector<Cone>);
  std::map<Cone, int> index_;
};

/// Exhaustive backtracking enumeration of all cones, objects processed along
/// a maximal-first linear extension so inclusion constraints force components
/// early.  Throws SearchSpaceTooLargeError past `cap` partial assignments.
ConeSemigroup enumerate_cones(std::shared_ptr<const FiniteCategory> c,
                              std::size_t cap = kDefaultConeSearchCap);

/// Packs an explicit cone list into a ConeSemigroup (closure is verified).
ConeSemigroup make_cone_semigroup(std::shared_ptr<const FiniteCategory> c,
                                  std::vector<Cone> cones);

/// The subsemigroup on the given (ascending) element indices; verifies closure.
ConeSemigroup cone_subsemigroup(const ConeSemigroup& full,
                                const std::vector<int>& indices);

/// A cone μ with the given vertex and μ(vertex) = 1, if one exists.
std::optional<Cone> find_identity_cone(const FiniteCategory& c, int vertex,
                                       std::size_t cap = kDefaultConeSearchCap);

/// The principal cone of `a`: component at Se is x |-> x(ea), vertex at the
/// class of a.  Requires the left ideal category.
Cone principal_cone(const IdealCategoryData& left, int a);

struct GreensCoherenceReport {
  bool ok = true;
  long pairs_checked = 0;
  std::vector<std::string> mismatches;
};

/// Verifies, against table-derived Green's data, the categorical descriptions
/// of the quasi-orders in a cone semigroup: the left order by vertex order,
/// the right order by epimorphism components, R-classes by unique isomorphism
/// translates, and the natural order of idempotents by retraction components.
GreensCoherenceReport cone_greens_check(const ConeSemigroup& cs);

}  // namespace semicat
