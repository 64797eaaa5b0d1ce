#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "semicat/functors.hpp"

namespace semicat {

/// A semigroup whose elements are (partial) maps on {0..degree-1}; maps are
/// image vectors with -1 marking undefined points.
struct MapSemigroup {
  FiniteSemigroup sg;
  std::vector<std::vector<int>> maps;
  int degree = 0;
  bool partial = false;

  int index_of_map(const std::vector<int>& fn) const;

 private:
  friend MapSemigroup make_map_semigroup(int, std::vector<std::vector<int>>, bool);
  std::map<std::vector<int>, int> index_;
};

/// Full transformation monoid on n points (n <= 4); elements in lexicographic
/// image order.
MapSemigroup transformation_monoid(int n);
/// The non-bijective transformations (n in 2..4).
MapSemigroup singular_transformations(int n);
/// Symmetric inverse monoid: all partial bijections on n points (n <= 3).
MapSemigroup symmetric_inverse_monoid(int n);

/// A category whose objects are subsets of {0..n-1} (given as bitmasks) and
/// whose morphisms are (partial) maps between them.
struct SubsetCategory {
  int n = 0;
  bool partial = false;
  std::vector<int> object_mask;  // ascending
  std::shared_ptr<const FiniteCategory> category;
  std::vector<std::vector<int>> morphism_fn;  // id -> image vector, -1 outside

  int object_of_mask(int mask) const;
  int morphism_from_fn(int obj_a, int obj_b, const std::vector<int>& fn) const;

 private:
  friend SubsetCategory make_subset_category(int, std::vector<int>, bool);
  std::vector<std::map<std::vector<int>, int>> lookup_;  // per object pair
};

/// Set partition in canonical form: blocks ordered by least element, each
/// block ascending.
struct Partition {
  std::vector<std::vector<int>> blocks;
  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;
};

Partition kernel_partition(const std::vector<int>& fn, int n);
/// p is coarser than (or equal to) q: every block of q sits inside a block
/// of p.  As relation sets this is p ⊇ q.
bool coarser_or_equal(const Partition& p, const Partition& q);
std::vector<Partition> all_partitions(int n);
std::string partition_to_string(const Partition& p);

/// A catalog category packaged as a connected category over the full down-set
/// of cone R-classes, with partition labels where the model provides them.
struct CatalogCategory {
  SubsetCategory data;
  ConnectedCategory cc;
  /// For the total-map models: down-set position -> kernel partition of the
  /// top component of any member cone (empty when there is no top object).
  std::vector<Partition> r_class_partition;
};

/// Category of nonempty subsets of {0..n-1} with all maps (n in 1..3),
/// connected by the full partition-labelled down-set.
CatalogCategory powerset_category(int n);
/// Full subcategory on nonempty proper subsets (n in 2..3).
CatalogCategory singular_powerset(int n);
/// Category of all subsets (including the empty one) with partial bijections
/// (n in 1..3).
CatalogCategory partial_bijection_category(int n);

/// The isomorphism between the cone semigroup of the powerset category and
/// the full transformation monoid: a cone maps to its top component followed
/// by the image inclusion.  Verified bijective homomorphism.
SemigroupIso phi_isomorphism(const CatalogCategory& p, const MapSemigroup& tn);
/// The inverse direction: the restriction cone of a transformation.
Cone restriction_cone(const CatalogCategory& p, const std::vector<int>& fn);

/// Explicit CC-isomorphism from the connected category of a map semigroup
/// (transformations or partial bijections) onto its subset model: objects go
/// to element images, triples to restricted maps.  Throws IsoFailureError.
CCMorphism subset_model_iso(const SemigroupConnectedData& src,
                            const MapSemigroup& elems,
                            const CatalogCategory& target);

/// For an inverse semigroup: the isomorphism from the left ideal category to
/// the right ideal category sending r(e,u,f) to l(e,u^{-1},f).
CategoryIso inverse_left_right_iso(const FiniteSemigroup& s,
                                   const IdealCategoryData& left,
                                   const IdealCategoryData& right);

FiniteSemigroup left_zero_semigroup(int n);
FiniteSemigroup right_zero_semigroup(int n);
/// Two left (right) zero elements with a multiplicative zero adjoined.
FiniteSemigroup left_zero_pair_with_zero();
FiniteSemigroup right_zero_pair_with_zero();
FiniteSemigroup two_element_semilattice();
FiniteSemigroup chain_semilattice(int n);
FiniteSemigroup cyclic_group(int n);

/// All right regular bands of the given order, up to isomorphism, in
/// canonical table order (n <= 4).
std::vector<FiniteSemigroup> right_regular_bands(int n);

struct CatalogEntry {
  std::string name;
  std::string kind;  // "semigroup" | "category"
  std::string description;
  int order = -1;  // asserted when >= 0
  int l_classes = -1, r_classes = -1, d_classes = -1;
  std::vector<std::pair<std::string, bool>> flags;  // asserted classification
};

const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry* catalog_find(const std::string& name);

/// Builds a catalog semigroup by name (t2, t3sing, i2, z2, sl2, lzero2,
/// rzero2, lzero2-0, rzero2-0, rrb<n>-<k>, ...).  Throws InputError for
/// unknown names.
FiniteSemigroup catalog_semigroup(const std::string& name);
/// Builds a catalog category by name (p1..p3, sp2..sp3, x1..x3).
CatalogCategory catalog_category(const std::string& name);
bool catalog_is_category_name(const std::string& name);

struct CatalogCheck {
  std::string name;
  bool pass = true;
  std::string detail;
};

/// Rebuilds an entry and verifies its recorded expectations.
CatalogCheck verify_catalog_entry(const CatalogEntry& entry);

}  // namespace semicat
