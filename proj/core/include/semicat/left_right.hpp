#pragma once

#include <map>
#include <memory>
#include <vector>

#include "semicat/category.hpp"
#include "semicat/semigroup.hpp"

namespace semicat {

/// Canonical morphism datum of the left category: a morphism Se -> Sf is the
/// right translation x |-> xu for u in eSf.  Canonical form keeps e, f the
/// least idempotents of their L-classes.  In the right category the same
/// struct holds l(e, u, f) : eS -> fS, x |-> ux with u in fSe.
struct MorphismTriple {
  int e = -1, u = -1, f = -1;
  bool operator==(const MorphismTriple&) const = default;
};

enum class IdealSide { left, right };

/// The category of principal left (or right) ideals of a regular semigroup,
/// with its triple tagging and lookup tables.
struct IdealCategoryData {
  IdealSide side = IdealSide::left;
  FiniteSemigroup sg;
  GreensData greens;
  std::shared_ptr<const FiniteCategory> category;
  std::vector<int> object_rep;    // object -> least idempotent of its class
  std::vector<int> class_object;  // L-class (or R-class) id -> object id
  std::vector<MorphismTriple> triple;  // morphism id -> canonical triple

  /// Object housing the given semigroup element's principal ideal.
  int object_of(int element) const;
  /// Morphism id of the canonical triple (object_rep[i], u, object_rep[j]);
  /// u must already lie in e_i S e_j (left) / e_j S e_i (right).
  int morphism_of(int obj_i, int obj_j, int u) const;

 private:
  friend IdealCategoryData build_ideal_category(const FiniteSemigroup&, IdealSide);
  std::vector<std::map<int, int>> lookup_;  // pair id -> (u -> morphism id)
};

/// Builds the left category: objects are the principal left ideals Se for
/// idempotent e (one per L-class, ordered by ideal inclusion), morphisms are
/// canonical triples r(e, u, f) with composition r(e,u,f) r(f,v,h) = r(e,uv,h).
/// Throws NotRegularError on irregular input.
IdealCategoryData build_left_category(const FiniteSemigroup& s);

/// Dual construction on principal right ideals: triples l(e, u, f) with
/// u in fSe and composition l(e,u,f) l(f,v,h) = l(e, vu, h).
IdealCategoryData build_right_category(const FiniteSemigroup& s);

}  // namespace semicat
