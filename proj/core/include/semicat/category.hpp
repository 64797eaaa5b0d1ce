#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semicat/poset.hpp"

namespace semicat {

/// A morphism in a finite category; `local` is its index within hom(src, dst).
struct Morphism {
  int src = -1, dst = -1, local = -1;
};

/// f = q u j with q a retraction, u an isomorphism and j an inclusion.
/// `epi` is the composite q·u — the epimorphic component, independent of the
/// chosen factorization.
struct NormalFactorization {
  int retraction = -1;  // q : src -> coimage
  int iso = -1;         // u : coimage -> image
  int inclusion = -1;   // j : image -> dst
  int coimage = -1;
  int image = -1;
  int epi = -1;         // q·u : src -> image
};

enum class TieBreak { least_index, greatest_index };

/// A finite category with subobjects, given by explicit tables.  Objects are
/// 0-based indices carrying a partial order (the inclusion preorder); each
/// ordered object pair has a finite hom-set; composition is written
/// diagrammatically: compose(f, g) is "f then g".
///
/// Construction-time validation covers the category axioms (associativity,
/// identities, designated inclusions forming a subcategory).  The subobject
/// axioms that can genuinely fail on hostile data (inclusions being monos,
/// the factoring property) are diagnosed by verify_subobject_axioms instead.
class FiniteCategory {
 public:
  int n_objects() const { return n_objects_; }
  int n_morphisms() const { return static_cast<int>(morphisms_.size()); }
  const Poset& object_order() const { return order_; }
  bool obj_leq(int c, int d) const { return order_.leq(c, d); }

  const Morphism& morphism(int m) const { return morphisms_[m]; }
  const std::vector<int>& hom(int c, int d) const { return hom_[pair_id(c, d)]; }
  int identity(int c) const { return identities_[c]; }
  /// Designated inclusion j(c, d); -1 unless c ⪯ d.
  int inclusion(int c, int d) const { return inclusion_[pair_id(c, d)]; }
  bool is_inclusion(int m) const { return is_inclusion_[m]; }

  /// Diagrammatic composition; -1 when not composable.
  int compose(int f, int g) const {
    return compose_[static_cast<size_t>(f) * morphisms_.size() + g];
  }

  bool is_iso(int m) const { return iso_inverse_[m] >= 0; }
  int iso_inverse(int m) const { return iso_inverse_[m]; }
  bool is_mono(int m) const { return is_mono_[m]; }
  bool is_epi(int m) const { return is_epi_[m]; }
  /// q : c -> d with d ⪯ c and j(d, c) q = 1_d.
  bool is_retraction(int m) const { return is_retraction_[m]; }

  /// Cached canonical data; nullopt when the morphism has no normal
  /// factorization (the category is not normal there).
  const std::optional<NormalFactorization>& factorization(int m) const {
    return factorization_[m];
  }

  int pair_id(int c, int d) const { return c * n_objects_ + d; }

  std::string describe_morphism(int m) const;

 private:
  friend class CategoryBuilder;
  int n_objects_ = 0;
  Poset order_;
  std::vector<Morphism> morphisms_;
  std::vector<std::vector<int>> hom_;  // by pair id
  std::vector<int> compose_;           // M x M, -1 if not composable
  std::vector<int> identities_;
  std::vector<int> inclusion_;         // by pair id, -1 if absent
  std::vector<char> is_inclusion_, is_mono_, is_epi_, is_retraction_;
  std::vector<int> iso_inverse_;       // -1 if not an isomorphism
  std::vector<std::optional<NormalFactorization>> factorization_;
};

class CategoryBuilder {
 public:
  explicit CategoryBuilder(int n_objects);

  /// Declare c ⪯ d (reflexivity is implicit).
  void set_object_leq(int c, int d);
  int add_morphism(int src, int dst);
  void set_identity(int c, int m);
  void set_inclusion(int c, int d, int m);
  void set_compose(int f, int g, int fg);

  int n_morphisms() const { return static_cast<int>(morphisms_.size()); }

  /// Validates and freezes.  Computes mono/epi/iso/retraction flags and the
  /// normal-factorization cache.
  FiniteCategory build() &&;

 private:
  int n_objects_;
  BoolMatrix leq_;
  std::vector<Morphism> morphisms_;
  std::vector<std::vector<int>> hom_;
  std::vector<std::pair<int, int>> compose_entries_;  // (f * M + g, fg) pending
  std::vector<int> identities_;
  std::vector<int> inclusion_;
};

struct AxiomCheck {
  std::string axiom;
  bool pass = true;
  std::string witness;  // empty when passed
};

struct SubobjectReport {
  bool ok = true;
  std::vector<AxiomCheck> checks;
};

/// Diagnoses the category-with-subobjects axioms: the inclusion subcategory is
/// a strict preorder over all objects, every inclusion is a monomorphism, and
/// inclusions factor through inclusions.
SubobjectReport verify_subobject_axioms(const FiniteCategory& c);

struct NormalityReport {
  bool ok = true;
  std::vector<AxiomCheck> checks;  // subobject-structure, inclusions-split,
                                   // normal-factorization, identity-cone-per-object
};

/// Diagnoses normality: subobject axioms, split inclusions, factorizations,
/// and an identity-component cone on every object (implemented with the cone
/// search machinery).
NormalityReport verify_normal(const FiniteCategory& c);

/// Recomputes a normal factorization of `m` from scratch with the requested
/// tie-breaking order for the coimage/retraction choice.  The epimorphic
/// component of the result is independent of the tie-break.
NormalFactorization normal_factorize(const FiniteCategory& c, int m,
                                     TieBreak tie = TieBreak::least_index);

/// The epimorphic component f° (from the cached factorization).
int epi_component(const FiniteCategory& c, int m);

/// Exhaustively checks (fg)° = f° (j_f g)° over all composable pairs.
bool check_epi_composition_rule(const FiniteCategory& c, std::string* witness = nullptr);

}  // namespace semicat
