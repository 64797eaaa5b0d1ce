#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "semicat/connected.hpp"

namespace semicat {

/// Witness for a semigroup isomorphism claim.
struct SemigroupIso {
  std::vector<int> map;  // element bijection, domain index -> codomain index
};

bool verify_homomorphism(const FiniteSemigroup& a, const FiniteSemigroup& b,
                         const std::vector<int>& map,
                         std::pair<int, int>* witness = nullptr);
bool verify_isomorphism(const FiniteSemigroup& a, const FiniteSemigroup& b,
                        const std::vector<int>& map);

/// A morphism of connected categories: an inclusion preserving functor
/// together with an order preserving map of down-sets, compatible with the
/// connection structure.
struct CCMorphism {
  std::vector<int> object_map;    // source object -> target object
  std::vector<int> morphism_map;  // source morphism id -> target morphism id
  std::vector<int> downset_map;   // source down-set position -> target position
};

struct CCVerifyReport {
  bool functor_ok = true;          // typing, identities, composition
  bool inclusions_ok = true;       // order and inclusion preservation
  bool downset_ok = true;          // G order preserving
  bool connection_ok = true;       // the compatibility condition on connections
  std::string problem;
  bool ok() const {
    return functor_ok && inclusions_ok && downset_ok && connection_ok;
  }
};

CCVerifyReport verify_cc_morphism(const ConnectedCategory& src,
                                  const ConnectedCategory& dst,
                                  const CCMorphism& m);

/// Everything the semigroup-to-category direction produces: the left ideal
/// category of S, its full cone semigroup, the down-set of R-classes of
/// principal cones, the resulting connected category, and the principal-cone
/// embedding of S.
struct SemigroupConnectedData {
  FiniteSemigroup sg;
  GreensData greens_data;
  IdealCategoryData left;
  ConnectedCategory connected;
  std::vector<int> principal;  // element -> index in connected.all_cones
  std::vector<int> rho;        // element -> index in connected.semigroup
};

/// The functor from left reductive regular semigroups to connected
/// categories.  Throws NotRegularError / NotLeftReductiveError.
SemigroupConnectedData semigroup_to_connected(
    const FiniteSemigroup& s, std::size_t cone_cap = kDefaultConeSearchCap);

/// The functor back: the connection semigroup as a plain semigroup.
const FiniteSemigroup& connection_to_semigroup(const ConnectedCategory& cc);

/// Verifies that a |-> (principal cone of a) is a semigroup isomorphism onto
/// the connection semigroup and returns it.  Throws IsoFailureError on any
/// mismatch (which would indicate a bug, not a data condition).
SemigroupIso roundtrip_semigroup(const SemigroupConnectedData& data);

struct CategoryRoundtrip {
  SemigroupConnectedData inner;  // connected category rebuilt from the
                                 // connection semigroup
  CCMorphism iso;                // CC-isomorphism inner.connected -> original
};

/// Rebuilds a connected category from its connection semigroup and returns a
/// verified CC-isomorphism back to the original.  Throws IsoFailureError.
CategoryRoundtrip roundtrip_category(const ConnectedCategory& cc,
                                     std::size_t cone_cap = kDefaultConeSearchCap);

/// Lifts a homomorphism between left reductive regular semigroups to a
/// CC-morphism between their connected categories.  Throws
/// NotHomomorphismError; the verification of the result is asserted.
CCMorphism hom_to_cc(const SemigroupConnectedData& src,
                     const SemigroupConnectedData& dst,
                     const std::vector<int>& phi);

/// Turns a CC-morphism into a homomorphism between connection semigroups by
/// decomposing every cone through an idempotent cone and an isomorphism.
/// Throws CCConditionViolatedError when the connection compatibility
/// condition fails; well-definedness (independence of the decomposition) and
/// multiplicativity are asserted exhaustively.
std::vector<int> cc_to_hom(const ConnectedCategory& src,
                           const ConnectedCategory& dst, const CCMorphism& m);

struct BandAdjunctionReport {
  bool band_ok = false;              // input is a right regular band
  bool all_cones_idempotent = false; // every cone of its connection semigroup
  bool phi_ok = false;               // phi is a hom into idempotent cones
  bool cc_morphism_ok = false;       // the induced pair is a CC-morphism
  bool triangle_ok = false;          // phi factors through the principal-cone iso
  std::string detail;
  bool ok() const {
    return band_ok && all_cones_idempotent && phi_ok && cc_morphism_ok &&
           triangle_ok;
  }
};

/// Adjunction unit check for right regular bands: given B (already run
/// through semigroup_to_connected), a target connected category and a
/// homomorphism phi from B into the idempotent cones of the target's
/// connection semigroup (phi[b] = connection-semigroup index), builds the
/// induced CC-morphism and verifies the commuting triangle.
BandAdjunctionReport band_adjunction_check(const SemigroupConnectedData& band,
                                           const ConnectedCategory& target,
                                           const std::vector<int>& phi);

/// Witness for a normal-category isomorphism claim.
struct CategoryIso {
  std::vector<int> object_map;
  std::vector<int> morphism_map;
};

/// Fully faithful inclusion preserving functor with an order-isomorphic
/// bijective object map.
bool verify_category_iso(const FiniteCategory& a, const FiniteCategory& b,
                         const CategoryIso& iso, std::string* problem = nullptr);

/// Exhaustive search over object bijections respecting the object order and
/// hom-set size profiles, completed to a morphism bijection consistent with
/// composition.  Returns the lexicographically least witness.
std::optional<CategoryIso> find_category_iso(const FiniteCategory& a,
                                             const FiniteCategory& b);

/// Enumerates category isomorphisms until `visit` returns true.
void for_each_category_iso(const FiniteCategory& a, const FiniteCategory& b,
                           const std::function<bool(const CategoryIso&)>& visit);

/// Maps a cone through a category isomorphism.
Cone map_cone(const FiniteCategory& a, const FiniteCategory& b,
              const CategoryIso& iso, const Cone& cone);

/// Searches for a CC-isomorphism by enumerating category isomorphisms and
/// transporting the connection structure.
std::optional<CCMorphism> find_cc_iso(const ConnectedCategory& a,
                                      const ConnectedCategory& b);

}  // namespace semicat
