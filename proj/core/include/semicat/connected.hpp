#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "semicat/cones.hpp"

namespace semicat {

/// A normal category together with a down-set of R-classes of its cone
/// semigroup such that every object is the vertex of an idempotent cone whose
/// R-class lies in the down-set.  Holds the full cone semigroup, the
/// connection table (object, down-set position) -> idempotent cone, and the
/// connection semigroup (the cones whose R-class lies in the down-set).
class ConnectedCategory {
 public:
  std::shared_ptr<const FiniteCategory> category;
  std::shared_ptr<const ConeSemigroup> all_cones;  // the full cone semigroup
  std::vector<int> downset;  // ascending R-class ids of the full cone semigroup
  /// connection[obj][pos] = index (in all_cones) of the unique idempotent cone
  /// with vertex obj and R-class downset[pos]; -1 when absent.
  std::vector<std::vector<int>> connection;
  std::shared_ptr<const ConeSemigroup> semigroup;  // the connection semigroup

  int downset_size() const { return static_cast<int>(downset.size()); }
  /// Position of a full-cone-semigroup R-class inside the down-set, or -1.
  int downset_pos(int r_class) const;
  int epsilon(int obj, int pos) const { return connection[obj][pos]; }
  /// Down-set position of the R-class of connection-semigroup element i.
  int element_downset_pos(int sub_index) const;
  /// The down-set with its inherited order.
  Poset downset_poset() const;
};

struct ConnectReport {
  bool ok = true;
  std::vector<std::string> problems;
};

/// Diagnoses the connectivity conditions for a candidate down-set: downward
/// closure, a connecting class for every object, and a connected object for
/// every class.
ConnectReport check_connected(const ConeSemigroup& all,
                              const std::vector<int>& downset);

/// Builds the connected category; throws NotDownClosedError /
/// ObjectNotConnectedError and re-verifies that the connection semigroup is a
/// closed, regular, left reductive subsemigroup.
ConnectedCategory connect(std::shared_ptr<const FiniteCategory> category,
                          std::shared_ptr<const ConeSemigroup> all,
                          std::vector<int> downset);

/// The connection semigroup of a connected category.
const ConeSemigroup& connection_semigroup(const ConnectedCategory& cc);

/// Membership of an arbitrary cone in the connection semigroup.
bool in_connection(const ConnectedCategory& cc, const Cone& cone);

struct ConeDecomposition {
  int object = -1;       // vertex of the idempotent factor (least-index choice)
  int downset_pos = -1;  // its down-set position
  int epsilon = -1;      // index in the full cone semigroup
  int iso = -1;          // morphism id; star(epsilon, iso) recomposes the cone
};

/// Writes a connection-semigroup cone as an idempotent cone followed by an
/// isomorphism.  Throws NotInConnectionSemigroupError for outside cones.
ConeDecomposition decompose(const ConnectedCategory& cc, const Cone& gamma);

struct SupportMap {
  std::vector<int> object_to_pos;  // object -> its unique down-set position
};

/// True iff every object is connected by exactly one down-set member.
bool is_supported(const ConnectedCategory& cc);

/// The support map of a supported category; verifies it is an order
/// preserving surjection and that the connection semigroup is L-unipotent.
/// Throws NotSupportedError otherwise.
SupportMap support_map(const ConnectedCategory& cc);

/// True iff the support map is an order isomorphism (requires supported;
/// throws NotSupportedError).  Cross-checks that the connection semigroup is
/// inverse.
bool is_self_supported(const ConnectedCategory& cc);

struct BoundedAboveReport {
  bool bounded = false;
  int top_object = -1;
  int identity_cone = -1;  // index in the cone semigroup, when bounded
};

/// Whether the object poset has a largest element; when it does, verifies
/// that the inclusion cone at the top is a two-sided identity of the full
/// cone semigroup (so the semigroup is a monoid).
BoundedAboveReport bounded_above(const ConeSemigroup& all);

/// The dual connection semigroup: same cones, composition reversed
/// (gamma o delta = delta * (gamma(z_delta))°, i.e. the opposite table).
/// Verifies the result is regular and right reductive.
FiniteSemigroup dual_connection_semigroup(const ConnectedCategory& cc);

}  // namespace semicat
