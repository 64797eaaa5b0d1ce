#include "semicat/connected.hpp"

#include <algorithm>

#include "semicat/errors.hpp"

namespace semicat {

int ConnectedCategory::downset_pos(int r_class) const {
  auto it = std::lower_bound(downset.begin(), downset.end(), r_class);
  if (it == downset.end() || *it != r_class) return -1;
  return static_cast<int>(it - downset.begin());
}

int ConnectedCategory::element_downset_pos(int sub_index) const {
  int parent = semigroup->parent_index[sub_index];
  return downset_pos(all_cones->r_class_of(parent));
}

Poset ConnectedCategory::downset_poset() const {
  return all_cones->r_poset.restrict(downset);
}

ConnectReport check_connected(const ConeSemigroup& all,
                              const std::vector<int>& downset) {
  ConnectReport rep;
  int n_classes = all.r_poset.size();
  for (int d : downset)
    if (d < 0 || d >= n_classes) {
      rep.ok = false;
      rep.problems.push_back("down-set member " + std::to_string(d) +
                             " is not an R-class index");
      return rep;
    }
  std::pair<int, int> wit;
  if (!all.r_poset.is_down_set(downset, &wit)) {
    rep.ok = false;
    rep.problems.push_back("not downward closed: class " +
                           std::to_string(wit.first) + " lies below member " +
                           std::to_string(wit.second));
  }

  const FiniteCategory& cat = *all.category;
  std::vector<char> object_hit(cat.n_objects(), 0);
  std::vector<char> class_hit(downset.size(), 0);
  for (int i = 0; i < all.size(); ++i) {
    if (!all.is_idempotent(i)) continue;
    auto it = std::lower_bound(downset.begin(), downset.end(), all.r_class_of(i));
    if (it == downset.end() || *it != all.r_class_of(i)) continue;
    object_hit[all.cones[i].vertex] = 1;
    class_hit[it - downset.begin()] = 1;
  }
  for (int obj = 0; obj < cat.n_objects(); ++obj)
    if (!object_hit[obj]) {
      rep.ok = false;
      rep.problems.push_back("object " + std::to_string(obj) +
                             " is not connected by any down-set member");
    }
  for (size_t pos = 0; pos < downset.size(); ++pos)
    if (!class_hit[pos]) {
      rep.ok = false;
      rep.problems.push_back("down-set member " + std::to_string(downset[pos]) +
                             " connects no object");
    }
  return rep;
}

ConnectedCategory connect(std::shared_ptr<const FiniteCategory> category,
                          std::shared_ptr<const ConeSemigroup> all,
                          std::vector<int> downset) {
  std::sort(downset.begin(), downset.end());
  downset.erase(std::unique(downset.begin(), downset.end()), downset.end());

  ConnectedCategory cc;
  cc.category = std::move(category);
  cc.all_cones = std::move(all);
  cc.downset = std::move(downset);

  const ConeSemigroup& full = *cc.all_cones;
  {
    std::pair<int, int> wit;
    if (!full.r_poset.is_down_set(cc.downset, &wit))
      throw NotDownClosedError(wit.first, wit.second);
  }

  cc.connection.assign(cc.category->n_objects(),
                       std::vector<int>(cc.downset.size(), -1));
  for (int i = 0; i < full.size(); ++i) {
    if (!full.is_idempotent(i)) continue;
    int pos = cc.downset_pos(full.r_class_of(i));
    if (pos == -1) continue;
    int obj = full.cones[i].vertex;
    if (cc.connection[obj][pos] != -1)
      throw StructureError(
          "two distinct idempotent cones share a vertex and an R-class");
    cc.connection[obj][pos] = i;
  }
  for (int obj = 0; obj < cc.category->n_objects(); ++obj) {
    bool hit = false;
    for (int e : cc.connection[obj])
      if (e != -1) hit = true;
    if (!hit) throw ObjectNotConnectedError(obj);
  }

  std::vector<int> members;
  for (int i = 0; i < full.size(); ++i)
    if (cc.downset_pos(full.r_class_of(i)) != -1) members.push_back(i);
  ConeSemigroup sub = cone_subsemigroup(full, members);

  if (!is_regular(sub.sg))
    throw StructureError("connection semigroup failed the regularity check");
  if (auto fail = left_reductive_failure(sub.sg))
    throw NotLeftReductiveError(fail->first, fail->second);

  cc.semigroup = std::make_shared<const ConeSemigroup>(std::move(sub));
  return cc;
}

const ConeSemigroup& connection_semigroup(const ConnectedCategory& cc) {
  return *cc.semigroup;
}

bool in_connection(const ConnectedCategory& cc, const Cone& cone) {
  int idx = cc.all_cones->index_of(cone);
  if (idx == -1) return false;
  return cc.downset_pos(cc.all_cones->r_class_of(idx)) != -1;
}

ConeDecomposition decompose(const ConnectedCategory& cc, const Cone& gamma) {
  int idx = cc.all_cones->index_of(gamma);
  if (idx == -1) throw NotInConnectionSemigroupError();
  int pos = cc.downset_pos(cc.all_cones->r_class_of(idx));
  if (pos == -1) throw NotInConnectionSemigroupError();

  ConeDecomposition out;
  out.downset_pos = pos;
  for (int obj = 0; obj < cc.category->n_objects(); ++obj) {
    if (cc.connection[obj][pos] == -1) continue;
    out.object = obj;
    out.epsilon = cc.connection[obj][pos];
    break;
  }
  out.iso = gamma.components[out.object];
  const FiniteCategory& cat = *cc.category;
  if (!cat.is_iso(out.iso) ||
      star(cat, cc.all_cones->cones[out.epsilon], out.iso) != gamma)
    throw IsoFailureError("cone decomposition failed to recompose");
  return out;
}

bool is_supported(const ConnectedCategory& cc) {
  for (const auto& row : cc.connection) {
    int count = 0;
    for (int e : row)
      if (e != -1) ++count;
    if (count != 1) return false;
  }
  return true;
}

SupportMap support_map(const ConnectedCategory& cc) {
  if (!is_supported(cc)) throw NotSupportedError();
  SupportMap g;
  g.object_to_pos.resize(cc.category->n_objects());
  for (int obj = 0; obj < cc.category->n_objects(); ++obj) {
    for (size_t pos = 0; pos < cc.downset.size(); ++pos)
      if (cc.connection[obj][pos] != -1)
        g.object_to_pos[obj] = static_cast<int>(pos);
  }

  // Order preserving surjection onto the down-set.
  Poset dposet = cc.downset_poset();
  std::vector<char> hit(cc.downset.size(), 0);
  for (int obj = 0; obj < cc.category->n_objects(); ++obj) {
    hit[g.object_to_pos[obj]] = 1;
    for (int other = 0; other < cc.category->n_objects(); ++other)
      if (cc.category->obj_leq(obj, other) &&
          !dposet.leq(g.object_to_pos[obj], g.object_to_pos[other]))
        throw StructureError("support map is not order preserving");
  }
  for (char h : hit)
    if (!h) throw StructureError("support map is not surjective");

  if (!classify(cc.semigroup->sg, cc.semigroup->greens_data).l_unipotent)
    throw StructureError(
        "connection semigroup of a supported category is not L-unipotent");
  return g;
}

bool is_self_supported(const ConnectedCategory& cc) {
  SupportMap g = support_map(cc);  // throws NotSupportedError when unsupported
  Poset objects = cc.category->object_order();
  Poset dposet = cc.downset_poset();
  if (objects.size() != dposet.size()) return false;
  if (!objects.is_order_isomorphism(dposet, g.object_to_pos)) return false;
  if (!classify(cc.semigroup->sg, cc.semigroup->greens_data).inverse)
    throw StructureError(
        "connection semigroup of a self-supported category is not inverse");
  return true;
}

BoundedAboveReport bounded_above(const ConeSemigroup& all) {
  BoundedAboveReport rep;
  const FiniteCategory& cat = *all.category;
  auto top = cat.object_order().top();
  if (!top) return rep;
  rep.bounded = true;
  rep.top_object = *top;

  // The inclusion cone at the top object.
  Cone eps;
  eps.vertex = *top;
  eps.components.resize(cat.n_objects());
  for (int obj = 0; obj < cat.n_objects(); ++obj)
    eps.components[obj] = cat.inclusion(obj, *top);
  rep.identity_cone = all.index_of(eps);
  if (rep.identity_cone == -1)
    throw StructureError("inclusion cone at the top object was not enumerated");
  for (int x = 0; x < all.size(); ++x)
    if (all.sg.mul(rep.identity_cone, x) != x ||
        all.sg.mul(x, rep.identity_cone) != x)
      throw StructureError("top inclusion cone is not a two-sided identity");
  return rep;
}

FiniteSemigroup dual_connection_semigroup(const ConnectedCategory& cc) {
  FiniteSemigroup dual = opposite(cc.semigroup->sg);
  if (!is_regular(dual))
    throw StructureError("dual connection semigroup is not regular");
  if (!is_right_reductive(dual))
    throw StructureError("dual connection semigroup is not right reductive");
  return dual;
}

}  // namespace semicat
