#include "semicat/left_right.hpp"

#include <algorithm>
#include <set>

#include "semicat/errors.hpp"

namespace semicat {

int IdealCategoryData::object_of(int element) const {
  int cls = side == IdealSide::left ? greens.l_class[element]
                                    : greens.r_class[element];
  return class_object[cls];
}

int IdealCategoryData::morphism_of(int obj_i, int obj_j, int u) const {
  const auto& map = lookup_[category->pair_id(obj_i, obj_j)];
  auto it = map.find(u);
  if (it == map.end())
    throw StructureError("element " + std::to_string(u) +
                         " does not define a morphism between these objects");
  return it->second;
}

IdealCategoryData build_ideal_category(const FiniteSemigroup& s, IdealSide side);

IdealCategoryData build_ideal_category(const FiniteSemigroup& s, IdealSide side) {
  if (!is_regular(s)) throw NotRegularError();

  IdealCategoryData d;
  d.side = side;
  d.sg = s;
  d.greens = greens(s);

  const bool left = side == IdealSide::left;
  const auto& cls = left ? d.greens.l_class : d.greens.r_class;
  int n_classes = left ? d.greens.n_l_classes : d.greens.n_r_classes;
  const BoolMatrix& leq = left ? d.greens.leq_l : d.greens.leq_r;

  // One object per class of idempotents; class ids are numbered by least
  // member, so scanning idempotents ascending yields ascending least reps.
  d.class_object.assign(n_classes, -1);
  for (int e : d.greens.idempotents) {
    if (d.class_object[cls[e]] == -1) {
      d.class_object[cls[e]] = static_cast<int>(d.object_rep.size());
      d.object_rep.push_back(e);
    }
  }
  for (int c = 0; c < n_classes; ++c)
    if (d.class_object[c] == -1)
      throw StructureError("ideal class without idempotent in a regular semigroup");

  int n_obj = static_cast<int>(d.object_rep.size());
  CategoryBuilder b(n_obj);
  for (int i = 0; i < n_obj; ++i)
    for (int j = 0; j < n_obj; ++j)
      if (leq.at(d.object_rep[i], d.object_rep[j])) b.set_object_leq(i, j);

  // hom(i, j) = { u in e_i S e_j } (left)  /  { u in e_j S e_i } (right).
  d.lookup_.assign(static_cast<size_t>(n_obj) * n_obj, {});
  auto sandwich = [&](int i, int j, int x) {
    int e = d.object_rep[i], f = d.object_rep[j];
    return left ? s.mul(s.mul(e, x), f) : s.mul(s.mul(f, x), e);
  };
  for (int i = 0; i < n_obj; ++i)
    for (int j = 0; j < n_obj; ++j) {
      std::set<int> values;
      for (int x = 0; x < s.size(); ++x) values.insert(sandwich(i, j, x));
      auto& map = d.lookup_[static_cast<size_t>(i) * n_obj + j];
      for (int u : values) {
        int id = b.add_morphism(i, j);
        map.emplace(u, id);
        d.triple.push_back({d.object_rep[i], u, d.object_rep[j]});
      }
    }

  for (int i = 0; i < n_obj; ++i)
    b.set_identity(i, d.lookup_[static_cast<size_t>(i) * n_obj + i].at(d.object_rep[i]));
  for (int i = 0; i < n_obj; ++i)
    for (int j = 0; j < n_obj; ++j) {
      if (i == j || !leq.at(d.object_rep[i], d.object_rep[j])) continue;
      b.set_inclusion(i, j,
                      d.lookup_[static_cast<size_t>(i) * n_obj + j].at(d.object_rep[i]));
    }

  // r(e,u,f) r(f,v,h) = r(e, uv, h);  l(e,u,f) l(f,v,h) = l(e, vu, h).
  // The product lands in the sandwich set of the outer pair directly.
  int n_mor = b.n_morphisms();
  for (int f = 0; f < n_mor; ++f)
    for (int g = 0; g < n_mor; ++g) {
      const auto& tf = d.triple[f];
      const auto& tg = d.triple[g];
      if (tf.f != tg.e) continue;
      int prod = left ? s.mul(tf.u, tg.u) : s.mul(tg.u, tf.u);
      int oi = d.class_object[cls[tf.e]];
      int oj = d.class_object[cls[tg.f]];
      b.set_compose(f, g, d.lookup_[static_cast<size_t>(oi) * n_obj + oj].at(prod));
    }

  d.category = std::make_shared<const FiniteCategory>(std::move(b).build());
  return d;
}

IdealCategoryData build_left_category(const FiniteSemigroup& s) {
  return build_ideal_category(s, IdealSide::left);
}

IdealCategoryData build_right_category(const FiniteSemigroup& s) {
  return build_ideal_category(s, IdealSide::right);
}

}  // namespace semicat
