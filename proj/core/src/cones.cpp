#include "semicat/cones.hpp"

#include <algorithm>

#include "semicat/errors.hpp"

namespace semicat {

ConeCheck is_cone(const FiniteCategory& c, const Cone& cand) {
  ConeCheck out;
  if (cand.vertex < 0 || cand.vertex >= c.n_objects() ||
      static_cast<int>(cand.components.size()) != c.n_objects()) {
    out.ok = false;
    out.reason = "malformed cone data";
    return out;
  }
  for (int obj = 0; obj < c.n_objects(); ++obj) {
    int m = cand.components[obj];
    if (m < 0 || m >= c.n_morphisms() || c.morphism(m).src != obj ||
        c.morphism(m).dst != cand.vertex) {
      out.ok = false;
      out.reason = "component at object " + std::to_string(obj) +
                   " is not a morphism into the vertex";
      out.obj_a = obj;
      return out;
    }
  }
  for (int a = 0; a < c.n_objects(); ++a)
    for (int b = 0; b < c.n_objects(); ++b) {
      if (a == b || !c.obj_leq(a, b)) continue;
      if (c.compose(c.inclusion(a, b), cand.components[b]) != cand.components[a]) {
        out.ok = false;
        out.reason = "inclusion compatibility fails";
        out.obj_a = a;
        out.obj_b = b;
        return out;
      }
    }
  bool has_iso = false;
  for (int obj = 0; obj < c.n_objects() && !has_iso; ++obj)
    if (c.is_iso(cand.components[obj])) has_iso = true;
  if (!has_iso) {
    out.ok = false;
    out.reason = "no isomorphism component";
  }
  return out;
}

Cone star(const FiniteCategory& c, const Cone& gamma, int epi) {
  if (c.morphism(epi).src != gamma.vertex)
    throw StructureError("star: morphism does not start at the cone vertex");
  if (!c.is_epi(epi))
    throw StructureError("star: morphism is not an epimorphism");
  Cone out;
  out.vertex = c.morphism(epi).dst;
  out.components.resize(c.n_objects());
  for (int obj = 0; obj < c.n_objects(); ++obj)
    out.components[obj] = c.compose(gamma.components[obj], epi);
  return out;
}

Cone compose_cones(const FiniteCategory& c, const Cone& gamma, const Cone& delta) {
  int m = delta.components[gamma.vertex];
  const auto& fact = c.factorization(m);
  if (!fact) throw NoFactorizationError(m);
  return star(c, gamma, fact->epi);
}

std::string serialize_cone(const Cone& cone, const FiniteCategory& c) {
  std::string out = std::to_string(cone.vertex) + ";";
  for (int obj = 0; obj < c.n_objects(); ++obj)
    out += " " + std::to_string(obj) + ":" +
           std::to_string(c.morphism(cone.components[obj]).local);
  return out;
}

namespace {

// Backtracking cone search.  `fixed_vertex` restricts the vertex; when
// `want_identity_at_vertex` the component there is pinned to the identity.
// Counts candidate partial assignments against the cap.
void search_cones(const FiniteCategory& c, int fixed_vertex,
                  bool want_identity_at_vertex, std::size_t cap,
                  std::vector<Cone>& out, bool stop_at_first) {
  std::vector<int> order = c.object_order().linear_extension_top_down();
  int n = c.n_objects();
  std::size_t tried = 0;

  for (int z = 0; z < n; ++z) {
    if (fixed_vertex != -1 && z != fixed_vertex) continue;
    std::vector<int> comp(n, -1);

    // DFS over positions in the top-down order.
    auto dfs = [&](auto&& self, int pos) -> bool {
      if (pos == n) {
        bool has_iso = false;
        for (int obj = 0; obj < n && !has_iso; ++obj)
          if (c.is_iso(comp[obj])) has_iso = true;
        if (!has_iso) return false;
        Cone cone;
        cone.vertex = z;
        cone.components = comp;
        out.push_back(std::move(cone));
        return stop_at_first;
      }
      int obj = order[pos];

      // Components of larger comparable objects force this one.
      int forced = -1;
      bool conflict = false;
      for (int q = 0; q < pos && !conflict; ++q) {
        int b = order[q];
        if (b == obj || !c.obj_leq(obj, b)) continue;
        int v = c.compose(c.inclusion(obj, b), comp[b]);
        if (forced == -1) forced = v;
        else if (forced != v) conflict = true;
      }
      if (conflict) return false;

      std::vector<int> candidates;
      if (forced != -1) {
        candidates.push_back(forced);
      } else {
        candidates = c.hom(obj, z);
      }
      if (want_identity_at_vertex && obj == z) {
        int id = c.identity(z);
        if (std::find(candidates.begin(), candidates.end(), id) ==
            candidates.end())
          return false;
        candidates = {id};
      }
      for (int m : candidates) {
        if (++tried > cap) throw SearchSpaceTooLargeError(cap);
        comp[obj] = m;
        if (self(self, pos + 1)) return true;
      }
      comp[obj] = -1;
      return false;
    };
    if (dfs(dfs, 0) && stop_at_first) return;
  }
}

}  // namespace

int ConeSemigroup::index_of(const Cone& cone) const {
  auto it = index_.find(cone);
  return it == index_.end() ? -1 : it->second;
}

ConeSemigroup make_cone_semigroup(std::shared_ptr<const FiniteCategory> c,
                                  std::vector<Cone> cones) {
  std::sort(cones.begin(), cones.end());
  cones.erase(std::unique(cones.begin(), cones.end()), cones.end());

  ConeSemigroup cs;
  cs.category = std::move(c);
  cs.cones = std::move(cones);
  for (int i = 0; i < cs.size(); ++i) cs.index_.emplace(cs.cones[i], i);

  int n = cs.size();
  std::vector<int> flat(static_cast<size_t>(n) * n);
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i)
    labels.push_back(serialize_cone(cs.cones[i], *cs.category));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Cone prod = compose_cones(*cs.category, cs.cones[a], cs.cones[b]);
      int idx = cs.index_of(prod);
      if (idx == -1)
        throw StructureError("cone set is not closed under composition");
      flat[static_cast<size_t>(a) * n + b] = idx;
    }
  cs.sg = FiniteSemigroup::from_flat_table(n, std::move(flat), std::move(labels),
                                           std::max(n, kDefaultSizeCap));
  cs.greens_data = greens(cs.sg);
  cs.r_poset = quotient_poset_r(cs.sg, cs.greens_data);
  return cs;
}

ConeSemigroup enumerate_cones(std::shared_ptr<const FiniteCategory> c,
                              std::size_t cap) {
  std::vector<Cone> found;
  search_cones(*c, -1, false, cap, found, false);
  if (found.empty())
    throw StructureError("category has no cones; it cannot be normal");
  return make_cone_semigroup(std::move(c), std::move(found));
}

ConeSemigroup cone_subsemigroup(const ConeSemigroup& full,
                                const std::vector<int>& indices) {
  std::vector<Cone> cones;
  cones.reserve(indices.size());
  for (int i : indices) cones.push_back(full.cones[i]);
  ConeSemigroup sub = make_cone_semigroup(full.category, std::move(cones));
  // make_cone_semigroup sorts; cones were already canonically sorted in the
  // parent so positions line up with `indices` order.
  sub.parent_index = indices;
  for (int i = 0; i < sub.size(); ++i)
    if (full.cones[indices[i]] != sub.cones[i])
      throw StructureError("subsemigroup element order mismatch");
  return sub;
}

std::optional<Cone> find_identity_cone(const FiniteCategory& c, int vertex,
                                       std::size_t cap) {
  std::vector<Cone> found;
  search_cones(c, vertex, true, cap, found, true);
  if (found.empty()) return std::nullopt;
  return found.front();
}

Cone principal_cone(const IdealCategoryData& left, int a) {
  if (left.side != IdealSide::left)
    throw StructureError("principal cones live in the left ideal category");
  const FiniteCategory& c = *left.category;
  Cone cone;
  cone.vertex = left.object_of(a);
  cone.components.resize(c.n_objects());
  for (int obj = 0; obj < c.n_objects(); ++obj) {
    int u = left.sg.mul(left.object_rep[obj], a);
    cone.components[obj] = left.morphism_of(obj, cone.vertex, u);
  }
  return cone;
}

NormalityReport verify_normal(const FiniteCategory& c) {
  NormalityReport rep;
  auto add = [&](const std::string& axiom, bool pass, const std::string& wit) {
    rep.checks.push_back({axiom, pass, pass ? "" : wit});
    rep.ok = rep.ok && pass;
  };

  SubobjectReport sub = verify_subobject_axioms(c);
  std::string subwit;
  for (const auto& chk : sub.checks)
    if (!chk.pass) subwit += (subwit.empty() ? "" : "; ") + chk.witness;
  add("subobject-structure", sub.ok, subwit);

  {
    bool pass = true;
    std::string wit;
    for (int a = 0; a < c.n_objects() && pass; ++a)
      for (int b = 0; b < c.n_objects() && pass; ++b) {
        if (a == b || !c.obj_leq(a, b)) continue;
        bool split = false;
        for (int q : c.hom(b, a))
          if (c.compose(c.inclusion(a, b), q) == c.identity(a)) {
            split = true;
            break;
          }
        if (!split) {
          pass = false;
          wit = "inclusion of object " + std::to_string(a) + " into " +
                std::to_string(b) + " has no retraction";
        }
      }
    add("inclusions-split", pass, wit);
  }

  {
    bool pass = true;
    std::string wit;
    for (int m = 0; m < c.n_morphisms() && pass; ++m)
      if (!c.factorization(m)) {
        pass = false;
        wit = "morphism " + c.describe_morphism(m) + " has no normal factorization";
      }
    add("normal-factorization", pass, wit);
  }

  {
    bool pass = true;
    std::string wit;
    for (int obj = 0; obj < c.n_objects() && pass; ++obj)
      if (!find_identity_cone(c, obj)) {
        pass = false;
        wit = "object " + std::to_string(obj) + " has no identity-component cone";
      }
    add("identity-cone-per-object", pass, wit);
  }
  return rep;
}

GreensCoherenceReport cone_greens_check(const ConeSemigroup& cs) {
  GreensCoherenceReport rep;
  const FiniteCategory& c = *cs.category;
  int n = cs.size();
  auto note = [&](const std::string& what, int i, int j) {
    rep.ok = false;
    if (rep.mismatches.size() < 32)
      rep.mismatches.push_back(what + " at cone pair (" + std::to_string(i) +
                               ", " + std::to_string(j) + ")");
  };

  for (int i = 0; i < n; ++i) {
    const Cone& g = cs.cones[i];
    for (int j = 0; j < n; ++j) {
      const Cone& d = cs.cones[j];
      ++rep.pairs_checked;

      bool table_ll = cs.greens_data.leq_l.at(i, j);
      if (table_ll != c.obj_leq(g.vertex, d.vertex))
        note("left quasi-order vs vertex order", i, j);

      bool table_l = table_ll && cs.greens_data.leq_l.at(j, i);
      if (table_l != (g.vertex == d.vertex))
        note("L-relation vs vertex equality", i, j);

      // right order: component of g at d's vertex is an epi recomposing g.
      int comp = g.components[d.vertex];
      bool cat_lr = c.is_epi(comp) && star(c, d, comp) == g;
      if (cs.greens_data.leq_r.at(i, j) != cat_lr)
        note("right quasi-order vs epimorphism translate", i, j);

      // R-relation: unique isomorphism translate.
      bool table_r = cs.greens_data.leq_r.at(i, j) && cs.greens_data.leq_r.at(j, i);
      int iso_translates = 0;
      for (int h : c.hom(d.vertex, g.vertex))
        if (c.is_iso(h) && star(c, d, h) == g) ++iso_translates;
      if (table_r != (iso_translates == 1))
        note("R-relation vs unique isomorphism translate", i, j);
      if (!table_r && iso_translates > 1)
        note("multiple isomorphism translates without R-relation", i, j);

      // natural order on idempotents: retraction component.
      if (cs.is_idempotent(i) && cs.is_idempotent(j)) {
        int nu_at = g.components[d.vertex];
        bool cat_leq = c.is_retraction(nu_at) && star(c, d, nu_at) == g;
        if (cs.greens_data.nat_leq.at(i, j) != cat_leq)
          note("idempotent natural order vs retraction component", i, j);
      }
    }
  }
  return rep;
}

}  // namespace semicat
