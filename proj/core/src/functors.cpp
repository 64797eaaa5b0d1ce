#include "semicat/functors.hpp"

#include <algorithm>

#include "semicat/errors.hpp"

namespace semicat {

bool verify_homomorphism(const FiniteSemigroup& a, const FiniteSemigroup& b,
                         const std::vector<int>& map,
                         std::pair<int, int>* witness) {
  if (static_cast<int>(map.size()) != a.size()) return false;
  for (int x : map)
    if (x < 0 || x >= b.size()) return false;
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y)
      if (map[a.mul(x, y)] != b.mul(map[x], map[y])) {
        if (witness) *witness = {x, y};
        return false;
      }
  return true;
}

bool verify_isomorphism(const FiniteSemigroup& a, const FiniteSemigroup& b,
                        const std::vector<int>& map) {
  if (a.size() != b.size()) return false;
  std::vector<char> hit(b.size(), 0);
  for (int x : map) {
    if (x < 0 || x >= b.size() || hit[x]) return false;
    hit[x] = 1;
  }
  return verify_homomorphism(a, b, map, nullptr);
}

CCVerifyReport verify_cc_morphism(const ConnectedCategory& src,
                                  const ConnectedCategory& dst,
                                  const CCMorphism& m) {
  CCVerifyReport rep;
  const FiniteCategory& A = *src.category;
  const FiniteCategory& B = *dst.category;

  if (static_cast<int>(m.object_map.size()) != A.n_objects() ||
      static_cast<int>(m.morphism_map.size()) != A.n_morphisms() ||
      m.downset_map.size() != src.downset.size()) {
    rep.functor_ok = false;
    rep.problem = "map shapes do not match the source category";
    return rep;
  }
  for (int x : m.object_map)
    if (x < 0 || x >= B.n_objects()) {
      rep.functor_ok = false;
      rep.problem = "object map out of range";
      return rep;
    }
  for (int x : m.morphism_map)
    if (x < 0 || x >= B.n_morphisms()) {
      rep.functor_ok = false;
      rep.problem = "morphism map out of range";
      return rep;
    }
  for (int x : m.downset_map)
    if (x < 0 || x >= dst.downset_size()) {
      rep.downset_ok = false;
      rep.problem = "down-set map out of range";
      return rep;
    }

  for (int f = 0; f < A.n_morphisms() && rep.functor_ok; ++f) {
    const Morphism& mf = A.morphism(f);
    const Morphism& mg = B.morphism(m.morphism_map[f]);
    if (mg.src != m.object_map[mf.src] || mg.dst != m.object_map[mf.dst]) {
      rep.functor_ok = false;
      rep.problem = "morphism image has wrong endpoints at " +
                    A.describe_morphism(f);
    }
  }
  for (int c = 0; c < A.n_objects() && rep.functor_ok; ++c)
    if (m.morphism_map[A.identity(c)] != B.identity(m.object_map[c])) {
      rep.functor_ok = false;
      rep.problem = "identity not preserved at object " + std::to_string(c);
    }
  for (int f = 0; f < A.n_morphisms() && rep.functor_ok; ++f)
    for (int g = 0; g < A.n_morphisms() && rep.functor_ok; ++g) {
      int fg = A.compose(f, g);
      if (fg == -1) continue;
      if (m.morphism_map[fg] !=
          B.compose(m.morphism_map[f], m.morphism_map[g])) {
        rep.functor_ok = false;
        rep.problem = "composition not preserved at " + A.describe_morphism(f) +
                      " ; " + A.describe_morphism(g);
      }
    }

  for (int c = 0; c < A.n_objects() && rep.inclusions_ok; ++c)
    for (int d = 0; d < A.n_objects() && rep.inclusions_ok; ++d) {
      if (!A.obj_leq(c, d)) continue;
      if (!B.obj_leq(m.object_map[c], m.object_map[d]) ||
          m.morphism_map[A.inclusion(c, d)] !=
              B.inclusion(m.object_map[c], m.object_map[d])) {
        rep.inclusions_ok = false;
        rep.problem = "inclusion not preserved at objects (" +
                      std::to_string(c) + ", " + std::to_string(d) + ")";
      }
    }

  {
    Poset dp_src = src.downset_poset();
    Poset dp_dst = dst.downset_poset();
    for (int p = 0; p < dp_src.size() && rep.downset_ok; ++p)
      for (int q = 0; q < dp_src.size() && rep.downset_ok; ++q)
        if (dp_src.leq(p, q) &&
            !dp_dst.leq(m.downset_map[p], m.downset_map[q])) {
          rep.downset_ok = false;
          rep.problem = "down-set map is not order preserving at (" +
                        std::to_string(p) + ", " + std::to_string(q) + ")";
        }
  }

  for (int obj = 0; obj < A.n_objects() && rep.connection_ok; ++obj)
    for (int pos = 0; pos < src.downset_size() && rep.connection_ok; ++pos) {
      int eps = src.epsilon(obj, pos);
      if (eps == -1) continue;
      int eps2 = dst.epsilon(m.object_map[obj], m.downset_map[pos]);
      if (eps2 == -1) {
        rep.connection_ok = false;
        rep.problem = "image object " + std::to_string(m.object_map[obj]) +
                      " is not connected by the image down-set member";
        break;
      }
      const Cone& e1 = src.all_cones->cones[eps];
      const Cone& e2 = dst.all_cones->cones[eps2];
      for (int c = 0; c < A.n_objects(); ++c)
        if (m.morphism_map[e1.components[c]] !=
            e2.components[m.object_map[c]]) {
          rep.connection_ok = false;
          rep.problem =
              "idempotent cone components not preserved at object " +
              std::to_string(c) + " of the cone at (" + std::to_string(obj) +
              ", " + std::to_string(pos) + ")";
          break;
        }
    }
  return rep;
}

SemigroupConnectedData semigroup_to_connected(const FiniteSemigroup& s,
                                              std::size_t cone_cap) {
  SemigroupConnectedData d;
  d.sg = s;
  d.greens_data = greens(s);
  if (!is_regular(s)) throw NotRegularError();
  if (auto fail = left_reductive_failure(s))
    throw NotLeftReductiveError(fail->first, fail->second);

  d.left = build_left_category(s);
  auto all = std::make_shared<const ConeSemigroup>(
      enumerate_cones(d.left.category, cone_cap));

  d.principal.resize(s.size());
  for (int a = 0; a < s.size(); ++a) {
    int idx = all->index_of(principal_cone(d.left, a));
    if (idx == -1)
      throw StructureError("principal cone missing from the enumeration");
    d.principal[a] = idx;
  }

  std::vector<int> downset;
  for (int e : d.greens_data.idempotents)
    downset.push_back(all->r_class_of(d.principal[e]));
  d.connected = connect(d.left.category, all, std::move(downset));

  d.rho.resize(s.size());
  const auto& members = d.connected.semigroup->parent_index;
  for (int a = 0; a < s.size(); ++a) {
    auto it = std::lower_bound(members.begin(), members.end(), d.principal[a]);
    if (it == members.end() || *it != d.principal[a])
      throw StructureError("principal cone escaped the connection semigroup");
    d.rho[a] = static_cast<int>(it - members.begin());
  }
  return d;
}

const FiniteSemigroup& connection_to_semigroup(const ConnectedCategory& cc) {
  return cc.semigroup->sg;
}

SemigroupIso roundtrip_semigroup(const SemigroupConnectedData& data) {
  const ConeSemigroup& sub = *data.connected.semigroup;
  if (sub.size() != data.sg.size())
    throw IsoFailureError("connection semigroup has order " +
                          std::to_string(sub.size()) + ", expected " +
                          std::to_string(data.sg.size()));
  if (!verify_isomorphism(data.sg, sub.sg, data.rho))
    throw IsoFailureError("principal cone map is not an isomorphism");
  return SemigroupIso{data.rho};
}

CategoryRoundtrip roundtrip_category(const ConnectedCategory& cc,
                                     std::size_t cone_cap) {
  CategoryRoundtrip rt{semigroup_to_connected(cc.semigroup->sg, cone_cap), {}};
  const FiniteCategory& LT = *rt.inner.left.category;
  const FiniteCategory& C = *cc.category;
  const ConeSemigroup& T = *cc.semigroup;

  CCMorphism m;
  m.object_map.resize(LT.n_objects());
  for (int i = 0; i < LT.n_objects(); ++i)
    m.object_map[i] = T.cones[rt.inner.left.object_rep[i]].vertex;

  m.morphism_map.resize(LT.n_morphisms());
  for (int mid = 0; mid < LT.n_morphisms(); ++mid) {
    const MorphismTriple& t = rt.inner.left.triple[mid];
    const Cone& gu = T.cones[t.u];
    int z_e = T.cones[t.e].vertex;
    int z_f = T.cones[t.f].vertex;
    int j = C.inclusion(gu.vertex, z_f);
    if (j == -1)
      throw IsoFailureError("cone vertex not below the target object");
    m.morphism_map[mid] = C.compose(gu.components[z_e], j);
  }

  m.downset_map.assign(rt.inner.connected.downset.size(), -1);
  for (int t = 0; t < T.size(); ++t) {
    int p = rt.inner.connected.element_downset_pos(rt.inner.rho[t]);
    int q = cc.element_downset_pos(t);
    if (m.downset_map[p] == -1) m.downset_map[p] = q;
    else if (m.downset_map[p] != q)
      throw IsoFailureError("down-set correspondence is ill-defined");
  }
  for (int q : m.downset_map)
    if (q == -1) throw IsoFailureError("down-set correspondence is partial");

  CCVerifyReport rep = verify_cc_morphism(rt.inner.connected, cc, m);
  if (!rep.ok())
    throw IsoFailureError("category roundtrip verification: " + rep.problem);

  // Isomorphism checks: bijective order-isomorphic object map, bijective
  // morphism map, order-isomorphic down-set map.
  if (!rt.inner.connected.category->object_order().is_order_isomorphism(
          C.object_order(), m.object_map))
    throw IsoFailureError("object map is not an order isomorphism");
  {
    if (LT.n_morphisms() != C.n_morphisms())
      throw IsoFailureError("morphism counts differ");
    std::vector<char> hit(C.n_morphisms(), 0);
    for (int x : m.morphism_map) {
      if (hit[x]) throw IsoFailureError("morphism map is not injective");
      hit[x] = 1;
    }
  }
  if (!rt.inner.connected.downset_poset().is_order_isomorphism(
          cc.downset_poset(), m.downset_map))
    throw IsoFailureError("down-set map is not an order isomorphism");

  rt.iso = std::move(m);
  return rt;
}

CCMorphism hom_to_cc(const SemigroupConnectedData& src,
                     const SemigroupConnectedData& dst,
                     const std::vector<int>& phi) {
  std::pair<int, int> wit;
  if (!verify_homomorphism(src.sg, dst.sg, phi, &wit))
    throw NotHomomorphismError(wit.first, wit.second);

  const FiniteCategory& A = *src.left.category;
  CCMorphism m;
  m.object_map.resize(A.n_objects());
  for (int i = 0; i < A.n_objects(); ++i)
    m.object_map[i] = dst.left.object_of(phi[src.left.object_rep[i]]);

  m.morphism_map.resize(A.n_morphisms());
  for (int mid = 0; mid < A.n_morphisms(); ++mid) {
    const MorphismTriple& t = src.left.triple[mid];
    const Morphism& mo = A.morphism(mid);
    int fi = m.object_map[mo.src], fj = m.object_map[mo.dst];
    int rep_i = dst.left.object_rep[fi], rep_j = dst.left.object_rep[fj];
    int canon = dst.sg.mul(dst.sg.mul(rep_i, phi[t.u]), rep_j);
    m.morphism_map[mid] = dst.left.morphism_of(fi, fj, canon);
  }

  m.downset_map.assign(src.connected.downset.size(), -1);
  for (int e : src.greens_data.idempotents) {
    int p = src.connected.element_downset_pos(src.rho[e]);
    int q = dst.connected.element_downset_pos(dst.rho[phi[e]]);
    if (m.downset_map[p] == -1) m.downset_map[p] = q;
    else if (m.downset_map[p] != q)
      throw StructureError("induced down-set map is ill-defined");
  }
  for (int q : m.downset_map)
    if (q == -1) throw StructureError("induced down-set map is partial");

  CCVerifyReport rep = verify_cc_morphism(src.connected, dst.connected, m);
  if (!rep.ok())
    throw StructureError("induced pair is not a CC-morphism: " + rep.problem);
  return m;
}

std::vector<int> cc_to_hom(const ConnectedCategory& src,
                           const ConnectedCategory& dst, const CCMorphism& m) {
  CCVerifyReport rep = verify_cc_morphism(src, dst, m);
  if (!rep.ok()) throw CCConditionViolatedError(rep.problem);

  const ConeSemigroup& S = *src.semigroup;
  const ConeSemigroup& D = *dst.semigroup;
  const FiniteCategory& B = *dst.category;

  std::vector<int> out(S.size(), -1);
  for (int i = 0; i < S.size(); ++i) {
    const Cone& gamma = S.cones[i];
    int full = src.all_cones->index_of(gamma);
    int pos = src.downset_pos(src.all_cones->r_class_of(full));

    // Image through every available decomposition; Lemma-level
    // well-definedness is asserted rather than assumed.
    int image = -1;
    for (int c = 0; c < src.category->n_objects(); ++c) {
      int eps = src.epsilon(c, pos);
      if (eps == -1) continue;
      int u = gamma.components[c];
      if (!src.category->is_iso(u))
        throw StructureError("R-equivalent idempotent cone gives a non-iso component");
      int eps2 = dst.epsilon(m.object_map[c], m.downset_map[pos]);
      int fu = m.morphism_map[u];
      Cone img = star(B, dst.all_cones->cones[eps2], fu);
      int idx = D.index_of(img);
      if (idx == -1)
        throw StructureError("image cone is not in the target connection semigroup");
      if (image == -1) image = idx;
      else if (image != idx)
        throw StructureError("cone image depends on the chosen decomposition");
    }
    out[i] = image;
  }

  for (int i = 0; i < S.size(); ++i)
    for (int j = 0; j < S.size(); ++j)
      if (out[S.sg.mul(i, j)] != D.sg.mul(out[i], out[j]))
        throw StructureError("induced cone map is not multiplicative");
  return out;
}

BandAdjunctionReport band_adjunction_check(const SemigroupConnectedData& band,
                                           const ConnectedCategory& target,
                                           const std::vector<int>& phi) {
  BandAdjunctionReport rep;
  rep.band_ok = classify(band.sg, band.greens_data).right_regular_band;
  if (!rep.band_ok) {
    rep.detail = "input is not a right regular band";
    return rep;
  }

  const ConeSemigroup& cb = *band.connected.semigroup;
  rep.all_cones_idempotent = true;
  for (int i = 0; i < cb.size(); ++i)
    if (!cb.is_idempotent(i)) rep.all_cones_idempotent = false;

  const ConeSemigroup& T = *target.semigroup;
  rep.phi_ok = static_cast<int>(phi.size()) == band.sg.size();
  if (rep.phi_ok) {
    for (int b : phi)
      if (b < 0 || b >= T.size() || !T.is_idempotent(b)) rep.phi_ok = false;
  }
  if (rep.phi_ok && !verify_homomorphism(band.sg, T.sg, phi)) rep.phi_ok = false;
  if (!rep.phi_ok) {
    rep.detail = "phi is not a homomorphism into the idempotent cones";
    return rep;
  }

  const FiniteCategory& A = *band.left.category;
  const FiniteCategory& C = *target.category;
  CCMorphism m;
  m.object_map.resize(A.n_objects());
  for (int i = 0; i < A.n_objects(); ++i)
    m.object_map[i] = T.cones[phi[band.left.object_rep[i]]].vertex;
  m.morphism_map.resize(A.n_morphisms());
  for (int mid = 0; mid < A.n_morphisms(); ++mid) {
    const MorphismTriple& t = band.left.triple[mid];
    const Cone& pe = T.cones[phi[t.e]];
    const Cone& pu = T.cones[phi[t.u]];
    const Cone& pf = T.cones[phi[t.f]];
    int j = C.inclusion(pu.vertex, pf.vertex);
    if (j == -1) {
      rep.detail = "image cone vertex order breaks down";
      return rep;
    }
    m.morphism_map[mid] = C.compose(pu.components[pe.vertex], j);
  }
  m.downset_map.assign(band.connected.downset.size(), -1);
  for (int b = 0; b < band.sg.size(); ++b) {
    int p = band.connected.element_downset_pos(band.rho[b]);
    int q = target.element_downset_pos(phi[b]);
    if (m.downset_map[p] == -1) m.downset_map[p] = q;
    else if (m.downset_map[p] != q) {
      rep.detail = "induced down-set map is ill-defined";
      return rep;
    }
  }

  CCVerifyReport v = verify_cc_morphism(band.connected, target, m);
  rep.cc_morphism_ok = v.ok();
  if (!rep.cc_morphism_ok) {
    rep.detail = v.problem;
    return rep;
  }

  std::vector<int> psi;
  try {
    psi = cc_to_hom(band.connected, target, m);
  } catch (const Error& e) {
    rep.detail = e.what();
    return rep;
  }
  rep.triangle_ok = true;
  for (int b = 0; b < band.sg.size(); ++b)
    if (psi[band.rho[b]] != phi[b]) rep.triangle_ok = false;
  if (!rep.triangle_ok) rep.detail = "triangle does not commute";
  return rep;
}

bool verify_category_iso(const FiniteCategory& a, const FiniteCategory& b,
                         const CategoryIso& iso, std::string* problem) {
  auto fail = [&](const std::string& why) {
    if (problem) *problem = why;
    return false;
  };
  if (a.n_objects() != b.n_objects() || a.n_morphisms() != b.n_morphisms())
    return fail("sizes differ");
  if (static_cast<int>(iso.object_map.size()) != a.n_objects() ||
      static_cast<int>(iso.morphism_map.size()) != a.n_morphisms())
    return fail("witness shapes are wrong");
  if (!a.object_order().is_order_isomorphism(b.object_order(), iso.object_map))
    return fail("object map is not an order isomorphism");
  {
    std::vector<char> hit(b.n_morphisms(), 0);
    for (int x : iso.morphism_map) {
      if (x < 0 || x >= b.n_morphisms() || hit[x])
        return fail("morphism map is not a bijection");
      hit[x] = 1;
    }
  }
  for (int f = 0; f < a.n_morphisms(); ++f) {
    const Morphism& mf = a.morphism(f);
    const Morphism& mg = b.morphism(iso.morphism_map[f]);
    if (mg.src != iso.object_map[mf.src] || mg.dst != iso.object_map[mf.dst])
      return fail("typing not preserved");
    if (a.is_inclusion(f) != b.is_inclusion(iso.morphism_map[f]))
      return fail("inclusions not preserved");
  }
  for (int c = 0; c < a.n_objects(); ++c)
    if (iso.morphism_map[a.identity(c)] != b.identity(iso.object_map[c]))
      return fail("identities not preserved");
  for (int f = 0; f < a.n_morphisms(); ++f)
    for (int g = 0; g < a.n_morphisms(); ++g) {
      int fg = a.compose(f, g);
      if (fg == -1) continue;
      if (iso.morphism_map[fg] !=
          b.compose(iso.morphism_map[f], iso.morphism_map[g]))
        return fail("composition not preserved");
    }
  return true;
}

namespace {

class IsoSearch {
 public:
  IsoSearch(const FiniteCategory& a, const FiniteCategory& b,
            const std::function<bool(const CategoryIso&)>& visit)
      : a_(a), b_(b), visit_(visit) {}

  void run() {
    if (a_.n_objects() != b_.n_objects() || a_.n_morphisms() != b_.n_morphisms())
      return;
    omap_.assign(a_.n_objects(), -1);
    used_obj_.assign(b_.n_objects(), 0);
    mmap_.assign(a_.n_morphisms(), -1);
    used_mor_.assign(b_.n_morphisms(), 0);
    assign_objects(0);
  }

 private:
  bool objects_compatible(int x, int y) const {
    if (a_.hom(x, x).size() != b_.hom(y, y).size()) return false;
    for (int p = 0; p < a_.n_objects(); ++p) {
      if (omap_[p] == -1) continue;
      if (a_.obj_leq(x, p) != b_.obj_leq(y, omap_[p])) return false;
      if (a_.obj_leq(p, x) != b_.obj_leq(omap_[p], y)) return false;
      if (a_.hom(x, p).size() != b_.hom(y, omap_[p]).size()) return false;
      if (a_.hom(p, x).size() != b_.hom(omap_[p], y).size()) return false;
    }
    return true;
  }

  bool assign_objects(int next) {
    if (next == a_.n_objects()) return complete_morphisms();
    for (int y = 0; y < b_.n_objects(); ++y) {
      if (used_obj_[y] || !objects_compatible(next, y)) continue;
      omap_[next] = y;
      used_obj_[y] = 1;
      if (assign_objects(next + 1)) return true;
      omap_[next] = -1;
      used_obj_[y] = 0;
    }
    return false;
  }

  bool flags_match(int f, int g) const {
    const Morphism& mf = a_.morphism(f);
    const Morphism& mg = b_.morphism(g);
    if (mg.src != omap_[mf.src] || mg.dst != omap_[mf.dst]) return false;
    return a_.is_iso(f) == b_.is_iso(g) && a_.is_mono(f) == b_.is_mono(g) &&
           a_.is_epi(f) == b_.is_epi(g) &&
           a_.is_inclusion(f) == b_.is_inclusion(g) &&
           a_.is_retraction(f) == b_.is_retraction(g);
  }

  // Assign f -> g and propagate composites; records assignments in `trail`.
  bool assign(int f, int g, std::vector<int>& trail) {
    std::vector<std::pair<int, int>> pending{{f, g}};
    while (!pending.empty()) {
      auto [x, y] = pending.back();
      pending.pop_back();
      if (mmap_[x] == y) continue;
      if (mmap_[x] != -1 || used_mor_[y] || !flags_match(x, y)) return false;
      mmap_[x] = y;
      used_mor_[y] = 1;
      trail.push_back(x);
      for (int h = 0; h < a_.n_morphisms(); ++h) {
        if (mmap_[h] == -1) continue;
        int xh = a_.compose(x, h);
        if (xh != -1) pending.emplace_back(xh, b_.compose(y, mmap_[h]));
        int hx = a_.compose(h, x);
        if (hx != -1) pending.emplace_back(hx, b_.compose(mmap_[h], y));
      }
    }
    return true;
  }

  void undo(const std::vector<int>& trail) {
    for (int x : trail) {
      used_mor_[mmap_[x]] = 0;
      mmap_[x] = -1;
    }
  }

  bool complete_morphisms() {
    std::fill(mmap_.begin(), mmap_.end(), -1);
    std::fill(used_mor_.begin(), used_mor_.end(), 0);
    std::vector<int> trail;
    bool ok = true;
    for (int c = 0; c < a_.n_objects() && ok; ++c)
      ok = assign(a_.identity(c), b_.identity(omap_[c]), trail);
    for (int c = 0; c < a_.n_objects() && ok; ++c)
      for (int d = 0; d < a_.n_objects() && ok; ++d)
        if (a_.obj_leq(c, d))
          ok = assign(a_.inclusion(c, d), b_.inclusion(omap_[c], omap_[d]), trail);
    bool stop = ok && assign_morphisms();
    undo(trail);
    return stop;
  }

  bool assign_morphisms() {
    int f = -1;
    for (int x = 0; x < a_.n_morphisms(); ++x)
      if (mmap_[x] == -1) {
        f = x;
        break;
      }
    if (f == -1) {
      CategoryIso iso{omap_, mmap_};
      return visit_(iso);
    }
    const Morphism& mf = a_.morphism(f);
    for (int g : b_.hom(omap_[mf.src], omap_[mf.dst])) {
      if (used_mor_[g]) continue;
      std::vector<int> trail;
      if (assign(f, g, trail)) {
        if (assign_morphisms()) return true;
      }
      undo(trail);
    }
    return false;
  }

  const FiniteCategory& a_;
  const FiniteCategory& b_;
  const std::function<bool(const CategoryIso&)>& visit_;
  std::vector<int> omap_, mmap_;
  std::vector<char> used_obj_, used_mor_;
};

}  // namespace

void for_each_category_iso(const FiniteCategory& a, const FiniteCategory& b,
                           const std::function<bool(const CategoryIso&)>& visit) {
  IsoSearch(a, b, visit).run();
}

std::optional<CategoryIso> find_category_iso(const FiniteCategory& a,
                                             const FiniteCategory& b) {
  std::optional<CategoryIso> out;
  for_each_category_iso(a, b, [&](const CategoryIso& iso) {
    out = iso;
    return true;
  });
  return out;
}

Cone map_cone(const FiniteCategory& a, const FiniteCategory& b,
              const CategoryIso& iso, const Cone& cone) {
  Cone out;
  out.vertex = iso.object_map[cone.vertex];
  out.components.resize(b.n_objects());
  for (int c = 0; c < a.n_objects(); ++c)
    out.components[iso.object_map[c]] = iso.morphism_map[cone.components[c]];
  return out;
}

std::optional<CCMorphism> find_cc_iso(const ConnectedCategory& a,
                                      const ConnectedCategory& b) {
  if (a.downset.size() != b.downset.size()) return std::nullopt;
  std::optional<CCMorphism> out;
  for_each_category_iso(*a.category, *b.category, [&](const CategoryIso& iso) {
    std::vector<int> g(a.downset.size(), -1);
    for (int obj = 0; obj < a.category->n_objects(); ++obj)
      for (int pos = 0; pos < a.downset_size(); ++pos) {
        int eps = a.epsilon(obj, pos);
        if (eps == -1) continue;
        Cone img = map_cone(*a.category, *b.category, iso,
                            a.all_cones->cones[eps]);
        int idx = b.all_cones->index_of(img);
        if (idx == -1) return false;
        int q = b.downset_pos(b.all_cones->r_class_of(idx));
        if (q == -1) return false;
        if (g[pos] == -1) g[pos] = q;
        else if (g[pos] != q) return false;
      }
    for (int q : g)
      if (q == -1) return false;
    CCMorphism m{iso.object_map, iso.morphism_map, g};
    if (!a.downset_poset().is_order_isomorphism(b.downset_poset(), g))
      return false;
    if (!verify_cc_morphism(a, b, m).ok()) return false;
    out = std::move(m);
    return true;
  });
  return out;
}

}  // namespace semicat
