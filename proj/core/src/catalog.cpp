#include "semicat/catalog.hpp"

#include <algorithm>
#include <numeric>

#include "semicat/errors.hpp"
#include "semicat/semigroup_io.hpp"

namespace semicat {

namespace {

int popcount(int mask) { return __builtin_popcount(static_cast<unsigned>(mask)); }

std::vector<int> mask_bits(int mask) {
  std::vector<int> out;
  for (int i = 0; mask >> i; ++i)
    if (mask & (1 << i)) out.push_back(i);
  return out;
}

int image_mask(const std::vector<int>& fn) {
  int m = 0;
  for (int v : fn)
    if (v >= 0) m |= 1 << v;
  return m;
}

std::vector<std::vector<int>> all_total_maps(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> fn(n, 0);
  while (true) {
    out.push_back(fn);
    int i = n - 1;
    while (i >= 0 && fn[i] == n - 1) fn[i--] = 0;
    if (i < 0) break;
    ++fn[i];
  }
  return out;
}

void partial_injections_rec(int n, int pos, std::vector<int>& fn, int used,
                            std::vector<std::vector<int>>& out) {
  if (pos == n) {
    out.push_back(fn);
    return;
  }
  fn[pos] = -1;
  partial_injections_rec(n, pos + 1, fn, used, out);
  for (int v = 0; v < n; ++v) {
    if (used & (1 << v)) continue;
    fn[pos] = v;
    partial_injections_rec(n, pos + 1, fn, used | (1 << v), out);
  }
  fn[pos] = -1;
}

std::vector<std::vector<int>> all_partial_injections(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> fn(n, -1);
  partial_injections_rec(n, 0, fn, 0, out);
  return out;
}

}  // namespace

MapSemigroup make_map_semigroup(int degree, std::vector<std::vector<int>> maps,
                                bool partial);

MapSemigroup make_map_semigroup(int degree, std::vector<std::vector<int>> maps,
                                bool partial) {
  MapSemigroup out;
  out.degree = degree;
  out.partial = partial;
  out.sg = semigroup_from_maps(degree, maps, partial);
  if (out.sg.size() != static_cast<int>(maps.size()))
    throw StructureError("map family is not closed under composition");
  out.maps = std::move(maps);
  for (int i = 0; i < static_cast<int>(out.maps.size()); ++i)
    out.index_.emplace(out.maps[i], i);
  return out;
}

int MapSemigroup::index_of_map(const std::vector<int>& fn) const {
  auto it = index_.find(fn);
  if (it == index_.end())
    throw StructureError("map is not an element of this semigroup");
  return it->second;
}

MapSemigroup transformation_monoid(int n) {
  if (n < 1 || n > 4)
    throw CapExceededError("transformation monoid degree " + std::to_string(n), 4);
  return make_map_semigroup(n, all_total_maps(n), false);
}

MapSemigroup singular_transformations(int n) {
  if (n < 2 || n > 4)
    throw CapExceededError("singular transformations degree " + std::to_string(n), 4);
  std::vector<std::vector<int>> maps;
  for (auto& fn : all_total_maps(n))
    if (popcount(image_mask(fn)) < n) maps.push_back(fn);
  return make_map_semigroup(n, std::move(maps), false);
}

MapSemigroup symmetric_inverse_monoid(int n) {
  if (n < 1 || n > 3)
    throw CapExceededError("symmetric inverse monoid degree " + std::to_string(n), 3);
  return make_map_semigroup(n, all_partial_injections(n), true);
}

int SubsetCategory::object_of_mask(int mask) const {
  auto it = std::lower_bound(object_mask.begin(), object_mask.end(), mask);
  if (it == object_mask.end() || *it != mask)
    throw StructureError("no object with the requested underlying set");
  return static_cast<int>(it - object_mask.begin());
}

int SubsetCategory::morphism_from_fn(int obj_a, int obj_b,
                                     const std::vector<int>& fn) const {
  const auto& map = lookup_[static_cast<size_t>(obj_a) * object_mask.size() + obj_b];
  auto it = map.find(fn);
  if (it == map.end())
    throw StructureError("map is not a morphism between these objects");
  return it->second;
}

SubsetCategory make_subset_category(int n, std::vector<int> masks, bool partial);

SubsetCategory make_subset_category(int n, std::vector<int> masks, bool partial) {
  std::sort(masks.begin(), masks.end());
  SubsetCategory sc;
  sc.n = n;
  sc.partial = partial;
  sc.object_mask = std::move(masks);
  int n_obj = static_cast<int>(sc.object_mask.size());
  sc.lookup_.assign(static_cast<size_t>(n_obj) * n_obj, {});

  CategoryBuilder b(n_obj);
  for (int i = 0; i < n_obj; ++i)
    for (int j = 0; j < n_obj; ++j)
      if ((sc.object_mask[i] & sc.object_mask[j]) == sc.object_mask[i])
        b.set_object_leq(i, j);

  // Enumerate hom-sets in lexicographic order over image vectors.
  for (int i = 0; i < n_obj; ++i)
    for (int j = 0; j < n_obj; ++j) {
      auto dom = mask_bits(sc.object_mask[i]);
      auto cod = mask_bits(sc.object_mask[j]);
      std::vector<std::vector<int>> fns;
      std::vector<int> fn(n, -1);
      if (!partial) {
        if (dom.empty()) {
          fns.push_back(fn);
        } else if (!cod.empty()) {
          // odometer over dom positions, values in cod
          std::vector<size_t> idx(dom.size(), 0);
          while (true) {
            for (size_t k = 0; k < dom.size(); ++k) fn[dom[k]] = cod[idx[k]];
            fns.push_back(fn);
            int k = static_cast<int>(dom.size()) - 1;
            while (k >= 0 && idx[k] + 1 == cod.size()) idx[k--] = 0;
            if (k < 0) break;
            ++idx[k];
          }
          std::fill(fn.begin(), fn.end(), -1);
        }
      } else {
        // injective partial maps dom -> cod, lexicographic with -1 first
        auto rec = [&](auto&& self, size_t k, int used) -> void {
          if (k == dom.size()) {
            fns.push_back(fn);
            return;
          }
          fn[dom[k]] = -1;
          self(self, k + 1, used);
          for (int v : cod) {
            if (used & (1 << v)) continue;
            fn[dom[k]] = v;
            self(self, k + 1, used | (1 << v));
          }
          fn[dom[k]] = -1;
        };
        rec(rec, 0, 0);
      }
      auto& map = sc.lookup_[static_cast<size_t>(i) * n_obj + j];
      for (auto& f : fns) {
        int id = b.add_morphism(i, j);
        map.emplace(f, id);
        sc.morphism_fn.push_back(f);
      }
    }

  for (int i = 0; i < n_obj; ++i) {
    std::vector<int> fn(n, -1);
    for (int x : mask_bits(sc.object_mask[i])) fn[x] = x;
    b.set_identity(i, sc.lookup_[static_cast<size_t>(i) * n_obj + i].at(fn));
    for (int j = 0; j < n_obj; ++j) {
      if (i == j) continue;
      if ((sc.object_mask[i] & sc.object_mask[j]) != sc.object_mask[i]) continue;
      b.set_inclusion(i, j, sc.lookup_[static_cast<size_t>(i) * n_obj + j].at(fn));
    }
  }

  // Compositions: pointwise application.
  for (int i = 0; i < n_obj; ++i)
    for (int j = 0; j < n_obj; ++j)
      for (int k = 0; k < n_obj; ++k) {
        const auto& ab = sc.lookup_[static_cast<size_t>(i) * n_obj + j];
        const auto& bc = sc.lookup_[static_cast<size_t>(j) * n_obj + k];
        const auto& ac = sc.lookup_[static_cast<size_t>(i) * n_obj + k];
        for (const auto& [ffn, fid] : ab)
          for (const auto& [gfn, gid] : bc) {
            std::vector<int> h(n, -1);
            for (int x = 0; x < n; ++x)
              if (ffn[x] != -1) h[x] = gfn[ffn[x]];
            b.set_compose(fid, gid, ac.at(h));
          }
      }

  sc.category = std::make_shared<const FiniteCategory>(std::move(b).build());
  return sc;
}

Partition kernel_partition(const std::vector<int>& fn, int n) {
  Partition p;
  std::vector<int> block_of_value(n + 1, -1);
  for (int x = 0; x < n; ++x) {
    int v = fn[x];
    if (v < 0) continue;  // undefined points do not enter the kernel
    if (block_of_value[v] == -1) {
      block_of_value[v] = static_cast<int>(p.blocks.size());
      p.blocks.push_back({});
    }
    p.blocks[block_of_value[v]].push_back(x);
  }
  std::sort(p.blocks.begin(), p.blocks.end());
  return p;
}

bool coarser_or_equal(const Partition& p, const Partition& q) {
  // every block of q is contained in a block of p
  for (const auto& qb : q.blocks) {
    bool inside = false;
    for (const auto& pb : p.blocks) {
      if (std::includes(pb.begin(), pb.end(), qb.begin(), qb.end())) {
        inside = true;
        break;
      }
    }
    if (!inside) return false;
  }
  return true;
}

std::vector<Partition> all_partitions(int n) {
  // restricted growth strings in lexicographic order
  std::vector<Partition> out;
  std::vector<int> rgs(n, 0);
  auto rec = [&](auto&& self, int pos, int max_used) -> void {
    if (pos == n) {
      Partition p;
      p.blocks.assign(max_used + 1, {});
      for (int x = 0; x < n; ++x) p.blocks[rgs[x]].push_back(x);
      out.push_back(std::move(p));
      return;
    }
    for (int v = 0; v <= max_used + 1 && v < n; ++v) {
      rgs[pos] = v;
      self(self, pos + 1, std::max(max_used, v));
    }
  };
  if (n == 0) return {Partition{}};
  rec(rec, 0, -1);
  return out;
}

std::string partition_to_string(const Partition& p) {
  std::string out;
  for (size_t i = 0; i < p.blocks.size(); ++i) {
    if (i) out += "|";
    for (size_t j = 0; j < p.blocks[i].size(); ++j) {
      if (j) out += " ";
      out += std::to_string(p.blocks[i][j] + 1);
    }
  }
  return "{" + out + "}";
}

namespace {

CatalogCategory connect_subset_category(SubsetCategory sc) {
  CatalogCategory out;
  out.data = std::move(sc);
  auto all = std::make_shared<const ConeSemigroup>(
      enumerate_cones(out.data.category));
  std::vector<int> downset(all->greens_data.n_r_classes);
  std::iota(downset.begin(), downset.end(), 0);
  out.cc = connect(out.data.category, all, std::move(downset));

  auto top = out.data.category->object_order().top();
  if (top) {
    out.r_class_partition.resize(out.cc.downset.size());
    std::vector<char> seen(out.cc.downset.size(), 0);
    for (int i = 0; i < out.cc.all_cones->size(); ++i) {
      int pos = out.cc.downset_pos(out.cc.all_cones->r_class_of(i));
      if (seen[pos]) continue;
      seen[pos] = 1;
      const Cone& cone = out.cc.all_cones->cones[i];
      out.r_class_partition[pos] =
          kernel_partition(out.data.morphism_fn[cone.components[*top]],
                           out.data.n);
    }
  }
  return out;
}

}  // namespace

CatalogCategory powerset_category(int n) {
  if (n < 1 || n > 3)
    throw CapExceededError("powerset category degree " + std::to_string(n), 3);
  std::vector<int> masks;
  for (int m = 1; m < (1 << n); ++m) masks.push_back(m);
  return connect_subset_category(make_subset_category(n, std::move(masks), false));
}

CatalogCategory singular_powerset(int n) {
  if (n < 2 || n > 3)
    throw CapExceededError("singular powerset degree " + std::to_string(n), 3);
  std::vector<int> masks;
  for (int m = 1; m < (1 << n) - 1; ++m) masks.push_back(m);
  return connect_subset_category(make_subset_category(n, std::move(masks), false));
}

CatalogCategory partial_bijection_category(int n) {
  if (n < 1 || n > 3)
    throw CapExceededError("partial bijection category degree " + std::to_string(n), 3);
  std::vector<int> masks;
  for (int m = 0; m < (1 << n); ++m) masks.push_back(m);
  return connect_subset_category(make_subset_category(n, std::move(masks), true));
}

SemigroupIso phi_isomorphism(const CatalogCategory& p, const MapSemigroup& tn) {
  auto top = p.data.category->object_order().top();
  if (!top) throw StructureError("phi needs a largest object");
  const ConeSemigroup& cones = *p.cc.all_cones;
  SemigroupIso iso;
  iso.map.resize(cones.size());
  for (int i = 0; i < cones.size(); ++i) {
    const auto& fn = p.data.morphism_fn[cones.cones[i].components[*top]];
    iso.map[i] = tn.index_of_map(fn);
  }
  if (!verify_isomorphism(cones.sg, tn.sg, iso.map))
    throw IsoFailureError("top-component map failed to verify as an isomorphism");
  return iso;
}

Cone restriction_cone(const CatalogCategory& p, const std::vector<int>& fn) {
  const SubsetCategory& sc = p.data;
  Cone cone;
  cone.vertex = sc.object_of_mask(image_mask(fn));
  cone.components.resize(sc.category->n_objects());
  for (int obj = 0; obj < sc.category->n_objects(); ++obj) {
    std::vector<int> restricted(sc.n, -1);
    for (int x : mask_bits(sc.object_mask[obj])) restricted[x] = fn[x];
    cone.components[obj] = sc.morphism_from_fn(obj, cone.vertex, restricted);
  }
  return cone;
}

namespace {

std::optional<std::vector<int>> transport_downset_map(
    const ConnectedCategory& a, const ConnectedCategory& b,
    const std::vector<int>& object_map, const std::vector<int>& morphism_map) {
  std::vector<int> g(a.downset.size(), -1);
  for (int obj = 0; obj < a.category->n_objects(); ++obj)
    for (int pos = 0; pos < a.downset_size(); ++pos) {
      int eps = a.epsilon(obj, pos);
      if (eps == -1) continue;
      const Cone& cone = a.all_cones->cones[eps];
      Cone img;
      img.vertex = object_map[cone.vertex];
      img.components.resize(b.category->n_objects());
      for (int c = 0; c < a.category->n_objects(); ++c)
        img.components[object_map[c]] = morphism_map[cone.components[c]];
      int idx = b.all_cones->index_of(img);
      if (idx == -1) return std::nullopt;
      int q = b.downset_pos(b.all_cones->r_class_of(idx));
      if (q == -1) return std::nullopt;
      if (g[pos] == -1) g[pos] = q;
      else if (g[pos] != q) return std::nullopt;
    }
  for (int q : g)
    if (q == -1) return std::nullopt;
  return g;
}

}  // namespace

CCMorphism subset_model_iso(const SemigroupConnectedData& src,
                            const MapSemigroup& elems,
                            const CatalogCategory& target) {
  const FiniteCategory& A = *src.left.category;
  CCMorphism m;
  m.object_map.resize(A.n_objects());
  for (int i = 0; i < A.n_objects(); ++i)
    m.object_map[i] =
        target.data.object_of_mask(image_mask(elems.maps[src.left.object_rep[i]]));

  m.morphism_map.resize(A.n_morphisms());
  for (int mid = 0; mid < A.n_morphisms(); ++mid) {
    const MorphismTriple& t = src.left.triple[mid];
    const Morphism& mo = A.morphism(mid);
    int dom = image_mask(elems.maps[t.e]);
    const auto& ufn = elems.maps[t.u];
    std::vector<int> fn(elems.degree, -1);
    for (int x : mask_bits(dom)) fn[x] = ufn[x];
    m.morphism_map[mid] = target.data.morphism_from_fn(
        m.object_map[mo.src], m.object_map[mo.dst], fn);
  }

  auto g = transport_downset_map(src.connected, target.cc, m.object_map,
                                 m.morphism_map);
  if (!g) throw IsoFailureError("down-set transport failed");
  m.downset_map = std::move(*g);

  CategoryIso cat_iso{m.object_map, m.morphism_map};
  std::string why;
  if (!verify_category_iso(A, *target.data.category, cat_iso, &why))
    throw IsoFailureError("subset model functor: " + why);
  if (!src.connected.downset_poset().is_order_isomorphism(
          target.cc.downset_poset(), m.downset_map))
    throw IsoFailureError("subset model down-set map is not an order isomorphism");
  if (!verify_cc_morphism(src.connected, target.cc, m).ok())
    throw IsoFailureError("subset model map violates the connection condition");
  return m;
}

CategoryIso inverse_left_right_iso(const FiniteSemigroup& s,
                                   const IdealCategoryData& left,
                                   const IdealCategoryData& right) {
  if (!classify(s).inverse)
    throw StructureError("left-right symmetry needs an inverse semigroup");
  const FiniteCategory& L = *left.category;
  CategoryIso iso;
  iso.object_map.resize(L.n_objects());
  for (int i = 0; i < L.n_objects(); ++i)
    iso.object_map[i] = right.object_of(left.object_rep[i]);
  iso.morphism_map.resize(L.n_morphisms());
  for (int mid = 0; mid < L.n_morphisms(); ++mid) {
    const MorphismTriple& t = left.triple[mid];
    const Morphism& mo = L.morphism(mid);
    int u_inv = inverses(s, t.u)[0];
    iso.morphism_map[mid] = right.morphism_of(iso.object_map[mo.src],
                                              iso.object_map[mo.dst], u_inv);
  }
  std::string why;
  if (!verify_category_iso(L, *right.category, iso, &why))
    throw IsoFailureError("left-right symmetry: " + why);
  return iso;
}

FiniteSemigroup left_zero_semigroup(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = a;
  return FiniteSemigroup::from_table(t);
}

FiniteSemigroup right_zero_semigroup(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = b;
  return FiniteSemigroup::from_table(t);
}

FiniteSemigroup left_zero_pair_with_zero() {
  return FiniteSemigroup::from_table({{0, 0, 2}, {1, 1, 2}, {2, 2, 2}},
                                     {"e", "f", "0"});
}

FiniteSemigroup right_zero_pair_with_zero() {
  return FiniteSemigroup::from_table({{0, 1, 2}, {0, 1, 2}, {2, 2, 2}},
                                     {"e", "f", "0"});
}

FiniteSemigroup two_element_semilattice() { return chain_semilattice(2); }

FiniteSemigroup chain_semilattice(int n) {
  // elements 0 > 1 > ... with xy = max(x, y); 0 is the identity
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = std::max(a, b);
  return FiniteSemigroup::from_table(t);
}

FiniteSemigroup cyclic_group(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteSemigroup::from_table(t);
}

namespace {

// Enumerates band tables satisfying xyx = yx by backtracking; keeps canonical
// representatives under relabelling.
struct BandSearch {
  int n;
  std::vector<int> t;  // n*n, -1 undefined
  std::vector<std::vector<int>> found;

  int get(int a, int b) const { return t[a * n + b]; }

  bool consistent() const {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int ab = get(a, b);
        if (ab == -1) continue;
        // right regular law: (ab)a = ba when both sides defined
        int ba = get(b, a);
        int aba = get(ab, a);
        if (ba != -1 && aba != -1 && aba != ba) return false;
        for (int c = 0; c < n; ++c) {
          int bc = get(b, c);
          if (bc == -1) continue;
          int abc1 = get(ab, c);
          int abc2 = get(a, bc);
          if (abc1 != -1 && abc2 != -1 && abc1 != abc2) return false;
        }
      }
    return true;
  }

  void run(int cell) {
    while (cell < n * n && t[cell] != -1) ++cell;
    if (cell == n * n) {
      found.push_back(t);
      return;
    }
    for (int v = 0; v < n; ++v) {
      t[cell] = v;
      if (consistent()) run(cell + 1);
      t[cell] = -1;
    }
  }
};

std::vector<int> canonical_table(const std::vector<int>& t, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best;
  do {
    std::vector<int> relabeled(n * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        relabeled[perm[a] * n + perm[b]] = perm[t[a * n + b]];
    if (best.empty() || relabeled < best) best = relabeled;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::vector<FiniteSemigroup> right_regular_bands(int n) {
  if (n < 1 || n > 4)
    throw CapExceededError("right regular band order " + std::to_string(n), 4);
  BandSearch search;
  search.n = n;
  search.t.assign(n * n, -1);
  for (int a = 0; a < n; ++a) search.t[a * n + a] = a;
  search.run(0);

  std::vector<std::vector<int>> canon;
  for (const auto& t : search.found) canon.push_back(canonical_table(t, n));
  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());

  std::vector<FiniteSemigroup> out;
  for (auto& t : canon)
    out.push_back(FiniteSemigroup::from_flat_table(n, t));
  return out;
}

namespace {

std::vector<CatalogEntry> build_entries() {
  auto F = [](std::initializer_list<std::pair<std::string, bool>> fl) {
    return std::vector<std::pair<std::string, bool>>(fl);
  };
  std::vector<CatalogEntry> e;
  e.push_back({"t1", "semigroup", "full transformation monoid, degree 1", 1, 1, 1, 1,
               F({{"regular", true}, {"monoid", true}, {"inverse", true}})});
  e.push_back({"t2", "semigroup", "full transformation monoid, degree 2", 4, 3, 2, 2,
               F({{"regular", true}, {"monoid", true}, {"left_reductive", true},
                  {"right_reductive", true}, {"l_unipotent", true},
                  {"r_unipotent", false}, {"inverse", false}, {"band", false}})});
  e.push_back({"t3", "semigroup", "full transformation monoid, degree 3", 27, 7, 5, 3,
               F({{"regular", true}, {"monoid", true}, {"left_reductive", true},
                  {"right_reductive", true}, {"l_unipotent", false},
                  {"inverse", false}})});
  e.push_back({"t4", "semigroup", "full transformation monoid, degree 4", 256, 15, 15, 4,
               F({{"regular", true}, {"monoid", true}})});
  e.push_back({"t2sing", "semigroup", "singular transformations, degree 2", 2, 1, 2, 1,
               F({{"regular", true}, {"band", true}, {"left_reductive", false},
                  {"monoid", false}})});
  e.push_back({"t3sing", "semigroup", "singular transformations, degree 3", 21, 6, 4, 2,
               F({{"regular", true}, {"left_reductive", true}, {"monoid", false},
                  {"band", false}})});
  e.push_back({"i1", "semigroup", "symmetric inverse monoid, degree 1", 2, 2, 2, 2,
               F({{"regular", true}, {"inverse", true}, {"monoid", true}})});
  e.push_back({"i2", "semigroup", "symmetric inverse monoid, degree 2", 7, 4, 4, 3,
               F({{"regular", true}, {"inverse", true}, {"l_unipotent", true},
                  {"r_unipotent", true}, {"left_reductive", true},
                  {"right_reductive", true}, {"monoid", true}})});
  e.push_back({"i3", "semigroup", "symmetric inverse monoid, degree 3", 34, 8, 8, 4,
               F({{"regular", true}, {"inverse", true}, {"monoid", true}})});
  e.push_back({"z2", "semigroup", "cyclic group of order 2", 2, 1, 1, 1,
               F({{"regular", true}, {"inverse", true}, {"monoid", true},
                  {"l_unipotent", true}, {"r_unipotent", true},
                  {"left_reductive", true}, {"right_reductive", true},
                  {"band", false}})});
  e.push_back({"sl2", "semigroup", "two-element chain semilattice", 2, 2, 2, 2,
               F({{"regular", true}, {"inverse", true}, {"band", true},
                  {"right_regular_band", true}, {"left_regular_band", true},
                  {"l_unipotent", true}, {"r_unipotent", true},
                  {"left_reductive", true}, {"right_reductive", true},
                  {"monoid", true}})});
  e.push_back({"lzero2", "semigroup", "left zero semigroup on two elements", 2, 1, 2, 1,
               F({{"regular", true}, {"band", true}, {"left_regular_band", true},
                  {"right_regular_band", false}, {"left_reductive", false},
                  {"right_reductive", true}, {"l_unipotent", false},
                  {"r_unipotent", true}, {"monoid", false}})});
  e.push_back({"rzero2", "semigroup", "right zero semigroup on two elements", 2, 2, 1, 1,
               F({{"regular", true}, {"band", true}, {"right_regular_band", true},
                  {"left_regular_band", false}, {"left_reductive", true},
                  {"right_reductive", false}, {"l_unipotent", true},
                  {"r_unipotent", false}, {"monoid", false}})});
  e.push_back({"lzero2-0", "semigroup",
               "left zero pair with a zero adjoined (one L-class holding two "
               "idempotents over a zero; the R-class poset is a semilattice "
               "while the semigroup is not L-unipotent)", 3, 2, 3, 2,
               F({{"regular", true}, {"band", true}, {"l_unipotent", false},
                  {"left_reductive", false}, {"right_reductive", true},
                  {"monoid", false}})});
  e.push_back({"rzero2-0", "semigroup",
               "right zero pair with a zero adjoined (left reductive companion "
               "of lzero2-0, used for the reconstruction roundtrips)", 3, 3, 2, 2,
               F({{"regular", true}, {"band", true}, {"right_regular_band", true},
                  {"l_unipotent", true}, {"left_reductive", true},
                  {"right_reductive", false}, {"monoid", false}})});
  e.push_back({"p1", "category", "nonempty subsets of one point, all maps", 1,
               -1, -1, -1, {}});
  e.push_back({"p2", "category", "nonempty subsets of two points, all maps", 4,
               3, 2, 2, {}});
  e.push_back({"p3", "category", "nonempty subsets of three points, all maps", 27,
               7, 5, 3, {}});
  e.push_back({"sp2", "category", "proper nonempty subsets of two points", 2,
               1, 2, 1, {}});
  e.push_back({"sp3", "category", "proper nonempty subsets of three points", 21,
               6, 4, 2, {}});
  e.push_back({"x1", "category", "subsets of one point, partial bijections", 2,
               2, 2, 2, {}});
  e.push_back({"x2", "category", "subsets of two points, partial bijections", 7,
               4, 4, 3, {}});
  e.push_back({"x3", "category", "subsets of three points, partial bijections", 34,
               8, 8, 4, {}});
  return e;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = build_entries();
  return entries;
}

const CatalogEntry* catalog_find(const std::string& name) {
  for (const auto& e : catalog_entries())
    if (e.name == name) return &e;
  return nullptr;
}

bool catalog_is_category_name(const std::string& name) {
  const CatalogEntry* e = catalog_find(name);
  return e && e->kind == "category";
}

FiniteSemigroup catalog_semigroup(const std::string& name) {
  if (name == "t1") return transformation_monoid(1).sg;
  if (name == "t2") return transformation_monoid(2).sg;
  if (name == "t3") return transformation_monoid(3).sg;
  if (name == "t4") return transformation_monoid(4).sg;
  if (name == "t2sing") return singular_transformations(2).sg;
  if (name == "t3sing") return singular_transformations(3).sg;
  if (name == "t4sing") return singular_transformations(4).sg;
  if (name == "i1") return symmetric_inverse_monoid(1).sg;
  if (name == "i2") return symmetric_inverse_monoid(2).sg;
  if (name == "i3") return symmetric_inverse_monoid(3).sg;
  if (name == "z2") return cyclic_group(2);
  if (name == "sl2") return two_element_semilattice();
  if (name == "sl3") return chain_semilattice(3);
  if (name == "lzero2") return left_zero_semigroup(2);
  if (name == "rzero2") return right_zero_semigroup(2);
  if (name == "lzero2-0") return left_zero_pair_with_zero();
  if (name == "rzero2-0") return right_zero_pair_with_zero();
  if (name.rfind("rrb", 0) == 0) {
    auto dash = name.find('-');
    if (dash != std::string::npos) {
      try {
        int n = std::stoi(name.substr(3, dash - 3));
        int k = std::stoi(name.substr(dash + 1));
        auto bands = right_regular_bands(n);
        if (k >= 0 && k < static_cast<int>(bands.size())) return bands[k];
        throw InputError("right regular band index out of range: " + name);
      } catch (const std::invalid_argument&) {
      } catch (const std::out_of_range&) {
      }
    }
  }
  throw InputError("unknown catalog semigroup '" + name + "'");
}

CatalogCategory catalog_category(const std::string& name) {
  if (name == "p1") return powerset_category(1);
  if (name == "p2") return powerset_category(2);
  if (name == "p3") return powerset_category(3);
  if (name == "sp2") return singular_powerset(2);
  if (name == "sp3") return singular_powerset(3);
  if (name == "x1") return partial_bijection_category(1);
  if (name == "x2") return partial_bijection_category(2);
  if (name == "x3") return partial_bijection_category(3);
  throw InputError("unknown catalog category '" + name + "'");
}

CatalogCheck verify_catalog_entry(const CatalogEntry& entry) {
  CatalogCheck out;
  out.name = entry.name;
  try {
    FiniteSemigroup s = entry.kind == "category"
                            ? catalog_category(entry.name).cc.all_cones->sg
                            : catalog_semigroup(entry.name);
    GreensData g = greens(s);
    ClassFlags f = classify(s, g);
    auto expect = [&](const std::string& what, int got, int want) {
      if (want >= 0 && got != want) {
        out.pass = false;
        out.detail += what + "=" + std::to_string(got) + " (expected " +
                      std::to_string(want) + ") ";
      }
    };
    expect("order", s.size(), entry.order);
    expect("l_classes", g.n_l_classes, entry.l_classes);
    expect("r_classes", g.n_r_classes, entry.r_classes);
    expect("d_classes", g.n_d_classes, entry.d_classes);
    auto flag_value = [&](const std::string& name) {
      if (name == "regular") return f.regular;
      if (name == "left_reductive") return f.left_reductive;
      if (name == "right_reductive") return f.right_reductive;
      if (name == "l_unipotent") return f.l_unipotent;
      if (name == "r_unipotent") return f.r_unipotent;
      if (name == "inverse") return f.inverse;
      if (name == "band") return f.band;
      if (name == "right_regular_band") return f.right_regular_band;
      if (name == "left_regular_band") return f.left_regular_band;
      if (name == "monoid") return f.monoid;
      throw InputError("unknown flag " + name);
    };
    for (const auto& [flag, want] : entry.flags)
      if (flag_value(flag) != want) {
        out.pass = false;
        out.detail += flag + "=" + (want ? "false" : "true") + " (expected " +
                      (want ? "true" : "false") + ") ";
      }
  } catch (const Error& e) {
    out.pass = false;
    out.detail = e.what();
  }
  return out;
}

}  // namespace semicat
