#include "semicat/category.hpp"

#include <algorithm>

#include "semicat/errors.hpp"

namespace semicat {

namespace {

NormalFactorization factorize_search(const FiniteCategory& c, int m, TieBreak tie) {
  const Morphism& mo = c.morphism(m);

  // Image: the codomain of an epimorphism p with p j(i, dst) = m.  Unique in
  // a normal category; the scan order only matters for hostile inputs.
  int image = -1, epi = -1;
  for (int i = 0; i < c.n_objects() && image == -1; ++i) {
    if (!c.obj_leq(i, mo.dst)) continue;
    int j = c.inclusion(i, mo.dst);
    for (int p : c.hom(mo.src, i)) {
      if (!c.is_epi(p)) continue;
      if (c.compose(p, j) == m) {
        image = i;
        epi = p;
        break;
      }
    }
  }
  if (image == -1) throw NoFactorizationError(m);

  NormalFactorization out;
  bool found = false;
  auto try_coimage = [&](int x) {
    if (!c.obj_leq(x, mo.src)) return false;
    auto qs = c.hom(mo.src, x);
    auto us = c.hom(x, image);
    if (tie == TieBreak::greatest_index) {
      std::reverse(qs.begin(), qs.end());
      std::reverse(us.begin(), us.end());
    }
    for (int q : qs) {
      if (!c.is_retraction(q)) continue;
      for (int u : us) {
        if (!c.is_iso(u)) continue;
        if (c.compose(q, u) == epi) {
          out.retraction = q;
          out.iso = u;
          out.inclusion = c.inclusion(image, mo.dst);
          out.coimage = x;
          out.image = image;
          out.epi = epi;
          found = true;
          return true;
        }
      }
    }
    return false;
  };
  if (tie == TieBreak::least_index) {
    for (int x = 0; x < c.n_objects() && !found; ++x) try_coimage(x);
  } else {
    for (int x = c.n_objects() - 1; x >= 0 && !found; --x) try_coimage(x);
  }
  if (!found) throw NoFactorizationError(m);
  return out;
}

}  // namespace

CategoryBuilder::CategoryBuilder(int n_objects)
    : n_objects_(n_objects),
      leq_(BoolMatrix::identity(n_objects)),
      hom_(static_cast<size_t>(n_objects) * n_objects),
      identities_(n_objects, -1),
      inclusion_(static_cast<size_t>(n_objects) * n_objects, -1) {
  if (n_objects <= 0) throw InputError("category needs at least one object");
}

void CategoryBuilder::set_object_leq(int c, int d) { leq_.set(c, d, true); }

int CategoryBuilder::add_morphism(int src, int dst) {
  if (src < 0 || src >= n_objects_ || dst < 0 || dst >= n_objects_)
    throw IndexOutOfRangeError("morphism endpoint out of range");
  auto& hom = hom_[static_cast<size_t>(src) * n_objects_ + dst];
  int id = static_cast<int>(morphisms_.size());
  morphisms_.push_back({src, dst, static_cast<int>(hom.size())});
  hom.push_back(id);
  return id;
}

void CategoryBuilder::set_identity(int c, int m) {
  if (morphisms_[m].src != c || morphisms_[m].dst != c)
    throw InputError("identity morphism must be an endomorphism of its object");
  identities_[c] = m;
}

void CategoryBuilder::set_inclusion(int c, int d, int m) {
  if (morphisms_[m].src != c || morphisms_[m].dst != d)
    throw InputError("inclusion designation does not match morphism endpoints");
  leq_.set(c, d, true);
  inclusion_[static_cast<size_t>(c) * n_objects_ + d] = m;
}

void CategoryBuilder::set_compose(int f, int g, int fg) {
  int m = static_cast<int>(morphisms_.size());
  if (f < 0 || f >= m || g < 0 || g >= m || fg < 0 || fg >= m)
    throw IndexOutOfRangeError("composition entry out of range");
  compose_entries_.emplace_back(static_cast<size_t>(f) * m + g, fg);
}

FiniteCategory CategoryBuilder::build() && {
  FiniteCategory c;
  c.n_objects_ = n_objects_;
  c.order_ = Poset(leq_);  // throws unless a partial order
  c.morphisms_ = std::move(morphisms_);
  c.hom_ = std::move(hom_);
  c.identities_ = std::move(identities_);
  c.inclusion_ = std::move(inclusion_);

  size_t m = c.morphisms_.size();
  c.compose_.assign(m * m, -1);
  for (auto& [key, val] : compose_entries_) {
    int f = static_cast<int>(key / m), g = static_cast<int>(key % m);
    if (c.morphisms_[f].dst != c.morphisms_[g].src)
      throw InputError("composition declared for non-composable morphisms");
    if (c.morphisms_[val].src != c.morphisms_[f].src ||
        c.morphisms_[val].dst != c.morphisms_[g].dst)
      throw InputError("composite morphism has wrong endpoints");
    c.compose_[key] = val;
  }

  // Totality on composable pairs.
  for (size_t f = 0; f < m; ++f)
    for (size_t g = 0; g < m; ++g)
      if (c.morphisms_[f].dst == c.morphisms_[g].src &&
          c.compose_[f * m + g] == -1)
        throw InputError("missing composition entry for morphisms " +
                         std::to_string(f) + " and " + std::to_string(g));

  // Identities present and lawful.
  for (int obj = 0; obj < n_objects_; ++obj) {
    if (c.identities_[obj] == -1)
      throw InputError("object " + std::to_string(obj) + " has no identity");
    int e = c.identities_[obj];
    for (size_t f = 0; f < m; ++f) {
      if (c.morphisms_[f].src == obj &&
          c.compose_[static_cast<size_t>(e) * m + f] != static_cast<int>(f))
        throw InputError("identity law fails at object " + std::to_string(obj));
      if (c.morphisms_[f].dst == obj &&
          c.compose_[f * m + e] != static_cast<int>(f))
        throw InputError("identity law fails at object " + std::to_string(obj));
    }
  }

  // Associativity over all composable triples.
  for (size_t f = 0; f < m; ++f)
    for (size_t g = 0; g < m; ++g) {
      int fg = c.compose_[f * m + g];
      if (fg == -1) continue;
      for (size_t h = 0; h < m; ++h) {
        int gh = c.compose_[g * m + h];
        if (gh == -1) continue;
        if (c.compose_[static_cast<size_t>(fg) * m + h] !=
            c.compose_[f * m + gh])
          throw InputError("composition is not associative");
      }
    }

  // Inclusions: designated exactly on comparable pairs and closed under
  // composition, with j(c, c) = 1_c.
  for (int a = 0; a < n_objects_; ++a)
    for (int b = 0; b < n_objects_; ++b) {
      int j = c.inclusion_[c.pair_id(a, b)];
      if (c.order_.leq(a, b)) {
        if (a == b) {
          if (j == -1) c.inclusion_[c.pair_id(a, a)] = c.identities_[a];
          else if (j != c.identities_[a])
            throw InputError("inclusion j(c, c) must be the identity");
        } else if (j == -1) {
          throw InputError("missing inclusion for comparable objects " +
                           std::to_string(a) + " and " + std::to_string(b));
        }
      } else if (j != -1) {
        throw InputError("inclusion designated for incomparable objects");
      }
    }
  for (int a = 0; a < n_objects_; ++a)
    for (int b = 0; b < n_objects_; ++b) {
      if (!c.order_.leq(a, b)) continue;
      for (int d = 0; d < n_objects_; ++d) {
        if (!c.order_.leq(b, d)) continue;
        int jab = c.inclusion_[c.pair_id(a, b)];
        int jbd = c.inclusion_[c.pair_id(b, d)];
        if (c.compose_[static_cast<size_t>(jab) * m + jbd] !=
            c.inclusion_[c.pair_id(a, d)])
          throw InputError("inclusions are not closed under composition");
      }
    }

  c.is_inclusion_.assign(m, 0);
  for (int id : c.inclusion_)
    if (id != -1) c.is_inclusion_[id] = 1;

  // Morphism property flags.
  c.iso_inverse_.assign(m, -1);
  for (size_t f = 0; f < m; ++f) {
    int src = c.morphisms_[f].src, dst = c.morphisms_[f].dst;
    for (int g : c.hom(dst, src)) {
      if (c.compose_[f * m + g] == c.identities_[src] &&
          c.compose_[static_cast<size_t>(g) * m + f] == c.identities_[dst]) {
        c.iso_inverse_[f] = g;
        break;
      }
    }
  }

  c.is_mono_.assign(m, 1);
  c.is_epi_.assign(m, 1);
  for (size_t f = 0; f < m; ++f) {
    int src = c.morphisms_[f].src, dst = c.morphisms_[f].dst;
    for (int x = 0; x < n_objects_ && c.is_mono_[f]; ++x) {
      const auto& in = c.hom(x, src);
      for (size_t i = 0; i < in.size() && c.is_mono_[f]; ++i)
        for (size_t j = i + 1; j < in.size(); ++j)
          if (c.compose_[static_cast<size_t>(in[i]) * m + f] ==
              c.compose_[static_cast<size_t>(in[j]) * m + f]) {
            c.is_mono_[f] = 0;
            break;
          }
    }
    for (int x = 0; x < n_objects_ && c.is_epi_[f]; ++x) {
      const auto& out = c.hom(dst, x);
      for (size_t i = 0; i < out.size() && c.is_epi_[f]; ++i)
        for (size_t j = i + 1; j < out.size(); ++j)
          if (c.compose_[f * m + out[i]] == c.compose_[f * m + out[j]]) {
            c.is_epi_[f] = 0;
            break;
          }
    }
  }

  c.is_retraction_.assign(m, 0);
  for (size_t q = 0; q < m; ++q) {
    int src = c.morphisms_[q].src, dst = c.morphisms_[q].dst;
    if (!c.order_.leq(dst, src)) continue;
    int j = c.inclusion_[c.pair_id(dst, src)];
    if (c.compose_[static_cast<size_t>(j) * m + q] == c.identities_[dst])
      c.is_retraction_[q] = 1;
  }

  c.factorization_.assign(m, std::nullopt);
  for (size_t f = 0; f < m; ++f) {
    try {
      c.factorization_[f] =
          factorize_search(c, static_cast<int>(f), TieBreak::least_index);
    } catch (const NoFactorizationError&) {
      // left empty; verify_normal reports it
    }
  }
  return c;
}

std::string FiniteCategory::describe_morphism(int m) const {
  const Morphism& mo = morphisms_[m];
  return "(" + std::to_string(mo.src) + ">" + std::to_string(mo.dst) + "#" +
         std::to_string(mo.local) + ")";
}

NormalFactorization normal_factorize(const FiniteCategory& c, int m, TieBreak tie) {
  if (tie == TieBreak::least_index && c.factorization(m))
    return *c.factorization(m);
  return factorize_search(c, m, tie);
}

int epi_component(const FiniteCategory& c, int m) {
  const auto& f = c.factorization(m);
  if (!f) throw NoFactorizationError(m);
  return f->epi;
}

bool check_epi_composition_rule(const FiniteCategory& c, std::string* witness) {
  for (int f = 0; f < c.n_morphisms(); ++f) {
    const auto& ff = c.factorization(f);
    if (!ff) continue;
    for (int g = 0; g < c.n_morphisms(); ++g) {
      int fg = c.compose(f, g);
      if (fg == -1) continue;
      // (fg)° = f° (j_f g)°
      int jg = c.compose(ff->inclusion, g);
      int rhs = c.compose(ff->epi, epi_component(c, jg));
      if (epi_component(c, fg) != rhs) {
        if (witness)
          *witness = "fails at f=" + c.describe_morphism(f) +
                     " g=" + c.describe_morphism(g);
        return false;
      }
    }
  }
  return true;
}

SubobjectReport verify_subobject_axioms(const FiniteCategory& c) {
  SubobjectReport rep;
  auto add = [&](const std::string& axiom, bool pass, const std::string& wit) {
    rep.checks.push_back({axiom, pass, pass ? "" : wit});
    rep.ok = rep.ok && pass;
  };

  // (1) strict preorder on all objects with unique designated inclusions.
  {
    bool pass = c.object_order().matrix().is_reflexive() &&
                c.object_order().matrix().is_antisymmetric() &&
                c.object_order().matrix().is_transitive();
    std::string wit = "object relation is not a partial order";
    if (pass) {
      for (int a = 0; a < c.n_objects() && pass; ++a)
        for (int b = 0; b < c.n_objects() && pass; ++b)
          if (c.obj_leq(a, b) != (c.inclusion(a, b) != -1)) {
            pass = false;
            wit = "inclusion designation does not match the object order at (" +
                  std::to_string(a) + ", " + std::to_string(b) + ")";
          }
    }
    add("subobject-preorder", pass, wit);
  }

  // (2) every inclusion is a monomorphism.
  {
    bool pass = true;
    std::string wit;
    for (int m = 0; m < c.n_morphisms() && pass; ++m)
      if (c.is_inclusion(m) && !c.is_mono(m)) {
        pass = false;
        wit = "inclusion " + c.describe_morphism(m) + " is not a monomorphism";
      }
    add("inclusions-are-monic", pass, wit);
  }

  // (3) if f, g are inclusions and f = hg then h is an inclusion.
  {
    bool pass = true;
    std::string wit;
    for (int f = 0; f < c.n_morphisms() && pass; ++f) {
      if (!c.is_inclusion(f)) continue;
      for (int g = 0; g < c.n_morphisms() && pass; ++g) {
        if (!c.is_inclusion(g)) continue;
        const Morphism& mf = c.morphism(f);
        const Morphism& mg = c.morphism(g);
        if (mf.dst != mg.dst) continue;
        for (int h : c.hom(mf.src, mg.src))
          if (c.compose(h, g) == f && !c.is_inclusion(h)) {
            pass = false;
            wit = "non-inclusion " + c.describe_morphism(h) +
                  " factors inclusion " + c.describe_morphism(f) +
                  " through " + c.describe_morphism(g);
            break;
          }
      }
    }
    add("inclusions-factor-through-inclusions", pass, wit);
  }
  return rep;
}

}  // namespace semicat
