#include "semicat/semigroup.hpp"

#include <algorithm>
#include <numeric>

#include "semicat/errors.hpp"

namespace semicat {

FiniteSemigroup FiniteSemigroup::from_table(
    const std::vector<std::vector<int>>& table, std::vector<std::string> labels,
    int size_cap) {
  int n = static_cast<int>(table.size());
  std::vector<int> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      throw InputError("multiplication table is not square");
    for (int x : row) flat.push_back(x);
  }
  return from_flat_table(n, std::move(flat), std::move(labels), size_cap);
}

FiniteSemigroup FiniteSemigroup::from_flat_table(int n, std::vector<int> table,
                                                 std::vector<std::string> labels,
                                                 int size_cap) {
  if (n <= 0) throw InputError("semigroup must have at least one element");
  if (n > size_cap)
    throw CapExceededError("semigroup of order " + std::to_string(n), size_cap);
  if (static_cast<int>(table.size()) != n * n)
    throw InputError("multiplication table has wrong shape");
  for (int x : table)
    if (x < 0 || x >= n)
      throw IndexOutOfRangeError("table entry " + std::to_string(x) +
                                 " outside [0, " + std::to_string(n) + ")");
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw InputError("label count does not match semigroup order");

  FiniteSemigroup s;
  s.size_ = n;
  s.table_ = std::move(table);
  s.labels_ = std::move(labels);

  // Direct O(n^3) associativity scan.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ab = s.mul(a, b);
      for (int c = 0; c < n; ++c)
        if (s.mul(ab, c) != s.mul(a, s.mul(b, c)))
          throw NonAssociativeError(a, b, c);
    }

  for (int e = 0; e < n; ++e) {
    bool ident = true;
    for (int x = 0; x < n && ident; ++x)
      if (s.mul(e, x) != x || s.mul(x, e) != x) ident = false;
    if (ident) { s.identity_ = e; break; }
  }
  return s;
}

const std::string& FiniteSemigroup::label(int a) const {
  static const std::string empty;
  if (labels_.empty()) return empty;
  return labels_[a];
}

void FiniteSemigroup::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != size_)
    throw InputError("label count does not match semigroup order");
  labels_ = std::move(labels);
}

FiniteSemigroup opposite(const FiniteSemigroup& s) {
  int n = s.size();
  std::vector<int> flat(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) flat[static_cast<size_t>(a) * n + b] = s.mul(b, a);
  return FiniteSemigroup::from_flat_table(n, std::move(flat), s.labels());
}

namespace {
// Assign class ids so that classes are numbered by their least member.
int number_classes(const std::vector<std::vector<char>>& related,
                   std::vector<int>& cls) {
  int n = static_cast<int>(related.size());
  cls.assign(n, -1);
  int next = 0;
  for (int a = 0; a < n; ++a) {
    if (cls[a] != -1) continue;
    for (int b = a; b < n; ++b)
      if (related[a][b]) cls[b] = next;
    ++next;
  }
  return next;
}
}  // namespace

GreensData greens(const FiniteSemigroup& s) {
  int n = s.size();
  GreensData g;
  g.leq_l = BoolMatrix(n, n);
  g.leq_r = BoolMatrix(n, n);

  // a <=_l b iff a in S^1 b: one multiplication sweep per column.
  for (int b = 0; b < n; ++b) {
    g.leq_l.set(b, b, true);
    g.leq_r.set(b, b, true);
    for (int x = 0; x < n; ++x) {
      g.leq_l.set(s.mul(x, b), b, true);
      g.leq_r.set(s.mul(b, x), b, true);
    }
  }

  g.nat_leq = BoolMatrix(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      g.nat_leq.set(a, b, g.leq_l.at(a, b) && g.leq_r.at(a, b));

  std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      rel[a][b] = g.leq_l.at(a, b) && g.leq_l.at(b, a);
  g.n_l_classes = number_classes(rel, g.l_class);

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      rel[a][b] = g.leq_r.at(a, b) && g.leq_r.at(b, a);
  g.n_r_classes = number_classes(rel, g.r_class);

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      rel[a][b] = g.l_class[a] == g.l_class[b] && g.r_class[a] == g.r_class[b];
  g.n_h_classes = number_classes(rel, g.h_class);

  // D = L o R (finite case): union-find over the two partitions.
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int x, int y) { parent[find(x)] = find(y); };
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (g.l_class[a] == g.l_class[b] || g.r_class[a] == g.r_class[b])
        unite(a, b);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) rel[a][b] = find(a) == find(b);
  g.n_d_classes = number_classes(rel, g.d_class);

  for (int e = 0; e < n; ++e)
    if (s.mul(e, e) == e) g.idempotents.push_back(e);
  return g;
}

std::vector<int> GreensData::l_class_members(int cls) const {
  std::vector<int> out;
  for (int a = 0; a < static_cast<int>(l_class.size()); ++a)
    if (l_class[a] == cls) out.push_back(a);
  return out;
}

std::vector<int> GreensData::r_class_members(int cls) const {
  std::vector<int> out;
  for (int a = 0; a < static_cast<int>(r_class.size()); ++a)
    if (r_class[a] == cls) out.push_back(a);
  return out;
}

bool is_regular(const FiniteSemigroup& s) {
  int n = s.size();
  for (int a = 0; a < n; ++a) {
    bool ok = false;
    for (int x = 0; x < n && !ok; ++x)
      if (s.mul(s.mul(a, x), a) == a) ok = true;
    if (!ok) return false;
  }
  return true;
}

std::vector<int> inverses(const FiniteSemigroup& s, int a) {
  std::vector<int> out;
  for (int x = 0; x < s.size(); ++x)
    if (s.mul(s.mul(a, x), a) == a && s.mul(s.mul(x, a), x) == x)
      out.push_back(x);
  return out;
}

std::optional<std::pair<int, int>> left_reductive_failure(const FiniteSemigroup& s) {
  int n = s.size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      bool same = true;
      for (int x = 0; x < n && same; ++x)
        if (s.mul(x, a) != s.mul(x, b)) same = false;
      if (same) return std::make_pair(a, b);
    }
  return std::nullopt;
}

bool is_left_reductive(const FiniteSemigroup& s) {
  return !left_reductive_failure(s).has_value();
}

bool is_right_reductive(const FiniteSemigroup& s) {
  int n = s.size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      bool same = true;
      for (int x = 0; x < n && same; ++x)
        if (s.mul(a, x) != s.mul(b, x)) same = false;
      if (same) return false;
    }
  return true;
}

ClassFlags classify(const FiniteSemigroup& s) { return classify(s, greens(s)); }

ClassFlags classify(const FiniteSemigroup& s, const GreensData& g) {
  ClassFlags f;
  f.regular = is_regular(s);
  f.left_reductive = is_left_reductive(s);
  f.right_reductive = is_right_reductive(s);
  f.monoid = s.is_monoid();

  f.band = g.idempotents.size() == static_cast<size_t>(s.size());

  if (f.regular) {
    std::vector<int> per_l(g.n_l_classes, 0), per_r(g.n_r_classes, 0);
    for (int e : g.idempotents) {
      ++per_l[g.l_class[e]];
      ++per_r[g.r_class[e]];
    }
    f.l_unipotent = std::all_of(per_l.begin(), per_l.end(),
                                [](int c) { return c == 1; });
    f.r_unipotent = std::all_of(per_r.begin(), per_r.end(),
                                [](int c) { return c == 1; });
    bool commute = true;
    for (int e : g.idempotents) {
      for (int h : g.idempotents)
        if (s.mul(e, h) != s.mul(h, e)) { commute = false; break; }
      if (!commute) break;
    }
    f.inverse = commute;
  }

  if (f.band) {
    bool rr = true, lr = true;
    for (int e = 0; e < s.size(); ++e)
      for (int h = 0; h < s.size(); ++h) {
        int ehe = s.mul(s.mul(e, h), e);
        if (ehe != s.mul(h, e)) rr = false;
        if (ehe != s.mul(e, h)) lr = false;
      }
    f.right_regular_band = rr;
    f.left_regular_band = lr;
  }
  return f;
}

std::array<bool, 7> l_unipotent_conditions(const FiniteSemigroup& s) {
  if (!is_regular(s)) throw NotRegularError();
  GreensData g = greens(s);
  int n = s.size();
  std::array<bool, 7> cond;
  cond.fill(true);

  // 0: unique idempotent per L-class.
  {
    std::vector<int> per_l(g.n_l_classes, 0);
    for (int e : g.idempotents) ++per_l[g.l_class[e]];
    for (int c : per_l)
      if (c != 1) cond[0] = false;
  }

  // 1: eS ∩ fS = efS = feS for idempotents e, f.
  {
    auto right_ideal = [&](int a) {
      std::vector<char> in(n, 0);
      in[a] = 1;
      for (int x = 0; x < n; ++x) in[s.mul(a, x)] = 1;
      return in;
    };
    for (int e : g.idempotents) {
      auto es = right_ideal(e);
      for (int f : g.idempotents) {
        auto fs = right_ideal(f);
        auto efs = right_ideal(s.mul(e, f));
        auto fes = right_ideal(s.mul(f, e));
        for (int x = 0; x < n; ++x) {
          bool inter = es[x] && fs[x];
          if (inter != static_cast<bool>(efs[x]) ||
              inter != static_cast<bool>(fes[x]))
            cond[1] = false;
        }
      }
    }
  }

  // 2: efe = fe.
  for (int e : g.idempotents)
    for (int f : g.idempotents)
      if (s.mul(s.mul(e, f), e) != s.mul(f, e)) cond[2] = false;

  // 3, 4, 5, 6: conditions quantified over inverses.
  for (int a = 0; a < n; ++a) {
    auto va = inverses(s, a);
    for (int a1 : va) {
      int a1a = s.mul(a1, a);
      for (int a2 : va)
        if (a1a != s.mul(a2, a)) cond[3] = false;
      // 4: a'a is the unique idempotent of L_a.
      for (int e : g.idempotents)
        if (g.l_class[e] == g.l_class[a] && e != a1a) cond[4] = false;
      for (int e : g.idempotents) {
        int a1ea = s.mul(s.mul(a1, e), a);
        for (int a2 : va)
          if (a1ea != s.mul(s.mul(a2, e), a)) cond[5] = false;
        if (s.mul(s.mul(a, a1), s.mul(e, a)) != s.mul(e, a)) cond[6] = false;
      }
    }
  }
  return cond;
}

std::array<bool, 4> inverse_conditions(const FiniteSemigroup& s) {
  if (!is_regular(s)) throw NotRegularError();
  GreensData g = greens(s);
  std::array<bool, 4> cond;
  cond.fill(true);

  for (int e : g.idempotents)
    for (int f : g.idempotents)
      if (s.mul(e, f) != s.mul(f, e)) cond[0] = false;

  for (int a = 0; a < s.size(); ++a)
    if (inverses(s, a).size() != 1) cond[1] = false;

  {
    int m = static_cast<int>(g.idempotents.size());
    BoolMatrix leq(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        leq.set(i, j, g.nat_leq.at(g.idempotents[i], g.idempotents[j]));
    // The natural order restricted to idempotents is always a partial order;
    // condition 2 asks for binary meets.
    cond[2] = Poset(leq).is_meet_semilattice();
  }

  {
    std::vector<int> per_l(g.n_l_classes, 0), per_r(g.n_r_classes, 0);
    for (int e : g.idempotents) {
      ++per_l[g.l_class[e]];
      ++per_r[g.r_class[e]];
    }
    for (int c : per_l)
      if (c != 1) cond[3] = false;
    for (int c : per_r)
      if (c != 1) cond[3] = false;
  }
  return cond;
}

Poset quotient_poset_r(const FiniteSemigroup& s) {
  return quotient_poset_r(s, greens(s));
}

Poset quotient_poset_r(const FiniteSemigroup& s, const GreensData& g) {
  if (!is_regular(s)) throw NotRegularError();
  std::vector<int> rep(g.n_r_classes, -1);
  for (int a = s.size() - 1; a >= 0; --a) rep[g.r_class[a]] = a;
  BoolMatrix leq(g.n_r_classes, g.n_r_classes);
  for (int i = 0; i < g.n_r_classes; ++i)
    for (int j = 0; j < g.n_r_classes; ++j)
      leq.set(i, j, g.leq_r.at(rep[i], rep[j]));
  return Poset(leq);
}

std::vector<int> l_class_idempotent_reps(const FiniteSemigroup& s,
                                         const GreensData& g) {
  if (!is_regular(s)) throw NotRegularError();
  std::vector<int> rep(g.n_l_classes, -1);
  for (auto it = g.idempotents.rbegin(); it != g.idempotents.rend(); ++it)
    rep[g.l_class[*it]] = *it;
  for (int r : rep)
    if (r == -1) throw StructureError("L-class without idempotent in a regular semigroup");
  return rep;
}

std::vector<int> r_class_idempotent_reps(const FiniteSemigroup& s,
                                         const GreensData& g) {
  if (!is_regular(s)) throw NotRegularError();
  std::vector<int> rep(g.n_r_classes, -1);
  for (auto it = g.idempotents.rbegin(); it != g.idempotents.rend(); ++it)
    rep[g.r_class[*it]] = *it;
  for (int r : rep)
    if (r == -1) throw StructureError("R-class without idempotent in a regular semigroup");
  return rep;
}

}  // namespace semicat
