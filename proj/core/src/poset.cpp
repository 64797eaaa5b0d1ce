#include "semicat/poset.hpp"

#include <algorithm>
#include <stdexcept>

#include "semicat/errors.hpp"

namespace semicat {

bool BoolMatrix::is_reflexive() const {
  for (int i = 0; i < rows_; ++i)
    if (!at(i, i)) return false;
  return true;
}

bool BoolMatrix::is_antisymmetric() const {
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (i != j && at(i, j) && at(j, i)) return false;
  return true;
}

bool BoolMatrix::is_transitive() const {
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (!at(i, j)) continue;
      for (int k = 0; k < cols_; ++k)
        if (at(j, k) && !at(i, k)) return false;
    }
  return true;
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string fnv1a_hex(const std::string& bytes) {
  static const char* digits = "0123456789abcdef";
  std::uint64_t h = fnv1a(bytes);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

std::string join_ints(const std::vector<int>& v, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

Poset::Poset(BoolMatrix leq) : leq_(std::move(leq)) {
  if (leq_.rows() != leq_.cols()) throw Error("poset relation must be square");
  if (!leq_.is_reflexive() || !leq_.is_antisymmetric() || !leq_.is_transitive())
    throw StructureError("relation is not a partial order");
}

std::optional<int> Poset::meet(int a, int b) const {
  int best = -1;
  for (int x = 0; x < size(); ++x) {
    if (!leq(x, a) || !leq(x, b)) continue;
    if (best == -1 || leq(best, x)) best = x;
  }
  if (best == -1) return std::nullopt;
  // best must dominate every common lower bound
  for (int x = 0; x < size(); ++x)
    if (leq(x, a) && leq(x, b) && !leq(x, best)) return std::nullopt;
  return best;
}

bool Poset::is_meet_semilattice() const {
  for (int a = 0; a < size(); ++a)
    for (int b = a; b < size(); ++b)
      if (!meet(a, b)) return false;
  return true;
}

std::optional<int> Poset::top() const {
  for (int t = 0; t < size(); ++t) {
    bool all = true;
    for (int x = 0; x < size(); ++x)
      if (!leq(x, t)) { all = false; break; }
    if (all) return t;
  }
  return std::nullopt;
}

std::vector<int> Poset::maximal_elements() const {
  std::vector<int> out;
  for (int a = 0; a < size(); ++a) {
    bool maximal = true;
    for (int b = 0; b < size(); ++b)
      if (b != a && leq(a, b)) { maximal = false; break; }
    if (maximal) out.push_back(a);
  }
  return out;
}

bool Poset::is_down_set(const std::vector<int>& subset,
                        std::pair<int, int>* witness) const {
  std::vector<char> in(size(), 0);
  for (int x : subset) in[x] = 1;
  for (int d : subset)
    for (int x = 0; x < size(); ++x)
      if (leq(x, d) && !in[x]) {
        if (witness) *witness = {x, d};
        return false;
      }
  return true;
}

Poset Poset::restrict(const std::vector<int>& subset) const {
  int m = static_cast<int>(subset.size());
  BoolMatrix r(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) r.set(i, j, leq(subset[i], subset[j]));
  return Poset(r);
}

std::vector<int> Poset::linear_extension_top_down() const {
  std::vector<int> order;
  std::vector<char> used(size(), 0);
  for (int step = 0; step < size(); ++step) {
    int pick = -1;
    for (int a = 0; a < size() && pick == -1; ++a) {
      if (used[a]) continue;
      bool maximal = true;
      for (int b = 0; b < size(); ++b)
        if (!used[b] && b != a && leq(a, b)) { maximal = false; break; }
      if (maximal) pick = a;
    }
    order.push_back(pick);
    used[pick] = 1;
  }
  return order;
}

bool Poset::is_order_isomorphism(const Poset& other,
                                 const std::vector<int>& map) const {
  if (size() != other.size() || static_cast<int>(map.size()) != size()) return false;
  std::vector<char> hit(size(), 0);
  for (int x : map) {
    if (x < 0 || x >= size() || hit[x]) return false;
    hit[x] = 1;
  }
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b)
      if (leq(a, b) != other.leq(map[a], map[b])) return false;
  return true;
}

namespace {
bool extend_order_iso(const Poset& a, const Poset& b, std::vector<int>& map,
                      std::vector<char>& used, int next) {
  if (next == a.size()) return true;
  for (int cand = 0; cand < b.size(); ++cand) {
    if (used[cand]) continue;
    bool ok = true;
    for (int prev = 0; prev < next && ok; ++prev) {
      if (a.leq(prev, next) != b.leq(map[prev], cand)) ok = false;
      if (a.leq(next, prev) != b.leq(cand, map[prev])) ok = false;
    }
    if (a.leq(next, next) != b.leq(cand, cand)) ok = false;
    if (!ok) continue;
    map[next] = cand;
    used[cand] = 1;
    if (extend_order_iso(a, b, map, used, next + 1)) return true;
    used[cand] = 0;
  }
  return false;
}
}  // namespace

std::optional<std::vector<int>> Poset::order_isomorphism(const Poset& other) const {
  if (size() != other.size()) return std::nullopt;
  std::vector<int> map(size(), -1);
  std::vector<char> used(size(), 0);
  if (extend_order_iso(*this, other, map, used, 0)) return map;
  return std::nullopt;
}

}  // namespace semicat
