#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace semicat {

/// Dense square/rectangular boolean matrix.
class BoolMatrix {
 public:
  BoolMatrix() = default;
  BoolMatrix(int rows, int cols, bool value = false)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, value) {}
  static BoolMatrix identity(int n) {
    BoolMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c] != 0; }
  void set(int r, int c, bool v) { data_[static_cast<size_t>(r) * cols_ + c] = v ? 1 : 0; }

  bool operator==(const BoolMatrix&) const = default;

  bool is_reflexive() const;
  bool is_antisymmetric() const;
  bool is_transitive() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<std::uint8_t> data_;
};

/// FNV-1a over bytes; used for deterministic input fingerprints in reports.
std::uint64_t fnv1a(const std::string& bytes);
std::string fnv1a_hex(const std::string& bytes);

std::string join_ints(const std::vector<int>& v, const std::string& sep = " ");

}  // namespace semicat
