#pragma once

#include <string>
#include <vector>

#include "semicat/semigroup.hpp"

namespace semicat {

/// Parses the Cayley-table text format:
///   first line `n`, then n lines of n space-separated 0-based indices;
///   `#` starts a comment anywhere.
FiniteSemigroup parse_cayley_table(const std::string& text,
                                   int size_cap = kDefaultSizeCap);

/// Parses the generator format and closes under products:
///   `t 3: 1 1 2`   transformation on {1..3} given by its image list
///   `p 3: 2 - 1`   partial bijection, `-` marks an undefined point
/// Total and partial generators may be mixed; degrees must agree.
FiniteSemigroup parse_generators(const std::string& text,
                                 int size_cap = kDefaultSizeCap);

/// Dispatches on the first significant token (digit: table, t/p: generators).
FiniteSemigroup parse_semigroup(const std::string& text,
                                int size_cap = kDefaultSizeCap);

/// Emits the Cayley-table format (with element labels as comments, if any).
std::string format_cayley_table(const FiniteSemigroup& s);

/// Closure of transformation generators (image vectors over 0..deg-1, -1 for
/// undefined).  Exposed for the catalog builders; labels are derived from the
/// image vectors.
FiniteSemigroup semigroup_from_maps(int degree,
                                    std::vector<std::vector<int>> generators,
                                    bool partial,
                                    int size_cap = kDefaultSizeCap);

}  // namespace semicat
