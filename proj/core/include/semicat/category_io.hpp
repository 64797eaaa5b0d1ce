#pragma once

#include <string>

#include "semicat/category.hpp"

namespace semicat {

/// Text format for abstract finite categories with subobjects:
///
///   objects <n>
///   order            (n rows of n 0/1 entries, reflexive object order)
///   homs             (n rows of n hom-set sizes, row = source)
///   id <c> <k>       (identity of object c is hom(c,c)[k])
///   incl <c> <d> <k> (designated inclusion for c below d)
///   c (P,i)(Q,j)=(R,k)
///
/// Morphism references are (pair, local) with pair = src * n + dst; a
/// composition line states hom-pair P morphism i followed by hom-pair Q
/// morphism j equals hom-pair R morphism k.  '#' starts a comment.
FiniteCategory parse_category(const std::string& text);

std::string format_category(const FiniteCategory& c);

/// Structural equality of presentations (object order, hom shapes,
/// identities, inclusions, composition tables).
bool same_presentation(const FiniteCategory& a, const FiniteCategory& b);

}  // namespace semicat
