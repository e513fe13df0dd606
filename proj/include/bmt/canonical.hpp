#pragma once

#include "bmt/gf2.hpp"
#include "bmt/matroid.hpp"

namespace bmt {

struct CanonicalForm {
  Matroid matroid;
  /// Invertible map with apply_map(map, input) == matroid.
  LinearMap map;
};

/// Canonical representative of the GL(n,2)-orbit of M: the image whose
/// ascending sorted point list is lexicographically least (so the least
/// points are occupied first). Minimum-image backtracking over the images of
/// e_1..e_n, pruned with automorphisms discovered along the way.
CanonicalForm canonical_form(const Matroid& M);

/// Convenience: canonical_form(a).matroid == canonical_form(b).matroid.
bool isomorphic(const Matroid& a, const Matroid& b);

}  // namespace bmt
