#pragma once

#include "bmt/matroid.hpp"

namespace bmt {

/// PG(n-1,2): every point.
Matroid pg(int n);
/// AG(n-1,2): points with the top bit set.
Matroid ag(int n);
/// A basis {1, 2, 4, ..., 2^(n-1)}.
Matroid i_n(int n);
/// Odd circuit: k-1 unit vectors plus their sum, ambient dimension k-1.
Matroid c_n(int k);
/// SAG(n-1,2) in fixed coordinates: ambient n+1, H0 = span(e_1..e_{n-1}),
/// y = e_n, x = e_{n+1}, E = ((G0 \ H0) \ {y}) + {x, x^y}.
Matroid sag(int n);

/// D(M): the fresh generator w = 2^n, E' = E + (w ^ E).
Matroid doubled(const Matroid& M);

/// Embedding into one more dimension. Requires M affine.
Matroid expand0(const Matroid& M);
/// E' = E + {x} + (x ^ H) with x = 2^n and H the kernel of the least
/// functional that is 1 on E. Requires M affine.
Matroid expand1(const Matroid& M);

Matroid alpha0(const Matroid& M);
Matroid alpha1(const Matroid& M);
Matroid beta0(const Matroid& M);
Matroid beta1(const Matroid& M);

/// Invertible map on dimension n+1 that carries the 1-expansion built on
/// ker(w_from) to the one built on ker(w_to), for any E on which both
/// functionals are identically 1. It is an involution.
LinearMap expansion_switch(int n, Point w_from, Point w_to);

}  // namespace bmt
