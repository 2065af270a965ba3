#pragma once

#include "gha/algebra.hpp"

namespace gha {

/// Dunkl operator D_k(xi) on polynomials on a; k is read on R_1^+.
struct DunklOp {
    const RootDatum* rd;
    MultFn k;
    QVec xi; // a coordinates
};

Poly dunkl_apply(const DunklOp& op, const Poly& p);

/// D_k(q) p for q in S(a) given as a polynomial on a*.
Poly dunkl_compose(const RootDatum& rd, const MultFn& k, const Poly& q, const Poly& p);

/// D_k(L_a) p from the closed formula with the reflection terms.
Poly dunkl_laplacian(const RootDatum& rd, const MultFn& k, const Poly& p);

/// L_a = sum of squares of an orthonormal basis of a, as a polynomial on a*.
Poly laplacian_symbol(const RootDatum& rd);

/// A polynomial on a viewed as an element of S(a) through the form B.
Poly transport_to_sym(const RootDatum& rd, const Poly& p);

/// (1/d!) (ad D_k(L_a)/2)^d (multiplication by p) applied to f; p homogeneous of degree d.
Poly dejeu_power(const RootDatum& rd, const MultFn& k, const Poly& p, const Poly& f);

} // namespace gha
