#pragma once

#include "gha/algebra.hpp"

namespace gha {

/// Cherednik operator T_k(xi) on exponential polynomials; k is read on all of R^+.
struct CherednikOp {
    const RootDatum* rd;
    MultFn k;
    QVec xi; // a coordinates
};

ExpPoly cherednik_apply(const CherednikOp& op, const ExpPoly& f);

/// T_k(q) f for q in S(a) given as a polynomial on a*.
ExpPoly cherednik_compose(const RootDatum& rd, const MultFn& k, const Poly& q, const ExpPoly& f);

/// Right-hand side of the Laplacian formula, for W-invariant f:
/// d(L_a) f + sum k(alpha) coth(alpha/2) d(H_alpha) f + B(H_rho, H_rho) f.
ExpPoly laplacian_invariant(const RootDatum& rd, const MultFn& k, const ExpPoly& f);

/// d(xi) e^mu = mu(xi) e^mu.
ExpPoly exp_derivative(const RootDatum& rd, const QVec& xi, const ExpPoly& f);

bool is_w_invariant(const RootDatum& rd, const ExpPoly& f);

struct NonsymEigen {
    ExpPoly e;     // leading term e^mu
    CVec spectrum; // mu~ in a* coordinates: T_k(xi) E = mu~(xi) E
};

/// Joint eigenfunction of the T_k(xi) with leading exponent mu (simple-root coordinates).
/// Throws Resonant if a triangular pivot vanishes.
NonsymEigen nonsym_eigen(const RootDatum& rd, const MultFn& k, const Exps& mu);

} // namespace gha
