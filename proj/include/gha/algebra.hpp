#pragma once

#include "gha/exppoly.hpp"
#include "gha/poly.hpp"
#include "gha/rootdata.hpp"

namespace gha {

/// (w.p)(x) = p(w^{-1} x), on a or on a* according to the polynomial's space.
Poly w_act(const RootDatum& rd, size_t w, const Poly& p);
/// w.e^mu = e^{w mu}.
ExpPoly w_act(const RootDatum& rd, size_t w, const ExpPoly& f);

/// Divided difference (p - p^{s_alpha}) / alpha^vee for alpha = R^+ root index i, p on a*.
Poly demazure(const RootDatum& rd, size_t i, const Poly& p);

/// f / (1 - e^{-alpha}) for the positive root with index i.
ExpPoly exp_divide(const RootDatum& rd, const ExpPoly& f, size_t i);

/// Linear polynomial on a* given by xi in a (lambda -> lambda(xi)).
Poly xi_poly(const CVec& xi);
Poly xi_poly(const QVec& xi);
/// Linear polynomial on a given by mu in a* (H -> mu(H)).
Poly mu_poly(const QVec& mu);

/// lambda -> conj(p(-conj(lambda))) for p on a*.
Poly minus_conj(const Poly& p);

/// p(. + shift) on a*.
Poly rho_shift(const Poly& p, const CVec& rho);

} // namespace gha
