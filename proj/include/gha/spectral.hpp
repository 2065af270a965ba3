#pragma once

#include "gha/matrix.hpp"

#include <vector>

namespace gha {

/// Univariate polynomial, coefficients from the constant term up.
using UPoly = std::vector<Scalar>;

/// det(t I - m) by Faddeev-LeVerrier, exact.
UPoly char_poly(const CMat& m);
UPoly upoly_gcd(UPoly a, UPoly b);
UPoly upoly_derivative(const UPoly& p);
UPoly upoly_divide(const UPoly& a, const UPoly& b); // exact quotient
Scalar upoly_eval(const UPoly& p, const Scalar& x);

/// Distinct eigenvalues of m, each an exact Gaussian rational.  The roots of the
/// square-free part of the characteristic polynomial are located numerically,
/// rationalized and then verified exactly; throws NumericInstability otherwise.
std::vector<Scalar> exact_eigenvalues(const CMat& m);

/// Matrix of m restricted to the invariant subspace spanned by the columns of b.
CMat restrict_to(const CMat& m, const CMat& b);

CMat matrix_power(const CMat& m, size_t k);

} // namespace gha
