#pragma once

#include "gha/errors.hpp"

#include <complex>
#include <vector>

namespace gha {

using CDouble = std::complex<double>;

/// Rank-one data in the coordinates H = t beta^vee (beta the short root of R) and nu = lambda(beta^vee).
struct Rank1Params {
    double k_b = 0;  // k(beta)
    double k_2b = 0; // k(2 beta), nonzero only for BC1

    /// Geometric multiplicities from dim g_alpha = p, dim g_{2 alpha} = q.
    static Rank1Params from_dims(int p, int q) { return {p / 2.0, q / 2.0}; }
    /// rho_k(beta^vee) = k1(beta).
    double rho() const { return k_b + 2 * k_2b; }
    double k1() const { return k_b + 2 * k_2b; }
};

CDouble gamma_fn(CDouble z);
/// 1 / Gamma(z), entire; exactly zero at the poles of Gamma.
CDouble rgamma_fn(CDouble z);

/// G(lambda, k; exp(t beta^vee)) for nu = lambda(beta^vee).
CDouble gfunc(const Rank1Params& p, CDouble nu, double t);
/// G at each of the given t.
std::vector<CDouble> gfunc_values(const Rank1Params& p, CDouble nu, const std::vector<double>& ts);

/// max(1, |G(t)|)-scaled |T G - nu G| with a central difference of step h.
double eigen_residual(const Rank1Params& p, CDouble nu, double t, double h);
/// Scaled max component of the KZ covariant derivative of Phi(H) = sum_w G(exp(w^{-1} H)) w.
double kz_residual(const Rank1Params& p, CDouble nu, double t, double h);

/// e_alpha(x) = 1 / (Gamma((k_b + 1 + x)/2) Gamma((k1 + x)/2)), x = lambda(alpha^vee).
CDouble efunc(const Rank1Params& p, CDouble x);
/// c_alpha(x) = 2^{-x} Gamma(x) e_alpha(x); throws PoleAt at poles.
CDouble cfunc(const Rank1Params& p, CDouble x);
/// c_alpha(rho) / c_alpha(-x); throws PoleAt when e_alpha(-x) = 0.
CDouble intertwiner_factor(const Rank1Params& p, CDouble x);
/// |c(nu)|^{-2} with c(nu) = c_alpha(i nu) / c_alpha(rho); at k = 0 the limit k -> 0 (constant 4).
double plancherel_density(const Rank1Params& p, double nu);

/// Samples v[i] at t0 + i h.
struct GridFunction {
    double t0 = 0;
    double h = 0;
    std::vector<CDouble> v;

    double t(size_t i) const { return t0 + static_cast<double>(i) * h; }
    size_t size() const { return v.size(); }
};

/// Uniform grid on [-tmax, tmax] with 2n+1 points.
GridFunction symmetric_grid(double tmax, size_t n);

/// Values F(nu, 1) and F(nu, s) of the transform on a nu grid.
struct Spectrum {
    std::vector<double> nu;
    std::vector<CDouble> f1, fs;
    double quad_error = 0; // Richardson estimate of the t-quadrature error
};

std::vector<double> uniform_nu(double numax, double dnu);

/// F(nu, w) = int f(t) G(-i nu, w^{-1} t) |2 sinh t|^{p} |2 sinh 2t|^{q} dt / sqrt(2 pi).
Spectrum oc_forward(const Rank1Params& p, const GridFunction& f, const std::vector<double>& nu);
/// J F(t) = int (1/2) sum_w G(i nu, w^{-1} t) F(nu, w) |c(nu)|^{-2} dnu / (4 sqrt(2 pi)) on the grid of like.
GridFunction oc_inverse(const Rank1Params& p, const Spectrum& s, const GridFunction& like);

/// (f, f)_A with the sinh weight.
double norm2_a(const Rank1Params& p, const GridFunction& f);
/// int (1/2) sum_w |F(nu, w)|^2 |c(nu)|^{-2} dnu / (4 sqrt(2 pi)).
double norm2_spectral(const Rank1Params& p, const Spectrum& s);

} // namespace gha
