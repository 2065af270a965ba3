#include "doctest.h"

#include "gha/cherednik.hpp"
#include "gha/hyper1d.hpp"
#include "gha/rootdata.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace gha;

namespace {

const double kPi = std::numbers::pi;

Rank1Params random_params(std::mt19937_64& g, bool with_2b)
{
    std::uniform_real_distribution<double> d(0.1, 2.0);
    return {d(g), with_2b ? d(g) : 0.0};
}

GridFunction gaussian(double tmax, size_t n, double center, double sigma)
{
    GridFunction f = symmetric_grid(tmax, n);
    for (size_t i = 0; i < f.size(); ++i) {
        double x = (f.t(i) - center) / sigma;
        f.v[i] = std::exp(-x * x / 2);
    }
    return f;
}

} // namespace

TEST_CASE("value at the identity and trivial eigenfunction")
{
    std::mt19937_64 g(11);
    for (int trial = 0; trial < 5; ++trial) {
        Rank1Params p = random_params(g, trial % 2 == 1);
        CDouble nu(std::uniform_real_distribution<double>(-3, 3)(g), std::uniform_real_distribution<double>(-3, 3)(g));
        CHECK(std::abs(gfunc(p, nu, 0.0) - 1.0) < 1e-12);
        for (double t = -2; t <= 2; t += 0.25)
            CHECK(std::abs(gfunc(p, -p.rho(), t) - 1.0) < 1e-10);
    }
}

TEST_CASE("zero multiplicity gives the exponential")
{
    Rank1Params p{0, 0};
    for (CDouble nu : {CDouble(1.5, 0), CDouble(0, 4), CDouble(-0.7, 2)}) {
        for (double t : {-1.5, -0.3, 0.4, 1.7})
            CHECK(std::abs(gfunc(p, nu, t) - std::exp(nu * t)) < 1e-10 * std::abs(std::exp(nu * t)));
    }
}

TEST_CASE("eigen and KZ residuals converge at second order")
{
    std::mt19937_64 g(23);
    for (int trial = 0; trial < 4; ++trial) {
        Rank1Params p = random_params(g, trial >= 2);
        CDouble nu(0.3, std::uniform_real_distribution<double>(-5, 5)(g));
        for (double t : {-1.3, -0.6, 0.7, 1.9}) {
            CHECK(eigen_residual(p, nu, t, 1e-4) < 1e-6);
            CHECK(kz_residual(p, nu, t, 1e-4) < 1e-6);
            double e1 = eigen_residual(p, nu, t, 0.02), e2 = eigen_residual(p, nu, t, 0.01),
                   e3 = eigen_residual(p, nu, t, 0.005);
            CHECK(e1 / e2 == doctest::Approx(4).epsilon(0.1));
            CHECK(e2 / e3 == doctest::Approx(4).epsilon(0.1));
            double k1 = kz_residual(p, nu, t, 0.02), k2 = kz_residual(p, nu, t, 0.01);
            CHECK(k1 / k2 == doctest::Approx(4).epsilon(0.1));
        }
    }
}

TEST_CASE("even part is invariant under nu -> -nu")
{
    std::mt19937_64 g(31);
    for (int trial = 0; trial < 4; ++trial) {
        Rank1Params p = random_params(g, trial % 2 == 0);
        CDouble nu(0.4, std::uniform_real_distribution<double>(-4, 4)(g));
        for (double t : {0.3, 1.1, 2.4}) {
            CDouble a = gfunc(p, nu, t) + gfunc(p, nu, -t);
            CDouble b = gfunc(p, -nu, t) + gfunc(p, -nu, -t);
            CHECK(std::abs(a - b) < 1e-8 * std::max(1.0, std::abs(a)));
        }
    }
}

TEST_CASE("lattice eigenfunctions normalize to G")
{
    RootDatum a1 = preset("A1");
    MultFn k = a1.from_orbit_values({Scalar(frac(3, 7))});
    Rank1Params p{3.0 / 7, 0};
    for (int m : {-2, -1, 1, 2}) {
        NonsymEigen e = nonsym_eigen(a1, k, {m});
        CDouble nu = cdot(a1.coroot(a1.simple(0)), e.spectrum).to_complex();
        auto eval = [&](double t) {
            CDouble s = 0;
            for (const auto& [mu, c] : e.e.terms())
                s += c.to_complex() * std::exp(2.0 * mu[0] * t);
            return s;
        };
        CDouble e0 = eval(0);
        REQUIRE(std::abs(e0) > 1e-12);
        for (double t : {-1.0, -0.2, 0.5, 1.3})
            CHECK(std::abs(eval(t) / e0 - gfunc(p, nu, t)) < 1e-8 * std::abs(eval(t) / e0));
    }
}

TEST_CASE("gamma and e-function")
{
    CHECK(std::abs(gamma_fn(5.0) - 24.0) < 1e-10);
    CHECK(std::abs(gamma_fn(0.5) - std::sqrt(kPi)) < 1e-12);
    CHECK(std::abs(gamma_fn(-0.5) + 2 * std::sqrt(kPi)) < 1e-12);
    CHECK(std::abs(rgamma_fn(-3.0)) == 0.0);
    CHECK_THROWS_AS(gamma_fn(-2.0), Error);
    // zeros of e on the two progressions
    Rank1Params p{0.7, 0.4};
    for (int n = 0; n < 4; ++n) {
        CHECK(std::abs(efunc(p, -(p.k_b + 1 + 2 * n))) < 1e-14);
        CHECK(std::abs(efunc(p, -(p.k1() + 2 * n))) < 1e-14);
    }
    CHECK(std::abs(efunc(p, 0.3)) > 1e-3);
    CHECK_THROWS_AS(intertwiner_factor(p, p.k1()), Error);
    CHECK(std::abs(intertwiner_factor(p, -p.rho()) - 1.0) < 1e-12);
}

TEST_CASE("Plancherel density")
{
    Rank1Params sl2 = Rank1Params::from_dims(1, 0);
    for (double nu : {0.3, 1.0, 2.5, 6.0})
        CHECK(plancherel_density(sl2, nu) == doctest::Approx(kPi * nu * std::tanh(kPi * nu)).epsilon(1e-10));
    Rank1Params zero{0, 0};
    CHECK(plancherel_density(zero, 1.7) == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(plancherel_density({1e-9, 0}, 1.7) == doctest::Approx(4.0).epsilon(1e-6));
    std::mt19937_64 g(5);
    for (int trial = 0; trial < 3; ++trial) {
        Rank1Params p = random_params(g, true);
        for (double nu : {0.4, 1.7, 5.0})
            CHECK(plancherel_density(p, nu) == doctest::Approx(plancherel_density(p, -nu)).epsilon(1e-12));
        // polynomial growth of degree k_b + k1 in |nu|
        double slope = std::log(plancherel_density(p, 400.0) / plancherel_density(p, 200.0)) / std::log(2.0);
        CHECK(slope == doctest::Approx(p.k_b + p.k1()).epsilon(1e-3));
    }
}

TEST_CASE("transform roundtrip and Plancherel")
{
    Rank1Params p = Rank1Params::from_dims(1, 0);
    GridFunction f = gaussian(3.0, 300, 0.1, 0.4);
    auto nu = uniform_nu(20.0, 0.05);
    Spectrum s = oc_forward(p, f, nu);
    CHECK(s.quad_error < 1e-6);
    GridFunction back = oc_inverse(p, s, f);
    double num = 0, den = 0;
    for (size_t i = 0; i < f.size(); ++i) {
        num = std::max(num, std::abs(back.v[i] - f.v[i]));
        den = std::max(den, std::abs(f.v[i]));
    }
    CHECK(num / den < 1e-4);
    double a = norm2_a(p, f), b = norm2_spectral(p, s);
    CHECK(std::abs(a - b) / a < 1e-4);
}

TEST_CASE("transform with zero multiplicity is the Fourier transform")
{
    Rank1Params p{0, 0};
    GridFunction f = gaussian(3.0, 300, 0.0, 0.4);
    Spectrum s = oc_forward(p, f, {0.0, 1.0, 2.5});
    for (size_t i = 0; i < s.nu.size(); ++i) {
        double expect = 0.4 * std::exp(-0.16 * s.nu[i] * s.nu[i] / 2);
        CHECK(std::abs(s.f1[i] - expect) < 1e-8);
        CHECK(std::abs(s.fs[i] - expect) < 1e-8);
    }
}

TEST_CASE("roundtrip with zero multiplicity")
{
    Rank1Params p{0, 0};
    GridFunction f = gaussian(3.0, 300, 0.3, 0.35);
    GridFunction back = oc_inverse(p, oc_forward(p, f, uniform_nu(25.0, 0.05)), f);
    for (size_t i = 0; i < f.size(); ++i)
        CHECK(std::abs(back.v[i] - f.v[i]) < 1e-6);
}

TEST_CASE("transform edge cases")
{
    Rank1Params p = Rank1Params::from_dims(1, 0);
    GridFunction z = symmetric_grid(2.0, 40);
    Spectrum s = oc_forward(p, z, {-1.0, 0.0, 1.0});
    for (size_t i = 0; i < 3; ++i)
        CHECK(std::abs(s.f1[i]) == 0.0);
    GridFunction wide = gaussian(1.0, 40, 0.0, 1.0);
    CHECK_THROWS_AS(oc_forward(p, wide, {0.0}), Error);
    GridFunction odd = gaussian(3.0, 41, 0.0, 0.4);
    CHECK_THROWS_AS(oc_forward(p, odd, {0.0}), Error);
    CHECK_THROWS_AS(symmetric_grid(-1.0, 10), Error);
    CHECK_THROWS_AS(gfunc(p, CDouble(NAN, 0), 0.5), Error);
}
