#include "doctest.h"

#include "gha/cherednik.hpp"
#include "gha/dunkl.hpp"
#include "gha/sampling.hpp"

#include <set>

using namespace gha;

namespace {

MultFn random_k(const RootDatum& rd, Sampler& g)
{
    std::vector<Scalar> vals;
    for (size_t o = 0; o < rd.n_orbits(); ++o)
        vals.push_back(g.scalar());
    return rd.from_orbit_values(vals);
}

ExpPoly orbit_sum(const RootDatum& rd, const Exps& mu)
{
    std::set<Exps> seen;
    for (size_t w = 0; w < rd.order(); ++w)
        seen.insert(w_act(rd, w, ExpPoly::exp(mu)).terms().begin()->first);
    ExpPoly f(rd.rank());
    for (const auto& e : seen)
        f.add_term(e, Scalar(1));
    return f;
}

std::vector<Exps> lattice_box(size_t n, int r)
{
    std::vector<Exps> out;
    Exps e(n, -r);
    while (true) {
        out.push_back(e);
        size_t i = 0;
        while (i < n && e[i] == r)
            e[i++] = -r;
        if (i == n)
            break;
        ++e[i];
    }
    return out;
}

} // namespace

TEST_CASE("Cherednik operator on constants and a rank-one exponential")
{
    RootDatum a1 = preset("A1");
    Scalar c(frac(3, 5), frac(1, 2));
    MultFn k = a1.from_orbit_values({c});
    QVec xi{frac(2, 3)};
    CherednikOp op{&a1, k, xi};
    Scalar b(dot(a1.root(0), xi)); // beta(xi) for the root beta = 2 alpha of R
    Scalar rho = cdot(xi, rho_k(a1, k));
    CHECK(rho == c * b * Scalar(frac(1, 2)));

    CHECK(cherednik_apply(op, ExpPoly::constant(1, Scalar(1))) == ExpPoly::constant(1, -rho));

    // (e^{-beta} - e^{beta}) / (1 - e^{-beta}) = -e^{beta} - 1
    ExpPoly em = ExpPoly::exp({-1});
    ExpPoly expect = em * (-b) - (ExpPoly::exp({1}) + ExpPoly::constant(1, Scalar(1))) * (c * b) - em * rho;
    CHECK(cherednik_apply(op, em) == expect);
    ExpPoly divided = ExpPoly::exp({1}) + ExpPoly::constant(1, Scalar(1));
    CHECK(divided - divided * ExpPoly::exp({-1}) == ExpPoly::exp({1}) - ExpPoly::exp({-1}));

    // k = 0: ordinary derivative
    Sampler g(3);
    ExpPoly f = g.exppoly(1, 3, 4);
    CHECK(cherednik_apply({&a1, a1.zero_mult(), xi}, f) == exp_derivative(a1, xi, f));
}

TEST_CASE("commutativity and the graded Hecke relation")
{
    for (const char* type : {"A1", "BC1", "A2"}) {
        RootDatum rd = preset(type);
        size_t n = rd.rank();
        Sampler g(59);
        for (int t = 0; t < 2; ++t) {
            MultFn k = random_k(rd, g);
            MultFn k1 = rd.k1_from_k(k);
            QVec xi = g.qvec(n), eta = g.qvec(n);
            for (int s = 0; s < 4; ++s) {
                ExpPoly f = g.exppoly(n, 2, 3);
                CherednikOp tx{&rd, k, xi}, te{&rd, k, eta};
                CHECK(cherednik_apply(tx, cherednik_apply(te, f)) == cherednik_apply(te, cherednik_apply(tx, f)));
                for (size_t j = 0; j < n; ++j) {
                    size_t sj = rd.simple_reflection(j);
                    size_t a = rd.simple(j);
                    ExpPoly lhs = w_act(rd, sj, cherednik_apply(tx, f));
                    ExpPoly rhs = cherednik_apply({&rd, k, rd.act_dual(sj, xi)}, w_act(rd, sj, f)) -
                                  f * (k1(a) * Scalar(dot(rd.root(a), xi)));
                    CHECK(lhs == rhs);
                }
            }
        }
    }
}

TEST_CASE("invariant symbols commute with W")
{
    RootDatum a2 = preset("A2");
    Sampler g(61);
    MultFn k = random_k(a2, g);
    Poly lap = laplacian_symbol(a2);
    ExpPoly f = g.exppoly(2, 2, 3);
    ExpPoly tf = cherednik_compose(a2, k, lap, f);
    for (size_t w = 0; w < a2.order(); ++w)
        CHECK(w_act(a2, w, tf) == cherednik_compose(a2, k, lap, w_act(a2, w, f)));
    CHECK(cherednik_compose(a2, k, Poly::constant(2, Space::ADual, Scalar(1)), f) == f);
}

TEST_CASE("Laplacian formula on invariant orbit sums")
{
    for (const char* type : {"A1", "BC1", "A2", "B2"}) {
        RootDatum rd = preset(type);
        Sampler g(67);
        MultFn k = random_k(rd, g);
        Poly lap = laplacian_symbol(rd);
        std::set<Exps> done;
        for (const auto& mu : lattice_box(rd.rank(), 2)) {
            ExpPoly f = orbit_sum(rd, mu);
            if (!done.insert(f.terms().begin()->first).second)
                continue;
            CHECK(laplacian_invariant(rd, k, f) == cherednik_compose(rd, k, lap, f));
        }
        // f = 1 gives B(H_rho, H_rho); k = 0 gives d(L_a)
        ExpPoly one = ExpPoly::constant(rd.rank(), Scalar(1));
        CHECK(laplacian_invariant(rd, k, one) == cherednik_compose(rd, k, lap, one));
        ExpPoly f = orbit_sum(rd, Exps(rd.rank(), 1));
        CHECK(laplacian_invariant(rd, rd.zero_mult(), f) == cherednik_compose(rd, rd.zero_mult(), lap, f));
        CHECK_THROWS_AS(laplacian_invariant(rd, k, ExpPoly::exp(Exps(rd.rank(), 1))), Error);
    }
}

TEST_CASE("lattice eigenfunctions")
{
    RootDatum a1 = preset("A1");
    Sampler g(71);
    MultFn k = random_k(a1, g);
    // mu = 0: constants, spectrum -rho_k
    NonsymEigen e0 = nonsym_eigen(a1, k, {0});
    CHECK(e0.e == ExpPoly::constant(1, Scalar(1)));
    CVec rho = rho_k(a1, k);
    CHECK(e0.spectrum == CVec{-rho[0]});
    // k = 0: pure exponential with spectrum mu
    NonsymEigen ez = nonsym_eigen(a1, a1.zero_mult(), {-2});
    CHECK(ez.e == ExpPoly::exp({-2}));
    CHECK(ez.spectrum == to_complex(a1.from_pi({-2})));
    // mu = -beta: check the eigen-relation directly
    NonsymEigen em = nonsym_eigen(a1, k, {-1});
    CHECK(em.e.coeff({-1}) == Scalar(1));
    QVec xi{frac(5, 7)};
    CHECK(cherednik_apply({&a1, k, xi}, em.e) == em.e * cdot(xi, em.spectrum));

    // distinct spectra within a W-orbit
    for (const char* type : {"A2", "B2", "BC1"}) {
        RootDatum rd = preset(type);
        MultFn kr = random_k(rd, g);
        Exps mu = rd.to_pi(rd.root(rd.simple(0)));
        std::set<Exps> orbit;
        for (size_t w = 0; w < rd.order(); ++w)
            orbit.insert(w_act(rd, w, ExpPoly::exp(mu)).terms().begin()->first);
        std::set<std::vector<std::string>> spectra;
        for (const auto& nu : orbit) {
            NonsymEigen e = nonsym_eigen(rd, kr, nu);
            std::vector<std::string> key;
            for (const auto& s : e.spectrum)
                key.push_back(s.str());
            spectra.insert(key);
            for (size_t j = 0; j < rd.rank(); ++j) {
                QVec ej(rd.rank(), Rational(0));
                ej[j] = 1;
                CHECK(cherednik_apply({&rd, kr, ej}, e.e) == e.e * e.spectrum[j]);
            }
        }
        CHECK(spectra.size() == orbit.size());
    }
}
