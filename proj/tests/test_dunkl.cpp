#include "doctest.h"

#include "gha/dunkl.hpp"
#include "gha/sampling.hpp"

using namespace gha;

namespace {

MultFn random_k(const RootDatum& rd, Sampler& g)
{
    std::vector<Scalar> vals;
    for (size_t o = 0; o < rd.n_orbits(); ++o)
        vals.push_back(g.scalar());
    return rd.from_orbit_values(vals);
}

QVec unit(size_t n, size_t j)
{
    QVec e(n, Rational(0));
    e[j] = 1;
    return e;
}

} // namespace

TEST_CASE("Dunkl operator on small inputs")
{
    RootDatum a1 = preset("A1");
    Scalar c(frac(2, 3), frac(-1, 5));
    MultFn k = a1.from_orbit_values({c});
    QVec xi{frac(3, 4)};
    DunklOp op{&a1, k, xi};

    CHECK(dunkl_apply(op, Poly::constant(1, Space::A, Scalar(7))).is_zero());

    // p = alpha (the restricted root, half of the root in R_1)
    QVec alpha{1};
    Scalar a(dot(alpha, xi));
    CHECK(dunkl_apply(op, mu_poly(alpha)) == Poly::constant(1, Space::A, (Scalar(1) + Scalar(2) * c) * a));

    // invariant polynomial: reflection terms vanish
    RootDatum b2 = preset("B2");
    Sampler g(31);
    MultFn kb = random_k(b2, g);
    Poly l = g.poly(2, Space::A, 3, 4), inv(2, Space::A);
    for (size_t w = 0; w < b2.order(); ++w)
        inv += w_act(b2, w, l);
    QVec eta = g.qvec(2);
    CHECK(dunkl_apply({&b2, kb, eta}, inv) == inv.directional(eta));
}

TEST_CASE("Dunkl operators lower degree by one")
{
    RootDatum g2 = preset("G2");
    Sampler g(37);
    MultFn k = random_k(g2, g);
    for (const auto& e : monomials_of_degree(2, 5)) {
        Poly p = Poly::monomial(Space::A, e);
        Poly d = dunkl_apply({&g2, k, g.qvec(2)}, p);
        CHECK((d.is_zero() || (d.is_homogeneous() && d.degree() == 4)));
    }
}

TEST_CASE("commutativity and W-equivariance")
{
    for (const char* type : {"A1", "BC1", "A2", "B2"}) {
        RootDatum rd = preset(type);
        Sampler g(41);
        size_t n = rd.rank();
        for (int t = 0; t < 2; ++t) {
            MultFn k = random_k(rd, g);
            QVec xi = g.qvec(n), eta = g.qvec(n);
            for (const auto& e : monomials_up_to_degree(n, 4)) {
                Poly p = Poly::monomial(Space::A, e);
                CHECK(dunkl_apply({&rd, k, xi}, dunkl_apply({&rd, k, eta}, p)) ==
                      dunkl_apply({&rd, k, eta}, dunkl_apply({&rd, k, xi}, p)));
                for (size_t j = 0; j < n; ++j) {
                    size_t s = rd.simple_reflection(j);
                    Poly lhs = w_act(rd, s, dunkl_apply({&rd, k, xi}, w_act(rd, rd.inv(s), p)));
                    CHECK(lhs == dunkl_apply({&rd, k, rd.act_dual(s, xi)}, p));
                }
            }
        }
    }
}

TEST_CASE("composition is independent of factor order")
{
    RootDatum a2 = preset("A2");
    Sampler g(43);
    MultFn k = random_k(a2, g);
    Poly xi = xi_poly(unit(2, 0)), eta = xi_poly(g.qvec(2));
    Poly p = g.poly(2, Space::A, 4, 5);
    CHECK(dunkl_compose(a2, k, Poly::constant(2, Space::ADual, Scalar(1)), p) == p);
    Poly a = dunkl_compose(a2, k, xi, dunkl_compose(a2, k, eta, p));
    Poly b = dunkl_compose(a2, k, eta, dunkl_compose(a2, k, xi, p));
    CHECK(a == b);
    CHECK(dunkl_compose(a2, k, xi * eta, p) == a);
}

TEST_CASE("closed-form Laplacian equals the composed Laplacian")
{
    for (const char* type : {"A1", "BC1", "A2", "B2", "G2"}) {
        RootDatum rd = preset(type);
        Sampler g(47);
        MultFn k = random_k(rd, g);
        Poly lap = laplacian_symbol(rd);
        for (int t = 0; t < 4; ++t) {
            Poly p = g.poly(rd.rank(), Space::A, 4, 5);
            CHECK(dunkl_laplacian(rd, k, p) == dunkl_compose(rd, k, lap, p));
        }
        CHECK(dunkl_laplacian(rd, k, Poly::constant(rd.rank(), Space::A, Scalar(3))).is_zero());
        // k = 0: ordinary Laplacian
        Poly p = g.poly(rd.rank(), Space::A, 3, 4);
        CHECK(dunkl_laplacian(rd, rd.zero_mult(), p) == dunkl_compose(rd, rd.zero_mult(), lap, p));
    }
    // A1 with G = [[1]]: the Laplacian of x^2 is 2
    RootDatum a1 = preset("A1");
    Poly x2 = Poly::monomial(Space::A, {2});
    CHECK(dunkl_laplacian(a1, a1.zero_mult(), x2) == Poly::constant(1, Space::A, Scalar(2)));
}

TEST_CASE("de Jeu bracket identities")
{
    Sampler g(53);
    for (const char* type : {"A1", "A2", "B2"}) {
        RootDatum rd = preset(type);
        size_t n = rd.rank();
        MultFn k = random_k(rd, g);
        Poly f = g.poly(n, Space::A, 3, 4);
        // d = 0
        Poly c = Poly::constant(n, Space::A, Scalar(5));
        CHECK(dejeu_power(rd, k, c, f) == f * Scalar(5));
        for (int d = 1; d <= 3; ++d) {
            Poly p = g.poly(n, Space::A, d, 3).homogeneous_part(d);
            if (p.is_zero())
                continue;
            CHECK(dejeu_power(rd, k, p, f) == dunkl_compose(rd, k, transport_to_sym(rd, p), f));
            // k = 0 specialization: ordinary constant-coefficient operator
            CHECK(dejeu_power(rd, rd.zero_mult(), p, f) ==
                  dunkl_compose(rd, rd.zero_mult(), transport_to_sym(rd, p), f));
        }
    }
    RootDatum a1 = preset("A1");
    Poly bad = Poly::monomial(Space::A, {1}) + Poly::monomial(Space::A, {2});
    CHECK_THROWS_AS(dejeu_power(a1, a1.mult_m(), bad, bad), Error);
}
