#include "doctest.h"

#include "gha/hecke.hpp"
#include "gha/sampling.hpp"

using namespace gha;

namespace {

MultFn random_k1(const RootDatum& rd, Sampler& g, bool complex = true)
{
    std::vector<Scalar> vals;
    for (size_t o = 0; o < rd.n_orbits(); ++o)
        vals.push_back(g.scalar(complex));
    return rd.k1_from_k(rd.from_orbit_values(vals));
}

HElt random_elt(const RootDatum& rd, const MultFn& k1, Sampler& g, int deg, int terms)
{
    HElt h(rd, k1);
    for (int t = 0; t < terms; ++t)
        h.add_term(static_cast<size_t>(g.integer(0, static_cast<int>(rd.order()) - 1)),
                   g.poly(rd.rank(), Space::ADual, deg, 2));
    return h;
}

CVec unit(size_t n, size_t j)
{
    CVec e(n, Scalar(0));
    e[j] = Scalar(1);
    return e;
}

HElt letter_elt(const RootDatum& rd, const MultFn& k1, int x)
{
    int n = static_cast<int>(rd.rank());
    if (x < n)
        return HElt::xi(rd, k1, unit(rd.rank(), static_cast<size_t>(x)));
    return HElt::group(rd, k1, rd.simple_reflection(static_cast<size_t>(x - n)));
}

} // namespace

TEST_CASE("products of polynomials and the rank-one cross relation")
{
    RootDatum a1 = preset("A1");
    Scalar k(frac(2, 3), frac(1, 4));
    MultFn k1 = a1.from_orbit_values({k});
    Sampler g(73);
    Poly p = g.poly(1, Space::ADual, 3, 3), q = g.poly(1, Space::ADual, 3, 3);
    CHECK(HElt::poly(a1, k1, p) * HElt::poly(a1, k1, q) == HElt::poly(a1, k1, p * q));

    size_t s = a1.simple_reflection(0);
    HElt sh = HElt::group(a1, k1, s);
    Poly cor = xi_poly(a1.coroot(0));
    HElt expect(a1, k1);
    expect.add_term(s, -cor);
    expect.add_term(a1.identity(), Poly::constant(1, Space::ADual, Scalar(-2) * k));
    CHECK(sh * HElt::poly(a1, k1, cor) == expect);

    HElt sq(a1, k1);
    sq.add_term(s, cor * cor);
    CHECK(sh * HElt::poly(a1, k1, cor * cor) == sq);

    MultFn other = a1.from_orbit_values({Scalar(1)});
    CHECK_THROWS_AS(sh * HElt::group(a1, other, s), Error);
}

TEST_CASE("associativity and restriction to the group algebra")
{
    for (const char* type : {"A2", "B2"}) {
        RootDatum rd = preset(type);
        Sampler g(79);
        MultFn k1 = random_k1(rd, g);
        for (int t = 0; t < 6; ++t) {
            HElt a = random_elt(rd, k1, g, 2, 2), b = random_elt(rd, k1, g, 2, 2), c = random_elt(rd, k1, g, 1, 2);
            CHECK((a * b) * c == a * (b * c));
        }
        for (size_t u = 0; u < rd.order(); ++u)
            for (size_t v = 0; v < rd.order(); ++v)
                CHECK(HElt::group(rd, k1, u) * HElt::group(rd, k1, v) == HElt::group(rd, k1, rd.mul(u, v)));
    }
}

TEST_CASE("PBW normal form is independent of the rewriting order")
{
    for (const char* type : {"A1", "BC1", "A2", "B2"}) {
        RootDatum rd = preset(type);
        Sampler g(83);
        MultFn k1 = random_k1(rd, g);
        WordRewriter rw(rd, k1);
        int letters = static_cast<int>(2 * rd.rank());
        for (int t = 0; t < 50; ++t) {
            WordRewriter::Word w;
            int len = g.integer(1, 6);
            for (int i = 0; i < len; ++i)
                w.push_back(g.integer(0, letters - 1));
            std::mt19937 r1(static_cast<unsigned>(t)), r2(static_cast<unsigned>(1000 + t));
            HElt a = rw.normalize(w, r1), b = rw.normalize(w, r2);
            CHECK(a == b);
            HElt prod = HElt::scalar(rd, k1, Scalar(1));
            for (int x : w)
                prod = prod * letter_elt(rd, k1, x);
            CHECK(a == prod);
        }
    }
}

TEST_CASE("conjugation closed form")
{
    RootDatum a1 = preset("A1");
    Sampler g(89);
    MultFn k1a = random_k1(a1, g);
    size_t s = a1.simple_reflection(0);
    CVec xi{Scalar(frac(3, 2))};
    HElt expect = HElt::xi(a1, k1a, a1.act_dual(s, xi));
    expect.add_term(s, Poly::constant(1, Space::ADual, -k1a(0) * cdot(a1.root(0), xi)));
    CHECK(conj_by_w(a1, k1a, s, xi) == expect);
    CHECK(conj_by_w(a1, k1a, a1.identity(), xi) == HElt::xi(a1, k1a, xi));

    for (const char* type : {"A2", "B2", "G2"}) {
        RootDatum rd = preset(type);
        MultFn k1 = random_k1(rd, g);
        for (size_t w = 0; w < rd.order(); ++w)
            for (size_t j = 0; j < rd.rank(); ++j) {
                CVec e = unit(rd.rank(), j);
                HElt direct = HElt::group(rd, k1, w) * HElt::xi(rd, k1, e) * HElt::group(rd, k1, rd.inv(w));
                CHECK(conj_by_w(rd, k1, w, e) == direct);
            }
    }
}

TEST_CASE("involutions")
{
    for (const char* type : {"A1", "A2", "B2"}) {
        RootDatum rd = preset(type);
        Sampler g(97);
        // star is antilinear, so it respects the cross relation only for real k1
        MultFn k1 = random_k1(rd, g, false);
        for (size_t w = 0; w < rd.order(); ++w) {
            HElt h = HElt::group(rd, k1, w);
            CHECK(theta_H(h) == h);
            CHECK(transpose_t(h) == HElt::group(rd, k1, rd.inv(w)));
            CHECK(star(h) == HElt::group(rd, k1, rd.inv(w)));
        }
        Scalar c(frac(1, 3), frac(2, 5));
        CHECK(transpose_t(HElt::scalar(rd, k1, c)) == HElt::scalar(rd, k1, c));
        CHECK(star(HElt::scalar(rd, k1, c)) == HElt::scalar(rd, k1, c.conj()));
        for (int t = 0; t < 5; ++t) {
            HElt a = random_elt(rd, k1, g, 2, 2), b = random_elt(rd, k1, g, 2, 2);
            CHECK(theta_H(theta_H(a)) == a);
            CHECK(transpose_t(transpose_t(a)) == a);
            CHECK(star(star(a)) == a);
            CHECK(theta_H(star(a)) == star(theta_H(a)));
            CHECK(theta_H(a * b) == theta_H(a) * theta_H(b));
            CHECK(transpose_t(a * b) == transpose_t(b) * transpose_t(a));
            CHECK(star(a * b) == star(b) * star(a));
            CHECK(iota(iota(a)) == a);
            CHECK(iota(a * b) == iota(b) * iota(a));
        }
    }
}

TEST_CASE("center")
{
    for (const char* type : {"A1", "A2", "B2"}) {
        RootDatum rd = preset(type);
        Sampler g(101);
        MultFn k1 = random_k1(rd, g);
        size_t n = rd.rank();
        for (int d = 2; d <= 4; d += 2) {
            Poly l = g.poly(n, Space::ADual, 1, 3).homogeneous_part(1).pow(d), inv(n, Space::ADual);
            for (size_t w = 0; w < rd.order(); ++w)
                inv += w_act(rd, w, l);
            CHECK(is_central(HElt::poly(rd, k1, inv)));
        }
        CHECK_FALSE(is_central(HElt::xi(rd, k1, unit(n, 0))));
        CHECK_FALSE(is_central(HElt::group(rd, k1, rd.simple_reflection(0))));
        for (int t = 0; t < 5; ++t) {
            Poly p = g.poly(n, Space::ADual, 3, 3);
            bool invariant = true;
            for (size_t j = 0; j < n; ++j)
                invariant = invariant && w_act(rd, rd.simple_reflection(j), p) == p;
            CHECK(is_central(HElt::poly(rd, k1, p)) == invariant);
        }
    }
}

TEST_CASE("star of matrix-valued morphisms")
{
    Poly c = Poly::constant(1, Space::ADual, Scalar(3));
    Poly d = Poly::constant(1, Space::ADual, Scalar(-2));
    PolyMat psi{{c, d}};
    PolyMat st = star_hom(psi);
    REQUIRE(st.size() == 2);
    CHECK(st[0][0] == c);
    CHECK(st[1][0] == d);

    Poly ix = Poly::variable(1, Space::ADual, 0) * Scalar::i();
    CHECK(star_hom({{ix}})[0][0] == ix);

    Sampler g(103);
    PolyMat m(2, std::vector<Poly>(3));
    for (auto& row : m)
        for (auto& p : row)
            p = g.poly(2, Space::ADual, 3, 3);
    CHECK(star_hom(star_hom(m)) == m);
}
