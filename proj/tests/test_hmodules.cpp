#include "doctest.h"

#include "gha/hmodules.hpp"
#include "gha/sampling.hpp"

using namespace gha;

namespace {

MultFn random_k1(const RootDatum& rd, Sampler& g, bool complex)
{
    std::vector<Scalar> vals;
    for (size_t o = 0; o < rd.n_orbits(); ++o) {
        Scalar v = g.scalar(complex);
        vals.push_back(v.is_zero() ? Scalar(frac(1, 2)) : v);
    }
    return rd.k1_from_k(rd.from_orbit_values(vals));
}

MultFn const_k1(const RootDatum& rd, const Scalar& c)
{
    return rd.k1_from_k(rd.from_orbit_values(std::vector<Scalar>(rd.n_orbits(), c)));
}

HElt random_elt(const RootDatum& rd, const MultFn& k1, Sampler& g)
{
    HElt h(rd, k1);
    for (int t = 0; t < 2; ++t)
        h.add_term(static_cast<size_t>(g.integer(0, static_cast<int>(rd.order()) - 1)),
                   g.poly(rd.rank(), Space::ADual, 2, 2));
    return h;
}

CVec neg_conj(const CVec& v)
{
    CVec o;
    for (const auto& x : v)
        o.push_back(-x.conj());
    return o;
}

std::vector<CMat> char_matrices(const CVec& chi)
{
    std::vector<CMat> u;
    for (const auto& c : chi)
        u.push_back(CMat::identity(1) * c);
    return u;
}

// Gaussian-rational lambda off every wall lambda(alpha^vee) = +-k1(alpha).
CVec generic_lambda(const RootDatum& rd, const MultFn& k1, Sampler& g)
{
    for (;;) {
        CVec l = g.cvec(rd.rank());
        bool ok = true;
        for (size_t a : rd.r1_plus()) {
            Scalar v = cdot(rd.coroot(a), l);
            ok = ok && v != k1(a) && v != -k1(a) && !v.is_zero();
        }
        if (ok)
            return l;
    }
}

MultFn positive_k1(const RootDatum& rd, Sampler& g)
{
    std::vector<Scalar> vals;
    for (size_t o = 0; o < rd.n_orbits(); ++o)
        vals.push_back(Scalar(Rational(g.integer(1, 9), g.integer(1, 4))));
    return rd.k1_from_k(rd.from_orbit_values(vals));
}

const char* kTypes[] = {"A1", "BC1", "A2", "B2"};

} // namespace

TEST_CASE("module relations hold for the standard constructions")
{
    for (const char* type : kTypes) {
        RootDatum rd = preset(type);
        Sampler g(211);
        MultFn k1 = random_k1(rd, g, true);
        CVec lambda = g.cvec(rd.rank());
        CHECK(check_module(principal_series(rd, k1, lambda)).ok);
        CHECK(check_module(one_dim(rd, k1, 1)).ok);
        CHECK(check_module(one_dim(rd, k1, -1)).ok);
        HModule ind = induced_module(rd, k1, char_matrices(g.cvec(rd.rank())));
        CHECK(check_module(ind).ok);
        HModule bad = principal_series(rd, k1, lambda);
        bad.xi[0] = bad.xi[0] + CMat::identity(bad.dim) * Scalar(0);
        bad.s[0](0, 0) += Scalar(1);
        CHECK_FALSE(check_module(bad).ok);
    }
}

TEST_CASE("principal series equals the module induced from the character -lambda")
{
    for (const char* type : kTypes) {
        RootDatum rd = preset(type);
        Sampler g(223);
        MultFn k1 = random_k1(rd, g, true);
        CVec lambda = g.cvec(rd.rank());
        CVec minus;
        for (const auto& x : lambda)
            minus.push_back(-x);
        HModule ps = principal_series(rd, k1, lambda);
        HModule ind = induced_module(rd, k1, char_matrices(minus));
        CHECK(ps.s == ind.s);
        CHECK(ps.xi == ind.xi);
    }
}

TEST_CASE("action of H is a representation")
{
    RootDatum rd = preset("B2");
    Sampler g(227);
    MultFn k1 = random_k1(rd, g, true);
    HModule x = principal_series(rd, k1, g.cvec(2));
    for (int t = 0; t < 4; ++t) {
        HElt a = random_elt(rd, k1, g), b = random_elt(rd, k1, g);
        CHECK(act(x, a * b) == act(x, a) * act(x, b));
    }
}

TEST_CASE("induction of a two-dimensional non-semisimple module")
{
    RootDatum rd = preset("A1");
    Sampler g(229);
    MultFn k1 = random_k1(rd, g, false);
    CMat j(2, 2);
    j(0, 0) = j(1, 1) = Scalar(frac(1, 3));
    j(0, 1) = Scalar(1);
    HModule ind = induced_module(rd, k1, {j});
    CHECK(ind.dim == 4);
    CHECK(check_module(ind).ok);
    CMat a(2, 2), b(2, 2);
    a(0, 1) = Scalar(1);
    b(1, 0) = Scalar(1);
    RootDatum a2 = preset("A2");
    CHECK_THROWS_AS(induced_module(a2, const_k1(a2, Scalar(1)), {a, b}), Error);
}

TEST_CASE("fundamental invariants have the expected degrees")
{
    struct Case {
        const char* type;
        std::vector<int> degrees;
    } cases[] = {{"A1", {2}}, {"BC1", {2}}, {"A2", {2, 3}}, {"B2", {2, 4}}, {"G2", {2, 6}}};
    for (const auto& c : cases) {
        RootDatum rd = preset(c.type);
        auto inv = fundamental_invariants(rd);
        REQUIRE(inv.size() == c.degrees.size());
        long prod = 1;
        for (size_t i = 0; i < inv.size(); ++i) {
            CHECK(inv[i].degree() == c.degrees[i]);
            prod *= inv[i].degree();
            for (size_t j = 0; j < rd.rank(); ++j)
                CHECK(w_act(rd, rd.simple_reflection(j), inv[i]) == inv[i]);
        }
        CHECK(prod == static_cast<long>(rd.order()));
    }
}

TEST_CASE("standard quotient has dimension |W| and is a module")
{
    for (const char* type : {"A1", "A2", "B2", "G2"}) {
        RootDatum rd = preset(type);
        Sampler g(233);
        MultFn k1 = random_k1(rd, g, true);
        CVec mu = g.cvec(rd.rank());
        for (int sign : {1, -1}) {
            StandardQuotient q(rd, k1, sign, mu);
            CHECK(q.module().dim == rd.order());
            CHECK(check_module(q.module()).ok);
            auto inv = fundamental_invariants(rd);
            for (const auto& d : inv)
                CHECK(q.vector_of(d) == q.vector_of(Poly::constant(rd.rank(), Space::ADual, d.evaluate(mu))));
            auto cc = central_character(q.module(), inv);
            CHECK(cc.kind == CentralCharacter::Character);
            CHECK(same_orbit(rd, cc.point, mu));
        }
    }
}

TEST_CASE("sesquilinear form is invariant under star")
{
    for (const char* type : {"A1", "A2", "B2"}) {
        RootDatum rd = preset(type);
        Sampler g(239);
        MultFn k1 = random_k1(rd, g, false);
        CVec lambda = g.cvec(rd.rank());
        HModule x1 = principal_series(rd, k1, lambda);
        HModule x2 = principal_series(rd, k1, neg_conj(lambda));
        for (int t = 0; t < 4; ++t) {
            HElt h = random_elt(rd, k1, g);
            CVec f1 = g.cvec(x1.dim), f2 = g.cvec(x2.dim);
            CHECK(sesqui_form(x1, act(x1, h) * f1, x2, f2) == sesqui_form(x1, f1, x2, act(x2, star(h)) * f2));
        }
        CHECK_THROWS_AS(sesqui_form(x1, CVec(x1.dim), x1, CVec(x1.dim)), Error);
    }
}

TEST_CASE("intertwiners are morphisms and compose along reduced words")
{
    for (const char* type : {"A1", "A2", "B2", "G2"}) {
        RootDatum rd = preset(type);
        Sampler g(241);
        MultFn k1 = random_k1(rd, g, true);
        CVec lambda = g.cvec(rd.rank());
        HModule x = principal_series(rd, k1, lambda);
        for (size_t w = 0; w < rd.order(); ++w) {
            CMat a = intertwiner(rd, k1, w, lambda);
            CHECK(is_morphism(x, principal_series(rd, k1, rd.act(w, lambda)), a));
        }
        size_t w0 = rd.longest();
        std::vector<int> word = rd.elt(w0).word;
        // the longest element has a second reduced word: start with the other generator
        if (rd.rank() == 2) {
            std::vector<int> alt;
            for (size_t i = 0; i < word.size(); ++i)
                alt.push_back(1 - word[i]);
            CHECK(rd.from_word(alt) == w0);
            CHECK(intertwiner_word(rd, k1, alt, lambda) == intertwiner(rd, k1, w0, lambda));
        }
    }
}

TEST_CASE("Poisson kernel is trivial exactly off the product zero set")
{
    for (const char* type : {"A1", "A2", "B2"}) {
        RootDatum rd = preset(type);
        MultFn k1 = const_k1(rd, Scalar(1));
        CVec rho = rho_from_k1(rd, k1);
        CVec minus_rho;
        for (const auto& x : rho)
            minus_rho.push_back(-x);
        Sampler g(251);
        CVec generic = g.cvec(rd.rank());
        CHECK(!poisson_product(rd, k1, generic).is_zero());
        CHECK(poisson_kernel(principal_series(rd, k1, generic)).cols() == 0);
        CHECK(poisson_product(rd, k1, minus_rho).is_zero());
        CMat ker = poisson_kernel(principal_series(rd, k1, minus_rho));
        CHECK(ker.cols() > 0);
        CHECK(poisson_kernel(principal_series(rd, k1, rho)).cols() == 0);
    }
}

TEST_CASE("irreducibility criterion agrees with the generated algebra")
{
    for (const char* type : {"A1", "A2", "B2"}) {
        RootDatum rd = preset(type);
        MultFn k1 = const_k1(rd, Scalar(1));
        Sampler g(257);
        std::vector<CVec> params{g.cvec(rd.rank()), rho_from_k1(rd, k1)};
        // lambda with lambda(alpha^vee) = k1 on the first simple root only
        CVec partial = g.cvec(rd.rank());
        const QVec& cor = rd.coroot(rd.simple(0));
        Scalar cur = cdot(cor, partial);
        size_t idx = sgn(cor[0]) != 0 ? 0 : 1;
        partial[idx] += (k1(rd.simple(0)) - cur) / Scalar(cor[idx]);
        params.push_back(partial);
        for (const auto& lambda : params) {
            HModule x = principal_series(rd, k1, lambda);
            bool full = generated_algebra_dim(x) == x.dim * x.dim;
            CHECK(full == is_irreducible_ps(rd, k1, lambda));
        }
    }
}

TEST_CASE("central character of the principal series")
{
    for (const char* type : {"A1", "A2", "B2"}) {
        RootDatum rd = preset(type);
        Sampler g(263);
        MultFn k1 = random_k1(rd, g, true);
        CVec lambda = g.cvec(rd.rank());
        auto inv = fundamental_invariants(rd);
        auto cc = central_character(principal_series(rd, k1, lambda), inv);
        CHECK(cc.kind == CentralCharacter::Character);
        CVec minus;
        for (const auto& x : lambda)
            minus.push_back(-x);
        CHECK(same_orbit(rd, cc.point, minus));
    }
}

TEST_CASE("hom spaces")
{
    RootDatum rd = preset("A2");
    Sampler g(269);
    MultFn k1 = random_k1(rd, g, true);
    CVec lambda = g.cvec(2);
    HModule x = principal_series(rd, k1, lambda);
    CHECK(hom_space(x, x).size() == 1);
    size_t w = rd.simple_reflection(1);
    CHECK(hom_space(x, principal_series(rd, k1, rd.act(w, lambda))).size() == 1);
    CHECK(hom_space(x, principal_series(rd, k1, g.cvec(2))).empty());
}

TEST_CASE("rank-one reducibility at rho")
{
    RootDatum rd = preset("A1");
    MultFn k1 = const_k1(rd, Scalar(1));
    CVec rho = rho_from_k1(rd, k1);
    CVec minus_rho{-rho[0]};

    HModule brho = principal_series(rd, k1, rho);
    auto lat = submodule_lattice(brho);
    CHECK(lat.exhaustive);
    REQUIRE(lat.subs.size() == 3);
    HModule sub = sub_module(brho, lat.subs[1]);
    CHECK(one_dim_type(sub) == 1);
    CHECK(sub.xi[0](0, 0) == -rho[0]);
    CHECK(one_dim_type(quotient_module(brho, lat.subs[1])) == -1);

    HModule bm = principal_series(rd, k1, minus_rho);
    auto lat2 = submodule_lattice(bm);
    REQUIRE(lat2.subs.size() == 3);
    CHECK(one_dim_type(sub_module(bm, lat2.subs[1])) == -1);
    CHECK(one_dim_type(quotient_module(bm, lat2.subs[1])) == 1);

    CMat ker = poisson_kernel(bm);
    REQUIRE(ker.cols() == 1);
    CHECK(one_dim_type(sub_module(bm, ker)) == -1);

    HModule generic = principal_series(rd, k1, {Scalar(frac(1, 3))});
    CHECK(submodule_lattice(generic).subs.size() == 2);
}

TEST_CASE("submodule search refuses large modules")
{
    RootDatum rd = preset("G2");
    HModule x = principal_series(rd, const_k1(rd, Scalar(1)), {Scalar(1), Scalar(2)});
    CHECK_THROWS_AS(submodule_lattice(x), Error);
}

TEST_CASE("rank-one matrices match the hand computation")
{
    RootDatum rd = preset("A1");
    Scalar k(frac(3, 4));
    MultFn k1 = rd.from_orbit_values({k});
    CVec lambda{Scalar(frac(2, 3), frac(1, 5))};
    HModule x = principal_series(rd, k1, lambda);
    size_t one = rd.identity(), s = rd.simple_reflection(0);
    size_t a = rd.simple(0);
    CVec xi{Scalar(1)};
    Scalar lx = lambda[0], slx = rd.act(s, lambda)[0];
    CHECK(x.s[0](s, one) == Scalar(1));
    CHECK(x.s[0](one, s) == Scalar(1));
    CHECK(x.xi[0](s, s) == -slx);
    CHECK(x.xi[0](one, one) == -lx);
    CHECK(x.xi[0](s, one) == -k1(a) * cdot(rd.root(a), xi));

    CMat am = intertwiner_simple(rd, k1, 0, lambda, false);
    CHECK(am(one, one) == k1(a));
    CHECK(am(s, one) == -cdot(rd.coroot(a), lambda));

    StandardQuotient q(rd, k1, 1, lambda);
    REQUIRE(q.module().dim == 2);
    Poly cor = xi_poly(rd.coroot(a));
    CVec img = q.module().s[0] * q.vector_of(cor);
    CVec expect = q.vector_of(cor * Scalar(-1) - Poly::constant(1, Space::ADual, Scalar(2) * k1(a)));
    CHECK(img == expect);
}

TEST_CASE("intertwiner unit image and cocycle law")
{
    for (const char* type : {"A2", "B2"}) {
        RootDatum rd = preset(type);
        Sampler g(271);
        MultFn k1 = random_k1(rd, g, true);
        for (int t = 0; t < 3; ++t) {
            CVec lambda = g.cvec(rd.rank());
            CVec ones(rd.order(), Scalar(1));
            for (size_t w1 = 0; w1 < rd.order(); ++w1) {
                CHECK(intertwiner(rd, k1, w1, lambda) * ones == ones);
                for (size_t w2 = 0; w2 < rd.order(); w2 += 2)
                    CHECK(intertwiner(rd, k1, rd.mul(w1, w2), lambda) ==
                          intertwiner(rd, k1, w1, rd.act(w2, lambda)) * intertwiner(rd, k1, w2, lambda));
            }
        }
    }
}

TEST_CASE("quotient modules of P_H: regular character, sign isotype, isomorphism with B_H")
{
    for (const char* type : {"A1", "A2", "B2"}) {
        RootDatum rd = preset(type);
        Sampler g(277);
        MultFn k1 = random_k1(rd, g, false);
        CVec lambda = g.cvec(rd.rank());
        StandardQuotient triv(rd, k1, 1, lambda);
        const HModule& p = triv.module();
        for (size_t w = 0; w < rd.order(); ++w) {
            CMat m = group_matrix(p, w);
            Scalar tr;
            for (size_t i = 0; i < p.dim; ++i)
                tr += m(i, i);
            CHECK(tr == (w == rd.identity() ? Scalar(static_cast<long>(rd.order())) : Scalar(0)));
        }
        Poly f = Poly::constant(rd.rank(), Space::ADual, Scalar(1));
        for (size_t a : rd.r1_plus())
            f = f * (xi_poly(rd.coroot(a)) + Poly::constant(rd.rank(), Space::ADual, k1(a)));
        CVec fv = triv.vector_of(f);
        CMat stack(rd.rank() * p.dim, p.dim);
        for (size_t j = 0; j < rd.rank(); ++j)
            for (size_t a = 0; a < p.dim; ++a)
                for (size_t b = 0; b < p.dim; ++b)
                    stack(j * p.dim + a, b) = p.s[j](a, b) + (a == b ? Scalar(1) : Scalar(0));
        CMat iso = nullspace(stack);
        REQUIRE(iso.cols() == 1);
        CHECK(rank(from_columns(std::vector<CVec>{iso.col(0), fv}, p.dim)) == 1);

        if (rd.rank() == 1 || std::string(type) == "A2") {
            std::vector<CVec> seeds;
            for (size_t i = 0; i < p.dim; ++i)
                seeds.push_back(CVec(p.dim));
            for (size_t i = 0; i < p.dim; ++i)
                seeds[i][i] = Scalar(1);
            for (int r = 0; r < 20; ++r)
                seeds.push_back(g.cvec(p.dim));
            for (const auto& v : seeds) {
                CMat sub = submodule_closure(p, from_columns(std::vector<CVec>{v}, p.dim));
                std::vector<CVec> cols = columns(sub);
                cols.push_back(fv);
                CHECK(rank(from_columns(cols, p.dim)) == sub.cols());
            }
        }

        CVec minus;
        for (const auto& x : lambda)
            minus.push_back(-x);
        StandardQuotient sgn(rd, k1, -1, minus);
        auto homs = hom_space(sgn.module(), principal_series(rd, k1, lambda));
        REQUIRE(homs.size() == 1);
        CHECK(!determinant(homs[0]).is_zero());
    }
}

TEST_CASE("central characters of small modules")
{
    RootDatum rd = preset("A2");
    MultFn k1 = const_k1(rd, Scalar(frac(1, 2)));
    auto inv = fundamental_invariants(rd);
    CVec rho = rho_from_k1(rd, k1);
    auto cc = central_character(one_dim(rd, k1, 1), inv);
    CHECK(cc.kind == CentralCharacter::Character);
    CVec minus_rho;
    for (const auto& x : rho)
        minus_rho.push_back(-x);
    CHECK(same_orbit(rd, cc.point, minus_rho));
    CHECK(intertwining_maps(generators(one_dim(rd, k1, 1)), generators(one_dim(rd, k1, -1))).empty());

    RootDatum a1 = preset("A1");
    MultFn k1a = const_k1(a1, Scalar(1));
    CMat j(2, 2);
    j(0, 0) = j(1, 1) = Scalar(frac(1, 3));
    j(0, 1) = Scalar(1);
    auto jc = central_character(induced_module(a1, k1a, {j}), fundamental_invariants(a1));
    CHECK(jc.kind == CentralCharacter::GeneralizedOnly);
}

TEST_CASE("weights of theta-twisted xi on the principal series give the pairing values")
{
    for (const char* type : {"A1", "A2", "B2"}) {
        RootDatum rd = preset(type);
        Sampler g(281);
        MultFn k1 = positive_k1(rd, g);
        size_t n = rd.rank();
        Poly f = Poly::constant(n, Space::ADual, Scalar(1));
        for (size_t a : rd.r1_plus())
            f = f * (xi_poly(rd.coroot(a)) + Poly::constant(n, Space::ADual, k1(a)));
        HElt fstar = star(HElt::poly(rd, k1, f));
        for (int t = 0; t < 2; ++t) {
            CVec lambda = generic_lambda(rd, k1, g);
            HModule x = principal_series(rd, k1, lambda);
            std::vector<CMat> th;
            for (size_t j = 0; j < n; ++j) {
                CVec e(n);
                e[j] = Scalar(1);
                th.push_back(act(x, theta_H(HElt::xi(rd, k1, e))));
            }
            for (size_t w = 0; w < rd.order(); ++w) {
                CVec wl = rd.act(w, lambda);
                CMat stack(n * x.dim, x.dim);
                for (size_t j = 0; j < n; ++j)
                    for (size_t a = 0; a < x.dim; ++a)
                        for (size_t b = 0; b < x.dim; ++b)
                            stack(j * x.dim + a, b) = th[j](a, b) - (a == b ? wl[j] : Scalar(0));
                CMat ev = nullspace(stack);
                REQUIRE(ev.cols() == 1);
                CVec fw = ev.col(0);
                Scalar e1 = ev1(fw);
                REQUIRE(!e1.is_zero());
                for (auto& c : fw)
                    c /= e1;
                CHECK(ev1(act(x, fstar) * fw) == poisson_product(rd, k1, wl));
            }
        }
    }
}

TEST_CASE("star of W-equivariant maps into P_H and the pairing identity")
{
    for (const char* type : {"A1", "A2", "B2"}) {
        RootDatum rd = preset(type);
        Sampler g(283);
        MultFn k1 = random_k1(rd, g, false);
        size_t n = rd.rank();
        std::vector<std::pair<WRep, WRep>> pairs{{reflection_rep(rd), sign_rep(rd)},
                                                 {trivial_rep(rd), reflection_rep(rd)}};
        for (const auto& [y, u] : pairs) {
            PMap psi0(y.dim(), PVec(u.dim()));
            for (auto& row : psi0)
                for (auto& p : row)
                    p = g.poly(n, Space::ADual, 2, 2);
            PMap psi = equivariant_average(rd, k1, y, u, psi0);
            REQUIRE(is_w_equivariant(rd, k1, y, u, psi));
            WRep ystar = star_rep(rd, y), ustar = star_rep(rd, u);
            CHECK(is_w_equivariant(rd, k1, ustar, ystar, star_map(psi, u.dim())));

            CVec lambda = g.cvec(n);
            HModule x1 = principal_series(rd, k1, lambda);
            HModule x2 = principal_series(rd, k1, neg_conj(lambda));
            auto h1 = intertwining_maps(u.s, x1.s), h2 = intertwining_maps(ystar.s, x2.s);
            REQUIRE(!h1.empty());
            REQUIRE(!h2.empty());
            CMat phi1 = h1[0] * g.scalar(), phi2 = h2[0] * g.scalar();
            for (size_t i = 1; i < h1.size(); ++i)
                phi1 += h1[i] * g.scalar();
            for (size_t i = 1; i < h2.size(); ++i)
                phi2 += h2[i] * g.scalar();
            auto [lhs, rhs] = star_pairing_sides(x1, x2, psi, phi1, phi2);
            CHECK(lhs == rhs);
        }
    }
}
