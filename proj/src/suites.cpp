#include "gha/suites.hpp"

#include "gha/cherednik.hpp"
#include "gha/dunkl.hpp"
#include "gha/hecke.hpp"
#include "gha/hmodules.hpp"
#include "gha/hyper1d.hpp"
#include "gha/sampling.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>

namespace gha {

bool SuiteReport::ok() const
{
    for (const auto& c : checks)
        if (!c.pass)
            return false;
    return true;
}

bool SuiteReport::numeric_failure() const
{
    for (const auto& c : checks)
        for (const char* e : {"StepUnstable", "Resonant", "NumericInstability", "GridMismatch", "SupportNotCompact", "PoleAt"})
            if (!c.pass && c.error == e)
                return true;
    return false;
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"dunkl", "cherednik", "hecke", "modules",
                                                "sl2",   "transform", "rootdata"};
    return names;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Check {
    CheckResult* r;

    template <class F>
    void expect(bool ok, F&& what)
    {
        ++r->cases;
        if (!ok && r->pass) {
            r->pass = false;
            r->witness = what();
        }
    }
};

class Runner {
public:
    explicit Runner(SuiteReport& rep) : rep_(rep) {}

    void run(const std::string& name, const std::function<void(Check&)>& body)
    {
        CheckResult c;
        c.name = name;
        auto t0 = Clock::now();
        try {
            Check ck{&c};
            body(ck);
        } catch (const Error& e) {
            c.pass = false;
            c.error = error_name(e.code());
            c.witness = e.what();
        } catch (const std::exception& e) {
            c.pass = false;
            c.error = "exception";
            c.witness = e.what();
        }
        c.ms = ms_since(t0);
        rep_.checks.push_back(std::move(c));
    }

private:
    SuiteReport& rep_;
};

std::string show(const CVec& v)
{
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + v[i].str();
    return s + ")";
}

std::string show(const MultFn& k) { return "k=" + show(CVec(k.v.begin(), k.v.end())); }

std::string show(const Exps& e)
{
    std::string s = "[";
    for (size_t i = 0; i < e.size(); ++i)
        s += (i ? "," : "") + std::to_string(e[i]);
    return s + "]";
}

std::string show_word(const std::vector<int>& w)
{
    std::string s;
    for (int x : w)
        s += (s.empty() ? "" : " ") + std::to_string(x);
    return "word(" + s + ")";
}

// Root data to run on: the configured ones, else the presets.
std::vector<RootDatum> data_for(const SuiteOptions& opt, std::initializer_list<const char*> presets)
{
    std::vector<RootDatum> out;
    if (!opt.data.empty()) {
        for (const auto& s : opt.data)
            out.emplace_back(s);
        return out;
    }
    for (const char* p : presets)
        out.push_back(preset(p));
    return out;
}

MultFn draw_k(const RootDatum& rd, const SuiteOptions& opt, Sampler& g, bool complex)
{
    std::vector<Scalar> vals;
    if (opt.k) {
        if (opt.k->size() != rd.n_orbits())
            throw Error(ErrorCode::BadConfig, "k needs one value per root orbit");
        vals = *opt.k;
    } else {
        for (size_t o = 0; o < rd.n_orbits(); ++o)
            vals.push_back(g.scalar(complex));
    }
    return rd.from_orbit_values(vals);
}

MultFn draw_k1(const RootDatum& rd, const SuiteOptions& opt, Sampler& g, bool complex)
{
    return rd.k1_from_k(draw_k(rd, opt, g, complex));
}

CVec neg(const CVec& v)
{
    CVec o;
    for (const auto& x : v)
        o.push_back(-x);
    return o;
}

CVec neg_conj(const CVec& v)
{
    CVec o;
    for (const auto& x : v)
        o.push_back(-x.conj());
    return o;
}

CVec unit(size_t n, size_t j)
{
    CVec e(n, Scalar(0));
    e[j] = Scalar(1);
    return e;
}

HElt random_elt(const RootDatum& rd, const MultFn& k1, Sampler& g, int deg = 2, int terms = 2)
{
    HElt h(rd, k1);
    for (int t = 0; t < terms; ++t)
        h.add_term(static_cast<size_t>(g.integer(0, static_cast<int>(rd.order()) - 1)),
                   g.poly(rd.rank(), Space::ADual, deg, 2));
    return h;
}

// ---------------------------------------------------------------- dunkl

void dunkl_suite(Runner& run, const SuiteOptions& opt, SuiteReport& rep)
{
    Sampler g(opt.seed);
    int draws = opt.k ? 1 : 5;
    for (const auto& rd : data_for(opt, {"A1", "BC1", "A2", "B2"})) {
        rep.types.push_back(rd.type());
        size_t n = rd.rank();
        std::vector<MultFn> ks;
        std::vector<std::pair<QVec, QVec>> dirs;
        for (int t = 0; t < draws; ++t) {
            ks.push_back(draw_k(rd, opt, g, true));
            dirs.emplace_back(g.qvec(n), g.qvec(n));
        }
        auto monos = monomials_up_to_degree(n, 6);
        Poly lap = laplacian_symbol(rd);
        std::string tag = rd.type() + " ";

        run.run(tag + "commutativity", [&](Check& ck) {
            for (size_t t = 0; t < ks.size(); ++t)
                for (const auto& e : monos) {
                    Poly p = Poly::monomial(Space::A, e);
                    DunklOp a{&rd, ks[t], dirs[t].first}, b{&rd, ks[t], dirs[t].second};
                    ck.expect(dunkl_apply(a, dunkl_apply(b, p)) == dunkl_apply(b, dunkl_apply(a, p)),
                              [&] { return show(ks[t]) + " monomial " + show(e); });
                }
        });
        run.run(tag + "W-equivariance", [&](Check& ck) {
            for (size_t t = 0; t < ks.size(); ++t)
                for (const auto& e : monos) {
                    Poly p = Poly::monomial(Space::A, e);
                    const QVec& xi = dirs[t].first;
                    for (size_t j = 0; j < n; ++j) {
                        size_t s = rd.simple_reflection(j);
                        Poly lhs = w_act(rd, s, dunkl_apply({&rd, ks[t], xi}, w_act(rd, rd.inv(s), p)));
                        ck.expect(lhs == dunkl_apply({&rd, ks[t], rd.act_dual(s, xi)}, p), [&] {
                            return show(ks[t]) + " monomial " + show(e) + " s_" + std::to_string(j + 1);
                        });
                    }
                }
        });
        run.run(tag + "Laplacian closed form", [&](Check& ck) {
            for (const auto& k : ks)
                for (const auto& e : monos) {
                    Poly p = Poly::monomial(Space::A, e);
                    ck.expect(dunkl_laplacian(rd, k, p) == dunkl_compose(rd, k, lap, p),
                              [&] { return show(k) + " monomial " + show(e); });
                }
        });
        run.run(tag + "de Jeu identities", [&](Check& ck) {
            for (const auto& k : ks) {
                Poly f = g.poly(n, Space::A, 3, 4);
                for (int d = 0; d <= 4; ++d)
                    for (const auto& e : monomials_of_degree(n, d)) {
                        Poly p = Poly::monomial(Space::A, e);
                        ck.expect(dejeu_power(rd, k, p, f) == dunkl_compose(rd, k, transport_to_sym(rd, p), f),
                                  [&] { return show(k) + " p = monomial " + show(e); });
                    }
            }
        });
    }
}

// ------------------------------------------------------------ cherednik

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

void cherednik_suite(Runner& run, const SuiteOptions& opt, SuiteReport& rep)
{
    Sampler g(opt.seed);
    int draws = opt.k ? 1 : 2;
    for (const auto& rd : data_for(opt, {"A1", "A2", "BC1"})) {
        rep.types.push_back(rd.type());
        size_t n = rd.rank();
        std::string tag = rd.type() + " ";
        std::vector<MultFn> ks;
        std::vector<std::pair<QVec, QVec>> dirs;
        for (int t = 0; t < draws; ++t) {
            ks.push_back(draw_k(rd, opt, g, true));
            dirs.emplace_back(g.qvec(n), g.qvec(n));
        }
        auto box = lattice_box(n, 3);
        run.run(tag + "commutativity", [&](Check& ck) {
            for (size_t t = 0; t < ks.size(); ++t)
                for (const auto& mu : box) {
                    ExpPoly f = ExpPoly::exp(mu);
                    CherednikOp a{&rd, ks[t], dirs[t].first}, b{&rd, ks[t], dirs[t].second};
                    ck.expect(cherednik_apply(a, cherednik_apply(b, f)) == cherednik_apply(b, cherednik_apply(a, f)),
                              [&] { return show(ks[t]) + " e^" + show(mu); });
                }
        });
        run.run(tag + "graded Hecke relation", [&](Check& ck) {
            for (size_t t = 0; t < ks.size(); ++t) {
                MultFn k1 = rd.k1_from_k(ks[t]);
                const QVec& xi = dirs[t].first;
                for (const auto& mu : box) {
                    ExpPoly f = ExpPoly::exp(mu);
                    for (size_t j = 0; j < n; ++j) {
                        size_t sj = rd.simple_reflection(j);
                        size_t a = rd.simple(j);
                        ExpPoly lhs = w_act(rd, sj, cherednik_apply({&rd, ks[t], xi}, f));
                        ExpPoly rhs = cherednik_apply({&rd, ks[t], rd.act_dual(sj, xi)}, w_act(rd, sj, f)) -
                                      f * (k1(a) * Scalar(dot(rd.root(a), xi)));
                        ck.expect(lhs == rhs, [&] {
                            return show(ks[t]) + " e^" + show(mu) + " s_" + std::to_string(j + 1);
                        });
                    }
                }
            }
        });
    }
    std::initializer_list<const char*> lap_types = {"A1", "A2", "BC1", "B2"};
    for (const auto& rd : data_for(opt, lap_types)) {
        if (opt.data.empty() && rd.type() == "B2")
            rep.types.push_back(rd.type());
        MultFn k = draw_k(rd, opt, g, true);
        Poly lap = laplacian_symbol(rd);
        run.run(rd.type() + " Laplacian on invariant orbit sums", [&](Check& ck) {
            std::set<Exps> done;
            for (const auto& mu : lattice_box(rd.rank(), 3)) {
                ExpPoly f = orbit_sum(rd, mu);
                if (!done.insert(f.terms().begin()->first).second)
                    continue;
                ck.expect(laplacian_invariant(rd, k, f) == cherednik_compose(rd, k, lap, f),
                          [&] { return show(k) + " orbit of e^" + show(mu); });
            }
        });
    }
}

// ---------------------------------------------------------------- hecke

HElt letter_elt(const RootDatum& rd, const MultFn& k1, int x)
{
    int n = static_cast<int>(rd.rank());
    if (x < n)
        return HElt::xi(rd, k1, unit(rd.rank(), static_cast<size_t>(x)));
    return HElt::group(rd, k1, rd.simple_reflection(static_cast<size_t>(x - n)));
}

void hecke_suite(Runner& run, const SuiteOptions& opt, SuiteReport& rep)
{
    Sampler g(opt.seed);
    auto all = data_for(opt, {"A1", "BC1", "A2", "B2"});
    for (const auto& rd : all)
        rep.types.push_back(rd.type());
    size_t per_type = (200 + all.size() - 1) / all.size();

    run.run("PBW confluence", [&](Check& ck) {
        for (const auto& rd : all) {
            MultFn k1 = draw_k1(rd, opt, g, true);
            WordRewriter rw(rd, k1);
            int letters = static_cast<int>(2 * rd.rank());
            for (size_t t = 0; t < per_type; ++t) {
                WordRewriter::Word w;
                int len = g.integer(1, 6);
                for (int i = 0; i < len; ++i)
                    w.push_back(g.integer(0, letters - 1));
                std::mt19937 r1(g.engine()()), r2(g.engine()());
                HElt a = rw.normalize(w, r1), b = rw.normalize(w, r2);
                HElt prod = HElt::scalar(rd, k1, Scalar(1));
                for (int x : w)
                    prod = prod * letter_elt(rd, k1, x);
                ck.expect(a == b && a == prod, [&] { return rd.type() + " " + show_word(w); });
            }
        }
    });

    std::vector<RootDatum> conj_data = opt.data.empty() ? data_for(opt, {"A2", "B2"}) : data_for(opt, {});
    run.run("conjugation closed form", [&](Check& ck) {
        for (const auto& rd : conj_data) {
            MultFn k1 = draw_k1(rd, opt, g, true);
            for (size_t w = 0; w < rd.order(); ++w)
                for (size_t j = 0; j < rd.rank(); ++j) {
                    CVec e = unit(rd.rank(), j);
                    HElt direct = HElt::group(rd, k1, w) * HElt::xi(rd, k1, e) * HElt::group(rd, k1, rd.inv(w));
                    ck.expect(conj_by_w(rd, k1, w, e) == direct, [&] {
                        return rd.type() + " w = " + show_word(rd.elt(w).word) + " xi_" + std::to_string(j + 1);
                    });
                }
        }
    });

    run.run("involutions", [&](Check& ck) {
        for (const auto& rd : all) {
            // star needs real k1
            MultFn k1 = draw_k1(rd, opt, g, false);
            for (const auto& x : k1.v)
                if (!x.is_real())
                    throw Error(ErrorCode::InvalidArgument, "the star involution needs real multiplicities");
            std::vector<HElt> elts;
            for (size_t w = 0; w < rd.order(); ++w)
                elts.push_back(HElt::group(rd, k1, w));
            for (size_t j = 0; j < rd.rank(); ++j)
                elts.push_back(HElt::xi(rd, k1, unit(rd.rank(), j)));
            for (int t = 0; t < 10; ++t)
                elts.push_back(random_elt(rd, k1, g));
            for (size_t i = 0; i < elts.size(); ++i) {
                const HElt& a = elts[i];
                auto where = [&] { return rd.type() + " element #" + std::to_string(i); };
                ck.expect(theta_H(theta_H(a)) == a, where);
                ck.expect(transpose_t(transpose_t(a)) == a, where);
                ck.expect(star(star(a)) == a, where);
                if (i + 1 < elts.size()) {
                    const HElt& b = elts[i + 1];
                    ck.expect(theta_H(a * b) == theta_H(a) * theta_H(b), where);
                    ck.expect(transpose_t(a * b) == transpose_t(b) * transpose_t(a), where);
                    ck.expect(star(a * b) == star(b) * star(a), where);
                }
            }
        }
    });

    run.run("center", [&](Check& ck) {
        for (const auto& rd : all) {
            MultFn k1 = draw_k1(rd, opt, g, true);
            size_t n = rd.rank();
            for (int d = 1; d <= 4; ++d) {
                Poly l = g.poly(n, Space::ADual, d, 3), inv(n, Space::ADual);
                for (size_t w = 0; w < rd.order(); ++w)
                    inv += w_act(rd, w, l);
                ck.expect(is_central(HElt::poly(rd, k1, inv)),
                          [&] { return rd.type() + " W-average of a degree " + std::to_string(d) + " polynomial"; });
            }
            for (size_t j = 0; j < n; ++j) {
                ck.expect(!is_central(HElt::xi(rd, k1, unit(n, j))), [&] { return rd.type() + " xi is central"; });
                ck.expect(!is_central(HElt::group(rd, k1, rd.simple_reflection(j))),
                          [&] { return rd.type() + " s is central"; });
            }
            for (int t = 0; t < 10; ++t) {
                Poly p = g.poly(n, Space::ADual, 3, 3);
                bool invariant = true;
                for (size_t j = 0; j < n; ++j)
                    invariant = invariant && w_act(rd, rd.simple_reflection(j), p) == p;
                ck.expect(is_central(HElt::poly(rd, k1, p)) == invariant,
                          [&] { return rd.type() + " centrality differs from W-invariance"; });
            }
        }
    });
}

// -------------------------------------------------------------- modules

std::vector<CMat> char_matrices(const CVec& chi)
{
    std::vector<CMat> u;
    for (const auto& c : chi)
        u.push_back(CMat::identity(1) * c);
    return u;
}

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

MultFn positive_k1(const RootDatum& rd, const SuiteOptions& opt, Sampler& g)
{
    if (opt.k)
        return rd.k1_from_k(draw_k(rd, opt, g, false));
    std::vector<Scalar> vals;
    for (size_t o = 0; o < rd.n_orbits(); ++o)
        vals.push_back(Scalar(frac(g.integer(1, 9), g.integer(1, 4))));
    return rd.k1_from_k(rd.from_orbit_values(vals));
}

Poly sign_generator(const RootDatum& rd, const MultFn& k1)
{
    Poly f = Poly::constant(rd.rank(), Space::ADual, Scalar(1));
    for (size_t a : rd.r1_plus())
        f = f * (xi_poly(rd.coroot(a)) + Poly::constant(rd.rank(), Space::ADual, k1(a)));
    return f;
}

void modules_suite(Runner& run, const SuiteOptions& opt, SuiteReport& rep)
{
    Sampler g(opt.seed);
    auto all = data_for(opt, {"A1", "BC1", "A2", "B2"});
    for (const auto& rd : all)
        rep.types.push_back(rd.type());

    run.run("module relations for all constructions", [&](Check& ck) {
        for (const auto& rd : all) {
            size_t n = rd.rank();
            MultFn k1 = draw_k1(rd, opt, g, true);
            CVec lambda = g.cvec(n);
            auto ok = [&](const HModule& x, const std::string& what) {
                Diagnostics d = check_module(x);
                ck.expect(d.ok, [&] {
                    return rd.type() + " " + what + ": " + (d.failures.empty() ? "" : d.failures.front());
                });
            };
            HModule ps = principal_series(rd, k1, lambda);
            ok(ps, "principal series");
            ok(one_dim(rd, k1, 1), "trivial");
            ok(one_dim(rd, k1, -1), "sign");
            ok(induced_module(rd, k1, char_matrices(g.cvec(n))), "induced from a character");
            CMat j(2, 2);
            j(0, 0) = j(1, 1) = g.scalar();
            j(0, 1) = Scalar(1);
            std::vector<CMat> jordan{j};
            for (size_t i = 1; i < n; ++i)
                jordan.push_back(j + CMat::identity(2) * g.scalar());
            ok(induced_module(rd, k1, jordan), "induced from a Jordan block");
            for (int sign : {1, -1})
                ok(StandardQuotient(rd, k1, sign, g.cvec(n)).module(), sign > 0 ? "P(triv) quotient" : "P(sign) quotient");
            // a reducible principal series and its Poisson kernel
            MultFn one = rd.k1_from_k(rd.from_orbit_values(std::vector<Scalar>(rd.n_orbits(), Scalar(1))));
            HModule bm = principal_series(rd, one, neg(rho_from_k1(rd, one)));
            CMat ker = poisson_kernel(bm);
            ck.expect(ker.cols() > 0 && ker.cols() < bm.dim, [&] { return rd.type() + " Poisson kernel at -rho"; });
            ok(sub_module(bm, ker), "submodule");
            ok(quotient_module(bm, ker), "quotient");
            HModule broken = ps;
            broken.s[0](0, 0) += Scalar(1);
            ck.expect(!check_module(broken).ok, [&] { return rd.type() + " corrupted module passed"; });
        }
    });

    run.run("form invariance", [&](Check& ck) {
        for (const auto& rd : all) {
            MultFn k1 = draw_k1(rd, opt, g, false);
            for (int block = 0; block < 5; ++block) {
                CVec lambda = g.cvec(rd.rank());
                HModule x1 = principal_series(rd, k1, lambda);
                HModule x2 = principal_series(rd, k1, neg_conj(lambda));
                for (int t = 0; t < 10; ++t) {
                    HElt h = random_elt(rd, k1, g);
                    CVec f1 = g.cvec(x1.dim), f2 = g.cvec(x2.dim);
                    ck.expect(sesqui_form(x1, act(x1, h) * f1, x2, f2) ==
                                  sesqui_form(x1, f1, x2, act(x2, star(h)) * f2),
                              [&] { return rd.type() + " lambda " + show(lambda); });
                }
            }
        }
    });

    run.run("intertwiners", [&](Check& ck) {
        for (const auto& rd : all) {
            MultFn k1 = draw_k1(rd, opt, g, true);
            size_t nw = rd.order();
            for (int t = 0; t < 10; ++t) {
                CVec lambda = generic_lambda(rd, k1, g);
                auto where = [&](const std::string& what) { return rd.type() + " " + what + " at " + show(lambda); };
                std::vector<CVec> orbit;
                for (size_t u = 0; u < nw; ++u)
                    orbit.push_back(rd.act(u, lambda));
                // a[w][u] = A(w, u lambda)
                std::vector<std::vector<CMat>> a(nw);
                for (size_t w = 0; w < nw; ++w)
                    for (size_t u = 0; u < nw; ++u)
                        a[w].push_back(intertwiner(rd, k1, w, orbit[u]));
                HModule x = principal_series(rd, k1, lambda);
                CVec ones(nw, Scalar(1));
                for (size_t w = 0; w < nw; ++w) {
                    ck.expect(is_morphism(x, principal_series(rd, k1, orbit[w]), a[w][0]),
                              [&] { return where("morphism for " + show_word(rd.elt(w).word)); });
                    ck.expect(a[w][0] * ones == ones, [&] { return where("unit image"); });
                    for (size_t u = 0; u < nw; ++u) {
                        size_t wu = rd.mul(w, u);
                        ck.expect(a[wu][0] == a[w][u] * a[u][0], [&] { return where("cocycle"); });
                    }
                }
                if (rd.rank() == 2) {
                    size_t w0 = rd.longest();
                    std::vector<int> alt;
                    for (int x0 : rd.elt(w0).word)
                        alt.push_back(1 - x0);
                    ck.expect(rd.from_word(alt) == w0 && intertwiner_word(rd, k1, alt, lambda) == a[w0][0],
                              [&] { return where("reduced-word independence"); });
                }
            }
        }
    });

    run.run("irreducibility and Poisson kernel across walls", [&](Check& ck) {
        for (const auto& rd : all) {
            std::vector<MultFn> k1s{rd.k1_from_k(rd.from_orbit_values(std::vector<Scalar>(rd.n_orbits(), Scalar(1)))),
                                    positive_k1(rd, opt, g)};
            for (const auto& k1 : k1s)
                for (size_t a : rd.r1_plus()) {
                    const QVec& cor = rd.coroot(a);
                    size_t idx = 0;
                    while (sgn(cor[idx]) == 0)
                        ++idx;
                    CVec base = generic_lambda(rd, k1, g);
                    Scalar cur = cdot(cor, base);
                    for (const Scalar& target :
                         {k1(a) - Scalar(1), k1(a) - Scalar(frac(1, 2)), k1(a), k1(a) + Scalar(frac(1, 2)), Scalar(0),
                          -k1(a), -k1(a) + Scalar(frac(1, 3))}) {
                        CVec lambda = base;
                        lambda[idx] += (target - cur) / Scalar(cor[idx]);
                        HModule x = principal_series(rd, k1, lambda);
                        bool full = generated_algebra_dim(x) == x.dim * x.dim;
                        ck.expect(full == is_irreducible_ps(rd, k1, lambda),
                                  [&] { return rd.type() + " irreducibility at " + show(lambda) + " " + show(k1); });
                        bool trivial = poisson_kernel(x).cols() == 0;
                        ck.expect(trivial == !poisson_product(rd, k1, lambda).is_zero(),
                                  [&] { return rd.type() + " Poisson kernel at " + show(lambda) + " " + show(k1); });
                    }
                }
        }
    });

    run.run("pairing values", [&](Check& ck) {
        for (const auto& rd : all) {
            size_t n = rd.rank();
            MultFn k1 = positive_k1(rd, opt, g);
            HElt fstar = star(HElt::poly(rd, k1, sign_generator(rd, k1)));
            for (int t = 0; t < 5; ++t) {
                CVec lambda = generic_lambda(rd, k1, g);
                HModule x = principal_series(rd, k1, lambda);
                std::vector<CMat> th;
                for (size_t j = 0; j < n; ++j)
                    th.push_back(act(x, theta_H(HElt::xi(rd, k1, unit(n, j)))));
                for (size_t w = 0; w < rd.order(); ++w) {
                    CVec wl = rd.act(w, lambda);
                    CMat stack(n * x.dim, x.dim);
                    for (size_t j = 0; j < n; ++j)
                        for (size_t r = 0; r < x.dim; ++r)
                            for (size_t c = 0; c < x.dim; ++c)
                                stack(j * x.dim + r, c) = th[j](r, c) - (r == c ? wl[j] : Scalar(0));
                    CMat ev = nullspace(stack);
                    auto where = [&] { return rd.type() + " weight " + show(wl); };
                    ck.expect(ev.cols() == 1, where);
                    if (ev.cols() != 1)
                        continue;
                    CVec fw = ev.col(0);
                    Scalar e1 = ev1(fw);
                    ck.expect(!e1.is_zero(), where);
                    if (e1.is_zero())
                        continue;
                    for (auto& c : fw)
                        c /= e1;
                    ck.expect(ev1(act(x, fstar) * fw) == poisson_product(rd, k1, wl), where);
                }
            }
        }
    });

    run.run("standard quotients", [&](Check& ck) {
        for (const auto& rd : all) {
            MultFn k1 = draw_k1(rd, opt, g, false);
            CVec lambda = generic_lambda(rd, k1, g);
            auto where = [&](const std::string& what) { return rd.type() + " " + what + " at " + show(lambda); };
            StandardQuotient triv(rd, k1, 1, lambda);
            const HModule& p = triv.module();
            for (size_t w = 0; w < rd.order(); ++w) {
                CMat m = group_matrix(p, w);
                Scalar tr;
                for (size_t i = 0; i < p.dim; ++i)
                    tr += m(i, i);
                ck.expect(tr == (w == rd.identity() ? Scalar(static_cast<long>(rd.order())) : Scalar(0)),
                          [&] { return where("character of " + show_word(rd.elt(w).word)); });
            }
            StandardQuotient sgn_q(rd, k1, -1, neg(lambda));
            auto homs = hom_space(sgn_q.module(), principal_series(rd, k1, lambda));
            ck.expect(homs.size() == 1 && !determinant(homs[0]).is_zero(),
                      [&] { return where("P(sign, -lambda) -> B(lambda) is not an isomorphism"); });
        }
    });
}

// ------------------------------------------------------------------ sl2

void sl2_suite(Runner& run, const SuiteOptions& opt, SuiteReport& rep)
{
    std::vector<RootDatum> data = data_for(opt, {"A1"});
    for (const auto& rd : data) {
        rep.types.push_back(rd.type());
        if (rd.rank() != 1)
            throw Error(ErrorCode::BadConfig, "the SL(2) battery needs rank one");
        MultFn k1 = opt.k ? rd.k1_from_k(rd.from_orbit_values(*opt.k)) : rd.mult_m1();
        CVec rho = rho_from_k1(rd, k1);
        std::string tag = rd.type() + " ";

        run.run(tag + "submodules of B(rho)", [&](Check& ck) {
            HModule x = principal_series(rd, k1, rho);
            auto lat = submodule_lattice(x);
            ck.expect(lat.exhaustive && lat.subs.size() == 3, [&] { return "lattice is not a chain 0 < L < B"; });
            if (lat.subs.size() != 3)
                return;
            HModule sub = sub_module(x, lat.subs[1]);
            ck.expect(one_dim_type(sub) == 1, [&] { return "submodule is not trivial type"; });
            ck.expect(sub.xi[0](0, 0) == -rho[0], [&] { return "submodule weight is not -rho"; });
            ck.expect(one_dim_type(quotient_module(x, lat.subs[1])) == -1, [&] { return "quotient is not Steinberg"; });
        });
        run.run(tag + "submodules of B(-rho)", [&](Check& ck) {
            HModule x = principal_series(rd, k1, neg(rho));
            auto lat = submodule_lattice(x);
            ck.expect(lat.exhaustive && lat.subs.size() == 3, [&] { return "lattice is not a chain 0 < L < B"; });
            if (lat.subs.size() != 3)
                return;
            ck.expect(one_dim_type(sub_module(x, lat.subs[1])) == -1, [&] { return "submodule is not sign type"; });
            ck.expect(one_dim_type(quotient_module(x, lat.subs[1])) == 1, [&] { return "quotient is not trivial"; });
        });
        run.run(tag + "Poisson kernel at -rho", [&](Check& ck) {
            HModule x = principal_series(rd, k1, neg(rho));
            CMat ker = poisson_kernel(x);
            ck.expect(ker.cols() == 1, [&] { return "kernel has dimension " + std::to_string(ker.cols()); });
            if (ker.cols() == 1)
                ck.expect(one_dim_type(sub_module(x, ker)) == -1, [&] { return "kernel is not sign type"; });
            ck.expect(poisson_kernel(principal_series(rd, k1, rho)).cols() == 0,
                      [&] { return "kernel at +rho is nonzero"; });
        });
        run.run(tag + "generic principal series is irreducible", [&](Check& ck) {
            Sampler g(opt.seed);
            CVec lambda = generic_lambda(rd, k1, g);
            ck.expect(submodule_lattice(principal_series(rd, k1, lambda)).subs.size() == 2,
                      [&] { return "reducible at " + show(lambda); });
        });
    }
}

// ------------------------------------------------------------- rootdata

void rootdata_suite(Runner& run, const SuiteOptions& opt, SuiteReport& rep)
{
    std::vector<RootDatum> data;
    if (!opt.data.empty()) {
        data = data_for(opt, {});
    } else {
        for (const char* t : {"A1", "A2", "B2", "BC1"})
            data.push_back(preset(t));
        for (int d : {2, 4, 8})
            data.push_back(preset("A2", {d}));
        for (auto dims : std::vector<std::vector<int>>{{1, 2}, {2, 1}, {3, 3}})
            data.push_back(preset("B2", dims));
        for (auto dims : std::vector<std::vector<int>>{{2, 1}, {4, 3}, {8, 7}})
            data.push_back(preset("BC1", dims));
    }
    auto sides = [](const RootDatum& rd) {
        CVec rho = rho_k(rd, rd.mult_m());
        MultFn m1 = rd.mult_m1();
        Scalar lhs(static_cast<long>(rd.order())), rhs(1);
        for (size_t i : rd.r1_plus()) {
            Scalar r = cdot(rd.coroot(i), rho);
            lhs *= r;
            rhs *= r + m1(i);
        }
        return std::make_pair(lhs, rhs);
    };
    for (const auto& rd : data)
        if (rep.types.empty() || rep.types.back() != rd.type())
            rep.types.push_back(rd.type());
    run.run("|W| prod rho(alpha^vee) = prod (rho(alpha^vee) + m1(alpha))", [&](Check& ck) {
        for (const auto& rd : data) {
            auto [lhs, rhs] = sides(rd);
            ck.expect(lhs == rhs, [&] { return rd.type() + ": " + lhs.str() + " != " + rhs.str(); });
        }
    });
    if (opt.data.empty())
        run.run("SL(2,R) value", [&](Check& ck) {
            auto [lhs, rhs] = sides(preset("A1"));
            ck.expect(lhs == Scalar(1) && rhs == Scalar(1), [&] { return lhs.str() + " = " + rhs.str(); });
        });
}

// ------------------------------------------------------------ transform

Rank1Params rank1_params(const SuiteOptions& opt)
{
    RootDatumSpec spec = opt.data.empty() ? preset_spec("A1") : opt.data.front();
    if (spec.rank != 1 || spec.sigma_plus.size() != 1)
        throw Error(ErrorCode::BadConfig, "the transform suite needs a rank-one root datum with one restricted root");
    Rank1Params p = Rank1Params::from_dims(spec.sigma_plus[0].dim1, spec.sigma_plus[0].dim2);
    if (opt.k) {
        if (opt.k->empty() || !(*opt.k)[0].is_real())
            throw Error(ErrorCode::BadConfig, "the transform suite needs real k");
        p.k_b = (*opt.k)[0].re().get_d();
        p.k_2b = opt.k->size() > 1 ? (*opt.k)[1].re().get_d() : 0.0;
    }
    return p;
}

void transform_suite(Runner& run, const SuiteOptions& opt, SuiteReport& rep)
{
    Rank1Params p = rank1_params(opt);
    rep.types.push_back(opt.data.empty() ? "A1" : opt.data.front().type);
    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> re(-3, 3), im(-6, 6), kd(0.1, 2.0);
    auto fmt = [](double x) {
        std::ostringstream s;
        s.precision(3);
        s << x;
        return s.str();
    };

    run.run("G(lambda, 0) = 1", [&](Check& ck) {
        for (int t = 0; t < 10; ++t) {
            CDouble nu(re(rng), im(rng));
            double err = std::abs(gfunc(p, nu, 0.0) - 1.0);
            ck.expect(err <= 1e-12, [&] { return "error " + fmt(err); });
        }
    });
    run.run("G(-rho, t) = 1 on [-2, 2]", [&](Check& ck) {
        std::vector<double> ts;
        for (int i = -40; i <= 40; ++i)
            ts.push_back(0.05 * i);
        auto vals = gfunc_values(p, -p.rho(), ts);
        for (size_t i = 0; i < ts.size(); ++i) {
            double err = std::abs(vals[i] - 1.0);
            ck.expect(err <= 1e-10, [&] { return "t = " + fmt(ts[i]) + " error " + fmt(err); });
        }
    });

    // (params, lambda) corpus: the configured multiplicities first, then random ones
    std::vector<std::pair<Rank1Params, CDouble>> corpus;
    for (int t = 0; t < 10; ++t) {
        Rank1Params q = t == 0 ? p : Rank1Params{kd(rng), t % 2 ? kd(rng) : 0.0};
        corpus.emplace_back(q, CDouble(re(rng), im(rng)));
    }
    const std::vector<double> points{-1.9, -1.2, -0.5, -0.1, 0.1, 0.5, 1.2, 1.9};
    auto residual_check = [&](Check& ck, double (*res)(const Rank1Params&, CDouble, double, double)) {
        for (const auto& [q, nu] : corpus) {
            auto where = [&](double t) {
                return "k = (" + fmt(q.k_b) + ", " + fmt(q.k_2b) + ") lambda = " + fmt(nu.real()) + "+" +
                       fmt(nu.imag()) + "i t = " + fmt(t);
            };
            for (double t : points) {
                double r = res(q, nu, t, 1e-4);
                ck.expect(r <= 1e-6, [&] { return where(t) + " residual " + fmt(r); });
                double r1 = res(q, nu, t, 0.02), r2 = res(q, nu, t, 0.01), r3 = res(q, nu, t, 0.005);
                // second order: halving h divides the residual by about 4
                bool order2 = r2 < 1e-9 || (r1 / r2 > 3.2 && r1 / r2 < 4.8 && r2 / r3 > 3.2 && r2 / r3 < 4.8);
                ck.expect(order2, [&] { return where(t) + " ratios " + fmt(r1 / r2) + ", " + fmt(r2 / r3); });
            }
        }
    };
    run.run("eigen-equation residual", [&](Check& ck) { residual_check(ck, eigen_residual); });
    run.run("KZ residual", [&](Check& ck) { residual_check(ck, kz_residual); });

    GridFunction f = symmetric_grid(3.0, 300);
    for (size_t i = 0; i < f.size(); ++i) {
        double x = (f.t(i) - 0.1) / 0.4;
        f.v[i] = std::exp(-x * x / 2);
    }
    std::optional<Spectrum> spec;
    run.run("transform roundtrip", [&](Check& ck) {
        spec = oc_forward(p, f, uniform_nu(20.0, 0.05));
        GridFunction back = oc_inverse(p, *spec, f);
        double num = 0, den = 0;
        for (size_t i = 0; i < f.size(); ++i) {
            num = std::max(num, std::abs(back.v[i] - f.v[i]));
            den = std::max(den, std::abs(f.v[i]));
        }
        ck.expect(num / den <= 1e-4, [&] { return "max relative error " + fmt(num / den); });
    });
    run.run("Plancherel formula", [&](Check& ck) {
        if (!spec)
            spec = oc_forward(p, f, uniform_nu(20.0, 0.05));
        double a = norm2_a(p, f), b = norm2_spectral(p, *spec);
        double rel = std::abs(a - b) / a;
        ck.expect(rel <= 1e-4, [&] { return "relative error " + fmt(rel); });
    });
}

} // namespace

SuiteReport run_suite(const std::string& name, const SuiteOptions& opt)
{
    SuiteReport rep;
    rep.suite = name;
    rep.seed = opt.seed;
    Runner run(rep);
    auto t0 = Clock::now();
    if (name == "dunkl")
        dunkl_suite(run, opt, rep);
    else if (name == "cherednik")
        cherednik_suite(run, opt, rep);
    else if (name == "hecke")
        hecke_suite(run, opt, rep);
    else if (name == "modules")
        modules_suite(run, opt, rep);
    else if (name == "sl2")
        sl2_suite(run, opt, rep);
    else if (name == "transform")
        transform_suite(run, opt, rep);
    else if (name == "rootdata")
        rootdata_suite(run, opt, rep);
    else
        throw Error(ErrorCode::UnknownSuite, "unknown suite '" + name + "'");
    rep.ms = ms_since(t0);
    return rep;
}

} // namespace gha
