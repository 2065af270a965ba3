#include "gha/algebra.hpp"

namespace gha {

Poly w_act(const RootDatum& rd, size_t w, const Poly& p)
{
    if (w == rd.identity())
        return p;
    const WeylElt& wi = rd.elt(rd.inv(w));
    return p.substitute(p.space() == Space::A ? wi.dual_mat : wi.mat);
}

ExpPoly w_act(const RootDatum& rd, size_t w, const ExpPoly& f)
{
    if (w == rd.identity())
        return f;
    return f.transform(rd.elt(w).pi_mat);
}

Poly demazure(const RootDatum& rd, size_t i, const Poly& p)
{
    Poly diff = p - w_act(rd, rd.reflection(i), p);
    if (diff.is_zero())
        return Poly(p.nvars(), p.space());
    return diff.divide_linear(to_complex(rd.coroot(i)));
}

ExpPoly exp_divide(const RootDatum& rd, const ExpPoly& f, size_t i) { return exp_divide(f, rd.root_pi(i)); }

Poly xi_poly(const CVec& xi) { return Poly::linear(Space::ADual, xi); }
Poly xi_poly(const QVec& xi) { return Poly::linear(Space::ADual, xi); }
Poly mu_poly(const QVec& mu) { return Poly::linear(Space::A, mu); }

Poly minus_conj(const Poly& p)
{
    Poly out(p.nvars(), p.space());
    for (const auto& [e, c] : p.terms()) {
        int deg = 0;
        for (int x : e)
            deg += x;
        out.add_term(e, deg % 2 ? -c.conj() : c.conj());
    }
    return out;
}

Poly rho_shift(const Poly& p, const CVec& rho) { return p.shift(rho); }

} // namespace gha
