#include "gha/dunkl.hpp"

namespace gha {

namespace {

Poly reflection_quotient(const RootDatum& rd, size_t i, const Poly& p)
{
    Poly d = p - w_act(rd, rd.reflection(i), p);
    if (d.is_zero())
        return d;
    return d.divide_linear(to_complex(rd.root(i)));
}

Poly apply_basis(const RootDatum& rd, const MultFn& k, size_t j, const Poly& p)
{
    QVec e(rd.rank(), Rational(0));
    e[j] = 1;
    return dunkl_apply({&rd, k, e}, p);
}

} // namespace

Poly dunkl_apply(const DunklOp& op, const Poly& p)
{
    const RootDatum& rd = *op.rd;
    Poly out = p.directional(op.xi);
    for (size_t i : rd.r1_plus()) {
        if (op.k(i).is_zero())
            continue;
        Rational a = dot(rd.root(i), op.xi);
        if (sgn(a) == 0)
            continue;
        out += reflection_quotient(rd, i, p) * (op.k(i) * Scalar(a));
    }
    return out;
}

Poly dunkl_compose(const RootDatum& rd, const MultFn& k, const Poly& q, const Poly& p)
{
    Poly out(p.nvars(), p.space());
    for (const auto& [e, c] : q.terms()) {
        Poly cur = p;
        for (size_t j = e.size(); j-- > 0;)
            for (int r = 0; r < e[j] && !cur.is_zero(); ++r)
                cur = apply_basis(rd, k, j, cur);
        out += cur * c;
    }
    return out;
}

Poly laplacian_symbol(const RootDatum& rd)
{
    size_t n = rd.rank();
    Poly l(n, Space::ADual);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Exps e(n, 0);
            e[i] += 1;
            e[j] += 1;
            l.add_term(e, Scalar(rd.gram()(i, j)));
        }
    return l;
}

Poly dunkl_laplacian(const RootDatum& rd, const MultFn& k, const Poly& p)
{
    size_t n = rd.rank();
    Poly out(n, p.space());
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (sgn(rd.gram()(i, j)) != 0)
                out += p.diff(i).diff(j) * Scalar(rd.gram()(i, j));
    for (size_t i : rd.r1_plus()) {
        if (k(i).is_zero())
            continue;
        // (2 alpha d(H_alpha) p - |alpha|^2 (1 - s_alpha) p) / alpha^2
        Poly alpha = mu_poly(rd.root(i));
        Poly num = alpha * p.directional(rd.h_of(rd.root(i))) * Scalar(2) -
                   (p - w_act(rd, rd.reflection(i), p)) * Scalar(rd.root_norm2(i));
        if (num.is_zero())
            continue;
        CVec form = to_complex(rd.root(i));
        out += num.divide_linear(form).divide_linear(form) * k(i);
    }
    return out;
}

Poly transport_to_sym(const RootDatum& rd, const Poly& p)
{
    // the coordinate function H -> H_i is B(e_i, .) = lambda(G e_i)
    Poly q = p.substitute(rd.gram());
    Poly out(q.nvars(), Space::ADual);
    for (const auto& [e, c] : q.terms())
        out.add_term(e, c);
    return out;
}

Poly dejeu_power(const RootDatum& rd, const MultFn& k, const Poly& p, const Poly& f)
{
    if (p.is_zero())
        return Poly(f.nvars(), f.space());
    if (!p.is_homogeneous())
        throw Error(ErrorCode::NotHomogeneous, "de Jeu identity needs a homogeneous polynomial");
    int d = p.degree();
    auto half_lap = [&](const Poly& g) { return dunkl_laplacian(rd, k, g) * Scalar(frac(1, 2)); };
    // (ad A)^d Y = sum_j C(d,j) (-1)^j A^{d-j} Y A^j
    std::vector<Poly> apow{f};
    for (int j = 1; j <= d; ++j)
        apow.push_back(half_lap(apow.back()));
    Poly out(f.nvars(), f.space());
    Rational binom = 1, fact = 1;
    for (int j = 1; j <= d; ++j)
        fact *= j;
    for (int j = 0; j <= d; ++j) {
        Poly term = p * apow[j];
        for (int r = 0; r < d - j; ++r)
            term = half_lap(term);
        out += term * Scalar(j % 2 ? Rational(-binom) : binom);
        binom = binom * (d - j) / (j + 1);
    }
    return out * Scalar(Rational(1) / fact);
}

} // namespace gha
