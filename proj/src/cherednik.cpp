#include "gha/cherednik.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gha {

namespace {

QVec unit(size_t n, size_t j)
{
    QVec e(n, Rational(0));
    e[j] = 1;
    return e;
}

int height(const Exps& e)
{
    int h = 0;
    for (int x : e)
        h += x;
    return h;
}

} // namespace

ExpPoly exp_derivative(const RootDatum& rd, const QVec& xi, const ExpPoly& f)
{
    return f.derivative(rd.pi_pairing(to_complex(xi)));
}

ExpPoly cherednik_apply(const CherednikOp& op, const ExpPoly& f)
{
    const RootDatum& rd = *op.rd;
    ExpPoly out = exp_derivative(rd, op.xi, f);
    for (size_t i = 0; i < rd.n_pos(); ++i) {
        if (op.k(i).is_zero())
            continue;
        Rational a = dot(rd.root(i), op.xi);
        if (sgn(a) == 0)
            continue;
        ExpPoly d = f - w_act(rd, rd.reflection(i), f);
        if (d.is_zero())
            continue;
        out += exp_divide(rd, d, i) * (op.k(i) * Scalar(a));
    }
    Scalar r = cdot(op.xi, rho_k(rd, op.k));
    if (!r.is_zero())
        out -= f * r;
    return out;
}

ExpPoly cherednik_compose(const RootDatum& rd, const MultFn& k, const Poly& q, const ExpPoly& f)
{
    ExpPoly out(f.rank());
    for (const auto& [e, c] : q.terms()) {
        ExpPoly cur = f;
        for (size_t j = e.size(); j-- > 0;)
            for (int r = 0; r < e[j] && !cur.is_zero(); ++r)
                cur = cherednik_apply({&rd, k, unit(rd.rank(), j)}, cur);
        out += cur * c;
    }
    return out;
}

bool is_w_invariant(const RootDatum& rd, const ExpPoly& f)
{
    for (size_t j = 0; j < rd.rank(); ++j)
        if (w_act(rd, rd.simple_reflection(j), f) != f)
            return false;
    return true;
}

ExpPoly laplacian_invariant(const RootDatum& rd, const MultFn& k, const ExpPoly& f)
{
    if (!is_w_invariant(rd, f))
        throw Error(ErrorCode::NotInvariant, "Laplacian formula needs a W-invariant input");
    size_t n = rd.rank();
    ExpPoly out(f.rank());
    // d(L_a) e^mu = |mu|^2 e^mu
    for (const auto& [mu, c] : f.terms()) {
        QVec v = rd.from_pi(mu);
        out.add_term(mu, c * Scalar(rd.form(v, v)));
    }
    for (size_t i = 0; i < rd.n_pos(); ++i) {
        if (k(i).is_zero())
            continue;
        ExpPoly g = exp_derivative(rd, rd.h_of(rd.root(i)), f);
        if (g.is_zero())
            continue;
        // g is s_alpha-antisymmetric, so g = (g - s_alpha g)/2 is divisible by 1 - e^{-alpha}
        ExpPoly q = exp_divide(rd, (g - w_act(rd, rd.reflection(i), g)) * Scalar(frac(1, 2)), i);
        Exps neg = rd.root_pi(i);
        for (auto& x : neg)
            x = -x;
        out += (q + q * ExpPoly::exp(neg)) * k(i);
    }
    CVec rho = rho_k(rd, k);
    Scalar b;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            b += Scalar(rd.gram()(i, j)) * rho[i] * rho[j];
    out += f * b;
    return out;
}

NonsymEigen nonsym_eigen(const RootDatum& rd, const MultFn& k, const Exps& mu)
{
    size_t n = rd.rank();
    std::vector<CherednikOp> ops;
    for (size_t j = 0; j < n; ++j)
        ops.push_back({&rd, k, unit(n, j)});

    // support closure and operator columns T_j e^nu
    std::map<Exps, std::vector<ExpPoly>> cols;
    std::vector<Exps> todo{mu};
    while (!todo.empty()) {
        Exps nu = todo.back();
        todo.pop_back();
        if (cols.count(nu))
            continue;
        std::vector<ExpPoly> images;
        for (const auto& op : ops) {
            images.push_back(cherednik_apply(op, ExpPoly::exp(nu)));
            for (const auto& [e, c] : images.back().terms())
                if (!cols.count(e))
                    todo.push_back(e);
        }
        cols[nu] = std::move(images);
    }

    // topological order of the off-diagonal graph nu -> e (e in supp T e^nu, e != nu)
    std::map<Exps, int> indeg;
    for (const auto& [nu, images] : cols)
        indeg.emplace(nu, 0);
    std::map<Exps, std::set<Exps>> succ;
    for (const auto& [nu, images] : cols)
        for (const auto& img : images)
            for (const auto& [e, c] : img.terms())
                if (e != nu && succ[nu].insert(e).second)
                    ++indeg[e];
    auto higher = [](const Exps& a, const Exps& b) {
        int ha = height(a), hb = height(b);
        return ha != hb ? ha > hb : a > b;
    };
    std::set<Exps, decltype(higher)> ready(higher);
    for (const auto& [nu, d] : indeg)
        if (d == 0)
            ready.insert(nu);
    std::vector<Exps> order;
    while (!ready.empty()) {
        Exps nu = *ready.begin();
        ready.erase(ready.begin());
        order.push_back(nu);
        for (const auto& e : succ[nu])
            if (--indeg[e] == 0)
                ready.insert(e);
    }
    if (order.size() != cols.size() || order.front() != mu)
        throw Error(ErrorCode::Resonant, "Cherednik operators are not triangular on the support of e^mu");

    NonsymEigen res;
    res.spectrum.resize(n);
    for (size_t j = 0; j < n; ++j)
        res.spectrum[j] = cols[mu][j].coeff(mu);

    std::map<Exps, Scalar> c;
    c[mu] = Scalar(1);
    for (size_t p = 1; p < order.size(); ++p) {
        const Exps& nu = order[p];
        bool solved = false;
        for (size_t j = 0; j < n && !solved; ++j) {
            Scalar pivot = cols[nu][j].coeff(nu) - res.spectrum[j];
            if (pivot.is_zero())
                continue;
            Scalar rhs;
            for (size_t q = 0; q < p; ++q) {
                auto it = c.find(order[q]);
                if (it == c.end() || it->second.is_zero())
                    continue;
                Scalar t = cols[order[q]][j].coeff(nu);
                if (!t.is_zero())
                    rhs += t * it->second;
            }
            c[nu] = -rhs / pivot;
            solved = true;
        }
        if (!solved)
            throw Error(ErrorCode::Resonant, "vanishing pivot in the triangular eigen-solve");
    }
    res.e = ExpPoly(n);
    for (const auto& [nu, v] : c)
        res.e.add_term(nu, v);

    for (size_t j = 0; j < n; ++j)
        if (cherednik_apply(ops[j], res.e) != res.e * res.spectrum[j])
            throw Error(ErrorCode::Resonant, "eigen-relation fails for the triangular solution");
    return res;
}

} // namespace gha
