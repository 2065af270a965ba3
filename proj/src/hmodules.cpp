#include "gha/hmodules.hpp"

#include <algorithm>
#include <sstream>

namespace gha {

namespace {

CVec unit(size_t n, size_t j)
{
    CVec e(n, Scalar(0));
    e[j] = Scalar(1);
    return e;
}

CMat scalar_mat(size_t n, const Scalar& c) { return CMat::identity(n) * c; }

std::string word_label(const std::vector<int>& word)
{
    std::ostringstream os;
    os << "delta[";
    for (size_t i = 0; i < word.size(); ++i)
        os << (i ? " " : "") << word[i];
    os << "]";
    return os.str();
}

std::string monomial_label(const Exps& e)
{
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0)
            continue;
        os << (first ? "" : "*") << "x" << i;
        if (e[i] > 1)
            os << "^" << e[i];
        first = false;
    }
    return first ? "1" : os.str();
}

int exps_degree(const Exps& e)
{
    int d = 0;
    for (int x : e)
        d += x;
    return d;
}

// Evaluate p at commuting matrices.
CMat eval_at(const Poly& p, const std::vector<CMat>& mats, size_t n)
{
    CMat out(n, n);
    std::vector<std::vector<CMat>> pw(mats.size());
    for (const auto& [e, c] : p.terms()) {
        CMat term = scalar_mat(n, c);
        for (size_t j = 0; j < e.size(); ++j) {
            if (e[j] == 0)
                continue;
            auto& cache = pw[j];
            if (cache.empty())
                cache.push_back(CMat::identity(n));
            while (static_cast<int>(cache.size()) <= e[j])
                cache.push_back(cache.back() * mats[j]);
            term = term * cache[static_cast<size_t>(e[j])];
        }
        out += term;
    }
    return out;
}

Scalar trace(const CMat& m)
{
    Scalar t;
    for (size_t i = 0; i < m.rows(); ++i)
        t += m(i, i);
    return t;
}

CMat xi_combination(const HModule& x, const CVec& xi)
{
    CMat m(x.dim, x.dim);
    for (size_t j = 0; j < xi.size(); ++j)
        if (!xi[j].is_zero())
            m += x.xi[j] * xi[j];
    return m;
}

CMat stack_columns(const std::vector<CVec>& cols, size_t dim) { return from_columns(cols, dim); }

} // namespace

CMat group_matrix(const HModule& x, size_t w)
{
    CMat m = CMat::identity(x.dim);
    for (int j : x.rd->elt(w).word)
        m = m * x.s[static_cast<size_t>(j)];
    return m;
}

CMat poly_matrix(const HModule& x, const Poly& p) { return eval_at(p, x.xi, x.dim); }

CMat act(const HModule& x, const HElt& h)
{
    CMat out(x.dim, x.dim);
    for (const auto& [w, p] : h.terms())
        out += poly_matrix(x, p) * group_matrix(x, w);
    return out;
}

std::vector<CMat> generators(const HModule& x)
{
    std::vector<CMat> g = x.s;
    g.insert(g.end(), x.xi.begin(), x.xi.end());
    return g;
}

Diagnostics check_module(const HModule& x)
{
    Diagnostics d;
    auto fail = [&](const std::string& msg) {
        d.ok = false;
        d.failures.push_back(msg);
    };
    const RootDatum& rd = *x.rd;
    size_t n = rd.rank();
    CMat id = CMat::identity(x.dim);
    for (size_t i = 0; i < n; ++i) {
        if (x.s[i] * x.s[i] != id)
            fail("s" + std::to_string(i) + " is not an involution");
        for (size_t j = i + 1; j < n; ++j)
            if (matrix_power(x.s[i] * x.s[j], static_cast<size_t>(rd.coxeter_m(i, j))) != id)
                fail("braid relation fails for s" + std::to_string(i) + ", s" + std::to_string(j));
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (x.xi[i] * x.xi[j] != x.xi[j] * x.xi[i])
                fail("xi" + std::to_string(i) + " and xi" + std::to_string(j) + " do not commute");
    for (size_t j = 0; j < n; ++j) {
        size_t alpha = rd.simple(j);
        size_t s = rd.simple_reflection(j);
        for (size_t i = 0; i < n; ++i) {
            CVec e = unit(n, i);
            CMat lhs = x.s[j] * x.xi[i];
            CMat rhs = xi_combination(x, rd.act_dual(s, e)) * x.s[j] -
                       scalar_mat(x.dim, x.k1(alpha) * cdot(rd.root(alpha), e));
            if (lhs != rhs)
                fail("cross relation fails for s" + std::to_string(j) + ", xi" + std::to_string(i));
        }
    }
    return d;
}

CVec rho_from_k1(const RootDatum& rd, const MultFn& k1)
{
    size_t n = rd.rank();
    CMat c(n, n);
    CVec rhs(n);
    for (size_t j = 0; j < n; ++j) {
        const QVec& cor = rd.coroot(rd.simple(j));
        for (size_t i = 0; i < n; ++i)
            c(j, i) = Scalar(cor[i]);
        rhs[j] = k1(rd.simple(j));
    }
    return inverse(c) * rhs;
}

HModule one_dim(const RootDatum& rd, const MultFn& k1, int sign)
{
    HModule x;
    x.rd = &rd;
    x.k1 = k1;
    x.dim = 1;
    x.kind = sign > 0 ? "trivial" : "sign";
    x.labels = {"v"};
    CVec rho = rho_from_k1(rd, k1);
    // chi(alpha_j^vee) = -sign k1(alpha_j)
    for (size_t j = 0; j < rd.rank(); ++j) {
        x.s.push_back(scalar_mat(1, Scalar(sign)));
        x.xi.push_back(scalar_mat(1, Scalar(-sign) * rho[j]));
    }
    return x;
}

HModule principal_series(const RootDatum& rd, const MultFn& k1, const CVec& lambda)
{
    if (lambda.size() != rd.rank())
        throw Error(ErrorCode::InvalidArgument, "lambda has the wrong dimension");
    HModule x;
    x.rd = &rd;
    x.k1 = k1;
    x.dim = rd.order();
    x.kind = "principal";
    x.param = lambda;
    size_t n = rd.rank(), w0 = rd.longest();
    for (size_t w = 0; w < x.dim; ++w)
        x.labels.push_back(word_label(rd.elt(w).word));
    for (size_t j = 0; j < n; ++j) {
        CMat m(x.dim, x.dim);
        size_t s = rd.simple_reflection(j);
        for (size_t u = 0; u < x.dim; ++u)
            m(rd.mul(s, u), u) = Scalar(1);
        x.s.push_back(m);
    }
    CVec w0l = rd.act(w0, lambda);
    for (size_t j = 0; j < n; ++j) {
        CVec e = unit(n, j);
        CMat m(x.dim, x.dim);
        for (size_t u = 0; u < x.dim; ++u) {
            size_t v = rd.mul(u, w0); // u = v w0
            size_t vinv = rd.inv(v);
            Scalar diag;
            CVec ve = rd.act_dual(vinv, e);
            for (size_t i = 0; i < n; ++i)
                diag += w0l[i] * ve[i];
            m(u, u) -= diag;
            for (size_t a : rd.r1_plus()) {
                auto [img, sg] = rd.act_on_root(v, a);
                if (sg > 0 || k1(a).is_zero())
                    continue;
                Scalar c = -k1(a) * cdot(rd.root(img), e);
                size_t target = rd.mul(rd.mul(v, rd.reflection(a)), w0);
                m(target, u) += c;
            }
        }
        x.xi.push_back(m);
    }
    return x;
}

HModule induced_module(const RootDatum& rd, const MultFn& k1, const std::vector<CMat>& u)
{
    size_t n = rd.rank();
    if (u.size() != n)
        throw Error(ErrorCode::InvalidArgument, "need one matrix per basis vector of a");
    size_t du = u[0].rows();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (u[i] * u[j] != u[j] * u[i])
                throw Error(ErrorCode::NonCommutingInput, "module matrices do not commute");
    HModule x;
    x.rd = &rd;
    x.k1 = k1;
    x.dim = rd.order() * du;
    x.kind = "induced";
    for (size_t w = 0; w < rd.order(); ++w)
        for (size_t a = 0; a < du; ++a)
            x.labels.push_back(word_label(rd.elt(w).word) + "*e" + std::to_string(a));
    size_t w0 = rd.longest();
    // (h F)(v) = F(t(h) v) with F(x) = sum_u sigma(tau p_u) F(u^{-1} w0), iota(x w0) = sum p_u u
    auto build = [&](const HElt& th) {
        CMat m(x.dim, x.dim);
        for (size_t v = 0; v < rd.order(); ++v) {
            HElt xv = h_mul(h_mul(th, HElt::group(rd, k1, v)), HElt::group(rd, k1, w0));
            HElt y = iota(xv);
            for (const auto& [uu, p] : y.terms()) {
                CMat blk = eval_at(tau(rd, p), u, du);
                size_t col = rd.mul(rd.inv(uu), w0);
                for (size_t a = 0; a < du; ++a)
                    for (size_t b = 0; b < du; ++b)
                        m(v * du + a, col * du + b) += blk(a, b);
            }
        }
        return m;
    };
    for (size_t j = 0; j < n; ++j)
        x.s.push_back(build(HElt::group(rd, k1, rd.simple_reflection(j))));
    for (size_t j = 0; j < n; ++j)
        x.xi.push_back(build(transpose_t(HElt::xi(rd, k1, unit(n, j)))));
    return x;
}

namespace {

// Coefficient vector of a homogeneous polynomial over the monomials of degree d.
CVec coeff_vector(const Poly& p, const std::vector<Exps>& mons)
{
    CVec v(mons.size());
    for (size_t i = 0; i < mons.size(); ++i)
        v[i] = p.coeff(mons[i]);
    return v;
}

size_t span_rank(const std::vector<CVec>& vs, size_t dim) { return row_basis(vs, dim).size(); }

// Products of the given polynomials with total degree exactly d.
void products_of_degree(const std::vector<Poly>& gens, size_t start, int d, const Poly& acc, std::vector<Poly>& out)
{
    if (d == 0) {
        out.push_back(acc);
        return;
    }
    for (size_t i = start; i < gens.size(); ++i) {
        int gd = gens[i].degree();
        if (gd <= d)
            products_of_degree(gens, i, d - gd, acc * gens[i], out);
    }
}

} // namespace

std::vector<Poly> fundamental_invariants(const RootDatum& rd)
{
    size_t n = rd.rank();
    std::vector<Poly> found;
    std::vector<CVec> generic_ell;
    Rational pool[] = {frac(1, 1), frac(3, 7), frac(-5, 11), frac(13, 17), frac(2, 19), frac(-23, 29)};
    for (size_t t = 0; t < 4; ++t) {
        CVec l(n);
        for (size_t i = 0; i < n; ++i)
            l[i] = Scalar(pool[(i + 2 * t) % 6] + Rational(static_cast<long>(t)));
        generic_ell.push_back(l);
    }
    int max_deg = static_cast<int>(rd.order());
    for (int d = 1; d <= max_deg && found.size() < n; ++d) {
        auto mons = monomials_of_degree(n, d);
        std::vector<CVec> inv_vecs;
        for (const auto& m : mons) {
            Poly r(n, Space::ADual);
            Poly mono = Poly::monomial(Space::ADual, m);
            for (size_t w = 0; w < rd.order(); ++w)
                r += w_act(rd, w, mono);
            inv_vecs.push_back(coeff_vector(r, mons));
        }
        size_t r_inv = span_rank(inv_vecs, mons.size());
        std::vector<Poly> dec;
        products_of_degree(found, 0, d, Poly::constant(n, Space::ADual, Scalar(1)), dec);
        std::vector<CVec> span;
        for (const auto& p : dec)
            span.push_back(coeff_vector(p, mons));
        size_t r_dec = span_rank(span, mons.size());
        size_t need = r_inv - r_dec;
        for (size_t t = 0; t < generic_ell.size() && need > 0; ++t) {
            Poly ps(n, Space::ADual);
            Poly l = xi_poly(generic_ell[t]).pow(d);
            for (size_t w = 0; w < rd.order(); ++w)
                ps += w_act(rd, w, l);
            auto trial = span;
            trial.push_back(coeff_vector(ps, mons));
            if (span_rank(trial, mons.size()) > span_rank(span, mons.size())) {
                span = trial;
                found.push_back(ps);
                --need;
            }
        }
        if (need > 0)
            throw Error(ErrorCode::NumericInstability, "could not find enough invariant generators");
    }
    return found;
}

StandardQuotient::StandardQuotient(const RootDatum& rd, const MultFn& k1, int sign, const CVec& mu,
                                   std::vector<Poly> invariants)
    : rd_(&rd), k1_(k1), sign_(sign)
{
    size_t n = rd.rank();
    if (invariants.empty())
        invariants = fundamental_invariants(rd);
    int npos = static_cast<int>(rd.r1_plus().size());
    for (int m = npos + 1; m <= 2 * npos + 1; ++m) {
        cols_.clear();
        for (int d = m; d >= 0; --d)
            for (const auto& e : monomials_of_degree(n, d))
                cols_.push_back(e);
        std::map<Exps, size_t> col_of;
        for (size_t i = 0; i < cols_.size(); ++i)
            col_of[cols_[i]] = i;
        std::vector<CVec> rows;
        for (const auto& delta : invariants) {
            Poly g = delta - Poly::constant(n, Space::ADual, delta.evaluate(mu));
            for (const auto& e : monomials_up_to_degree(n, m - delta.degree())) {
                Poly r = Poly::monomial(Space::ADual, e) * g;
                CVec v(cols_.size());
                for (const auto& [ex, c] : r.terms())
                    v[col_of.at(ex)] = c;
                rows.push_back(v);
            }
        }
        CMat mat(rows.size(), cols_.size());
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < cols_.size(); ++j)
                mat(i, j) = rows[i][j];
        ideal_ = rref(mat);
        std::vector<bool> piv(cols_.size(), false);
        for (size_t p : ideal_.pivots)
            piv[p] = true;
        basis_.clear();
        basis_col_.clear();
        int top = 0;
        for (size_t j = 0; j < cols_.size(); ++j)
            if (!piv[j]) {
                basis_.push_back(cols_[j]);
                basis_col_.push_back(j);
                top = std::max(top, exps_degree(cols_[j]));
            }
        if (basis_.size() == rd.order() && top < m) {
            bound_ = m;
            break;
        }
    }
    if (bound_ == 0)
        throw Error(ErrorCode::QuotientDimensionMismatch,
                    "quotient has dimension " + std::to_string(basis_.size()) + ", expected " +
                        std::to_string(rd.order()));
    // reverse so the constant monomial comes first
    std::reverse(basis_.begin(), basis_.end());
    std::reverse(basis_col_.begin(), basis_col_.end());

    mod_.rd = &rd;
    mod_.k1 = k1;
    mod_.dim = basis_.size();
    mod_.kind = "quotient";
    mod_.param = mu;
    for (const auto& e : basis_)
        mod_.labels.push_back(monomial_label(e));
    for (size_t j = 0; j < n; ++j) {
        CMat m(mod_.dim, mod_.dim);
        for (size_t b = 0; b < basis_.size(); ++b) {
            Exps e = basis_[b];
            e[j] += 1;
            m.set_col(b, reduce_full(Poly::monomial(Space::ADual, e)));
        }
        mod_.xi.push_back(m);
    }
    for (size_t j = 0; j < n; ++j) {
        size_t alpha = rd.simple(j);
        size_t s = rd.simple_reflection(j);
        CMat m(mod_.dim, mod_.dim);
        for (size_t b = 0; b < basis_.size(); ++b) {
            Poly p = Poly::monomial(Space::ADual, basis_[b]);
            Poly img = w_act(rd, s, p) * Scalar(sign) - demazure(rd, alpha, p) * k1(alpha);
            m.set_col(b, reduce_full(img));
        }
        mod_.s.push_back(m);
    }
}

CVec StandardQuotient::reduce_full(const Poly& p) const
{
    std::map<Exps, size_t> col_of;
    for (size_t i = 0; i < cols_.size(); ++i)
        col_of[cols_[i]] = i;
    CVec v(cols_.size());
    for (const auto& [e, c] : p.terms()) {
        auto it = col_of.find(e);
        if (it == col_of.end())
            throw Error(ErrorCode::InvalidArgument, "polynomial exceeds the truncation degree");
        v[it->second] = c;
    }
    for (size_t i = 0; i < ideal_.pivots.size(); ++i) {
        Scalar f = v[ideal_.pivots[i]];
        if (f.is_zero())
            continue;
        for (size_t j = 0; j < cols_.size(); ++j)
            if (!ideal_.r(i, j).is_zero())
                v[j] -= f * ideal_.r(i, j);
    }
    CVec out(basis_.size());
    for (size_t b = 0; b < basis_.size(); ++b)
        out[b] = v[basis_col_[b]];
    return out;
}

CVec StandardQuotient::vector_of(const Poly& p) const
{
    CVec one(mod_.dim);
    one[0] = Scalar(1);
    return poly_matrix(mod_, p) * one;
}

Scalar sesqui_form(const HModule& x1, const CVec& f1, const HModule& x2, const CVec& f2)
{
    if (x1.kind != "principal" || x2.kind != "principal" || x1.rd != x2.rd)
        throw Error(ErrorCode::ParameterMismatch, "form pairs two principal series of the same root datum");
    for (size_t i = 0; i < x1.param.size(); ++i)
        if (x2.param[i] != -x1.param[i].conj())
            throw Error(ErrorCode::ParameterMismatch, "second parameter must be -conj of the first");
    if (!(x1.k1 == x2.k1))
        throw Error(ErrorCode::ParameterMismatch, "modules use different multiplicities");
    if (f1.size() != x1.dim || f2.size() != x2.dim)
        throw Error(ErrorCode::InvalidArgument, "vector size does not match module");
    Scalar s;
    for (size_t w = 0; w < f1.size(); ++w)
        s += f1[w] * f2[w].conj();
    return s / Scalar(static_cast<long>(f1.size()));
}

CMat intertwiner_simple(const RootDatum& rd, const MultFn& k1, size_t j, const CVec& lambda, bool normalized)
{
    size_t alpha = rd.simple(j);
    size_t s = rd.simple_reflection(j);
    Scalar lc = cdot(rd.coroot(alpha), lambda);
    size_t n = rd.order();
    CMat m(n, n);
    for (size_t w = 0; w < n; ++w) {
        m(w, w) += k1(alpha);
        m(w, rd.mul(w, s)) -= lc;
    }
    if (normalized) {
        Scalar den = k1(alpha) - lc;
        if (den.is_zero())
            throw Error(ErrorCode::SingularParameter, "normalized intertwiner has a pole at lambda");
        m *= Scalar(1) / den;
    }
    return m;
}

CMat intertwiner_word(const RootDatum& rd, const MultFn& k1, const std::vector<int>& word, const CVec& lambda)
{
    CMat m = CMat::identity(rd.order());
    CVec cur = lambda;
    for (size_t t = word.size(); t-- > 0;) {
        size_t j = static_cast<size_t>(word[t]);
        m = intertwiner_simple(rd, k1, j, cur, true) * m;
        cur = rd.act(rd.simple_reflection(j), cur);
    }
    return m;
}

CMat intertwiner(const RootDatum& rd, const MultFn& k1, size_t w, const CVec& lambda)
{
    return intertwiner_word(rd, k1, rd.elt(w).word, lambda);
}

Scalar ev1(const CVec& f)
{
    Scalar s;
    for (const auto& x : f)
        s += x;
    return s / Scalar(static_cast<long>(f.size()));
}

CMat poisson_kernel(const HModule& x)
{
    std::vector<CVec> rows{CVec(x.dim, Scalar(1) / Scalar(static_cast<long>(x.dim)))};
    auto gens = generators(x);
    auto basis = row_basis(rows, x.dim);
    for (;;) {
        std::vector<CVec> next = basis;
        for (const auto& r : basis)
            for (const auto& g : gens)
                next.push_back(g.transpose() * r);
        auto nb = row_basis(next, x.dim);
        if (nb.size() == basis.size())
            break;
        basis = nb;
    }
    CMat m(basis.size(), x.dim);
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < x.dim; ++j)
            m(i, j) = basis[i][j];
    return nullspace(m);
}

Scalar poisson_product(const RootDatum& rd, const MultFn& k1, const CVec& lambda)
{
    Scalar p(1);
    for (size_t a : rd.r1_plus())
        p *= cdot(rd.coroot(a), lambda) + k1(a);
    return p;
}

bool is_irreducible_ps(const RootDatum& rd, const MultFn& k1, const CVec& lambda)
{
    for (size_t a : rd.r1_plus()) {
        Scalar v = cdot(rd.coroot(a), lambda);
        if (v == k1(a) || v == -k1(a))
            return false;
    }
    return true;
}

size_t generated_algebra_dim(const HModule& x)
{
    size_t n2 = x.dim * x.dim;
    auto flat = [](const CMat& m) { return m.data(); };
    auto unflat = [&](const CVec& v) {
        CMat m(x.dim, x.dim);
        for (size_t i = 0; i < x.dim; ++i)
            for (size_t j = 0; j < x.dim; ++j)
                m(i, j) = v[i * x.dim + j];
        return m;
    };
    auto gens = generators(x);
    auto basis = row_basis(std::vector<CVec>{flat(CMat::identity(x.dim))}, n2);
    for (;;) {
        std::vector<CVec> next = basis;
        for (const auto& b : basis) {
            CMat m = unflat(b);
            for (const auto& g : gens)
                next.push_back(flat(g * m));
        }
        auto nb = row_basis(next, n2);
        if (nb.size() == basis.size())
            return basis.size();
        basis = nb;
    }
}

std::vector<CMat> intertwining_maps(const std::vector<CMat>& ga, const std::vector<CMat>& gb)
{
    if (ga.size() != gb.size())
        throw Error(ErrorCode::MismatchedAlgebra, "generator lists differ in length");
    if (ga.empty())
        return {};
    size_t nx = ga[0].rows(), ny = gb[0].rows();
    // unknown T(a, b) at a * nx + b; equations T A_g - B_g T = 0
    CMat eq(ga.size() * ny * nx, ny * nx);
    size_t row = 0;
    for (size_t g = 0; g < ga.size(); ++g)
        for (size_t a = 0; a < ny; ++a)
            for (size_t c = 0; c < nx; ++c, ++row) {
                for (size_t b = 0; b < nx; ++b)
                    eq(row, a * nx + b) += ga[g](b, c);
                for (size_t d = 0; d < ny; ++d)
                    eq(row, d * nx + c) -= gb[g](a, d);
            }
    CMat ns = nullspace(eq);
    std::vector<CMat> out;
    for (size_t k = 0; k < ns.cols(); ++k) {
        CMat t(ny, nx);
        for (size_t a = 0; a < ny; ++a)
            for (size_t b = 0; b < nx; ++b)
                t(a, b) = ns(a * nx + b, k);
        out.push_back(t);
    }
    return out;
}

std::vector<CMat> hom_space(const HModule& x, const HModule& y) { return intertwining_maps(generators(x), generators(y)); }

bool is_morphism(const HModule& x, const HModule& y, const CMat& t)
{
    auto gx = generators(x), gy = generators(y);
    for (size_t g = 0; g < gx.size(); ++g)
        if (t * gx[g] != gy[g] * t)
            return false;
    return true;
}

std::vector<Weight> weights(const HModule& x)
{
    size_t n = x.rd->rank();
    Rational pool[] = {frac(1, 1), frac(3, 7), frac(-11, 13), frac(17, 5), frac(-2, 9), frac(31, 37)};
    for (size_t attempt = 0; attempt < 6; ++attempt) {
        CVec c(n);
        for (size_t j = 0; j < n; ++j)
            c[j] = Scalar(pool[(j + attempt) % 6] * Rational(static_cast<long>(attempt + 1)));
        CMat z = xi_combination(x, c);
        std::vector<Weight> out;
        bool good = true;
        for (const auto& ev : exact_eigenvalues(z)) {
            CMat v = nullspace(matrix_power(z - scalar_mat(x.dim, ev), x.dim));
            size_t d = v.cols();
            Weight wt;
            wt.gen_space = v;
            for (size_t j = 0; j < n && good; ++j) {
                CMat r = restrict_to(x.xi[j], v);
                Scalar nu = trace(r) / Scalar(static_cast<long>(d));
                if (!matrix_power(r - scalar_mat(d, nu), d).is_zero())
                    good = false;
                wt.nu.push_back(nu);
            }
            if (!good)
                break;
            CMat stack(n * x.dim, x.dim);
            for (size_t j = 0; j < n; ++j) {
                CMat m = x.xi[j] - scalar_mat(x.dim, wt.nu[j]);
                for (size_t a = 0; a < x.dim; ++a)
                    for (size_t b = 0; b < x.dim; ++b)
                        stack(j * x.dim + a, b) = m(a, b);
            }
            wt.eigen_space = nullspace(stack);
            out.push_back(wt);
        }
        if (good)
            return out;
    }
    throw Error(ErrorCode::NumericInstability, "could not separate the joint generalized eigenspaces");
}

bool same_orbit(const RootDatum& rd, const CVec& a, const CVec& b)
{
    for (size_t w = 0; w < rd.order(); ++w)
        if (rd.act(w, a) == b)
            return true;
    return false;
}

CentralCharacter central_character(const HModule& x, const std::vector<Poly>& invariants)
{
    CentralCharacter cc;
    auto ws = weights(x);
    if (ws.empty())
        return cc;
    cc.point = ws[0].nu;
    bool scalar = true, single = true;
    for (const auto& delta : invariants) {
        CMat m = poly_matrix(x, delta);
        Scalar v = delta.evaluate(cc.point);
        cc.values.push_back(v);
        if (m != scalar_mat(x.dim, v))
            scalar = false;
        for (const auto& w : ws)
            if (delta.evaluate(w.nu) != v)
                single = false;
    }
    cc.kind = scalar ? CentralCharacter::Character
                     : (single ? CentralCharacter::GeneralizedOnly : CentralCharacter::None);
    return cc;
}

CMat canonical_span(const CMat& m, size_t dim)
{
    if (m.cols() == 0)
        return CMat(dim, 0);
    auto e = rref(m.transpose());
    CMat out(dim, e.pivots.size());
    for (size_t i = 0; i < e.pivots.size(); ++i)
        for (size_t j = 0; j < dim; ++j)
            out(j, i) = e.r(i, j);
    return out;
}

CMat intersect(const CMat& a, const CMat& b, size_t dim)
{
    if (a.cols() == 0 || b.cols() == 0)
        return CMat(dim, 0);
    CMat ab(dim, a.cols() + b.cols());
    for (size_t i = 0; i < dim; ++i) {
        for (size_t j = 0; j < a.cols(); ++j)
            ab(i, j) = a(i, j);
        for (size_t j = 0; j < b.cols(); ++j)
            ab(i, a.cols() + j) = -b(i, j);
    }
    CMat ns = nullspace(ab);
    std::vector<CVec> vs;
    for (size_t k = 0; k < ns.cols(); ++k) {
        CVec y(a.cols());
        for (size_t j = 0; j < a.cols(); ++j)
            y[j] = ns(j, k);
        vs.push_back(a * y);
    }
    return canonical_span(stack_columns(vs, dim), dim);
}

CMat submodule_closure(const HModule& x, const CMat& vectors)
{
    CMat cur = canonical_span(vectors, x.dim);
    auto gens = generators(x);
    for (;;) {
        std::vector<CVec> cols = columns(cur);
        for (size_t j = 0; j < cur.cols(); ++j)
            for (const auto& g : gens)
                cols.push_back(g * cur.col(j));
        CMat next = canonical_span(stack_columns(cols, x.dim), x.dim);
        if (next.cols() == cur.cols())
            return cur;
        cur = next;
    }
}

HModule sub_module(const HModule& x, const CMat& basis)
{
    HModule y;
    y.rd = x.rd;
    y.k1 = x.k1;
    y.dim = basis.cols();
    y.kind = "sub";
    for (size_t i = 0; i < y.dim; ++i)
        y.labels.push_back("v" + std::to_string(i));
    for (const auto& m : x.s)
        y.s.push_back(restrict_to(m, basis));
    for (const auto& m : x.xi)
        y.xi.push_back(restrict_to(m, basis));
    return y;
}

HModule quotient_module(const HModule& x, const CMat& sub)
{
    size_t d = sub.cols();
    std::vector<CVec> cols = columns(sub);
    size_t have = d;
    for (size_t i = 0; i < x.dim && have < x.dim; ++i) {
        auto trial = cols;
        trial.push_back(unit(x.dim, i));
        if (rank(stack_columns(trial, x.dim)) > have) {
            cols = trial;
            ++have;
        }
    }
    CMat q = stack_columns(cols, x.dim);
    CMat qi = inverse(q);
    HModule y;
    y.rd = x.rd;
    y.k1 = x.k1;
    y.dim = x.dim - d;
    y.kind = "quotient";
    for (size_t i = 0; i < y.dim; ++i)
        y.labels.push_back("v" + std::to_string(i));
    auto block = [&](const CMat& m) {
        CMat c = qi * m * q;
        CMat b(y.dim, y.dim);
        for (size_t i = 0; i < y.dim; ++i)
            for (size_t j = 0; j < y.dim; ++j)
                b(i, j) = c(d + i, d + j);
        return b;
    };
    for (const auto& m : x.s)
        y.s.push_back(block(m));
    for (const auto& m : x.xi)
        y.xi.push_back(block(m));
    return y;
}

SubmoduleLattice submodule_lattice(const HModule& x)
{
    if (x.dim > 8)
        throw Error(ErrorCode::DimensionTooLarge, "submodule search is limited to dimension 8");
    SubmoduleLattice lat;
    lat.exhaustive = true;
    std::vector<CMat> subs{CMat(x.dim, 0), CMat::identity(x.dim)};
    auto add = [&](const CMat& m) {
        for (const auto& s : subs)
            if (s == m)
                return false;
        subs.push_back(m);
        return true;
    };
    std::vector<CVec> seeds;
    for (const auto& w : weights(x)) {
        for (size_t j = 0; j < w.eigen_space.cols(); ++j)
            seeds.push_back(w.eigen_space.col(j));
        if (w.gen_space.cols() > 1) {
            lat.exhaustive = false;
            for (size_t j = 0; j < w.gen_space.cols(); ++j)
                seeds.push_back(w.gen_space.col(j));
        }
    }
    for (const auto& v : seeds)
        add(submodule_closure(x, stack_columns({v}, x.dim)));
    bool grew = true;
    while (grew) {
        grew = false;
        size_t count = subs.size();
        for (size_t i = 0; i < count; ++i)
            for (size_t j = i + 1; j < count; ++j) {
                std::vector<CVec> cols = columns(subs[i]);
                for (const auto& c : columns(subs[j]))
                    cols.push_back(c);
                grew = add(canonical_span(stack_columns(cols, x.dim), x.dim)) || grew;
                grew = add(intersect(subs[i], subs[j], x.dim)) || grew;
            }
    }
    std::stable_sort(subs.begin(), subs.end(), [](const CMat& a, const CMat& b) { return a.cols() < b.cols(); });
    lat.subs = subs;
    return lat;
}

int one_dim_type(const HModule& x)
{
    if (x.dim != 1)
        return 0;
    bool triv = true, sgn = true;
    for (const auto& m : x.s) {
        triv = triv && m(0, 0) == Scalar(1);
        sgn = sgn && m(0, 0) == Scalar(-1);
    }
    return triv ? 1 : (sgn ? -1 : 0);
}

WRep trivial_rep(const RootDatum& rd) { return WRep{std::vector<CMat>(rd.rank(), CMat::identity(1))}; }

WRep sign_rep(const RootDatum& rd) { return WRep{std::vector<CMat>(rd.rank(), scalar_mat(1, Scalar(-1)))}; }

WRep reflection_rep(const RootDatum& rd)
{
    WRep y;
    for (size_t j = 0; j < rd.rank(); ++j)
        y.s.push_back(to_complex(rd.elt(rd.simple_reflection(j)).dual_mat));
    return y;
}

CMat rep_matrix(const RootDatum& rd, const WRep& y, size_t w)
{
    CMat m = CMat::identity(y.dim());
    for (int j : rd.elt(w).word)
        m = m * y.s[static_cast<size_t>(j)];
    return m;
}

WRep star_rep(const RootDatum&, const WRep& y)
{
    // simple reflections are involutions, so conj(Y(s^{-1}))^T = conj(Y(s))^T
    WRep out;
    for (const auto& m : y.s)
        out.s.push_back(conj_transpose(m));
    return out;
}

WRep restrict_to_w(const HModule& x) { return WRep{x.s}; }

PVec ph_act(const RootDatum& rd, const MultFn& k1, const WRep& u, size_t w, const PVec& x)
{
    PVec cur = x;
    const auto& word = rd.elt(w).word;
    for (size_t t = word.size(); t-- > 0;) {
        size_t j = static_cast<size_t>(word[t]);
        size_t s = rd.simple_reflection(j);
        size_t alpha = rd.simple(j);
        PVec next(cur.size(), Poly(rd.rank(), Space::ADual));
        for (size_t a = 0; a < cur.size(); ++a) {
            if (cur[a].is_zero())
                continue;
            Poly fs = w_act(rd, s, cur[a]);
            for (size_t l = 0; l < cur.size(); ++l)
                if (!u.s[j](l, a).is_zero())
                    next[l] += fs * u.s[j](l, a);
            next[a] -= demazure(rd, alpha, cur[a]) * k1(alpha);
        }
        cur = next;
    }
    return cur;
}

PMap equivariant_average(const RootDatum& rd, const MultFn& k1, const WRep& y, const WRep& u, const PMap& psi)
{
    size_t mu = y.dim(), m = u.dim();
    PMap out(mu, PVec(m, Poly(rd.rank(), Space::ADual)));
    Scalar inv_order = Scalar(1) / Scalar(static_cast<long>(rd.order()));
    for (size_t w = 0; w < rd.order(); ++w) {
        CMat yinv = rep_matrix(rd, y, rd.inv(w));
        for (size_t i = 0; i < mu; ++i) {
            PVec v(m, Poly(rd.rank(), Space::ADual));
            for (size_t l = 0; l < mu; ++l)
                if (!yinv(l, i).is_zero())
                    for (size_t a = 0; a < m; ++a)
                        v[a] += psi[l][a] * yinv(l, i);
            PVec img = ph_act(rd, k1, u, w, v);
            for (size_t a = 0; a < m; ++a)
                out[i][a] += img[a] * inv_order;
        }
    }
    return out;
}

bool is_w_equivariant(const RootDatum& rd, const MultFn& k1, const WRep& y, const WRep& u, const PMap& psi)
{
    size_t mu = y.dim(), m = u.dim();
    for (size_t j = 0; j < rd.rank(); ++j)
        for (size_t i = 0; i < mu; ++i) {
            PVec lhs(m, Poly(rd.rank(), Space::ADual));
            for (size_t l = 0; l < mu; ++l)
                if (!y.s[j](l, i).is_zero())
                    for (size_t a = 0; a < m; ++a)
                        lhs[a] += psi[l][a] * y.s[j](l, i);
            if (lhs != ph_act(rd, k1, u, rd.simple_reflection(j), psi[i]))
                return false;
        }
    return true;
}

PMap star_map(const PMap& psi, size_t dim_u)
{
    PMap out(dim_u);
    for (size_t j = 0; j < dim_u; ++j)
        for (size_t i = 0; i < psi.size(); ++i)
            out[j].push_back(minus_conj(psi[i][j]));
    return out;
}

std::pair<Scalar, Scalar> star_pairing_sides(const HModule& x1, const HModule& x2, const PMap& psi,
                                             const CMat& phi1, const CMat& phi2)
{
    size_t mu = psi.size(), m = phi1.cols();
    Scalar lhs, rhs;
    for (size_t i = 0; i < mu; ++i) {
        CVec v(x1.dim);
        for (size_t j = 0; j < m; ++j) {
            CVec t = poly_matrix(x1, psi[i][j]) * phi1.col(j);
            for (size_t a = 0; a < x1.dim; ++a)
                v[a] += t[a];
        }
        lhs += sesqui_form(x1, v, x2, phi2.col(i));
    }
    PMap st = star_map(psi, m);
    for (size_t j = 0; j < m; ++j) {
        CVec v(x2.dim);
        for (size_t i = 0; i < mu; ++i) {
            CVec t = poly_matrix(x2, st[j][i]) * phi2.col(i);
            for (size_t a = 0; a < x2.dim; ++a)
                v[a] += t[a];
        }
        rhs += sesqui_form(x1, phi1.col(j), x2, v);
    }
    return {lhs, rhs};
}

} // namespace gha
