#include "gha/poly.hpp"
#include "gha/errors.hpp"

#include <algorithm>
#include <numeric>

namespace gha {

namespace {

int total(const Exps& e) { return std::accumulate(e.begin(), e.end(), 0); }

} // namespace

Poly Poly::constant(size_t nvars, Space space, const Scalar& c)
{
    Poly p(nvars, space);
    p.add_term(Exps(nvars, 0), c);
    return p;
}

Poly Poly::variable(size_t nvars, Space space, size_t i)
{
    Poly p(nvars, space);
    Exps e(nvars, 0);
    e[i] = 1;
    p.add_term(e, Scalar(1));
    return p;
}

Poly Poly::linear(Space space, const CVec& c)
{
    Poly p(c.size(), space);
    for (size_t i = 0; i < c.size(); ++i) {
        Exps e(c.size(), 0);
        e[i] = 1;
        p.add_term(e, c[i]);
    }
    return p;
}

Poly Poly::linear(Space space, const QVec& c) { return linear(space, to_complex(c)); }

Poly Poly::monomial(Space space, const Exps& e, const Scalar& c)
{
    Poly p(e.size(), space);
    p.add_term(e, c);
    return p;
}

int Poly::degree() const
{
    int d = -1;
    for (const auto& [e, c] : t_)
        d = std::max(d, total(e));
    return d;
}

int Poly::min_degree() const
{
    int d = -1;
    for (const auto& [e, c] : t_) {
        int k = total(e);
        if (d < 0 || k < d)
            d = k;
    }
    return d;
}

bool Poly::is_homogeneous() const
{
    return t_.empty() || degree() == min_degree();
}

Scalar Poly::coeff(const Exps& e) const
{
    auto it = t_.find(e);
    return it == t_.end() ? Scalar() : it->second;
}

void Poly::add_term(const Exps& e, const Scalar& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = t_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            t_.erase(it);
    }
}

void Poly::check(const Poly& o) const
{
    if (n_ != o.n_)
        throw Error(ErrorCode::InvalidArgument, "polynomials over different numbers of variables");
}

Poly& Poly::operator+=(const Poly& o)
{
    if (o.t_.empty())
        return *this;
    if (t_.empty() && n_ == 0) {
        *this = o;
        return *this;
    }
    check(o);
    for (const auto& [e, c] : o.t_)
        add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    if (o.t_.empty())
        return *this;
    if (t_.empty() && n_ == 0) {
        *this = -o;
        return *this;
    }
    check(o);
    for (const auto& [e, c] : o.t_)
        add_term(e, -c);
    return *this;
}

Poly& Poly::operator*=(const Scalar& s)
{
    if (s.is_zero()) {
        t_.clear();
        return *this;
    }
    for (auto& [e, c] : t_)
        c *= s;
    return *this;
}

Poly Poly::operator-() const
{
    Poly p = *this;
    for (auto& [e, c] : p.t_)
        c = -c;
    return p;
}

Poly operator*(const Poly& a, const Poly& b)
{
    size_t n = std::max(a.n_, b.n_);
    Poly p(n, a.n_ ? a.space_ : b.space_);
    if (a.t_.empty() || b.t_.empty())
        return p;
    a.check(b);
    Exps e(n);
    for (const auto& [ea, ca] : a.t_)
        for (const auto& [eb, cb] : b.t_) {
            for (size_t i = 0; i < n; ++i)
                e[i] = ea[i] + eb[i];
            p.add_term(e, ca * cb);
        }
    return p;
}

Poly Poly::pow(int k) const
{
    Poly r = constant(n_, space_, Scalar(1));
    Poly b = *this;
    while (k > 0) {
        if (k & 1)
            r = r * b;
        k >>= 1;
        if (k)
            b = b * b;
    }
    return r;
}

Poly Poly::diff(size_t i) const
{
    Poly p(n_, space_);
    for (const auto& [e, c] : t_) {
        if (e[i] == 0)
            continue;
        Exps f = e;
        f[i] -= 1;
        p.add_term(f, c * Scalar(e[i]));
    }
    return p;
}

Poly Poly::directional(const CVec& v) const
{
    Poly p(n_, space_);
    for (size_t i = 0; i < n_; ++i)
        if (!v[i].is_zero())
            p += diff(i) * v[i];
    return p;
}

Poly Poly::directional(const QVec& v) const { return directional(to_complex(v)); }

Poly Poly::substitute(const QMat& a, const CVec& b) const
{
    Poly out(n_, space_);
    if (t_.empty())
        return out;
    std::vector<int> maxe(n_, 0);
    for (const auto& [e, c] : t_)
        for (size_t i = 0; i < n_; ++i)
            maxe[i] = std::max(maxe[i], e[i]);
    // powers of the substituted linear forms
    std::vector<std::vector<Poly>> pw(n_);
    for (size_t i = 0; i < n_; ++i) {
        CVec row(n_);
        for (size_t j = 0; j < n_; ++j)
            row[j] = Scalar(a(i, j));
        Poly li = linear(space_, row);
        if (!b.empty())
            li += constant(n_, space_, b[i]);
        pw[i].push_back(constant(n_, space_, Scalar(1)));
        for (int k = 1; k <= maxe[i]; ++k)
            pw[i].push_back(pw[i].back() * li);
    }
    for (const auto& [e, c] : t_) {
        Poly term = constant(n_, space_, c);
        for (size_t i = 0; i < n_; ++i)
            if (e[i])
                term = term * pw[i][e[i]];
        out += term;
    }
    return out;
}

Poly Poly::substitute(const QMat& a) const { return substitute(a, CVec{}); }

Poly Poly::shift(const CVec& b) const { return substitute(QMat::identity(n_), b); }

Poly Poly::divide_linear(const CVec& form) const
{
    size_t j = n_;
    for (size_t i = n_; i-- > 0;)
        if (!form[i].is_zero()) {
            j = i;
            break;
        }
    if (j == n_)
        throw Error(ErrorCode::InexactDivision, "division by the zero linear form");
    Poly lin = linear(space_, form);
    Scalar inv = Scalar(1) / form[j];
    Poly q(n_, space_);
    Poly r = *this;
    while (!r.t_.empty()) {
        auto best = r.t_.begin();
        for (auto it = r.t_.begin(); it != r.t_.end(); ++it)
            if (it->first[j] > best->first[j])
                best = it;
        if (best->first[j] == 0)
            throw Error(ErrorCode::InexactDivision, "polynomial not divisible by linear form");
        Exps e = best->first;
        e[j] -= 1;
        Scalar c = best->second * inv;
        q.add_term(e, c);
        r -= monomial(space_, e, c) * lin;
    }
    return q;
}

Scalar Poly::evaluate(const CVec& x) const
{
    Scalar s;
    for (const auto& [e, c] : t_) {
        Scalar m = c;
        for (size_t i = 0; i < n_; ++i)
            for (int k = 0; k < e[i]; ++k)
                m *= x[i];
        s += m;
    }
    return s;
}

Poly Poly::conj() const
{
    Poly p = *this;
    for (auto& [e, c] : p.t_)
        c = c.conj();
    return p;
}

Poly Poly::homogeneous_part(int d) const
{
    Poly p(n_, space_);
    for (const auto& [e, c] : t_)
        if (total(e) == d)
            p.t_.emplace(e, c);
    return p;
}

namespace {

void gen(size_t n, size_t i, int left, Exps& cur, std::vector<Exps>& out)
{
    if (i + 1 == n) {
        cur[i] = left;
        out.push_back(cur);
        return;
    }
    for (int k = left; k >= 0; --k) {
        cur[i] = k;
        gen(n, i + 1, left - k, cur, out);
    }
}

} // namespace

std::vector<Exps> monomials_of_degree(size_t n, int d)
{
    std::vector<Exps> out;
    if (n == 0) {
        if (d == 0)
            out.push_back({});
        return out;
    }
    Exps cur(n, 0);
    gen(n, 0, d, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Exps> monomials_up_to_degree(size_t n, int d)
{
    std::vector<Exps> out;
    for (int k = 0; k <= d; ++k) {
        auto m = monomials_of_degree(n, k);
        out.insert(out.end(), m.begin(), m.end());
    }
    return out;
}

} // namespace gha
