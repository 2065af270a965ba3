#include "gha/exppoly.hpp"
#include "gha/errors.hpp"

#include <algorithm>

namespace gha {

ExpPoly ExpPoly::constant(size_t rank, const Scalar& c)
{
    ExpPoly f(rank);
    f.add_term(Exps(rank, 0), c);
    return f;
}

ExpPoly ExpPoly::exp(const Exps& mu, const Scalar& c)
{
    ExpPoly f(mu.size());
    f.add_term(mu, c);
    return f;
}

Scalar ExpPoly::coeff(const Exps& mu) const
{
    auto it = t_.find(mu);
    return it == t_.end() ? Scalar() : it->second;
}

void ExpPoly::add_term(const Exps& mu, const Scalar& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = t_.emplace(mu, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            t_.erase(it);
    }
}

ExpPoly& ExpPoly::operator+=(const ExpPoly& o)
{
    if (n_ == 0)
        n_ = o.n_;
    for (const auto& [e, c] : o.t_)
        add_term(e, c);
    return *this;
}

ExpPoly& ExpPoly::operator-=(const ExpPoly& o)
{
    if (n_ == 0)
        n_ = o.n_;
    for (const auto& [e, c] : o.t_)
        add_term(e, -c);
    return *this;
}

ExpPoly& ExpPoly::operator*=(const Scalar& s)
{
    if (s.is_zero()) {
        t_.clear();
        return *this;
    }
    for (auto& [e, c] : t_)
        c *= s;
    return *this;
}

ExpPoly ExpPoly::operator-() const
{
    ExpPoly f = *this;
    for (auto& [e, c] : f.t_)
        c = -c;
    return f;
}

ExpPoly operator*(const ExpPoly& a, const ExpPoly& b)
{
    ExpPoly f(std::max(a.n_, b.n_));
    Exps e(f.n_);
    for (const auto& [ea, ca] : a.t_)
        for (const auto& [eb, cb] : b.t_) {
            for (size_t i = 0; i < f.n_; ++i)
                e[i] = ea[i] + eb[i];
            f.add_term(e, ca * cb);
        }
    return f;
}

ExpPoly ExpPoly::transform(const IMat& m) const
{
    ExpPoly f(n_);
    Exps e(n_);
    for (const auto& [mu, c] : t_) {
        for (size_t i = 0; i < n_; ++i) {
            int s = 0;
            for (size_t j = 0; j < n_; ++j)
                s += m[i][j] * mu[j];
            e[i] = s;
        }
        f.add_term(e, c);
    }
    return f;
}

ExpPoly ExpPoly::derivative(const CVec& pairing) const
{
    ExpPoly f(n_);
    for (const auto& [mu, c] : t_) {
        Scalar v;
        for (size_t i = 0; i < n_; ++i)
            if (mu[i])
                v += pairing[i] * Scalar(mu[i]);
        f.add_term(mu, c * v);
    }
    return f;
}

namespace {

long floor_div(long a, long b)
{
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

} // namespace

ExpPoly exp_divide(const ExpPoly& f, const Exps& a)
{
    size_t n = a.size();
    size_t p = n;
    for (size_t i = 0; i < n; ++i)
        if (a[i] != 0) {
            p = i;
            break;
        }
    if (p == n)
        throw Error(ErrorCode::NotDivisible, "division by 1 - e^0");
    // Write each exponent as rep + j a with 0 <= rep[p] < |a[p]|, orient so a[p] > 0.
    Exps dir = a;
    int sgn_dir = 1;
    if (dir[p] < 0) {
        for (auto& x : dir)
            x = -x;
        sgn_dir = -1;
    }
    std::map<Exps, std::map<long, Scalar>> cosets;
    for (const auto& [mu, c] : f.terms()) {
        long j = floor_div(mu[p], dir[p]);
        Exps rep = mu;
        for (size_t i = 0; i < n; ++i)
            rep[i] -= static_cast<int>(j * dir[i]);
        // position along the original direction a
        cosets[rep][j * sgn_dir] = c;
    }
    // q (1 - X^{-1}) = f with X = e^a: q_j - q_{j+1} = c_j, so q_j = sum_{i >= j} c_i.
    ExpPoly q(n);
    for (const auto& [rep, cs] : cosets) {
        Scalar total;
        for (const auto& [j, c] : cs)
            total += c;
        if (!total.is_zero())
            throw Error(ErrorCode::NotDivisible, "expression not divisible by 1 - e^{-a}");
        long lo = cs.begin()->first, hi = cs.rbegin()->first;
        Scalar acc;
        for (long j = hi; j >= lo; --j) {
            auto it = cs.find(j);
            if (it != cs.end())
                acc += it->second;
            if (acc.is_zero())
                continue;
            Exps mu = rep;
            for (size_t i = 0; i < n; ++i)
                mu[i] += static_cast<int>(j * a[i]);
            q.add_term(mu, acc);
        }
    }
    return q;
}

} // namespace gha
