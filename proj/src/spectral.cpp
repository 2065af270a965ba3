#include "gha/spectral.hpp"

#include <Eigen/Eigenvalues>

namespace gha {

namespace {

void trim(UPoly& p)
{
    while (!p.empty() && p.back().is_zero())
        p.pop_back();
}

UPoly monic(UPoly p)
{
    trim(p);
    if (p.empty())
        return p;
    Scalar lead = p.back();
    for (auto& c : p)
        c /= lead;
    return p;
}

UPoly remainder(UPoly a, const UPoly& b)
{
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Scalar f = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= f * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

} // namespace

UPoly char_poly(const CMat& m)
{
    size_t n = m.rows();
    // c_n = 1, M_0 = 0; M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k
    UPoly c(n + 1);
    c[n] = Scalar(1);
    CMat mk(n, n);
    for (size_t k = 1; k <= n; ++k) {
        CMat next = m * mk;
        for (size_t i = 0; i < n; ++i)
            next(i, i) += c[n - k + 1];
        mk = next;
        CMat am = m * mk;
        Scalar tr;
        for (size_t i = 0; i < n; ++i)
            tr += am(i, i);
        c[n - k] = -tr / Scalar(static_cast<long>(k));
    }
    return c;
}

UPoly upoly_derivative(const UPoly& p)
{
    UPoly d;
    for (size_t i = 1; i < p.size(); ++i)
        d.push_back(p[i] * Scalar(static_cast<long>(i)));
    trim(d);
    return d;
}

UPoly upoly_gcd(UPoly a, UPoly b)
{
    a = monic(a);
    b = monic(b);
    while (!b.empty()) {
        UPoly r = monic(remainder(a, b));
        a = b;
        b = r;
    }
    return a;
}

UPoly upoly_divide(const UPoly& a, const UPoly& b)
{
    UPoly r = a;
    trim(r);
    if (r.size() < b.size())
        return {};
    UPoly q(r.size() - b.size() + 1);
    while (r.size() >= b.size() && !r.empty()) {
        Scalar f = r.back() / b.back();
        size_t shift = r.size() - b.size();
        q[shift] = f;
        for (size_t i = 0; i < b.size(); ++i)
            r[shift + i] -= f * b[i];
        r.pop_back();
        trim(r);
    }
    if (!r.empty())
        throw Error(ErrorCode::InexactDivision, "univariate division leaves a remainder");
    return q;
}

Scalar upoly_eval(const UPoly& p, const Scalar& x)
{
    Scalar v;
    for (size_t i = p.size(); i-- > 0;)
        v = v * x + p[i];
    return v;
}

std::vector<Scalar> exact_eigenvalues(const CMat& m)
{
    if (m.rows() == 0)
        return {};
    UPoly p = char_poly(m);
    UPoly sq = monic(upoly_divide(p, upoly_gcd(p, upoly_derivative(p))));
    size_t d = sq.size() - 1;
    std::vector<Scalar> out;
    if (d == 0)
        return out;
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(static_cast<long>(d), static_cast<long>(d));
    for (size_t i = 0; i < d; ++i) {
        if (i + 1 < d)
            comp(static_cast<long>(i + 1), static_cast<long>(i)) = 1.0;
        comp(static_cast<long>(i), static_cast<long>(d - 1)) = -sq[i].to_complex();
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
    for (long i = 0; i < static_cast<long>(d); ++i) {
        std::complex<double> z = es.eigenvalues()(i);
        bool found = false;
        for (long den : {1000L, 100000L, 10000000L}) {
            Scalar q(rationalize(z.real(), den), rationalize(z.imag(), den));
            if (upoly_eval(sq, q).is_zero()) {
                out.push_back(q);
                found = true;
                break;
            }
        }
        if (!found)
            throw Error(ErrorCode::NumericInstability, "eigenvalue is not a Gaussian rational");
    }
    return out;
}

CMat restrict_to(const CMat& m, const CMat& b)
{
    size_t d = b.cols();
    auto e = rref(b.transpose());
    if (e.pivots.size() != d)
        throw Error(ErrorCode::InvalidArgument, "subspace basis is not independent");
    CMat bp(d, d), mbp(d, d);
    CMat mb = m * b;
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
            bp(i, j) = b(e.pivots[i], j);
            mbp(i, j) = mb(e.pivots[i], j);
        }
    CMat c = inverse(bp) * mbp;
    if (b * c != mb)
        throw Error(ErrorCode::InvalidArgument, "subspace is not invariant");
    return c;
}

CMat matrix_power(const CMat& m, size_t k)
{
    CMat r = CMat::identity(m.rows());
    CMat b = m;
    while (k) {
        if (k & 1)
            r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

} // namespace gha
