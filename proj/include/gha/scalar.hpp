#pragma once

#include <gmpxx.h>

#include <complex>
#include <ostream>
#include <string>

namespace gha {

using Rational = mpq_class;

/// Exact Gaussian rational a + b i.
class Scalar {
public:
    Scalar() : re_(0), im_(0) {}
    Scalar(int v) : re_(v), im_(0) {}
    Scalar(long v) : re_(v), im_(0) {}
    Scalar(const Rational& re) : re_(re), im_(0) { re_.canonicalize(); }
    Scalar(const Rational& re, const Rational& im) : re_(re), im_(im)
    {
        re_.canonicalize();
        im_.canonicalize();
    }

    static Scalar i() { return Scalar(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    Scalar conj() const { return Scalar(re_, -im_); }
    Rational norm2() const { return re_ * re_ + im_ * im_; }

    Scalar& operator+=(const Scalar& o) { re_ += o.re_; im_ += o.im_; return *this; }
    Scalar& operator-=(const Scalar& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    Scalar operator-() const { return Scalar(-re_, -im_); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

    // "p/q" or "p/q+r/si"
    std::string str() const;
    static Scalar parse(const std::string& s);

private:
    Rational re_, im_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

inline bool is_zero(const Scalar& s) { return s.is_zero(); }
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// Canonical p / q.
inline Rational frac(long p, long q)
{
    Rational r(p, q);
    r.canonicalize();
    return r;
}

Rational parse_rational(const std::string& s);

/// Closest rational with denominator at most max_den (continued fractions).
Rational rationalize(double x, long max_den);

} // namespace gha
