#include "gha/scalar.hpp"
#include "gha/errors.hpp"

#include <cctype>
#include <cmath>

namespace gha {

Scalar& Scalar::operator*=(const Scalar& o)
{
    if (o.is_real()) {
        re_ *= o.re_;
        im_ *= o.re_;
        return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational m = re_ * o.im_ + im_ * o.re_;
    re_ = r;
    im_ = m;
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o)
{
    if (o.is_zero())
        throw Error(ErrorCode::DivisionByZero, "division by zero scalar");
    if (o.is_real()) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    Rational n = o.norm2();
    Rational r = (re_ * o.re_ + im_ * o.im_) / n;
    Rational m = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = r;
    im_ = m;
    return *this;
}

std::string Scalar::str() const
{
    if (sgn(im_) == 0)
        return re_.get_str();
    std::string s;
    if (sgn(re_) != 0) {
        s = re_.get_str();
        if (sgn(im_) > 0)
            s += "+";
    }
    s += im_.get_str() + "i";
    return s;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

namespace {

std::string strip(const std::string& s)
{
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c)))
            out += c;
    return out;
}

} // namespace

Rational parse_rational(const std::string& raw)
{
    std::string s = strip(raw);
    if (s.empty())
        throw Error(ErrorCode::BadConfig, "empty rational");
    if (s[0] == '+')
        s = s.substr(1);
    // accept decimal notation as an exact rational
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        bool neg = !s.empty() && s[0] == '-';
        std::string body = neg ? s.substr(1) : s;
        dot = body.find('.');
        std::string ip = body.substr(0, dot), fp = body.substr(dot + 1);
        for (char c : ip + fp)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw Error(ErrorCode::BadConfig, "malformed number '" + raw + "'");
        mpz_class den = 1;
        for (size_t j = 0; j < fp.size(); ++j)
            den *= 10;
        mpz_class num((ip.empty() ? "0" : ip) + fp, 10);
        Rational q(num, den);
        q.canonicalize();
        return neg ? Rational(-q) : q;
    }
    for (size_t j = 0; j < s.size(); ++j) {
        char c = s[j];
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || (c == '-' && j == 0)))
            throw Error(ErrorCode::BadConfig, "malformed rational '" + raw + "'");
    }
    Rational q;
    if (q.set_str(s, 10) != 0 || q.get_den() == 0)
        throw Error(ErrorCode::BadConfig, "malformed rational '" + raw + "'");
    q.canonicalize();
    return q;
}

Scalar Scalar::parse(const std::string& raw)
{
    std::string s = strip(raw);
    if (s.empty())
        throw Error(ErrorCode::BadConfig, "empty scalar");
    if (s.back() != 'i')
        return Scalar(parse_rational(s));
    s.pop_back();
    // split at the last sign that is not the leading character
    size_t cut = std::string::npos;
    for (size_t j = s.size(); j-- > 1;)
        if (s[j] == '+' || s[j] == '-') {
            cut = j;
            break;
        }
    std::string re_part = cut == std::string::npos ? "" : s.substr(0, cut);
    std::string im_part = cut == std::string::npos ? s : s.substr(cut);
    if (im_part.empty() || im_part == "+")
        im_part = "1";
    else if (im_part == "-")
        im_part = "-1";
    Rational re = re_part.empty() ? Rational(0) : parse_rational(re_part);
    return Scalar(re, parse_rational(im_part));
}

Rational rationalize(double x, long max_den)
{
    if (!std::isfinite(x))
        throw Error(ErrorCode::NumericInstability, "cannot rationalize non-finite value");
    bool neg = x < 0;
    double y = std::fabs(x);
    mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double r = y;
    for (int it = 0; it < 64; ++it) {
        double a = std::floor(r);
        mpz_class ai(a);
        mpz_class p2 = ai * p1 + p0, q2 = ai * q1 + q0;
        if (q2 > max_den)
            break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double frac = r - a;
        if (frac < 1e-15)
            break;
        r = 1.0 / frac;
    }
    Rational q(p1, q1);
    q.canonicalize();
    return neg ? Rational(-q) : q;
}

} // namespace gha
