#pragma once

#include "gha/poly.hpp"

#include <map>
#include <vector>

namespace gha {

using IMat = std::vector<std::vector<int>>;

/// Finite sum  sum_mu c_mu e^mu  with mu given by integer coordinates
/// in the simple basis of the reduced root system.
class ExpPoly {
public:
    using Terms = std::map<Exps, Scalar>;

    ExpPoly() = default;
    explicit ExpPoly(size_t rank) : n_(rank) {}

    static ExpPoly constant(size_t rank, const Scalar& c);
    static ExpPoly exp(const Exps& mu, const Scalar& c = Scalar(1));

    size_t rank() const { return n_; }
    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    Scalar coeff(const Exps& mu) const;
    void add_term(const Exps& mu, const Scalar& c);

    ExpPoly& operator+=(const ExpPoly& o);
    ExpPoly& operator-=(const ExpPoly& o);
    ExpPoly& operator*=(const Scalar& s);
    ExpPoly operator-() const;
    friend ExpPoly operator+(ExpPoly a, const ExpPoly& b) { return a += b; }
    friend ExpPoly operator-(ExpPoly a, const ExpPoly& b) { return a -= b; }
    friend ExpPoly operator*(ExpPoly a, const Scalar& s) { return a *= s; }
    friend ExpPoly operator*(const Scalar& s, ExpPoly a) { return a *= s; }
    friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b);
    friend bool operator==(const ExpPoly& a, const ExpPoly& b) { return a.n_ == b.n_ && a.t_ == b.t_; }
    friend bool operator!=(const ExpPoly& a, const ExpPoly& b) { return !(a == b); }

    /// e^mu -> e^{M mu} for an integer matrix on simple-root coordinates.
    ExpPoly transform(const IMat& m) const;
    /// e^mu -> mu(xi) e^mu, where pairing[i] = pi_i(xi) for the simple roots pi_i.
    ExpPoly derivative(const CVec& pairing) const;

private:
    size_t n_ = 0;
    Terms t_;
};

/// f / (1 - e^{-a}) for a nonzero lattice vector a; throws NotDivisible
/// unless the quotient is a finite sum.
ExpPoly exp_divide(const ExpPoly& f, const Exps& a);

} // namespace gha
