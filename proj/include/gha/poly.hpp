#pragma once

#include "gha/matrix.hpp"
#include "gha/scalar.hpp"

#include <map>
#include <vector>

namespace gha {

using Exps = std::vector<int>;

/// Which space the variables are coordinates on.
enum class Space {
    A,     // functions of H in a (dual coordinates); Dunkl calculus
    ADual, // functions of lambda in a* ; houses S(a_C)
};

/// Exact multivariate polynomial with Gaussian-rational coefficients.
class Poly {
public:
    using Terms = std::map<Exps, Scalar>;

    Poly() = default;
    Poly(size_t nvars, Space space) : n_(nvars), space_(space) {}

    static Poly constant(size_t nvars, Space space, const Scalar& c);
    static Poly variable(size_t nvars, Space space, size_t i);
    /// Linear form sum_i c_i x_i.
    static Poly linear(Space space, const CVec& c);
    static Poly linear(Space space, const QVec& c);
    static Poly monomial(Space space, const Exps& e, const Scalar& c = Scalar(1));

    size_t nvars() const { return n_; }
    Space space() const { return space_; }
    const Terms& terms() const { return t_; }

    bool is_zero() const { return t_.empty(); }
    int degree() const; // -1 for zero
    int min_degree() const;
    bool is_homogeneous() const;
    Scalar coeff(const Exps& e) const;
    Scalar constant_term() const { return coeff(Exps(n_, 0)); }

    void add_term(const Exps& e, const Scalar& c);

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Scalar& s);
    Poly operator-() const;
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
    friend Poly operator*(const Scalar& s, Poly a) { return a *= s; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.n_ == b.n_ && a.t_ == b.t_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly pow(int k) const;

    /// Partial derivative in variable i.
    Poly diff(size_t i) const;
    /// Directional derivative sum_i v_i d/dx_i.
    Poly directional(const CVec& v) const;
    Poly directional(const QVec& v) const;

    /// p(A x + b).
    Poly substitute(const QMat& a, const CVec& b) const;
    Poly substitute(const QMat& a) const;
    /// p(x + b).
    Poly shift(const CVec& b) const;

    /// Exact quotient by a nonzero linear form; throws InexactDivision if not exact.
    Poly divide_linear(const CVec& form) const;

    Scalar evaluate(const CVec& x) const;
    /// Complex-conjugate coefficients.
    Poly conj() const;
    /// Homogeneous component of degree d.
    Poly homogeneous_part(int d) const;

private:
    void check(const Poly& o) const;

    size_t n_ = 0;
    Space space_ = Space::ADual;
    Terms t_;
};

/// All exponent vectors of total degree d in n variables (lexicographic).
std::vector<Exps> monomials_of_degree(size_t n, int d);
std::vector<Exps> monomials_up_to_degree(size_t n, int d);

} // namespace gha
