#pragma once

#include "gha/algebra.hpp"

#include <map>
#include <random>

namespace gha {

/// Element sum_w p_w (x) w of the graded Hecke algebra H_{k1}, polynomials on the left.
class HElt {
public:
    using Terms = std::map<size_t, Poly>; // Weyl index -> polynomial on a*

    HElt() = default;
    HElt(const RootDatum& rd, const MultFn& k1) : rd_(&rd), k1_(k1) {}

    static HElt scalar(const RootDatum& rd, const MultFn& k1, const Scalar& c);
    static HElt poly(const RootDatum& rd, const MultFn& k1, const Poly& p);
    static HElt group(const RootDatum& rd, const MultFn& k1, size_t w);
    /// xi in a (a linear polynomial on a*).
    static HElt xi(const RootDatum& rd, const MultFn& k1, const CVec& xi);

    const RootDatum& rd() const { return *rd_; }
    const MultFn& k1() const { return k1_; }
    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    Poly coeff(size_t w) const;
    void add_term(size_t w, const Poly& p);
    int degree() const;

    HElt& operator+=(const HElt& o);
    HElt& operator-=(const HElt& o);
    HElt& operator*=(const Scalar& c);
    HElt operator-() const;
    friend HElt operator+(HElt a, const HElt& b) { return a += b; }
    friend HElt operator-(HElt a, const HElt& b) { return a -= b; }
    friend HElt operator*(HElt a, const Scalar& c) { return a *= c; }
    friend HElt operator*(const Scalar& c, HElt a) { return a *= c; }
    friend HElt operator*(const HElt& a, const HElt& b);
    friend bool operator==(const HElt& a, const HElt& b) { return a.t_ == b.t_; }
    friend bool operator!=(const HElt& a, const HElt& b) { return !(a == b); }

    void check_same(const HElt& o) const;

private:
    const RootDatum* rd_ = nullptr;
    MultFn k1_;
    Terms t_;
};

HElt h_mul(const HElt& a, const HElt& b);

/// s_j . b using s p = p^s s - k1(alpha) d_alpha(p).
HElt left_simple(const HElt& b, size_t j);

/// w xi w^{-1} from the closed formula w(xi) + sum_{alpha>0, w^{-1}alpha<0} k1(alpha) (w^{-1}alpha)(xi) s_alpha.
HElt conj_by_w(const RootDatum& rd, const MultFn& k1, size_t w, const CVec& xi);

/// tau(p)(lambda) = p(-w0 lambda): the automorphism xi -> -w0(xi) of S(a).
Poly tau(const RootDatum& rd, const Poly& p);

HElt theta_H(const HElt& a);
HElt transpose_t(const HElt& a);
/// Antilinear anti-automorphism; an involution of H only when k1 is real.
HElt star(const HElt& a);
/// Anti-automorphism fixing S(a) with w -> w^{-1}; gives the opposite normal form.
HElt iota(const HElt& a);

bool is_central(const HElt& a);

/// Matrix of polynomials on a*, for morphisms psi between W-modules.
using PolyMat = std::vector<std::vector<Poly>>;

/// Star of a matrix-valued morphism: transpose and f -> conj(f(-conj lambda)).
PolyMat star_hom(const PolyMat& psi);

/// Word-rewriting model of H used as an independent oracle: letters are
/// xi_i (0 <= letter < rank) and s_j (letter = rank + j).
class WordRewriter {
public:
    WordRewriter(const RootDatum& rd, const MultFn& k1) : rd_(rd), k1_(k1) {}

    using Word = std::vector<int>;
    using Combo = std::map<Word, Scalar>;

    /// Normal form reached by applying s xi -> s(xi) s - k1 alpha(xi) at random positions.
    HElt normalize(const Word& w, std::mt19937& rng) const;

private:
    const RootDatum& rd_;
    MultFn k1_;
};

} // namespace gha
