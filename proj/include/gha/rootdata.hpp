#pragma once

#include "gha/exppoly.hpp"
#include "gha/matrix.hpp"
#include "gha/scalar.hpp"

#include <map>
#include <string>
#include <vector>

namespace gha {

/// Element of W: reduced word over the simple reflections plus its actions.
struct WeylElt {
    std::vector<int> word; // lexicographically least reduced word
    QMat mat;              // action on a* coordinates
    QMat dual_mat;         // action on a coordinates (contragredient)
    IMat pi_mat;           // action on simple-root coordinates of the root lattice
    int length = 0;
    int sign = 1;
};

/// One positive restricted root with its root-space dimensions.
struct SigmaRoot {
    QVec coords; // in the chosen basis of a*
    int dim1 = 1; // dim g_alpha
    int dim2 = 0; // dim g_{2 alpha}
};

struct RootDatumSpec {
    std::string type = "custom";
    size_t rank = 0;
    QMat gram;
    std::vector<SigmaRoot> sigma_plus;
};

/// Scalar function on the positive roots of R, indexed like RootDatum::rplus.
struct MultFn {
    std::vector<Scalar> v;
    const Scalar& operator()(size_t i) const { return v[i]; }
    Scalar& operator[](size_t i) { return v[i]; }
    friend bool operator==(const MultFn& a, const MultFn& b) { return a.v == b.v; }
};

class RootDatum {
public:
    explicit RootDatum(const RootDatumSpec& spec);

    const std::string& type() const { return type_; }
    size_t rank() const { return rank_; }
    const QMat& gram() const { return gram_; }

    /// B(mu, nu) = mu^T G nu.
    Rational form(const QVec& a, const QVec& b) const;
    /// H_mu in a coordinates (G mu).
    QVec h_of(const QVec& mu) const;

    // Positive roots of R = 2 Sigma.  Index i corresponds to sigma_plus()[i].
    size_t n_pos() const { return rplus_.size(); }
    const QVec& root(size_t i) const { return rplus_[i]; }
    const QVec& coroot(size_t i) const { return coroot_[i]; }
    const Exps& root_pi(size_t i) const { return rplus_pi_[i]; }
    Rational root_norm2(size_t i) const { return form(rplus_[i], rplus_[i]); }
    bool in_r1(size_t i) const { return in_r1_[i]; }
    const std::vector<size_t>& r1_plus() const { return r1plus_; }
    /// Index of 2 alpha in R^+ or -1.
    long double_of(size_t i) const { return double_[i]; }
    /// Index of alpha / 2 in R^+ or -1.
    long half_of(size_t i) const { return half_[i]; }
    size_t orbit(size_t i) const { return orbit_[i]; }
    size_t n_orbits() const { return n_orbits_; }
    /// Index in R^+ of the simple root number j.
    size_t simple(size_t j) const { return simple_[j]; }
    const std::vector<SigmaRoot>& sigma_plus() const { return sigma_; }
    /// Index of a root given a* coordinates; returns -1 if absent.  Sign set for negative roots.
    long find_root(const QVec& v, int* sign = nullptr) const;

    /// Simple-root (Pi) coordinates of mu in the root lattice; throws if not integral.
    Exps to_pi(const QVec& mu) const;
    QVec from_pi(const Exps& c) const;
    /// Values pi_j(xi) for the simple roots.
    CVec pi_pairing(const CVec& xi) const;

    // Weyl group
    size_t order() const { return W_.size(); }
    const WeylElt& elt(size_t w) const { return W_[w]; }
    size_t identity() const { return 0; }
    size_t longest() const { return w0_; }
    size_t simple_reflection(size_t j) const { return sref_[j]; }
    size_t mul(size_t a, size_t b) const { return mult_[a][b]; }
    size_t inv(size_t a) const { return inv_[a]; }
    size_t index_of(const QMat& m) const;
    size_t from_word(const std::vector<int>& word) const;
    /// Image of positive root i under w: index and sign.
    std::pair<size_t, int> act_on_root(size_t w, size_t i) const;
    /// Reflection s_alpha as an element of W, for alpha in R^+.
    size_t reflection(size_t i) const { return refl_[i]; }
    /// Order of s_i s_j.
    int coxeter_m(size_t i, size_t j) const;

    /// w acting on a* coordinates / a coordinates.
    QVec act(size_t w, const QVec& mu) const;
    CVec act(size_t w, const CVec& mu) const;
    CVec act_dual(size_t w, const CVec& xi) const;
    QVec act_dual(size_t w, const QVec& xi) const;

    // Multiplicities
    MultFn zero_mult() const;
    /// Multiplicity function from one value per orbit.
    MultFn from_orbit_values(const std::vector<Scalar>& vals) const;
    /// m(alpha) = dim g_{alpha/2} / 2 on R.
    MultFn mult_m() const;
    /// m_0 on R_1 (zero off R_1).
    MultFn mult_m0() const;
    /// m_1 on R_1 (zero off R_1).
    MultFn mult_m1() const;
    /// k_1(alpha) = k(alpha) + 2 k(2 alpha) on R_1.
    MultFn k1_from_k(const MultFn& k) const;
    bool constant_on_orbits(const MultFn& k) const;

private:
    void build_roots(const RootDatumSpec& spec);
    void build_weyl();

    std::string type_;
    size_t rank_ = 0;
    QMat gram_;
    std::vector<SigmaRoot> sigma_;
    std::vector<QVec> rplus_, coroot_;
    std::vector<Exps> rplus_pi_;
    std::vector<bool> in_r1_;
    std::vector<size_t> r1plus_, simple_;
    std::vector<long> double_, half_;
    std::vector<size_t> orbit_;
    size_t n_orbits_ = 0;
    QMat pi_basis_inv_; // a* coordinates -> Pi coordinates

    std::vector<WeylElt> W_;
    std::vector<std::vector<size_t>> mult_;
    std::vector<size_t> inv_, sref_, refl_;
    size_t w0_ = 0;
    std::vector<std::vector<std::pair<size_t, int>>> root_perm_;
    std::map<std::vector<Rational>, size_t> index_;
};

/// Built-in presets: A1, A2, B2, BC1, G2.  dims override the default root-space dimensions
/// per orbit of Sigma^+ (in the order listed by the preset), empty for defaults.
RootDatumSpec preset_spec(const std::string& type, const std::vector<int>& dims = {});
RootDatum build_root_datum(const RootDatumSpec& spec);
RootDatum preset(const std::string& type, const std::vector<int>& dims = {});

/// rho_k = 1/2 sum_{R^+} k(alpha) alpha  (a* coordinates).
CVec rho_k(const RootDatum& rd, const MultFn& k);

} // namespace gha
