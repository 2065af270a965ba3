#pragma once

#include "gha/hecke.hpp"
#include "gha/spectral.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gha {

/// Finite-dimensional H-module given by the matrices of the simple reflections
/// and of the coordinate basis e_j of a.  Columns are images of basis vectors.
struct HModule {
    const RootDatum* rd = nullptr;
    MultFn k1;
    size_t dim = 0;
    std::vector<std::string> labels;
    std::vector<CMat> s;  // one per simple reflection
    std::vector<CMat> xi; // one per basis vector of a
    std::string kind;     // "principal", "induced", "quotient", ... (informational)
    CVec param;           // lambda for principal series
};

CMat group_matrix(const HModule& x, size_t w);
/// Matrix of p(xi) for p a polynomial on a*.
CMat poly_matrix(const HModule& x, const Poly& p);
CMat act(const HModule& x, const HElt& h);
/// All generator matrices: simple reflections then xi_j.
std::vector<CMat> generators(const HModule& x);

struct Diagnostics {
    bool ok = true;
    std::vector<std::string> failures;
};

/// Coxeter relations, commuting xi, and s_j xi = s_j(xi) s_j - k1(alpha_j) alpha_j(xi).
Diagnostics check_module(const HModule& x);

/// Covector rho with rho(alpha_j^vee) = k1(alpha_j) on the simple roots.
CVec rho_from_k1(const RootDatum& rd, const MultFn& k1);

/// One-dimensional module with W acting by the trivial (+1) or sign (-1) character.
HModule one_dim(const RootDatum& rd, const MultFn& k1, int sign);

/// Principal series B_H(lambda) on the basis delta_w, lambda in a* coordinates.
HModule principal_series(const RootDatum& rd, const MultFn& k1, const CVec& lambda);

/// Ind from S(a) to H of the module U given by commuting matrices of the e_j.
HModule induced_module(const RootDatum& rd, const MultFn& k1, const std::vector<CMat>& u);

/// Fundamental W-invariants on a* (power sums of a generic covector's orbit), by degree.
std::vector<Poly> fundamental_invariants(const RootDatum& rd);

/// Quotient of P_H(C_chi) = S(a) (x) C_chi by the ideal of Delta - Delta(mu), Delta invariant.
class StandardQuotient {
public:
    StandardQuotient(const RootDatum& rd, const MultFn& k1, int sign, const CVec& mu,
                     std::vector<Poly> invariants = {});

    const HModule& module() const { return mod_; }
    /// Coordinates of p (x) v in the quotient basis.
    CVec vector_of(const Poly& p) const;
    const std::vector<Exps>& basis() const { return basis_; }
    int degree_bound() const { return bound_; }

private:
    CVec reduce_full(const Poly& p) const;

    const RootDatum* rd_;
    MultFn k1_;
    int sign_;
    int bound_ = 0;
    std::vector<Exps> cols_;     // monomials of degree <= bound, highest degree first
    Echelon<Scalar> ideal_;      // echelon form of the truncated ideal
    std::vector<Exps> basis_;    // standard monomials
    std::vector<size_t> basis_col_;
    HModule mod_;
};

/// (1/|W|) sum_w F1(w) conj(F2(w)) for F1 in B_H(lambda), F2 in B_H(-conj lambda).
Scalar sesqui_form(const HModule& x1, const CVec& f1, const HModule& x2, const CVec& f2);

/// Normalized intertwiner B_H(lambda) -> B_H(w lambda) along the lexicographic reduced word of w.
CMat intertwiner(const RootDatum& rd, const MultFn& k1, size_t w, const CVec& lambda);
/// Same along an arbitrary reduced word.
CMat intertwiner_word(const RootDatum& rd, const MultFn& k1, const std::vector<int>& word, const CVec& lambda);
/// Unnormalized A(s_j, lambda).
CMat intertwiner_simple(const RootDatum& rd, const MultFn& k1, size_t j, const CVec& lambda, bool normalized);

/// ev_1(F): mean of F over W (value at the identity of the Poisson image).
Scalar ev1(const CVec& f);
/// Radical of the pairing <F, h> = ev_1(h F); columns span the kernel.
CMat poisson_kernel(const HModule& x);
/// prod_{alpha in R_1^+} (lambda(alpha^vee) + k1(alpha)).
Scalar poisson_product(const RootDatum& rd, const MultFn& k1, const CVec& lambda);

/// Criterion lambda(alpha^vee) != k1(alpha) for all alpha in R_1.
bool is_irreducible_ps(const RootDatum& rd, const MultFn& k1, const CVec& lambda);
/// Dimension of the matrix algebra generated by the module's generators.
size_t generated_algebra_dim(const HModule& x);

/// Basis of Hom_H(X, Y) as (dim Y) x (dim X) matrices.
std::vector<CMat> hom_space(const HModule& x, const HModule& y);
bool is_morphism(const HModule& x, const HModule& y, const CMat& t);

struct Weight {
    CVec nu;         // joint eigenvalue: xi acts by nu(xi)
    CMat gen_space;  // generalized weight space (columns)
    CMat eigen_space; // joint eigenvectors (columns)
};

/// Joint generalized eigenspaces of the xi-action.
std::vector<Weight> weights(const HModule& x);

struct CentralCharacter {
    enum Kind { Character, GeneralizedOnly, None } kind = None;
    CVec point;                 // a representative of the W-orbit
    std::vector<Scalar> values; // Delta_i(point)
};

CentralCharacter central_character(const HModule& x, const std::vector<Poly>& invariants);
bool same_orbit(const RootDatum& rd, const CVec& a, const CVec& b);

/// Smallest submodule containing the given columns (returned in reduced echelon column form).
CMat submodule_closure(const HModule& x, const CMat& vectors);
HModule sub_module(const HModule& x, const CMat& basis);
HModule quotient_module(const HModule& x, const CMat& sub);
/// Canonical column basis of the span of the columns.
CMat canonical_span(const CMat& m, size_t dim);
CMat intersect(const CMat& a, const CMat& b, size_t dim);

struct SubmoduleLattice {
    std::vector<CMat> subs; // sorted by dimension, includes 0 and X
    bool exhaustive = false; // true when every generalized weight space is one-dimensional
};

SubmoduleLattice submodule_lattice(const HModule& x);

/// +1 / -1 if the 1-dimensional module is W-trivial / sign, 0 otherwise.
int one_dim_type(const HModule& x);

/// Solutions T of T a_g = b_g T for all g.
std::vector<CMat> intertwining_maps(const std::vector<CMat>& a, const std::vector<CMat>& b);

/// Finite-dimensional W-module given by the matrices of the simple reflections.
struct WRep {
    std::vector<CMat> s;
    size_t dim() const { return s.empty() ? 0 : s[0].rows(); }
};

WRep trivial_rep(const RootDatum& rd);
WRep sign_rep(const RootDatum& rd);
/// W acting on a by the contragredient matrices.
WRep reflection_rep(const RootDatum& rd);
CMat rep_matrix(const RootDatum& rd, const WRep& y, size_t w);
/// Conjugate dual: w acts on the basis y_i^star by conj(Y(w^{-1}))^T.
WRep star_rep(const RootDatum& rd, const WRep& y);
/// Restriction of an H-module to W.
WRep restrict_to_w(const HModule& x);

/// Element sum_j f_j (x) u_j of P_H(U) = S(a) (x) U.
using PVec = std::vector<Poly>;
/// Map Y -> P_H(U) given by the images of the basis vectors y_i.
using PMap = std::vector<PVec>;

PVec ph_act(const RootDatum& rd, const MultFn& k1, const WRep& u, size_t w, const PVec& x);
/// W-equivariant average (1/|W|) sum_w w psi w^{-1}.
PMap equivariant_average(const RootDatum& rd, const MultFn& k1, const WRep& y, const WRep& u, const PMap& psi);
bool is_w_equivariant(const RootDatum& rd, const MultFn& k1, const WRep& y, const WRep& u, const PMap& psi);
/// psi^star : U^star -> P_H(Y^star), psi^star[u_j^star] = sum_i conj(f_ij(-conj .)) (x) y_i^star.
PMap star_map(const PMap& psi, size_t dim_u);

/// Both sides of sum_i (phi1 psi[y_i], phi2[y_i^star]) = sum_j (phi1[u_j], phi2 psi^star[u_j^star])
/// for phi1 : U -> X1 and phi2 : Y^star -> X2 (columns are images of basis vectors).
std::pair<Scalar, Scalar> star_pairing_sides(const HModule& x1, const HModule& x2, const PMap& psi,
                                             const CMat& phi1, const CMat& phi2);

} // namespace gha
