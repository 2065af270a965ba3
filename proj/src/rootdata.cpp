#include "gha/rootdata.hpp"
#include "gha/errors.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

namespace gha {

namespace {

QVec scaled(const QVec& v, const Rational& s)
{
    QVec out(v);
    for (auto& x : out)
        x *= s;
    return out;
}

std::vector<Rational> flatten(const QMat& m) { return m.data(); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

} // namespace

RootDatum::RootDatum(const RootDatumSpec& spec)
{
    build_roots(spec);
    build_weyl();
}

Rational RootDatum::form(const QVec& a, const QVec& b) const
{
    Rational s = 0;
    for (size_t i = 0; i < rank_; ++i)
        for (size_t j = 0; j < rank_; ++j)
            if (sgn(gram_(i, j)) != 0)
                s += a[i] * gram_(i, j) * b[j];
    return s;
}

QVec RootDatum::h_of(const QVec& mu) const { return gram_ * mu; }

void RootDatum::build_roots(const RootDatumSpec& spec)
{
    type_ = spec.type;
    rank_ = spec.rank;
    gram_ = spec.gram;
    if (rank_ == 0)
        throw Error(ErrorCode::BadConfig, "rank must be positive");
    if (gram_.rows() != rank_ || gram_.cols() != rank_)
        throw Error(ErrorCode::BadConfig, "gram matrix must be rank x rank");
    for (size_t i = 0; i < rank_; ++i)
        for (size_t j = 0; j < rank_; ++j)
            if (gram_(i, j) != gram_(j, i))
                throw Error(ErrorCode::BadConfig, "gram matrix is not symmetric");
    for (size_t k = 1; k <= rank_; ++k) {
        QMat minor(k, k);
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j)
                minor(i, j) = gram_(i, j);
        if (sgn(determinant(minor)) <= 0)
            throw Error(ErrorCode::BadConfig, "gram matrix is not positive definite");
    }

    // Normalize Sigma^+: add 2 alpha when dim g_{2 alpha} > 0 and check consistency.
    sigma_ = spec.sigma_plus;
    if (sigma_.empty())
        throw Error(ErrorCode::BadConfig, "empty list of positive roots");
    for (const auto& s : sigma_) {
        if (s.coords.size() != rank_)
            throw Error(ErrorCode::BadConfig, "root coordinates have wrong length");
        if (is_zero_vec(s.coords))
            throw Error(ErrorCode::BadConfig, "zero root");
        if (s.dim1 < 0 || s.dim2 < 0)
            throw Error(ErrorCode::BadConfig, "negative root-space dimension");
    }
    auto locate = [&](const QVec& v) -> long {
        for (size_t i = 0; i < sigma_.size(); ++i)
            if (sigma_[i].coords == v)
                return static_cast<long>(i);
        return -1;
    };
    for (size_t i = 0; i < sigma_.size(); ++i)
        for (size_t j = 0; j < i; ++j)
            if (sigma_[i].coords == sigma_[j].coords)
                throw Error(ErrorCode::BadConfig, "duplicate root in sigma_plus");
    for (size_t i = 0; i < sigma_.size(); ++i) {
        QVec dbl = scaled(sigma_[i].coords, 2);
        long j = locate(dbl);
        if (sigma_[i].dim2 > 0) {
            if (j < 0)
                sigma_.push_back({dbl, sigma_[i].dim2, 0});
            else if (sigma_[j].dim1 != sigma_[i].dim2)
                throw Error(ErrorCode::BadConfig, "dim g_{2 alpha} disagrees with the entry for 2 alpha");
        } else if (j >= 0) {
            sigma_[i].dim2 = sigma_[j].dim1;
        }
    }

    size_t n = sigma_.size();
    rplus_.resize(n);
    coroot_.resize(n);
    in_r1_.assign(n, true);
    double_.assign(n, -1);
    half_.assign(n, -1);
    for (size_t i = 0; i < n; ++i) {
        rplus_[i] = scaled(sigma_[i].coords, 2);
        Rational nn = form(rplus_[i], rplus_[i]);
        coroot_[i] = scaled(h_of(rplus_[i]), Rational(2) / nn);
    }
    for (size_t i = 0; i < n; ++i) {
        long d = locate(scaled(sigma_[i].coords, 2));
        if (d >= 0) {
            double_[i] = d;
            half_[d] = static_cast<long>(i);
            in_r1_[d] = false;
        }
    }
    for (size_t i = 0; i < n; ++i)
        if (in_r1_[i])
            r1plus_.push_back(i);

    // crystallographic check on R_1
    for (size_t a : r1plus_)
        for (size_t b : r1plus_)
            if (!is_integer(dot(rplus_[b], coroot_[a])))
                throw Error(ErrorCode::NonCrystallographic, "<beta, alpha^vee> is not an integer");

    // closure of R under its reflections
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) {
            QVec img = rplus_[b];
            Rational c = dot(rplus_[b], coroot_[a]);
            for (size_t k = 0; k < rank_; ++k)
                img[k] -= c * rplus_[a][k];
            QVec neg = scaled(img, -1);
            bool found = false;
            for (size_t k = 0; k < n && !found; ++k)
                found = rplus_[k] == img || rplus_[k] == neg;
            if (!found)
                throw Error(ErrorCode::NotClosedUnderReflection, "s_alpha does not permute R");
        }

    // simple system of R_1^+: indecomposable positive roots
    for (size_t a : r1plus_) {
        bool decomposable = false;
        for (size_t b : r1plus_) {
            QVec diff = rplus_[a];
            for (size_t k = 0; k < rank_; ++k)
                diff[k] -= rplus_[b][k];
            for (size_t c : r1plus_)
                if (rplus_[c] == diff)
                    decomposable = true;
        }
        if (!decomposable)
            simple_.push_back(a);
    }
    if (simple_.size() != rank_)
        throw Error(ErrorCode::BadConfig, "sigma_plus is not a positive system spanning a*");
    QMat p(rank_, rank_);
    for (size_t j = 0; j < rank_; ++j)
        p.set_col(j, rplus_[simple_[j]]);
    try {
        pi_basis_inv_ = inverse(p);
    } catch (const Error&) {
        throw Error(ErrorCode::BadConfig, "simple roots are linearly dependent");
    }
    rplus_pi_.resize(n);
    for (size_t i = 0; i < n; ++i) {
        QVec c = pi_basis_inv_ * rplus_[i];
        Exps e(rank_);
        for (size_t k = 0; k < rank_; ++k) {
            if (!is_integer(c[k]) || sgn(c[k]) < 0)
                throw Error(ErrorCode::BadConfig, "sigma_plus is not a positive system");
            e[k] = static_cast<int>(c[k].get_num().get_si());
        }
        rplus_pi_[i] = e;
    }
}

long RootDatum::find_root(const QVec& v, int* sign) const
{
    for (size_t i = 0; i < rplus_.size(); ++i) {
        if (rplus_[i] == v) {
            if (sign)
                *sign = 1;
            return static_cast<long>(i);
        }
        bool neg = true;
        for (size_t k = 0; k < rank_ && neg; ++k)
            neg = rplus_[i][k] == -v[k];
        if (neg) {
            if (sign)
                *sign = -1;
            return static_cast<long>(i);
        }
    }
    return -1;
}

Exps RootDatum::to_pi(const QVec& mu) const
{
    QVec c = pi_basis_inv_ * mu;
    Exps e(rank_);
    for (size_t k = 0; k < rank_; ++k) {
        if (!is_integer(c[k]))
            throw Error(ErrorCode::InvalidArgument, "vector is not in the root lattice of R_1");
        e[k] = static_cast<int>(c[k].get_num().get_si());
    }
    return e;
}

QVec RootDatum::from_pi(const Exps& c) const
{
    QVec v(rank_, Rational(0));
    for (size_t j = 0; j < rank_; ++j)
        if (c[j])
            for (size_t k = 0; k < rank_; ++k)
                v[k] += Rational(c[j]) * rplus_[simple_[j]][k];
    return v;
}

CVec RootDatum::pi_pairing(const CVec& xi) const
{
    CVec out(rank_);
    for (size_t j = 0; j < rank_; ++j)
        out[j] = cdot(rplus_[simple_[j]], xi);
    return out;
}

void RootDatum::build_weyl()
{
    std::vector<QMat> gens;
    for (size_t j = 0; j < rank_; ++j) {
        const QVec& a = rplus_[simple_[j]];
        const QVec& c = coroot_[simple_[j]];
        QMat m = QMat::identity(rank_);
        for (size_t r = 0; r < rank_; ++r)
            for (size_t s = 0; s < rank_; ++s)
                m(r, s) -= a[r] * c[s];
        gens.push_back(m);
    }
    // BFS in generator order yields the lexicographically least reduced words.
    WeylElt id;
    id.mat = QMat::identity(rank_);
    W_.push_back(id);
    index_[flatten(id.mat)] = 0;
    std::deque<size_t> queue{0};
    while (!queue.empty()) {
        size_t cur = queue.front();
        queue.pop_front();
        for (size_t j = 0; j < rank_; ++j) {
            QMat m = W_[cur].mat * gens[j];
            auto key = flatten(m);
            if (index_.count(key))
                continue;
            WeylElt e;
            e.word = W_[cur].word;
            e.word.push_back(static_cast<int>(j));
            e.mat = m;
            e.length = static_cast<int>(e.word.size());
            e.sign = e.length % 2 ? -1 : 1;
            index_[key] = W_.size();
            W_.push_back(e);
            queue.push_back(W_.size() - 1);
            if (W_.size() > 100000)
                throw Error(ErrorCode::BadConfig, "Weyl group is too large or infinite");
        }
    }
    size_t n = W_.size();
    mult_.assign(n, std::vector<size_t>(n));
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            mult_[a][b] = index_.at(flatten(W_[a].mat * W_[b].mat));
    inv_.assign(n, 0);
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            if (mult_[a][b] == 0)
                inv_[a] = b;
    w0_ = 0;
    for (size_t a = 0; a < n; ++a)
        if (W_[a].length > W_[w0_].length)
            w0_ = a;
    QMat p(rank_, rank_);
    for (size_t j = 0; j < rank_; ++j)
        p.set_col(j, rplus_[simple_[j]]);
    for (size_t a = 0; a < n; ++a) {
        W_[a].dual_mat = W_[inv_[a]].mat.transpose();
        QMat pm = pi_basis_inv_ * W_[a].mat * p;
        W_[a].pi_mat.assign(rank_, std::vector<int>(rank_));
        for (size_t r = 0; r < rank_; ++r)
            for (size_t s = 0; s < rank_; ++s)
                W_[a].pi_mat[r][s] = static_cast<int>(pm(r, s).get_num().get_si());
    }
    sref_.resize(rank_);
    for (size_t j = 0; j < rank_; ++j)
        sref_[j] = index_.at(flatten(gens[j]));
    refl_.resize(rplus_.size());
    for (size_t i = 0; i < rplus_.size(); ++i) {
        QMat m = QMat::identity(rank_);
        for (size_t r = 0; r < rank_; ++r)
            for (size_t s = 0; s < rank_; ++s)
                m(r, s) -= rplus_[i][r] * coroot_[i][s];
        refl_[i] = index_.at(flatten(m));
    }
    root_perm_.assign(n, {});
    for (size_t a = 0; a < n; ++a)
        for (size_t i = 0; i < rplus_.size(); ++i) {
            int sg = 0;
            long j = find_root(W_[a].mat * rplus_[i], &sg);
            if (j < 0)
                throw Error(ErrorCode::NotClosedUnderReflection, "W does not permute R");
            root_perm_[a].push_back({static_cast<size_t>(j), sg});
        }
    // orbits of W on R (positive representatives)
    std::vector<size_t> parent(rplus_.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<size_t(size_t)> find = [&](size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (size_t j = 0; j < rank_; ++j)
        for (size_t i = 0; i < rplus_.size(); ++i)
            parent[find(i)] = find(root_perm_[sref_[j]][i].first);
    std::map<size_t, size_t> ids;
    orbit_.resize(rplus_.size());
    for (size_t i = 0; i < rplus_.size(); ++i) {
        size_t r = find(i);
        if (!ids.count(r))
            ids[r] = ids.size();
        orbit_[i] = ids[r];
    }
    n_orbits_ = ids.size();
}

size_t RootDatum::index_of(const QMat& m) const
{
    auto it = index_.find(flatten(m));
    if (it == index_.end())
        throw Error(ErrorCode::InvalidArgument, "matrix is not in W");
    return it->second;
}

size_t RootDatum::from_word(const std::vector<int>& word) const
{
    size_t w = 0;
    for (int j : word) {
        if (j < 0 || static_cast<size_t>(j) >= rank_)
            throw Error(ErrorCode::InvalidArgument, "bad letter in reduced word");
        w = mult_[w][sref_[j]];
    }
    return w;
}

std::pair<size_t, int> RootDatum::act_on_root(size_t w, size_t i) const { return root_perm_[w][i]; }

int RootDatum::coxeter_m(size_t i, size_t j) const
{
    size_t g = mult_[sref_[i]][sref_[j]];
    size_t x = g;
    int m = 1;
    while (x != 0) {
        x = mult_[x][g];
        ++m;
    }
    return m;
}

QVec RootDatum::act(size_t w, const QVec& mu) const { return W_[w].mat * mu; }

CVec RootDatum::act(size_t w, const CVec& mu) const { return to_complex(W_[w].mat) * mu; }

CVec RootDatum::act_dual(size_t w, const CVec& xi) const { return to_complex(W_[w].dual_mat) * xi; }

QVec RootDatum::act_dual(size_t w, const QVec& xi) const { return W_[w].dual_mat * xi; }

MultFn RootDatum::zero_mult() const { return MultFn{std::vector<Scalar>(rplus_.size())}; }

MultFn RootDatum::from_orbit_values(const std::vector<Scalar>& vals) const
{
    if (vals.size() != n_orbits_)
        throw Error(ErrorCode::InvalidArgument, "one multiplicity value per orbit expected");
    MultFn k = zero_mult();
    for (size_t i = 0; i < rplus_.size(); ++i)
        k.v[i] = vals[orbit_[i]];
    return k;
}

MultFn RootDatum::mult_m() const
{
    MultFn k = zero_mult();
    for (size_t i = 0; i < rplus_.size(); ++i)
        k.v[i] = Scalar(frac(sigma_[i].dim1, 2));
    return k;
}

MultFn RootDatum::mult_m0() const
{
    MultFn k = zero_mult();
    for (size_t i : r1plus_)
        k.v[i] = Scalar(frac(sigma_[i].dim1 + sigma_[i].dim2, 2));
    return k;
}

MultFn RootDatum::mult_m1() const
{
    MultFn k = zero_mult();
    for (size_t i : r1plus_)
        k.v[i] = Scalar(frac(sigma_[i].dim1, 2) + Rational(sigma_[i].dim2));
    return k;
}

MultFn RootDatum::k1_from_k(const MultFn& k) const
{
    MultFn k1 = zero_mult();
    for (size_t i : r1plus_) {
        k1.v[i] = k.v[i];
        if (double_[i] >= 0)
            k1.v[i] += Scalar(2) * k.v[double_[i]];
    }
    return k1;
}

bool RootDatum::constant_on_orbits(const MultFn& k) const
{
    for (size_t i = 0; i < rplus_.size(); ++i)
        for (size_t j = 0; j < rplus_.size(); ++j)
            if (orbit_[i] == orbit_[j] && k.v[i] != k.v[j])
                return false;
    return true;
}

RootDatumSpec preset_spec(const std::string& type, const std::vector<int>& dims)
{
    auto dim = [&](size_t i, int def) { return i < dims.size() ? dims[i] : def; };
    auto q = [](std::initializer_list<int> xs) {
        QVec v;
        for (int x : xs)
            v.emplace_back(x);
        return v;
    };
    auto gram = [](size_t n, std::initializer_list<int> xs) {
        QMat g(n, n);
        size_t k = 0;
        for (int x : xs) {
            g(k / n, k % n) = x;
            ++k;
        }
        return g;
    };
    RootDatumSpec s;
    s.type = type;
    if (type == "A1") {
        s.rank = 1;
        s.gram = gram(1, {1});
        s.sigma_plus = {{q({1}), dim(0, 1), 0}};
    } else if (type == "BC1") {
        int p = dim(0, 2), r = dim(1, 1);
        s.rank = 1;
        s.gram = gram(1, {1});
        s.sigma_plus = {{q({1}), p, r}};
        if (r == 0)
            throw Error(ErrorCode::BadConfig, "BC1 needs dim g_{2 alpha} > 0");
    } else if (type == "A2") {
        int d = dim(0, 1);
        s.rank = 2;
        s.gram = gram(2, {2, -1, -1, 2});
        s.sigma_plus = {{q({1, 0}), d, 0}, {q({0, 1}), d, 0}, {q({1, 1}), d, 0}};
    } else if (type == "B2") {
        int dl = dim(0, 1), ds = dim(1, 1);
        s.rank = 2;
        s.gram = gram(2, {2, -1, -1, 1});
        s.sigma_plus = {{q({1, 0}), dl, 0}, {q({0, 1}), ds, 0}, {q({1, 1}), ds, 0}, {q({1, 2}), dl, 0}};
    } else if (type == "G2") {
        int ds = dim(0, 1), dl = dim(1, 1);
        s.rank = 2;
        s.gram = gram(2, {2, -3, -3, 6});
        s.sigma_plus = {{q({1, 0}), ds, 0}, {q({0, 1}), dl, 0}, {q({1, 1}), ds, 0},
                        {q({2, 1}), ds, 0}, {q({3, 1}), dl, 0}, {q({3, 2}), dl, 0}};
    } else {
        throw Error(ErrorCode::BadConfig, "unknown preset type '" + type + "'");
    }
    return s;
}

RootDatum build_root_datum(const RootDatumSpec& spec) { return RootDatum(spec); }

RootDatum preset(const std::string& type, const std::vector<int>& dims)
{
    return RootDatum(preset_spec(type, dims));
}

CVec rho_k(const RootDatum& rd, const MultFn& k)
{
    CVec rho(rd.rank());
    for (size_t i = 0; i < rd.n_pos(); ++i)
        for (size_t j = 0; j < rd.rank(); ++j)
            rho[j] += k(i) * Scalar(rd.root(i)[j]) * Scalar(frac(1, 2));
    return rho;
}

} // namespace gha
