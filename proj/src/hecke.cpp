#include "gha/hecke.hpp"

namespace gha {

namespace {

Poly zero_poly(const RootDatum& rd) { return Poly(rd.rank(), Space::ADual); }

} // namespace

HElt HElt::scalar(const RootDatum& rd, const MultFn& k1, const Scalar& c)
{
    return poly(rd, k1, Poly::constant(rd.rank(), Space::ADual, c));
}

HElt HElt::poly(const RootDatum& rd, const MultFn& k1, const Poly& p)
{
    HElt h(rd, k1);
    h.add_term(rd.identity(), p);
    return h;
}

HElt HElt::group(const RootDatum& rd, const MultFn& k1, size_t w)
{
    HElt h(rd, k1);
    h.add_term(w, Poly::constant(rd.rank(), Space::ADual, Scalar(1)));
    return h;
}

HElt HElt::xi(const RootDatum& rd, const MultFn& k1, const CVec& xi)
{
    return poly(rd, k1, xi_poly(xi));
}

Poly HElt::coeff(size_t w) const
{
    auto it = t_.find(w);
    return it == t_.end() ? zero_poly(*rd_) : it->second;
}

void HElt::add_term(size_t w, const Poly& p)
{
    if (p.is_zero())
        return;
    auto it = t_.find(w);
    if (it == t_.end()) {
        t_.emplace(w, p);
        return;
    }
    it->second += p;
    if (it->second.is_zero())
        t_.erase(it);
}

int HElt::degree() const
{
    int d = -1;
    for (const auto& [w, p] : t_)
        d = std::max(d, p.degree());
    return d;
}

void HElt::check_same(const HElt& o) const
{
    bool same_rd = rd_ == o.rd_ || (rd_ && o.rd_ && rd_->gram() == o.rd_->gram() && rd_->n_pos() == o.rd_->n_pos());
    if (!same_rd || !(k1_ == o.k1_))
        throw Error(ErrorCode::MismatchedAlgebra, "elements of different Hecke algebras");
}

HElt& HElt::operator+=(const HElt& o)
{
    check_same(o);
    for (const auto& [w, p] : o.t_)
        add_term(w, p);
    return *this;
}

HElt& HElt::operator-=(const HElt& o)
{
    check_same(o);
    for (const auto& [w, p] : o.t_)
        add_term(w, -p);
    return *this;
}

HElt& HElt::operator*=(const Scalar& c)
{
    if (c.is_zero()) {
        t_.clear();
        return *this;
    }
    for (auto& [w, p] : t_)
        p *= c;
    return *this;
}

HElt HElt::operator-() const
{
    HElt h = *this;
    h *= Scalar(-1);
    return h;
}

HElt operator*(const HElt& a, const HElt& b) { return h_mul(a, b); }

HElt left_simple(const HElt& b, size_t j)
{
    const RootDatum& rd = b.rd();
    size_t s = rd.simple_reflection(j);
    size_t alpha = rd.simple(j);
    const Scalar& k = b.k1()(alpha);
    HElt out(rd, b.k1());
    for (const auto& [u, r] : b.terms()) {
        out.add_term(rd.mul(s, u), w_act(rd, s, r));
        if (!k.is_zero())
            out.add_term(u, demazure(rd, alpha, r) * (-k));
    }
    return out;
}

HElt h_mul(const HElt& a, const HElt& b)
{
    a.check_same(b);
    const RootDatum& rd = a.rd();
    HElt out(rd, a.k1());
    for (const auto& [w, p] : a.terms()) {
        HElt cur = b;
        const auto& word = rd.elt(w).word;
        for (size_t i = word.size(); i-- > 0;)
            cur = left_simple(cur, word[i]);
        for (const auto& [u, r] : cur.terms())
            out.add_term(u, p * r);
    }
    return out;
}

HElt conj_by_w(const RootDatum& rd, const MultFn& k1, size_t w, const CVec& xi)
{
    HElt out = HElt::xi(rd, k1, rd.act_dual(w, xi));
    size_t winv = rd.inv(w);
    for (size_t i : rd.r1_plus()) {
        auto [img, sg] = rd.act_on_root(winv, i);
        if (sg > 0 || k1(i).is_zero())
            continue;
        // (w^{-1} alpha)(xi) = -root(img)(xi)
        Scalar c = -k1(i) * cdot(rd.root(img), xi);
        out.add_term(rd.reflection(i), Poly::constant(rd.rank(), Space::ADual, c));
    }
    return out;
}

Poly tau(const RootDatum& rd, const Poly& p)
{
    QMat m = rd.elt(rd.longest()).mat * Rational(-1);
    return p.substitute(m);
}

namespace {

// w0 tau(p) w0 as an element of H.
HElt twisted(const RootDatum& rd, const MultFn& k1, const Poly& p)
{
    size_t w0 = rd.longest();
    return h_mul(h_mul(HElt::group(rd, k1, w0), HElt::poly(rd, k1, tau(rd, p))), HElt::group(rd, k1, w0));
}

} // namespace

HElt theta_H(const HElt& a)
{
    const RootDatum& rd = a.rd();
    HElt out(rd, a.k1());
    for (const auto& [w, p] : a.terms())
        out += h_mul(twisted(rd, a.k1(), p), HElt::group(rd, a.k1(), w));
    return out;
}

HElt transpose_t(const HElt& a)
{
    const RootDatum& rd = a.rd();
    HElt out(rd, a.k1());
    for (const auto& [w, p] : a.terms())
        out += h_mul(HElt::group(rd, a.k1(), rd.inv(w)), twisted(rd, a.k1(), p));
    return out;
}

HElt star(const HElt& a)
{
    const RootDatum& rd = a.rd();
    HElt out(rd, a.k1());
    for (const auto& [w, p] : a.terms())
        out += h_mul(HElt::group(rd, a.k1(), rd.inv(w)), twisted(rd, a.k1(), p.conj()));
    return out;
}

HElt iota(const HElt& a)
{
    const RootDatum& rd = a.rd();
    HElt out(rd, a.k1());
    for (const auto& [w, p] : a.terms())
        out += h_mul(HElt::group(rd, a.k1(), rd.inv(w)), HElt::poly(rd, a.k1(), p));
    return out;
}

bool is_central(const HElt& a)
{
    const RootDatum& rd = a.rd();
    for (size_t j = 0; j < rd.rank(); ++j) {
        HElt s = HElt::group(rd, a.k1(), rd.simple_reflection(j));
        if (h_mul(s, a) != h_mul(a, s))
            return false;
        CVec e(rd.rank(), Scalar(0));
        e[j] = Scalar(1);
        HElt x = HElt::xi(rd, a.k1(), e);
        if (h_mul(x, a) != h_mul(a, x))
            return false;
    }
    return true;
}

PolyMat star_hom(const PolyMat& psi)
{
    if (psi.empty())
        return {};
    PolyMat out(psi[0].size(), std::vector<Poly>(psi.size()));
    for (size_t i = 0; i < psi.size(); ++i)
        for (size_t j = 0; j < psi[i].size(); ++j)
            out[j][i] = minus_conj(psi[i][j]);
    return out;
}

HElt WordRewriter::normalize(const Word& word, std::mt19937& rng) const
{
    int n = static_cast<int>(rd_.rank());
    Combo cur{{word, Scalar(1)}};
    while (true) {
        std::vector<std::pair<Word, size_t>> sites;
        for (const auto& [w, c] : cur)
            for (size_t i = 0; i + 1 < w.size(); ++i)
                if (w[i] >= n && w[i + 1] < n)
                    sites.emplace_back(w, i);
        if (sites.empty())
            break;
        auto [w, i] = sites[std::uniform_int_distribution<size_t>(0, sites.size() - 1)(rng)];
        Scalar c = cur[w];
        cur.erase(w);
        auto add = [&](const Word& v, const Scalar& x) {
            Scalar& slot = cur[v];
            slot += x;
            if (slot.is_zero())
                cur.erase(v);
        };
        size_t j = static_cast<size_t>(w[i] - n);
        size_t xi = static_cast<size_t>(w[i + 1]);
        // s_j xi_i -> sum_m s_j(xi_i)_m xi_m s_j - k1(alpha_j) alpha_j(xi_i)
        QVec e(rd_.rank(), Rational(0));
        e[xi] = 1;
        QVec img = rd_.act_dual(rd_.simple_reflection(j), e);
        for (int m = 0; m < n; ++m) {
            if (sgn(img[m]) == 0)
                continue;
            Word v = w;
            v[i] = m;
            v[i + 1] = w[i];
            add(v, c * Scalar(img[m]));
        }
        size_t alpha = rd_.simple(j);
        Scalar drop = k1_(alpha) * Scalar(rd_.root(alpha)[xi]);
        if (!drop.is_zero()) {
            Word v(w.begin(), w.begin() + i);
            v.insert(v.end(), w.begin() + i + 2, w.end());
            add(v, -c * drop);
        }
    }
    HElt out(rd_, k1_);
    for (const auto& [w, c] : cur) {
        Exps e(rd_.rank(), 0);
        std::vector<int> sword;
        for (int x : w) {
            if (x < n)
                ++e[x];
            else
                sword.push_back(x - n);
        }
        out.add_term(rd_.from_word(sword), Poly::monomial(Space::ADual, e, c));
    }
    return out;
}

} // namespace gha
