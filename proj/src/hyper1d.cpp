#include "gha/hyper1d.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace gha {

namespace {

constexpr double kPi = std::numbers::pi;
// d lambda = d nu / (|W|^2 sqrt(2 pi)) against da = dt / sqrt(2 pi)
const double kSpectralMeasure = 1 / (4 * std::sqrt(2 * kPi));

// Lanczos approximation, g = 7, n = 9.
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_pole(CDouble z)
{
    double r = std::round(z.real());
    return std::abs(z.imag()) < 1e-14 && r <= 0 && std::abs(z.real() - r) < 1e-12;
}

CDouble lanczos(CDouble z)
{
    z -= 1.0;
    CDouble x = kLanczos[0];
    for (size_t i = 1; i < kLanczos.size(); ++i)
        x += kLanczos[i] / (z + static_cast<double>(i));
    CDouble t = z + 7.5;
    return std::sqrt(2 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

// log Gamma for Re z >= 0.5.
CDouble log_lanczos(CDouble z)
{
    z -= 1.0;
    CDouble x = kLanczos[0];
    for (size_t i = 1; i < kLanczos.size(); ++i)
        x += kLanczos[i] / (z + static_cast<double>(i));
    CDouble t = z + 7.5;
    return 0.5 * std::log(2 * kPi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

// log sin(pi z), stable for large |Im z|.
CDouble log_sin_pi(CDouble z)
{
    if (z.imag() < 0)
        return std::conj(log_sin_pi(std::conj(z)));
    const CDouble i(0, 1);
    return -i * kPi * z + std::log(1.0 - std::exp(2.0 * i * kPi * z)) - std::log(2.0 * i);
}

// log |Gamma(z)|
double log_abs_gamma(CDouble z)
{
    if (z.real() < 0.5)
        return std::log(kPi) - log_sin_pi(z).real() - log_lanczos(1.0 - z).real();
    return log_lanczos(z).real();
}

// log |c_alpha(x)| up to the constant factor
double log_abs_c(const Rank1Params& p, CDouble x)
{
    return -x.real() * std::log(2.0) + log_abs_gamma(x) - log_abs_gamma((p.k_b + 1.0 + x) / 2.0) -
           log_abs_gamma((p.k1() + x) / 2.0);
}

// B^+_n / n! from x / (1 - e^{-x}) = sum b_n x^n.
std::vector<double> bernoulli_plus(size_t n)
{
    std::vector<double> b(n + 1, 0.0);
    b[0] = 1;
    if (n >= 1)
        b[1] = 0.5;
    for (size_t m = 2; m <= n; m += 2) {
        // B_{2j} / (2j)! = (-1)^{j+1} 2 zeta(2j) / (2 pi)^{2j}
        double zeta;
        if (m == 2)
            zeta = kPi * kPi / 6;
        else if (m == 4)
            zeta = std::pow(kPi, 4) / 90;
        else {
            zeta = 0;
            for (int k = 2000; k >= 1; --k)
                zeta += std::pow(static_cast<double>(k), -static_cast<double>(m));
        }
        double sign = (m / 2) % 2 == 1 ? 1.0 : -1.0;
        b[m] = sign * 2 * zeta / std::pow(2 * kPi, static_cast<double>(m));
    }
    return b;
}

struct Term {
    double k;
    double a; // alpha(beta^vee)
};

std::vector<Term> terms(const Rank1Params& p)
{
    std::vector<Term> t;
    if (p.k_b != 0)
        t.push_back({p.k_b, 2});
    if (p.k_2b != 0)
        t.push_back({p.k_2b, 4});
    return t;
}

// c(t) = sum k a / (1 - e^{-a t})
double cfun(const std::vector<Term>& ts, double t)
{
    double c = 0;
    for (const auto& x : ts)
        c += x.k * x.a / (-std::expm1(-x.a * t));
    return c;
}

struct State {
    CDouble u, v; // G(t), G(-t)
};

class Solver {
public:
    Solver(const Rank1Params& p, CDouble nu) : p_(p), nu_(nu), ts_(terms(p)), r_(p.rho())
    {
        for (double x : {p.k_b, p.k_2b})
            if (!std::isfinite(x))
                throw Error(ErrorCode::InvalidArgument, "multiplicity is not finite");
        if (!std::isfinite(nu.real()) || !std::isfinite(nu.imag()))
            throw Error(ErrorCode::InvalidArgument, "spectral parameter is not finite");
        build_series();
    }

    double splice() const { return ts_splice_; }

    State series(double t) const
    {
        CDouble u = 0, v = 0;
        for (size_t j = g_.size(); j-- > 0;) {
            u = u * t + g_[j];
            v = v * (-t) + g_[j];
        }
        return {u, v};
    }

    // Values at the requested nonnegative times, sorted ascending.
    std::vector<State> run(const std::vector<double>& targets) const
    {
        std::vector<State> out;
        out.reserve(targets.size());
        double t = ts_splice_;
        State y = series(t);
        double h = 0.05;
        for (double target : targets) {
            if (target <= ts_splice_) {
                out.push_back(series(target));
                continue;
            }
            integrate(t, y, target, h);
            out.push_back(y);
        }
        return out;
    }

private:
    void build_series()
    {
        const size_t nmax = 120;
        auto b = bernoulli_plus(nmax + 1);
        std::vector<double> cn(nmax + 2, 0.0);
        for (size_t n = 0; n <= nmax + 1; ++n)
            for (const auto& x : ts_)
                cn[n] += x.k * b[n] * std::pow(x.a, static_cast<double>(n));
        g_.assign(1, 1.0);
        for (size_t j = 0; j < nmax; ++j) {
            CDouble num = (r_ + nu_) * g_[j];
            for (size_t m = 1; m <= j; m += 2)
                num -= 2.0 * cn[j + 1 - m] * g_[m];
            double den = static_cast<double>(j + 1) + ((j + 1) % 2 == 1 ? 2 * cn[0] : 0.0);
            if (std::abs(den) < 1e-14)
                throw Error(ErrorCode::Resonant, "power series at the wall is resonant");
            g_.push_back(num / den);
        }
        // splice where the tail is negligible
        ts_splice_ = std::min(0.5, 6.0 / (1.0 + std::abs(nu_)));
        for (int tries = 0; tries < 40; ++tries) {
            double tail = 0, head = 0;
            for (size_t j = 0; j < g_.size(); ++j) {
                double term = std::abs(g_[j]) * std::pow(ts_splice_, static_cast<double>(j));
                head = std::max(head, term);
                if (j + 8 >= g_.size())
                    tail = std::max(tail, term);
            }
            if (tail <= 1e-17 * std::max(1.0, head))
                return;
            ts_splice_ *= 0.8;
        }
        throw Error(ErrorCode::StepUnstable, "power series does not converge at the splice point");
    }

    State deriv(double t, const State& y) const
    {
        double cp = cfun(ts_, t), cm = cfun(ts_, -t);
        return {(nu_ + r_ - cp) * y.u + cp * y.v, cm * (y.v - y.u) - (r_ + nu_) * y.v};
    }

    State rk4(double t, const State& y, double h) const
    {
        auto add = [](const State& a, const State& b, double s) { return State{a.u + s * b.u, a.v + s * b.v}; };
        State k1 = deriv(t, y);
        State k2 = deriv(t + h / 2, add(y, k1, h / 2));
        State k3 = deriv(t + h / 2, add(y, k2, h / 2));
        State k4 = deriv(t + h, add(y, k3, h));
        return {y.u + h / 6 * (k1.u + 2.0 * k2.u + 2.0 * k3.u + k4.u),
                y.v + h / 6 * (k1.v + 2.0 * k2.v + 2.0 * k3.v + k4.v)};
    }

    void integrate(double& t, State& y, double target, double& h) const
    {
        const double tol = 1e-14;
        size_t steps = 0;
        while (t < target) {
            if (++steps > 2000000)
                throw Error(ErrorCode::StepUnstable, "adaptive integrator exceeded its step budget");
            double step = std::min(h, target - t);
            State full = rk4(t, y, step);
            State half = rk4(t + step / 2, rk4(t, y, step / 2), step / 2);
            double scale = std::max({1.0, std::abs(y.u), std::abs(y.v)});
            double err = std::max(std::abs(full.u - half.u), std::abs(full.v - half.v)) / (15 * scale);
            if (!std::isfinite(err))
                throw Error(ErrorCode::StepUnstable, "integrator produced a non-finite value");
            if (err <= tol) {
                t += step;
                y = {half.u + (half.u - full.u) / 15.0, half.v + (half.v - full.v) / 15.0};
                if (step < h)
                    continue;
            }
            double factor = err == 0 ? 4.0 : std::clamp(0.9 * std::pow(tol / err, 0.2), 0.1, 4.0);
            h = step * factor;
            if (h < 1e-12)
                throw Error(ErrorCode::StepUnstable, "step size underflow");
        }
    }

    Rank1Params p_;
    CDouble nu_;
    std::vector<Term> ts_;
    double r_;
    std::vector<CDouble> g_;
    double ts_splice_ = 0.5;
};

} // namespace

CDouble gamma_fn(CDouble z)
{
    if (is_pole(z))
        throw Error(ErrorCode::PoleAt, "Gamma has a pole at " + std::to_string(z.real()));
    if (z.real() < 0.5)
        return kPi / (std::sin(kPi * z) * lanczos(1.0 - z));
    return lanczos(z);
}

CDouble rgamma_fn(CDouble z)
{
    if (is_pole(z))
        return 0.0;
    if (z.real() < 0.5)
        return std::sin(kPi * z) * lanczos(1.0 - z) / kPi;
    return 1.0 / lanczos(z);
}

std::vector<CDouble> gfunc_values(const Rank1Params& p, CDouble nu, const std::vector<double>& ts)
{
    Solver s(p, nu);
    std::vector<double> abs_t;
    for (double t : ts) {
        if (!std::isfinite(t))
            throw Error(ErrorCode::InvalidArgument, "t is not finite");
        abs_t.push_back(std::abs(t));
    }
    std::vector<double> sorted = abs_t;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    auto states = s.run(sorted);
    std::vector<CDouble> out;
    out.reserve(ts.size());
    for (size_t i = 0; i < ts.size(); ++i) {
        size_t idx = static_cast<size_t>(std::lower_bound(sorted.begin(), sorted.end(), abs_t[i]) - sorted.begin());
        out.push_back(ts[i] >= 0 ? states[idx].u : states[idx].v);
    }
    return out;
}

CDouble gfunc(const Rank1Params& p, CDouble nu, double t) { return gfunc_values(p, nu, {t})[0]; }

double eigen_residual(const Rank1Params& p, CDouble nu, double t, double h)
{
    auto g = gfunc_values(p, nu, {t - h, t, t + h, -t});
    CDouble d = (g[2] - g[0]) / (2 * h);
    double c = cfun(terms(p), t);
    CDouble res = d + c * (g[1] - g[3]) - p.rho() * g[1] - nu * g[1];
    return std::abs(res) / std::max(1.0, std::abs(g[1]));
}

double kz_residual(const Rank1Params& p, CDouble nu, double t, double h)
{
    // Phi_1(t) = G(t), Phi_s(t) = G(-t)
    auto g = gfunc_values(p, nu, {t - h, t, t + h, -t + h, -t, -t - h});
    CDouble phi1 = g[1], phis = g[4];
    CDouble d1 = (g[2] - g[0]) / (2 * h);
    CDouble ds = (g[5] - g[3]) / (2 * h);
    double coth = 0, plus = 0, minus = 0;
    for (const auto& x : terms(p)) {
        coth += 0.5 * x.k * x.a / std::tanh(x.a * t / 2);
        plus += x.k * x.a / (-std::expm1(-x.a * t));
        minus += -x.k * x.a / (-std::expm1(x.a * t));
    }
    CDouble r1 = d1 - nu * phi1 + coth * phi1 - plus * phis;
    CDouble rs = ds + nu * phis + coth * phis - minus * phi1;
    double scale = std::max({1.0, std::abs(phi1), std::abs(phis)});
    return std::max(std::abs(r1), std::abs(rs)) / scale;
}

CDouble efunc(const Rank1Params& p, CDouble x)
{
    return rgamma_fn((p.k_b + 1.0 + x) / 2.0) * rgamma_fn((p.k1() + x) / 2.0);
}

CDouble cfunc(const Rank1Params& p, CDouble x)
{
    CDouble e = efunc(p, x);
    if (is_pole(x)) {
        if (std::abs(e) != 0)
            throw Error(ErrorCode::PoleAt, "c-function has a pole at " + std::to_string(x.real()));
        // removable: Gamma pole cancelled by a zero of e
        const double eps = 1e-6;
        return 0.5 * (cfunc(p, x + eps) + cfunc(p, x - eps));
    }
    return std::pow(2.0, -x) * gamma_fn(x) * e;
}

CDouble intertwiner_factor(const Rank1Params& p, CDouble x)
{
    CDouble e = efunc(p, -x);
    if (std::abs(e) < 1e-14)
        throw Error(ErrorCode::PoleAt, "normalization factor has a pole");
    // c(rho) / c(-x) = c(rho) 2^{-x} / (Gamma(-x) e(-x))
    return cfunc(p, p.rho()) * std::pow(2.0, -x) * rgamma_fn(-x) / e;
}

double plancherel_density(const Rank1Params& p, double nu)
{
    if (nu == 0) {
        // even and continuous; the c-function has a pole at 0 unless k = 0
        const double eps = 1e-7;
        return plancherel_density(p, eps);
    }
    // k = 0: the limit k -> 0 of c_alpha(rho) is 1 / Gamma(1/2), c_alpha(i nu) -> 1 / (2 Gamma(1/2))
    if (p.k_b == 0 && p.k_2b == 0)
        return 4.0;
    // at rho = 0 the pole of Gamma(x) cancels against Gamma((k1 + x)/2)
    double at_rho = std::abs(p.rho()) < 1e-15 ? std::log(0.5) - log_abs_gamma((p.k_b + 1.0) / 2.0)
                                               : log_abs_c(p, p.rho());
    return std::exp(2 * (at_rho - log_abs_c(p, CDouble(0, nu))));
}

GridFunction symmetric_grid(double tmax, size_t n)
{
    if (n == 0 || tmax <= 0)
        throw Error(ErrorCode::GridMismatch, "grid needs positive extent and step");
    GridFunction g;
    g.h = tmax / static_cast<double>(n);
    g.t0 = -tmax;
    g.v.assign(2 * n + 1, 0.0);
    return g;
}

std::vector<double> uniform_nu(double numax, double dnu)
{
    if (numax <= 0 || dnu <= 0)
        throw Error(ErrorCode::GridMismatch, "spectral grid needs positive extent and step");
    size_t n = static_cast<size_t>(std::llround(numax / dnu));
    std::vector<double> out;
    for (size_t i = 0; i <= 2 * n; ++i)
        out.push_back(-numax + static_cast<double>(i) * dnu);
    return out;
}

namespace {

double weight(const Rank1Params& p, double t)
{
    double w = 1;
    if (p.k_b != 0)
        w *= std::pow(std::abs(2 * std::sinh(t)), 2 * p.k_b);
    if (p.k_2b != 0)
        w *= std::pow(std::abs(2 * std::sinh(2 * t)), 2 * p.k_2b);
    return w;
}

// Index of t = 0 on a symmetric grid with an even number of steps per side.
size_t check_symmetric(const GridFunction& f)
{
    if (f.size() < 5 || f.size() % 2 == 0 || !(f.h > 0))
        throw Error(ErrorCode::GridMismatch, "need an odd number of at least 5 samples");
    size_t mid = f.size() / 2;
    if (std::abs(f.t(mid)) > 1e-9 * f.h)
        throw Error(ErrorCode::GridMismatch, "grid must be symmetric about 0");
    if (mid % 2 != 0)
        throw Error(ErrorCode::GridMismatch, "each half of the grid needs an even number of steps");
    return mid;
}

// Romberg on [0, T] from samples y[0..n] at step h, using the trapezoid at h, 2h and 4h
// when n allows; returns (value, error estimate).
std::pair<CDouble, double> richardson(const std::vector<CDouble>& y, double h)
{
    size_t n = y.size() - 1;
    auto trap = [&](size_t stride) {
        CDouble sum = 0.5 * (y[0] + y[n]);
        for (size_t i = stride; i < n; i += stride)
            sum += y[i];
        return sum * (h * static_cast<double>(stride));
    };
    CDouble t1 = trap(1), t2 = trap(2);
    CDouble s1 = (4.0 * t1 - t2) / 3.0;
    if (n % 4 != 0)
        return {s1, std::abs(s1 - t1)};
    CDouble s2 = (4.0 * t2 - trap(4)) / 3.0;
    CDouble b = (16.0 * s1 - s2) / 15.0;
    return {b, std::abs(b - s1)};
}

} // namespace

Spectrum oc_forward(const Rank1Params& p, const GridFunction& f, const std::vector<double>& nu)
{
    size_t mid = check_symmetric(f);
    double fmax = 0;
    for (const auto& x : f.v) {
        if (!std::isfinite(x.real()) || !std::isfinite(x.imag()))
            throw Error(ErrorCode::InvalidArgument, "non-finite sample");
        fmax = std::max(fmax, std::abs(x));
    }
    if (fmax > 0 && std::max(std::abs(f.v.front()), std::abs(f.v.back())) > 1e-10 * fmax)
        throw Error(ErrorCode::SupportNotCompact, "function does not vanish at the grid ends");
    std::vector<double> tpos;
    for (size_t i = mid; i < f.size(); ++i)
        tpos.push_back(f.t(i) - f.t(mid));
    std::vector<double> wts;
    for (double t : tpos)
        wts.push_back(weight(p, t));
    const double norm = 1 / std::sqrt(2 * kPi);
    Spectrum s;
    s.nu = nu;
    for (double x : nu) {
        Solver sol(p, CDouble(0, -x));
        auto st = sol.run(tpos);
        // F(nu, 1) = int f(t) G(t); F(nu, s) = int f(t) G(-t)
        std::vector<CDouble> a1p, a1m, asp, asm_;
        for (size_t i = 0; i < tpos.size(); ++i) {
            CDouble fp = f.v[mid + i], fm = f.v[mid - i];
            a1p.push_back(fp * st[i].u * wts[i]);
            a1m.push_back(fm * st[i].v * wts[i]);
            asp.push_back(fp * st[i].v * wts[i]);
            asm_.push_back(fm * st[i].u * wts[i]);
        }
        auto [i1p, e1p] = richardson(a1p, f.h);
        auto [i1m, e1m] = richardson(a1m, f.h);
        auto [isp, esp] = richardson(asp, f.h);
        auto [ism, esm] = richardson(asm_, f.h);
        s.f1.push_back((i1p + i1m) * norm);
        s.fs.push_back((isp + ism) * norm);
        s.quad_error = std::max(s.quad_error, (e1p + e1m + esp + esm) * norm);
    }
    return s;
}

GridFunction oc_inverse(const Rank1Params& p, const Spectrum& s, const GridFunction& like)
{
    size_t n = s.nu.size();
    if (n < 3 || s.f1.size() != n || s.fs.size() != n)
        throw Error(ErrorCode::GridMismatch, "spectral samples do not match the nu grid");
    double dnu = s.nu[1] - s.nu[0];
    for (size_t i = 1; i < n; ++i)
        if (std::abs(s.nu[i] - s.nu[i - 1] - dnu) > 1e-9 * std::abs(dnu))
            throw Error(ErrorCode::GridMismatch, "nu grid is not uniform");
    double peak = 0, edge = 0;
    for (size_t i = 0; i < n; ++i) {
        double d = plancherel_density(p, s.nu[i]);
        double m = std::max(std::abs(s.f1[i]), std::abs(s.fs[i])) * d;
        peak = std::max(peak, m);
        if (i == 0 || i + 1 == n)
            edge = std::max(edge, m);
    }
    if (peak > 0 && edge > 1e-6 * peak)
        throw Error(ErrorCode::GridMismatch, "spectral samples do not decay at the ends of the nu grid");
    size_t mid = check_symmetric(like);
    std::vector<double> tpos;
    for (size_t i = mid; i < like.size(); ++i)
        tpos.push_back(like.t(i) - like.t(mid));
    GridFunction out = like;
    std::fill(out.v.begin(), out.v.end(), 0.0);
    const double norm = kSpectralMeasure;
    for (size_t k = 0; k < n; ++k) {
        double wk = (k == 0 || k + 1 == n ? 0.5 : 1.0) * dnu * plancherel_density(p, s.nu[k]) * norm;
        Solver sol(p, CDouble(0, s.nu[k]));
        auto st = sol.run(tpos);
        for (size_t i = 0; i < tpos.size(); ++i) {
            // t >= 0: G(t) F(1) + G(-t) F(s); t <= 0 mirrored
            CDouble plus = 0.5 * (st[i].u * s.f1[k] + st[i].v * s.fs[k]);
            CDouble minus = 0.5 * (st[i].v * s.f1[k] + st[i].u * s.fs[k]);
            out.v[mid + i] += wk * plus;
            if (i > 0)
                out.v[mid - i] += wk * minus;
        }
    }
    return out;
}

double norm2_a(const Rank1Params& p, const GridFunction& f)
{
    size_t mid = check_symmetric(f);
    std::vector<CDouble> pos, neg;
    for (size_t i = 0; mid + i < f.size(); ++i) {
        double w = weight(p, f.t(mid + i) - f.t(mid));
        pos.push_back(std::norm(f.v[mid + i]) * w);
        neg.push_back(std::norm(f.v[mid - i]) * w);
    }
    return (richardson(pos, f.h).first + richardson(neg, f.h).first).real() / std::sqrt(2 * kPi);
}

double norm2_spectral(const Rank1Params& p, const Spectrum& s)
{
    size_t n = s.nu.size();
    if (n < 2)
        throw Error(ErrorCode::GridMismatch, "spectral grid too small");
    double dnu = s.nu[1] - s.nu[0];
    double sum = 0;
    for (size_t k = 0; k < n; ++k) {
        double wk = (k == 0 || k + 1 == n ? 0.5 : 1.0) * dnu;
        sum += wk * 0.5 * (std::norm(s.f1[k]) + std::norm(s.fs[k])) * plancherel_density(p, s.nu[k]);
    }
    return sum * kSpectralMeasure;
}

} // namespace gha
