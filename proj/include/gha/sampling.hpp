#pragma once

#include "gha/algebra.hpp"
#include "gha/rootdata.hpp"

#include <random>

namespace gha {

/// Seeded generator of small exact values for the property corpora.
class Sampler {
public:
    explicit Sampler(unsigned seed) : rng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    Rational rational(int num = 5, int den = 4)
    {
        Rational q(integer(-num, num), integer(1, den));
        q.canonicalize();
        return q;
    }

    Scalar scalar(bool complex = true)
    {
        return complex ? Scalar(rational(), integer(0, 2) ? rational() : Rational(0)) : Scalar(rational());
    }

    Poly poly(size_t n, Space space, int max_deg, int terms)
    {
        Poly p(n, space);
        for (int t = 0; t < terms; ++t) {
            Exps e(n, 0);
            int d = integer(0, max_deg);
            for (int k = 0; k < d; ++k)
                e[integer(0, static_cast<int>(n) - 1)] += 1;
            p.add_term(e, scalar());
        }
        return p;
    }

    ExpPoly exppoly(size_t n, int radius, int terms)
    {
        ExpPoly f(n);
        for (int t = 0; t < terms; ++t) {
            Exps e(n);
            for (auto& x : e)
                x = integer(-radius, radius);
            f.add_term(e, scalar());
        }
        return f;
    }

    CVec cvec(size_t n, bool complex = true)
    {
        CVec v(n);
        for (auto& x : v)
            x = scalar(complex);
        return v;
    }

    QVec qvec(size_t n)
    {
        QVec v(n);
        for (auto& x : v)
            x = rational();
        return v;
    }

    std::mt19937& engine() { return rng_; }

private:
    std::mt19937 rng_;
};

} // namespace gha
