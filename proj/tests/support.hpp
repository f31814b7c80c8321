#pragma once

// Independent oracles and random generators shared by the test binaries.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "casson/seifert.hpp"

namespace casson::testing {

using Rows = std::vector<std::vector<std::int64_t>>;

struct NumericInertia {
    long plus = 0;
    long minus = 0;
    long zero = 0;
    double smallest = 0;  // smallest |eigenvalue| among the nonzero ones
};

// Eigenvalues of a dense complex Hermitian matrix; |lambda| < tol counts as 0.
inline NumericInertia eigen_inertia(const Eigen::MatrixXcd& h, double tol = 1e-9)
{
    NumericInertia out;
    out.smallest = INFINITY;
    if (h.rows() == 0)
        return out;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    for (double v : es.eigenvalues()) {
        if (std::abs(v) < tol) {
            ++out.zero;
            continue;
        }
        out.smallest = std::min(out.smallest, std::abs(v));
        (v > 0 ? out.plus : out.minus)++;
    }
    return out;
}

// (1 - w) S + (1 - conj w) S^T with w = exp(2 pi i a), in floating point.
inline Eigen::MatrixXcd tl_form_numeric(const SeifertMatrix& s, double a)
{
    const std::complex<double> w = std::polar(1.0, 2 * M_PI * a);
    const auto n = static_cast<Eigen::Index>(s.dim());
    Eigen::MatrixXcd h(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            h(i, j) = (1.0 - w) * double(s.at(i, j)) + (1.0 - std::conj(w)) * double(s.at(j, i));
    return h;
}

inline NumericInertia eigen_tl_inertia(const SeifertMatrix& s, double a)
{
    return eigen_inertia(tl_form_numeric(s, a));
}

// Integer polynomials, constant term first.
using Poly = std::vector<long long>;

inline Poly poly_mul(const Poly& a, const Poly& b)
{
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] += a[i] * b[j];
    return c;
}

// Exact division by a monic divisor; aborts the test via empty result on remainder.
inline Poly poly_div_exact(Poly a, const Poly& b)
{
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size())
        return {};
    Poly q(a.size() - db, 0);
    for (std::size_t i = a.size(); i-- > db;) {
        const long long c = a[i] / b[db];
        q[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j)
            a[i - db + j] -= c * b[j];
    }
    for (long long r : a)
        if (r != 0)
            return {};
    return q;
}

inline Poly t_power_minus_one(int k)
{
    Poly p(static_cast<std::size_t>(k) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(k)] = 1;
    return p;
}

// (t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1)), centred on t^0.
inline LaurentPolynomial torus_alexander_oracle(int p, int q)
{
    const Poly num = poly_mul(t_power_minus_one(p * q), t_power_minus_one(1));
    const Poly den = poly_mul(t_power_minus_one(p), t_power_minus_one(q));
    const Poly quot = poly_div_exact(num, den);
    LaurentPolynomial::Terms terms;
    const int shift = static_cast<int>(quot.size() - 1) / 2;
    for (std::size_t i = 0; i < quot.size(); ++i)
        if (quot[i] != 0)
            terms[static_cast<int>(i) - shift] = Integer(static_cast<long>(quot[i]));
    return LaurentPolynomial(terms);
}

inline double eval_numeric(const LaurentPolynomial& p, double t)
{
    double s = 0;
    for (const auto& [e, c] : p.terms())
        s += c.get_d() * std::pow(t, e);
    return s;
}

// Random unimodular P as a product of elementary operations with +-1 entries.
inline Rows random_unimodular(std::size_t n, std::mt19937& rng, int steps = 4)
{
    Rows p(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        p[i][i] = 1;
    if (n < 2)
        return p;
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<int> coin(0, 3);
    for (int s = 0; s < steps; ++s) {
        const std::size_t i = idx(rng);
        std::size_t j = idx(rng);
        if (i == j)
            j = (j + 1) % n;
        switch (coin(rng)) {
        case 0: // column i += column j
        case 1: // column i -= column j
        {
            const int c = coin(rng) == 0 ? 1 : -1;
            for (std::size_t r = 0; r < n; ++r)
                p[r][i] += c * p[r][j];
            break;
        }
        case 2:
            for (std::size_t r = 0; r < n; ++r)
                std::swap(p[r][i], p[r][j]);
            break;
        default:
            for (std::size_t r = 0; r < n; ++r)
                p[r][i] = -p[r][i];
        }
    }
    return p;
}

inline SeifertMatrix random_stabilization(const SeifertMatrix& s, std::mt19937& rng)
{
    std::uniform_int_distribution<int> d(-1, 1);
    std::vector<std::int64_t> x(s.dim());
    for (auto& v : x)
        v = d(rng);
    return stabilize(s, x, d(rng));
}

inline std::vector<SeifertMatrix> base_corpus()
{
    return {
        presets::unknot(),
        presets::left_trefoil(),
        presets::right_trefoil(),
        presets::figure_eight(),
        presets::whitehead_type(),
        torus_knot_seifert(2, 5),
        torus_knot_seifert(2, 7),
        torus_knot_seifert(3, 4),
        torus_knot_seifert(3, 5),
        connected_sum(presets::left_trefoil(), presets::figure_eight()),
    };
}

// Corpus knot, optionally summed with another, stabilized 0..2 times and
// moved by a random unimodular congruence.
inline SeifertMatrix random_knot(std::mt19937& rng, std::size_t max_dim = 10)
{
    static const auto corpus = base_corpus();
    std::uniform_int_distribution<std::size_t> pick(0, corpus.size() - 1);
    SeifertMatrix s = corpus[pick(rng)];
    if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) {
        const auto& t = corpus[pick(rng)];
        if (s.dim() + t.dim() <= max_dim)
            s = connected_sum(s, t);
    }
    const int stabs = std::uniform_int_distribution<int>(0, 2)(rng);
    for (int i = 0; i < stabs && s.dim() + 2 <= max_dim; ++i)
        s = random_stabilization(s, rng);
    if (s.dim() > 0)
        s = congruence(s, random_unimodular(s.dim(), rng));
    return s;
}

} // namespace casson::testing
