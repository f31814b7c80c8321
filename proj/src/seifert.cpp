#include "casson/seifert.hpp"

#include <algorithm>
#include <utility>

#include "casson/errors.hpp"
#include "casson/f2_matrix.hpp"
#include "casson/integer_matrix.hpp"

namespace casson {

namespace {

IntegerMatrix pencil_at(const SeifertMatrix& s, const Integer& t)
{
    // t S - S^T
    IntegerMatrix m(s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = 0; j < s.dim(); ++j)
            m.at(i, j) = t * s.at(i, j) - s.at(j, i);
    return m;
}

// Monomial coefficients of the polynomial through (x_i, y_i), x_i = 0..k.
std::vector<Rational> interpolate(const std::vector<Integer>& ys)
{
    const std::size_t k = ys.size();
    std::vector<Rational> dd(ys.begin(), ys.end());
    for (std::size_t level = 1; level < k; ++level)
        for (std::size_t i = k - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / Rational(static_cast<long>(level));
    // Horner on the Newton basis prod (x - j).
    std::vector<Rational> poly{dd[k - 1]};
    for (std::size_t i = k - 1; i-- > 0;) {
        std::vector<Rational> next(poly.size() + 1, 0);
        for (std::size_t e = 0; e < poly.size(); ++e) {
            next[e + 1] += poly[e];
            next[e] -= poly[e] * static_cast<long>(i);
        }
        next[0] += dd[i];
        poly = std::move(next);
    }
    return poly;
}

std::vector<std::vector<std::int64_t>> torus_block(int m)
{
    const std::size_t n = static_cast<std::size_t>(m - 1);
    std::vector<std::vector<std::int64_t>> b(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        b[i][i] = 1;
        if (i + 1 < n)
            b[i][i + 1] = -1;
    }
    return b;
}

} // namespace

SeifertMatrix::SeifertMatrix(const std::vector<std::vector<std::int64_t>>& rows)
    : dim_(rows.size())
{
    if (dim_ % 2 != 0)
        throw Error(ErrorCode::InvalidSeifertMatrix, "Seifert matrix must have even size");
    entries_.reserve(dim_ * dim_);
    for (const auto& row : rows) {
        if (row.size() != dim_)
            throw Error(ErrorCode::InvalidSeifertMatrix, "Seifert matrix must be square");
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
    IntegerMatrix skew(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            skew.at(i, j) = Integer(at(i, j)) - Integer(at(j, i));
    const Integer d = determinant(std::move(skew));
    if (d != 1)
        throw Error(ErrorCode::InvalidSeifertMatrix, "det(S - S^T) = " + d.get_str() + ", expected 1");
}

std::vector<std::vector<std::int64_t>> SeifertMatrix::rows() const
{
    std::vector<std::vector<std::int64_t>> r(dim_, std::vector<std::int64_t>(dim_));
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            r[i][j] = at(i, j);
    return r;
}

SeifertMatrix SeifertMatrix::transpose() const
{
    SeifertMatrix t = *this;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            t.entries_[i * dim_ + j] = at(j, i);
    return t;
}

long SignatureSpectrum::total() const
{
    long s = 0;
    for (long v : values)
        s += v;
    return s;
}

void SignatureSpectrum::validate() const
{
    if (order < 1 || values.size() != static_cast<std::size_t>(order))
        throw Error(ErrorCode::InvalidArgument, "spectrum length must equal its order");
    if (values[0] != 0)
        throw Error(ErrorCode::InvalidArgument, "sign^0 must vanish");
    for (int m = 1; m < order; ++m)
        if (values[m] != values[order - m])
            throw Error(ErrorCode::InvalidArgument, "spectrum violates sign^{m/n} = sign^{(n-m)/n}");
}

namespace presets {

SeifertMatrix unknot()
{
    return SeifertMatrix{};
}

SeifertMatrix left_trefoil()
{
    return SeifertMatrix({{1, 0}, {1, 1}});
}

SeifertMatrix right_trefoil()
{
    return SeifertMatrix({{-1, 1}, {0, -1}});
}

SeifertMatrix figure_eight()
{
    return SeifertMatrix({{1, 1}, {0, -1}});
}

SeifertMatrix whitehead_type()
{
    return SeifertMatrix({{-1, 1}, {0, 0}});
}

SeifertMatrix by_name(const std::string& name)
{
    if (name == "unknot")
        return unknot();
    if (name == "left-trefoil")
        return left_trefoil();
    if (name == "right-trefoil")
        return right_trefoil();
    if (name == "figure-eight")
        return figure_eight();
    if (name == "whitehead-type")
        return whitehead_type();
    throw Error(ErrorCode::InvalidArgument, "unknown knot preset '" + name + "'");
}

std::vector<std::string> names()
{
    return {"unknot", "left-trefoil", "right-trefoil", "figure-eight", "whitehead-type"};
}

} // namespace presets

LaurentPolynomial alexander_polynomial(const SeifertMatrix& s)
{
    const std::size_t n = s.dim();
    if (n == 0)
        return LaurentPolynomial::constant(1);
    std::vector<Integer> values;
    values.reserve(n + 1);
    for (std::size_t t = 0; t <= n; ++t)
        values.push_back(determinant(pencil_at(s, Integer(static_cast<long>(t)))));
    const std::vector<Rational> coeffs = interpolate(values);
    LaurentPolynomial::Terms terms;
    const int g = static_cast<int>(s.genus());
    for (std::size_t e = 0; e < coeffs.size(); ++e)
        if (coeffs[e] != 0)
            terms.emplace(static_cast<int>(e) - g, to_integer(coeffs[e], "Alexander coefficient"));
    return laurent_normalize_symmetric(LaurentPolynomial(std::move(terms)));
}

CycloMatrix tristram_levine_form(const SeifertMatrix& s, long m, int n)
{
    if (n < 1)
        throw Error(ErrorCode::InvalidArgument, "order must be positive");
    long r = m % n;
    if (r < 0)
        r += n;
    const long g = r == 0 ? n : gcd(r, n);
    CyclotomicField field(static_cast<int>(n / g));
    const long k = r / g;
    const CycloElement w = field.root_power(k);
    const CycloElement a = field.sub(field.one(), w);
    const CycloElement b = field.conj(a);
    CycloMatrix h(field, s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = 0; j < s.dim(); ++j)
            h.at(i, j) = field.add(field.scale(a, Rational(s.at(i, j))), field.scale(b, Rational(s.at(j, i))));
    return h;
}

Inertia tl_inertia(const SeifertMatrix& s, long m, int n)
{
    return certified_signature(tristram_levine_form(s, m, n));
}

long tl_signature(const SeifertMatrix& s, long m, int n)
{
    return tl_inertia(s, m, n).signature();
}

SignatureSpectrum signature_spectrum(const SeifertMatrix& s, int n)
{
    if (n < 1)
        throw Error(ErrorCode::InvalidArgument, "spectrum order must be positive");
    SignatureSpectrum spec;
    spec.order = n;
    spec.values.assign(static_cast<std::size_t>(n), 0);
    // sign^{m/n} = sign^{(n-m)/n}: compute the lower half only.
    for (int m = 1; 2 * m <= n; ++m) {
        const long v = tl_signature(s, m, n);
        spec.values[m] = v;
        spec.values[n - m] = v;
    }
    return spec;
}

bool arf_invariant(const SeifertMatrix& s)
{
    const std::size_t n = s.dim();
    using Vec = std::vector<std::uint8_t>;
    auto form = [&](const Vec& x, const Vec& y) {
        int acc = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (x[i])
                for (std::size_t j = 0; j < n; ++j)
                    if (y[j])
                        acc += static_cast<int>((s.at(i, j) + s.at(j, i)) & 1);
        return (acc & 1) != 0;
    };
    auto quad = [&](const Vec& x) {
        std::int64_t acc = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (!x[i])
                continue;
            acc += s.at(i, i);
            for (std::size_t j = i + 1; j < n; ++j)
                if (x[j])
                    acc += s.at(i, j) + s.at(j, i);
        }
        return (acc & 1) != 0;
    };

    std::vector<Vec> pool;
    for (std::size_t i = 0; i < n; ++i) {
        Vec e(n, 0);
        e[i] = 1;
        pool.push_back(std::move(e));
    }
    bool arf = false;
    while (!pool.empty()) {
        Vec a = std::move(pool.back());
        pool.pop_back();
        auto partner = std::find_if(pool.begin(), pool.end(), [&](const Vec& v) { return form(a, v); });
        if (partner == pool.end())
            throw Error(ErrorCode::DegeneratePolarization, "S + S^T is singular mod 2");
        Vec b = std::move(*partner);
        pool.erase(partner);
        for (Vec& v : pool) {
            const bool vb = form(v, b);
            const bool va = form(v, a);
            for (std::size_t i = 0; i < n; ++i)
                v[i] ^= static_cast<std::uint8_t>((vb ? a[i] : 0) ^ (va ? b[i] : 0));
        }
        arf ^= quad(a) && quad(b);
    }
    return arf;
}

SeifertMatrix torus_knot_seifert(int p, int q)
{
    if (p < 2 || q < 2)
        throw Error(ErrorCode::InvalidArgument, "torus knot parameters must be at least 2");
    if (gcd(p, q) != 1)
        throw Error(ErrorCode::NotCoprime, "torus knot (" + std::to_string(p) + "," + std::to_string(q) + ")");
    const auto a = torus_block(p);
    const auto b = torus_block(q);
    const std::size_t na = a.size(), nb = b.size();
    std::vector<std::vector<std::int64_t>> rows(na * nb, std::vector<std::int64_t>(na * nb, 0));
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j)
            for (std::size_t k = 0; k < nb; ++k)
                for (std::size_t l = 0; l < nb; ++l)
                    rows[i * nb + k][j * nb + l] = -a[i][j] * b[k][l];
    return SeifertMatrix(rows);
}

SeifertMatrix mirror(const SeifertMatrix& s)
{
    auto rows = s.transpose().rows();
    for (auto& row : rows)
        for (auto& v : row)
            v = -v;
    return SeifertMatrix(rows);
}

SeifertMatrix connected_sum(const SeifertMatrix& a, const SeifertMatrix& b)
{
    const std::size_t n = a.dim() + b.dim();
    std::vector<std::vector<std::int64_t>> rows(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            rows[i][j] = a.at(i, j);
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j)
            rows[a.dim() + i][a.dim() + j] = b.at(i, j);
    return SeifertMatrix(rows);
}

SeifertMatrix congruence(const SeifertMatrix& s, const std::vector<std::vector<std::int64_t>>& p)
{
    const std::size_t n = s.dim();
    if (p.size() != n)
        throw Error(ErrorCode::SizeMismatch, "basis change must match the Seifert matrix size");
    IntegerMatrix pm(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (p[i].size() != n)
            throw Error(ErrorCode::SizeMismatch, "basis change must be square");
        for (std::size_t j = 0; j < n; ++j)
            pm.at(i, j) = p[i][j];
    }
    const Integer d = determinant(pm);
    if (d != 1 && d != -1)
        throw Error(ErrorCode::InvalidArgument, "basis change is not unimodular");
    std::vector<std::vector<std::int64_t>> out(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Integer acc = 0;
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    acc += pm.at(k, i) * s.at(k, l) * pm.at(l, j);
            out[i][j] = to_int64(acc);
        }
    return SeifertMatrix(out);
}

SeifertMatrix stabilize(const SeifertMatrix& s, const std::vector<std::int64_t>& x, std::int64_t diag)
{
    const std::size_t n = s.dim();
    if (x.size() != n)
        throw Error(ErrorCode::SizeMismatch, "stabilization row must match the Seifert matrix size");
    std::vector<std::vector<std::int64_t>> rows(n + 2, std::vector<std::int64_t>(n + 2, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            rows[i][j] = s.at(i, j);
    for (std::size_t j = 0; j < n; ++j)
        rows[n][j] = x[j];
    rows[n][n] = diag;
    rows[n][n + 1] = 1;
    return SeifertMatrix(rows);
}

long symmetrized_signature(const SeifertMatrix& s)
{
    // Rational symmetric congruence diagonalization.
    const std::size_t n = s.dim();
    std::vector<Rational> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i * n + j] = Integer(s.at(i, j)) + Integer(s.at(j, i));
    auto at = [&](std::size_t i, std::size_t j) -> Rational& { return a[i * n + j]; };
    std::vector<bool> done(n, false);
    long signature = 0;
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t p = n;
        for (std::size_t i = 0; i < n && p == n; ++i)
            if (!done[i] && at(i, i) != 0)
                p = i;
        if (p == n) {
            // Zero diagonal: fold a nonzero off-diagonal pair into row i.
            for (std::size_t i = 0; i < n && p == n; ++i)
                for (std::size_t j = i + 1; j < n && p == n; ++j)
                    if (!done[i] && !done[j] && at(i, j) != 0) {
                        for (std::size_t t = 0; t < n; ++t)
                            at(i, t) += at(j, t);
                        for (std::size_t t = 0; t < n; ++t)
                            at(t, i) += at(t, j);
                        p = i;
                    }
        }
        if (p == n)
            break;
        const Rational d = at(p, p);
        signature += d > 0 ? 1 : -1;
        done[p] = true;
        for (std::size_t r = 0; r < n; ++r) {
            if (done[r] || at(r, p) == 0)
                continue;
            const Rational f = at(r, p) / d;
            for (std::size_t t = 0; t < n; ++t)
                at(r, t) -= f * at(p, t);
            for (std::size_t t = 0; t < n; ++t)
                at(t, r) -= f * at(t, p);
        }
    }
    return signature;
}

Integer symmetrized_determinant(const SeifertMatrix& s)
{
    IntegerMatrix m(s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = 0; j < s.dim(); ++j)
            m.at(i, j) = Integer(s.at(i, j)) + Integer(s.at(j, i));
    return determinant(std::move(m));
}

} // namespace casson
