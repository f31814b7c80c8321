#include "casson/cyclotomic.hpp"

#include <map>
#include <utility>

#include "casson/errors.hpp"

namespace casson {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

// Exact quotient of integer polynomials; the divisor is monic.
std::vector<Integer> divide_exact(std::vector<Integer> num, const std::vector<Integer>& den)
{
    const std::size_t dn = den.size() - 1;
    std::vector<Integer> q(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
        const Integer c = num[i];
        q[i - dn] = c;
        for (std::size_t j = 0; j <= dn; ++j)
            num[i - dn + j] -= c * den[j];
    }
    return q;
}

// Quotient and remainder over Q.
std::pair<Poly, Poly> divmod(Poly num, const Poly& den)
{
    Poly q;
    const std::size_t dn = den.size() - 1;
    if (num.size() < den.size())
        return {q, num};
    q.assign(num.size() - dn, 0);
    const Rational lead = den.back();
    for (std::size_t i = num.size(); i-- > dn;) {
        if (num[i] == 0)
            continue;
        const Rational c = num[i] / lead;
        q[i - dn] = c;
        for (std::size_t j = 0; j <= dn; ++j)
            num[i - dn + j] -= c * den[j];
    }
    num.resize(dn);
    trim(num);
    trim(q);
    return {q, num};
}

Poly poly_mul(const Poly& a, const Poly& b)
{
    if (a.empty() || b.empty())
        return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] += a[i] * b[j];
    }
    trim(c);
    return c;
}

Poly poly_sub(Poly a, const Poly& b)
{
    if (a.size() < b.size())
        a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] -= b[i];
    trim(a);
    return a;
}

} // namespace

std::vector<Integer> cyclotomic_polynomial(int n)
{
    if (n < 1)
        throw Error(ErrorCode::InvalidArgument, "cyclotomic order must be positive");
    std::map<int, std::vector<Integer>> known;
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0)
            continue;
        std::vector<Integer> p(d + 1, 0);
        p[0] = -1;
        p[d] = 1;
        for (const auto& [e, phi] : known)
            if (d % e == 0)
                p = divide_exact(std::move(p), phi);
        known.emplace(d, std::move(p));
    }
    return known.at(n);
}

CyclotomicField::CyclotomicField(int order)
    : order_(order), modulus_(cyclotomic_polynomial(order))
{
}

CycloElement CyclotomicField::zero() const
{
    return CycloElement{Poly(degree(), 0)};
}

CycloElement CyclotomicField::one() const
{
    return from_rational(1);
}

CycloElement CyclotomicField::from_rational(const Rational& r) const
{
    CycloElement e = zero();
    e.coeffs[0] = r;
    return e;
}

CycloElement CyclotomicField::root_power(long k) const
{
    long e = k % order_;
    if (e < 0)
        e += order_;
    Poly p(static_cast<std::size_t>(e) + 1, 0);
    p[e] = 1;
    return reduce(std::move(p));
}

CycloElement CyclotomicField::reduce(Poly poly) const
{
    const std::size_t d = degree();
    for (std::size_t i = poly.size(); i-- > d;) {
        if (poly[i] == 0)
            continue;
        const Rational c = poly[i];
        for (std::size_t j = 0; j <= d; ++j)
            poly[i - d + j] -= c * modulus_[j];
    }
    poly.resize(d, 0);
    return CycloElement{std::move(poly)};
}

CycloElement CyclotomicField::add(const CycloElement& a, const CycloElement& b) const
{
    CycloElement c = a;
    for (std::size_t i = 0; i < c.coeffs.size(); ++i)
        c.coeffs[i] += b.coeffs[i];
    return c;
}

CycloElement CyclotomicField::sub(const CycloElement& a, const CycloElement& b) const
{
    CycloElement c = a;
    for (std::size_t i = 0; i < c.coeffs.size(); ++i)
        c.coeffs[i] -= b.coeffs[i];
    return c;
}

CycloElement CyclotomicField::neg(const CycloElement& a) const
{
    CycloElement c = a;
    for (auto& x : c.coeffs)
        x = -x;
    return c;
}

CycloElement CyclotomicField::mul(const CycloElement& a, const CycloElement& b) const
{
    const std::size_t d = degree();
    Poly c(2 * d - 1, 0);
    for (std::size_t i = 0; i < d; ++i) {
        if (a.coeffs[i] == 0)
            continue;
        for (std::size_t j = 0; j < d; ++j)
            if (b.coeffs[j] != 0)
                c[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    return reduce(std::move(c));
}

CycloElement CyclotomicField::scale(const CycloElement& a, const Rational& s) const
{
    CycloElement c = a;
    for (auto& x : c.coeffs)
        x *= s;
    return c;
}

CycloElement CyclotomicField::inverse(const CycloElement& a) const
{
    if (is_zero(a))
        throw Error(ErrorCode::InvalidArgument, "inverse of zero in cyclotomic field");
    // Extended Euclid on (modulus, a), tracking only the cofactor of a.
    Poly r0(modulus_.begin(), modulus_.end());
    Poly r1 = a.coeffs;
    trim(r1);
    Poly s0;
    Poly s1{Rational(1)};
    while (!(r1.size() == 1)) {
        auto [q, r] = divmod(r0, r1);
        Poly s = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    // r1 is a nonzero constant since the modulus is irreducible.
    const Rational c = r1[0];
    for (auto& x : s1)
        x /= c;
    return reduce(std::move(s1));
}

CycloElement CyclotomicField::conj(const CycloElement& a) const
{
    Poly p(static_cast<std::size_t>(order_), 0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i] == 0)
            continue;
        const std::size_t e = (order_ - static_cast<long>(i) % order_) % order_;
        p[e] += a.coeffs[i];
    }
    return reduce(std::move(p));
}

bool CyclotomicField::is_zero(const CycloElement& a) const
{
    for (const auto& x : a.coeffs)
        if (x != 0)
            return false;
    return true;
}

bool CyclotomicField::is_real(const CycloElement& a) const
{
    return conj(a) == a;
}

CycloElement CyclotomicField::evaluate(const LaurentPolynomial& p, long k) const
{
    Poly acc(static_cast<std::size_t>(order_), 0);
    for (const auto& [e, c] : p.terms()) {
        long pos = (static_cast<long>(e) * k) % order_;
        if (pos < 0)
            pos += order_;
        acc[pos] += Rational(c);
    }
    return reduce(std::move(acc));
}

} // namespace casson
