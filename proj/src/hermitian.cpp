#include "casson/hermitian.hpp"

#include <optional>
#include <utility>

#include <mpfr.h>

#include "casson/errors.hpp"

namespace casson {

namespace {

constexpr unsigned kInitialPrecision = 64;

class MpfrValue {
public:
    explicit MpfrValue(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
    ~MpfrValue() { mpfr_clear(v_); }
    MpfrValue(const MpfrValue&) = delete;
    MpfrValue& operator=(const MpfrValue&) = delete;

    mpfr_ptr get() { return v_; }

    Rational to_rational()
    {
        Rational q;
        mpfr_get_q(q.get_mpq_t(), v_);
        return q;
    }

private:
    mpfr_t v_;
};

struct Interval {
    Rational lower;
    Rational upper;
};

// Rigorous enclosure of cos(2 pi k / n).
Interval cos_enclosure(long k, long n, unsigned prec)
{
    k %= n;
    if (k < 0)
        k += n;
    if (k == 0)
        return {1, 1};
    if (2 * k == n)
        return {-1, -1};
    if (4 * k == n || 4 * k == 3 * n)
        return {0, 0};

    const mpfr_prec_t wp = prec + 16;
    MpfrValue pi_lo(wp), pi_hi(wp), th_lo(wp), th_hi(wp), c_lo(wp), c_hi(wp);
    mpfr_const_pi(pi_lo.get(), MPFR_RNDD);
    mpfr_const_pi(pi_hi.get(), MPFR_RNDU);
    mpfr_mul_si(th_lo.get(), pi_lo.get(), 2 * k, MPFR_RNDD);
    mpfr_div_si(th_lo.get(), th_lo.get(), n, MPFR_RNDD);
    mpfr_mul_si(th_hi.get(), pi_hi.get(), 2 * k, MPFR_RNDU);
    mpfr_div_si(th_hi.get(), th_hi.get(), n, MPFR_RNDU);

    if (mpfr_less_p(th_hi.get(), pi_lo.get())) {
        // (0, pi): cos decreasing
        mpfr_cos(c_lo.get(), th_hi.get(), MPFR_RNDD);
        mpfr_cos(c_hi.get(), th_lo.get(), MPFR_RNDU);
    } else if (mpfr_greater_p(th_lo.get(), pi_hi.get())) {
        // (pi, 2 pi): cos increasing
        mpfr_cos(c_lo.get(), th_lo.get(), MPFR_RNDD);
        mpfr_cos(c_hi.get(), th_hi.get(), MPFR_RNDU);
    } else {
        return {-1, 1};
    }
    return {c_lo.to_rational(), c_hi.to_rational()};
}

// Enclosure of the real part of x.
Interval real_part_enclosure(const CyclotomicField& field, const CycloElement& x, unsigned prec)
{
    Interval acc{0, 0};
    for (std::size_t i = 0; i < x.coeffs.size(); ++i) {
        const Rational& c = x.coeffs[i];
        if (c == 0)
            continue;
        const Interval cs = cos_enclosure(static_cast<long>(i), field.order(), prec);
        if (c > 0) {
            acc.lower += c * cs.lower;
            acc.upper += c * cs.upper;
        } else {
            acc.lower += c * cs.upper;
            acc.upper += c * cs.lower;
        }
    }
    return acc;
}

} // namespace

CertifiedSign certify_sign(const CyclotomicField& field, const CycloElement& x)
{
    if (!field.is_real(x))
        throw Error(ErrorCode::InvalidArgument, "sign requested for a non-real cyclotomic element");
    CertifiedSign out;
    if (field.is_zero(x)) {
        out.exact_zero = true;
        return out;
    }
    // Terminates: x is a nonzero real number and the enclosure width halves
    // at least geometrically with the precision.
    for (unsigned prec = kInitialPrecision;; prec *= 2) {
        Interval iv = real_part_enclosure(field, x, prec);
        if (iv.lower > 0 || iv.upper < 0) {
            out.value = iv.lower > 0 ? Sign::positive : Sign::negative;
            out.lower = std::move(iv.lower);
            out.upper = std::move(iv.upper);
            out.precision_bits = prec;
            return out;
        }
    }
}

CycloMatrix::CycloMatrix(CyclotomicField field, std::size_t dim)
    : field_(std::move(field)), dim_(dim), entries_(dim * dim, field_.zero())
{
}

bool CycloMatrix::is_hermitian() const
{
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i; j < dim_; ++j)
            if (!(field_.conj(at(i, j)) == at(j, i)))
                return false;
    return true;
}

SignatureCertificate certified_signature_with_certificate(const CycloMatrix& h)
{
    if (!h.is_hermitian())
        throw Error(ErrorCode::NotHermitian, "matrix is not conjugate-symmetric");
    const CyclotomicField& F = h.field();
    CycloMatrix a = h;
    SignatureCertificate cert;

    // Active index set shrinks by one per pivot.
    std::vector<std::size_t> active(h.dim());
    for (std::size_t i = 0; i < active.size(); ++i)
        active[i] = i;

    // Congruence step: row_i += c row_j, col_i += conj(c) col_j.
    auto combine = [&](std::size_t i, std::size_t j, const CycloElement& c) {
        const CycloElement cc = F.conj(c);
        for (std::size_t t : active)
            a.at(i, t) = F.add(a.at(i, t), F.mul(c, a.at(j, t)));
        for (std::size_t t : active)
            a.at(t, i) = F.add(a.at(t, i), F.mul(cc, a.at(t, j)));
    };

    while (!active.empty()) {
        std::optional<std::size_t> pivot;
        for (std::size_t i : active)
            if (!F.is_zero(a.at(i, i))) {
                pivot = i;
                break;
            }
        if (!pivot) {
            // All diagonal entries vanish; manufacture one from an off-diagonal entry.
            for (std::size_t x = 0; x < active.size() && !pivot; ++x)
                for (std::size_t y = x + 1; y < active.size() && !pivot; ++y) {
                    const std::size_t i = active[x], j = active[y];
                    if (F.is_zero(a.at(i, j)))
                        continue;
                    // New (i,i) is 2 Re(c conj(a_ij)); c = 1 or zeta makes it nonzero.
                    for (const CycloElement& c : {F.one(), F.root_power(1)}) {
                        const CycloElement t = F.mul(c, a.at(j, i));
                        if (!F.is_zero(F.add(t, F.conj(t)))) {
                            combine(i, j, c);
                            pivot = i;
                            break;
                        }
                    }
                }
        }
        if (!pivot)
            break; // remaining block is identically zero

        const std::size_t p = *pivot;
        const CycloElement d = a.at(p, p);
        const CycloElement d_inv = F.inverse(d);
        for (std::size_t r : active) {
            if (r == p || F.is_zero(a.at(r, p)))
                continue;
            const CycloElement f = F.neg(F.mul(a.at(r, p), d_inv));
            combine(r, p, f);
        }
        cert.pivots.push_back(certify_sign(F, d));
        if (cert.pivots.back().value == Sign::positive)
            ++cert.inertia.n_plus;
        else
            ++cert.inertia.n_minus;
        std::erase(active, p);
    }
    cert.inertia.n_zero = active.size();
    for (std::size_t k = 0; k < active.size(); ++k) {
        CertifiedSign z;
        z.exact_zero = true;
        cert.pivots.push_back(z);
    }
    return cert;
}

Inertia certified_signature(const CycloMatrix& h)
{
    return certified_signature_with_certificate(h).inertia;
}

} // namespace casson
