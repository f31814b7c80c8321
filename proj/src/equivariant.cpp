#include "casson/equivariant.hpp"

#include "casson/errors.hpp"

namespace casson {

namespace {

Rational spectrum_term(const SignatureSpectrum& s)
{
    return make_rational(s.total(), 8);
}

Rational free_formula(const FreeQuotientData& d)
{
    const SignatureSpectrum spec = signature_spectrum(d.knot, d.n);
    const Integer d2 = second_derivative_at_one(alexander_polynomial(d.knot));
    Rational v = Rational(d.base_casson * d.n) + spectrum_term(spec) + make_rational(d.q * d2, 2);
    v.canonicalize();
    return v;
}

} // namespace

BranchedQuotientData BranchedQuotientData::from_knot(int n, Integer quotient_casson, const SeifertMatrix& k)
{
    return BranchedQuotientData{n, std::move(quotient_casson), signature_spectrum(k, n)};
}

void BranchedQuotientData::validate() const
{
    if (n < 1)
        throw Error(ErrorCode::InvalidArgument, "order must be positive");
    if (spectrum.order != n)
        throw Error(ErrorCode::SizeMismatch, "spectrum order differs from n");
    spectrum.validate();
}

void FreeQuotientData::validate() const
{
    if (n < 1)
        throw Error(ErrorCode::InvalidArgument, "order must be positive");
    Integer g;
    mpz_gcd_ui(g.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(n));
    if (g != 1)
        throw Error(ErrorCode::NotCoprime, "gcd(n, q) = " + g.get_str());
}

Rational equivariant_casson_branched(const BranchedQuotientData& d)
{
    d.validate();
    Rational v = Rational(d.quotient_casson * d.n) + spectrum_term(d.spectrum);
    v.canonicalize();
    return v;
}

Rational equivariant_casson_free(const FreeQuotientData& d)
{
    d.validate();
    return free_formula(d);
}

Rational folded_spectrum_term(const SignatureSpectrum& s)
{
    long sum = s.values.empty() ? 0 : s.values[0];
    for (int m = 1; 2 * m <= s.order; ++m)
        sum += (2 * m == s.order) ? s.values[m] : 2 * s.values[m];
    return make_rational(sum, 8);
}

bool branched_free_relation(const FreeQuotientData& d, const BranchedQuotientData& cover)
{
    cover.validate();
    const Integer d2 = second_derivative_at_one(alexander_polynomial(d.knot));
    Rational lhs = free_formula(d) - equivariant_casson_branched(cover);
    Rational rhs = make_rational(d.q * d2, 2);
    lhs.canonicalize();
    rhs.canonicalize();
    return lhs == rhs;
}

Rational furuta_ohta_mapping_torus(const QuotientData& d)
{
    return std::visit(
        [](const auto& x) -> Rational {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, BranchedQuotientData>)
                return equivariant_casson_branched(x);
            else
                return equivariant_casson_free(x);
        },
        d);
}

MappingTorusReport mapping_torus_report(const QuotientData& d, bool rho_sigma)
{
    MappingTorusReport r;
    r.lambda_fo = furuta_ohta_mapping_torus(d);
    r.rho = rho_sigma;
    r.integral = is_integral(r.lambda_fo);
    r.congruent = r.integral && is_odd(r.lambda_fo.get_num()) == rho_sigma;
    return r;
}

MappingTorusReport conjecture1_check(const QuotientData& d, bool rho_sigma)
{
    MappingTorusReport r = mapping_torus_report(d, rho_sigma);
    if (!r.integral)
        throw Error(ErrorCode::NonIntegralInvariant,
                    "lambda_FO = " + to_string(r.lambda_fo) + " is not an integer; input is not geometric");
    return r;
}

QuotientData reverse(const QuotientData& d)
{
    return std::visit(
        [](const auto& x) -> QuotientData {
            using T = std::decay_t<decltype(x)>;
            T y = x;
            if constexpr (std::is_same_v<T, BranchedQuotientData>) {
                y.quotient_casson = -x.quotient_casson;
                for (auto& v : y.spectrum.values)
                    v = -v;
            } else {
                y.base_casson = -x.base_casson;
                y.q = -x.q;
                y.knot = mirror(x.knot);
            }
            return y;
        },
        d);
}

bool orientation_reversal_check(const QuotientData& d)
{
    return furuta_ohta_mapping_torus(reverse(d)) == -furuta_ohta_mapping_torus(d);
}

} // namespace casson
