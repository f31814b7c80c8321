#include "casson/circle_bundle.hpp"

#include "casson/errors.hpp"

namespace casson {

namespace {

VanishingCertificate certify(const CircleBundleData& d)
{
    if (d.euler != 1)
        throw Error(ErrorCode::BadEuler, "Euler number " + d.euler.get_str() + ", only e = 1 is supported");
    VanishingCertificate c;
    c.alexander = alexander_polynomial(d.knot);
    if (!(c.alexander == LaurentPolynomial::constant(1)))
        throw Error(ErrorCode::NonTrivialAlexander, "Alexander polynomial is " + c.alexander.to_string());
    c.arf = arf_invariant(d.knot);
    c.alexander_second_derivative = second_derivative_at_one(c.alexander);
    // Both are forced by D = 1; a violation means the Seifert data is corrupt.
    if (c.arf || c.alexander_second_derivative != 0)
        throw Error(ErrorCode::InvalidSeifertMatrix, "Alexander polynomial 1 with arf = 1 or D''(1) != 0");
    c.notes.push_back("Alexander polynomial = 1");
    return c;
}

} // namespace

CircleBundleResult circle_bundle_rho(const CircleBundleData& d)
{
    CircleBundleResult r{0, certify(d)};
    r.certificate.notes.push_back("arf(k) = 0 from the Seifert form, so rho(X) = arf = 0");
    return r;
}

CircleBundleResult circle_bundle_furuta_ohta(const CircleBundleData& d)
{
    CircleBundleResult r{0, certify(d)};
    r.certificate.notes.push_back("D''_k(1) = 0, so both w-sectors of the SO(3) count vanish and lambda_FO(X) = 0");
    return r;
}

} // namespace casson
