#include "casson/surgery.hpp"

#include "casson/errors.hpp"

namespace casson {

void SurgeryPresentation::validate() const
{
    for (const auto& step : steps)
        if (step.q == 0)
            throw Error(ErrorCode::InvalidArgument, "surgery coefficient 1/q needs q != 0");
}

SurgeryPresentation SurgeryPresentation::reversed() const
{
    SurgeryPresentation out = *this;
    for (auto& step : out.steps)
        step.q = -step.q;
    return out;
}

SurgeryPresentation SurgeryPresentation::concatenated(const SurgeryPresentation& tail) const
{
    SurgeryPresentation out = *this;
    out.steps.insert(out.steps.end(), tail.steps.begin(), tail.steps.end());
    return out;
}

Integer casson_step(const SeifertMatrix& knot, const Integer& q)
{
    const Integer d2 = second_derivative_at_one(alexander_polynomial(knot));
    return to_integer(make_rational(q * d2, 2), "(q/2) D''(1)");
}

Integer casson(const SurgeryPresentation& p)
{
    p.validate();
    Integer total = 0;
    for (const auto& step : p.steps)
        total += casson_step(step.knot, step.q);
    return total;
}

bool rohlin(const SurgeryPresentation& p)
{
    p.validate();
    bool total = false;
    for (const auto& step : p.steps)
        total ^= is_odd(step.q) && arf_invariant(step.knot);
    return total;
}

Rational mubar_double_branched(const SeifertMatrix& branch)
{
    const long sig = tl_signature(branch, 1, 2);
    if (sig % 8 != 0)
        throw Error(ErrorCode::NonIntegral, "branch knot signature " + std::to_string(sig) + " is not divisible by 8");
    return Rational(sig / 8);
}

bool rohlin_double_branched(const SeifertMatrix& branch)
{
    const Integer det = symmetrized_determinant(branch);
    if (det != 1 && det != -1)
        throw Error(ErrorCode::InvalidArgument,
                    "double branched cover is not a homology sphere (det = " + det.get_str() + ")");
    const long sig = symmetrized_signature(branch);
    // An even unimodular form has signature divisible by 8.
    if (sig % 8 != 0)
        throw Error(ErrorCode::NonIntegral, "even unimodular form with signature " + std::to_string(sig));
    return ((sig / 8) % 2) != 0;
}

SphereInvariants check_casson_rohlin(const SurgeryPresentation& p)
{
    SphereInvariants out;
    out.casson = casson(p);
    out.rohlin = rohlin(p);
    out.congruent = is_odd(out.casson) == out.rohlin;
    return out;
}

} // namespace casson
