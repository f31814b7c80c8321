#include <doctest.h>

#include <random>

#include "casson/equivariant.hpp"
#include "casson/errors.hpp"
#include "casson/surgery.hpp"
#include "support.hpp"

using namespace casson;
using namespace casson::testing;

namespace {

ErrorCode code_of(auto&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::InvalidArgument;
}

BranchedQuotientData branched(int n, long lambda, std::vector<long> spectrum)
{
    BranchedQuotientData d{n, lambda, SignatureSpectrum{n, std::move(spectrum)}};
    d.validate();
    return d;
}

} // namespace

TEST_CASE("equivariant_casson_branched examples")
{
    CHECK(equivariant_casson_branched(branched(2, 0, {0, 16})) == 2);
    CHECK(equivariant_casson_branched(branched(3, 1, {0, 0, 0})) == 3);
    const auto t35 = BranchedQuotientData::from_knot(2, 0, torus_knot_seifert(3, 5));
    CHECK(equivariant_casson_branched(t35) == -1);
    CHECK(equivariant_casson_branched(t35) == mubar_double_branched(torus_knot_seifert(3, 5)));
    // non-integral totals are returned, not rounded
    CHECK(equivariant_casson_branched(BranchedQuotientData::from_knot(2, 0, presets::right_trefoil())) ==
          make_rational(-1, 4));
}

TEST_CASE("n = 1 recovers lambda of the quotient")
{
    for (long lambda : {-3L, 0L, 5L})
        CHECK(equivariant_casson_branched(branched(1, lambda, {0})) == lambda);
}

TEST_CASE("branched data validation")
{
    CHECK(code_of([] { branched(2, 0, {0}); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { branched(2, 0, {2, 0}); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { branched(0, 0, {}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("equivariant_casson_free examples")
{
    CHECK(equivariant_casson_free({2, 1, 0, presets::right_trefoil()}) == make_rational(3, 4));
    CHECK(equivariant_casson_free({2, 1, 0, presets::whitehead_type()}) == 0);
    CHECK(signature_spectrum(presets::figure_eight(), 3).values == std::vector<long>{0, 0, 0});
    CHECK(equivariant_casson_free({3, 2, 0, presets::figure_eight()}) == -2);
    CHECK(code_of([] { equivariant_casson_free({2, 4, 0, presets::figure_eight()}); }) == ErrorCode::NotCoprime);
}

TEST_CASE("branched_free_relation")
{
    const FreeQuotientData d{2, 1, 0, presets::right_trefoil()};
    const auto cover = BranchedQuotientData::from_knot(2, 0, presets::right_trefoil());
    CHECK(branched_free_relation(d, cover));
    const FreeQuotientData q0{2, 0, 0, presets::right_trefoil()};
    CHECK(branched_free_relation(q0, cover));
    CHECK(furuta_ohta_mapping_torus(cover) == make_rational(-1, 4));
    auto wrong = cover;
    wrong.spectrum.values = {0, 2};
    CHECK_FALSE(branched_free_relation(d, wrong));
}

TEST_CASE("folded spectrum sum matches the plain sum")
{
    std::mt19937 rng(29);
    for (int i = 0; i < 100; ++i) {
        const auto s = random_knot(rng, 8);
        for (int n : {1, 2, 3, 4, 5, 6, 9, 12}) {
            const auto spec = signature_spectrum(s, n);
            CHECK(folded_spectrum_term(spec) == make_rational(spec.total(), 8));
        }
    }
}

TEST_CASE("dispatch")
{
    const QuotientData b = branched(2, 0, {0, 16});
    const QuotientData f = FreeQuotientData{3, 2, 0, presets::figure_eight()};
    CHECK(furuta_ohta_mapping_torus(b) == 2);
    CHECK(furuta_ohta_mapping_torus(f) == -2);
}

TEST_CASE("lambda_FO and rho congruence check")
{
    const auto cork = conjecture1_check(branched(2, 0, {0, 16}), false);
    CHECK(cork.lambda_fo == 2);
    CHECK(cork.congruent);
    const auto p = conjecture1_check(BranchedQuotientData::from_knot(2, 0, torus_knot_seifert(3, 5)), true);
    CHECK(p.lambda_fo == -1);
    CHECK(p.rho);
    CHECK(p.congruent);
    const auto zero = conjecture1_check(branched(3, 0, {0, 0, 0}), false);
    CHECK(zero.lambda_fo == 0);
    CHECK(zero.congruent);
    CHECK_FALSE(conjecture1_check(branched(2, 0, {0, 16}), true).congruent);

    const QuotientData bad = FreeQuotientData{2, 1, 0, presets::right_trefoil()};
    CHECK(code_of([&] { conjecture1_check(bad, false); }) == ErrorCode::NonIntegralInvariant);
    const auto lint = mapping_torus_report(bad, false);
    CHECK_FALSE(lint.integral);
    CHECK_FALSE(lint.congruent);
    CHECK(lint.lambda_fo == make_rational(3, 4));
}

TEST_CASE("orientation reversal")
{
    CHECK(orientation_reversal_check(BranchedQuotientData::from_knot(2, 0, presets::right_trefoil())));
    CHECK(orientation_reversal_check(branched(2, 0, {0, 0})));
    const auto fig8 = BranchedQuotientData::from_knot(2, 0, presets::figure_eight());
    CHECK(orientation_reversal_check(fig8));
    CHECK(furuta_ohta_mapping_torus(fig8) == 0);
    CHECK(furuta_ohta_mapping_torus(reverse(fig8)) == 0);

    std::mt19937 rng(31);
    for (int i = 0; i < 100; ++i) {
        const auto s = random_knot(rng, 8);
        const QuotientData b = BranchedQuotientData::from_knot(3, i % 5 - 2, s);
        const QuotientData f = FreeQuotientData{2, 2 * (i % 4) - 3, i % 3, s};
        CHECK(orientation_reversal_check(b));
        CHECK(orientation_reversal_check(f));
        CHECK(furuta_ohta_mapping_torus(reverse(f)) == -furuta_ohta_mapping_torus(f));
        CHECK(std::get<FreeQuotientData>(reverse(f)).q == -std::get<FreeQuotientData>(f).q);
    }
}
