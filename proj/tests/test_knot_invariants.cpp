#include <doctest.h>

#include <random>

#include "casson/cyclotomic.hpp"
#include "casson/errors.hpp"
#include "casson/seifert.hpp"
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

const LaurentPolynomial kTrefoilDelta{{1, 1}, {0, -1}, {-1, 1}};

} // namespace

TEST_CASE("Seifert matrix validation")
{
    CHECK(code_of([] { SeifertMatrix(Rows{{1}}); }) == ErrorCode::InvalidSeifertMatrix);
    CHECK(code_of([] { SeifertMatrix(Rows{{1, 0}, {0, 1}}); }) == ErrorCode::InvalidSeifertMatrix);
    CHECK(code_of([] { SeifertMatrix(Rows{{1, 0}, {1}}); }) == ErrorCode::InvalidSeifertMatrix);
    // det(S - S^T) = 4
    CHECK(code_of([] { SeifertMatrix(Rows{{0, 0}, {2, 0}}); }) == ErrorCode::InvalidSeifertMatrix);
    CHECK(SeifertMatrix(Rows{}).dim() == 0);
    CHECK(presets::right_trefoil().genus() == 1);
    CHECK(code_of([] { presets::by_name("granny"); }) == ErrorCode::InvalidArgument);
    for (const auto& name : presets::names())
        CHECK_NOTHROW(presets::by_name(name));
}

TEST_CASE("alexander_polynomial examples")
{
    CHECK(alexander_polynomial(SeifertMatrix(Rows{{-1, 1}, {0, -1}})) == kTrefoilDelta);
    CHECK(alexander_polynomial(presets::unknot()) == LaurentPolynomial::constant(1));
    CHECK(alexander_polynomial(SeifertMatrix(Rows{{-1, 1}, {0, 0}})) == LaurentPolynomial::constant(1));
    CHECK(alexander_polynomial(presets::figure_eight()) == LaurentPolynomial{{1, -1}, {0, 3}, {-1, -1}});
    CHECK(alexander_polynomial(presets::left_trefoil()) == kTrefoilDelta);
}

TEST_CASE("torus knots match the cyclotomic-quotient formula")
{
    CHECK(alexander_polynomial(torus_knot_seifert(2, 3)) == kTrefoilDelta);
    CHECK(alexander_polynomial(torus_knot_seifert(2, 5)) ==
          LaurentPolynomial{{2, 1}, {1, -1}, {0, 1}, {-1, -1}, {-2, 1}});
    for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 3}, {2, 5}, {2, 7}, {2, 9}, {3, 4}, {3, 5}, {3, 7}, {4, 5}, {3, 8}, {5, 6}}) {
        const auto s = torus_knot_seifert(p, q);
        CHECK(s.dim() == static_cast<std::size_t>((p - 1) * (q - 1)));
        CHECK(alexander_polynomial(s) == torus_alexander_oracle(p, q));
        CHECK(alexander_polynomial(torus_knot_seifert(q, p)) == torus_alexander_oracle(p, q));
    }
    CHECK(code_of([] { torus_knot_seifert(2, 4); }) == ErrorCode::NotCoprime);
    CHECK(code_of([] { torus_knot_seifert(1, 4); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("tl_signature examples")
{
    const SeifertMatrix trefoil(Rows{{-1, 1}, {0, -1}});
    CHECK(tl_signature(trefoil, 1, 2) == -2);
    CHECK(tl_signature(trefoil, 0, 1) == 0);
    CHECK(tl_signature(presets::figure_eight(), 1, 2) == 0);
    CHECK(tl_signature(mirror(trefoil), 1, 2) == 2);
    CHECK(tl_signature(presets::left_trefoil(), 1, 2) == 2);
    // a given unreduced
    CHECK(tl_signature(trefoil, 3, 6) == -2);
    CHECK(tl_signature(trefoil, 7, 2) == -2);
    CHECK(std::abs(tl_signature(torus_knot_seifert(3, 5), 1, 2)) == 8);
    CHECK(tl_signature(torus_knot_seifert(3, 5), 1, 2) == -8);
}

TEST_CASE("tl_signature agrees with the eigenvalue oracle")
{
    std::vector<SeifertMatrix> knots = base_corpus();
    knots.push_back(torus_knot_seifert(3, 7));
    knots.push_back(torus_knot_seifert(4, 5));
    for (const auto& s : knots)
        for (int n : {2, 3, 5, 7, 8, 12})
            for (int m = 0; m < n; ++m) {
                const auto exact = tl_inertia(s, m, n);
                const auto num = eigen_tl_inertia(s, double(m) / n);
                CHECK(static_cast<long>(exact.n_plus) == num.plus);
                CHECK(static_cast<long>(exact.n_minus) == num.minus);
                CHECK(static_cast<long>(exact.n_zero) == num.zero);
            }
}

TEST_CASE("signature_spectrum")
{
    const SeifertMatrix trefoil(Rows{{-1, 1}, {0, -1}});
    CHECK(signature_spectrum(trefoil, 2).values == std::vector<long>{0, -2});
    CHECK(signature_spectrum(trefoil, 1).values == std::vector<long>{0});
    CHECK(signature_spectrum(presets::unknot(), 5).values == std::vector<long>(5, 0));
    // jumps at the roots exp(+-2 pi i/6) of the Alexander polynomial
    CHECK(signature_spectrum(trefoil, 6).values == std::vector<long>{0, -1, -2, -2, -2, -1});
    CHECK(signature_spectrum(presets::figure_eight(), 3).values == std::vector<long>{0, 0, 0});

    SignatureSpectrum bad{2, {1, 0}};
    CHECK(code_of([&] { bad.validate(); }) == ErrorCode::InvalidArgument);
    SignatureSpectrum asym{3, {0, 2, 0}};
    CHECK(code_of([&] { asym.validate(); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("degeneracy is detected exactly at Alexander roots")
{
    for (const auto& s : base_corpus()) {
        const auto delta = alexander_polynomial(s);
        for (int n : {2, 3, 4, 5, 6, 10, 12}) {
            CyclotomicField f(n);
            for (int m = 1; m < n; ++m) {
                const bool root = f.is_zero(f.evaluate(delta, m));
                CHECK((tl_inertia(s, m, n).n_zero != 0) == root);
                if (!root)
                    CHECK(tl_signature(s, m, n) % 2 == 0);
            }
        }
    }
}

TEST_CASE("arf_invariant")
{
    CHECK(arf_invariant(SeifertMatrix(Rows{{-1, 1}, {0, -1}})) == true);
    CHECK(arf_invariant(presets::unknot()) == false);
    CHECK(arf_invariant(presets::figure_eight()) == true);
    CHECK(arf_invariant(presets::whitehead_type()) == false);
    CHECK(arf_invariant(torus_knot_seifert(3, 5)) == false);
    CHECK(arf_invariant(torus_knot_seifert(2, 5)) == true);
    CHECK(arf_invariant(connected_sum(presets::left_trefoil(), presets::figure_eight())) == false);
}

TEST_CASE("mirror and connected sum")
{
    const auto t = presets::right_trefoil();
    CHECK(connected_sum(t, presets::unknot()) == t);
    CHECK(connected_sum(presets::unknot(), t) == t);
    CHECK(mirror(mirror(t)) == t);
    for (const auto& a : base_corpus())
        for (const auto& b : {presets::right_trefoil(), presets::figure_eight(), torus_knot_seifert(2, 5)}) {
            const auto s = connected_sum(a, b);
            CHECK(alexander_polynomial(s) == alexander_polynomial(a) * alexander_polynomial(b));
            CHECK(tl_signature(s, 1, 3) == tl_signature(a, 1, 3) + tl_signature(b, 1, 3));
            CHECK(arf_invariant(s) == (arf_invariant(a) != arf_invariant(b)));
        }
    for (const auto& s : base_corpus()) {
        const auto m = mirror(s);
        CHECK(alexander_polynomial(m) == alexander_polynomial(s));
        CHECK(arf_invariant(m) == arf_invariant(s));
        for (int k = 1; k < 7; ++k)
            CHECK(tl_signature(m, k, 7) == -tl_signature(s, k, 7));
    }
}

TEST_CASE("congruence and stabilization")
{
    const auto s = presets::figure_eight();
    CHECK(code_of([&] { congruence(s, Rows{{2, 0}, {0, 1}}); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([&] { congruence(s, Rows{{1, 0, 0}}); }) == ErrorCode::SizeMismatch);
    CHECK(congruence(s, Rows{{1, 0}, {0, 1}}) == s);
    const auto big = stabilize(s, {1, -1}, 0);
    CHECK(big.dim() == 4);
    CHECK(alexander_polynomial(big) == alexander_polynomial(s));
    CHECK(code_of([&] { stabilize(s, {1}, 0); }) == ErrorCode::SizeMismatch);
}

TEST_CASE("symmetrized form")
{
    CHECK(symmetrized_signature(presets::right_trefoil()) == -2);
    CHECK(symmetrized_determinant(presets::right_trefoil()) == 3);
    CHECK(symmetrized_determinant(presets::unknot()) == 1);
    for (const auto& s : base_corpus()) {
        CHECK(symmetrized_signature(s) == tl_signature(s, 1, 2));
        CHECK(abs(symmetrized_determinant(s)) == abs(alexander_polynomial(s).at_minus_one()));
    }
}

TEST_CASE("Murasugi and Casson-Arf congruences on the corpus")
{
    std::mt19937 rng(5);
    for (int i = 0; i < 200; ++i) {
        const auto s = random_knot(rng);
        const auto d = alexander_polynomial(s);
        const bool arf = arf_invariant(s);
        const Integer r = mod(d.at_minus_one(), 8);
        CHECK(arf == !(r == 1 || r == 7));
        CHECK(mod(second_derivative_at_one(d) / 2, 2) == (arf ? 1 : 0));
        CHECK(second_derivative_at_one(d) % 2 == 0);
    }
}
