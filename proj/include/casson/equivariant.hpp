#pragma once

#include <variant>

#include "casson/numbers.hpp"
#include "casson/seifert.hpp"

namespace casson {

/// tau of order n with fixed points: Sigma -> Sigma' branched along k.
struct BranchedQuotientData {
    int n = 1;
    Integer quotient_casson;      // lambda(Sigma')
    SignatureSpectrum spectrum;   // sign^{m/n}(k), m = 0..n-1

    static BranchedQuotientData from_knot(int n, Integer quotient_casson, const SeifertMatrix& k);
    void validate() const;
};

/// Free tau of order n: Sigma/tau is (n/q)-surgery on k in the homology sphere Y.
struct FreeQuotientData {
    int n = 1;
    Integer q;
    Integer base_casson;          // lambda(Y)
    SeifertMatrix knot;

    // Throws NotCoprime unless gcd(n, q) = 1.
    void validate() const;
};

using QuotientData = std::variant<BranchedQuotientData, FreeQuotientData>;

struct MappingTorusReport {
    Rational lambda_fo;
    bool rho = false;
    bool integral = true;
    bool congruent = false;
};

/// n lambda(Sigma') + (1/8) sum_m sign^{m/n}(k)
Rational equivariant_casson_branched(const BranchedQuotientData& d);

/// n lambda(Y) + (1/8) sum_m sign^{m/n}(k) + (q/2) D''_k(1)
Rational equivariant_casson_free(const FreeQuotientData& d);

/// The same spectrum sum evaluated over m <= n/2 and doubled back; must agree
/// with the plain sum (guards against double counting the m, n-m pairs).
Rational folded_spectrum_term(const SignatureSpectrum& s);

/// True iff free(d) - branched(cover) = (q/2) D''_k(1). Arithmetic only; the
/// caller asserts that cover describes the n-fold branched cover Y_n.
bool branched_free_relation(const FreeQuotientData& d, const BranchedQuotientData& cover);

/// lambda_FO(X_tau) = lambda^tau(Sigma).
Rational furuta_ohta_mapping_torus(const QuotientData& d);

/// Throws NonIntegralInvariant if lambda_FO is not an integer.
MappingTorusReport conjecture1_check(const QuotientData& d, bool rho_sigma);

/// Same invariants without the integrality error: the report flags them.
MappingTorusReport mapping_torus_report(const QuotientData& d, bool rho_sigma);

/// Orientation reversal: negate lambda, mirror the knot (negate the spectrum),
/// and for free quotients negate q.
QuotientData reverse(const QuotientData& d);

bool orientation_reversal_check(const QuotientData& d);

} // namespace casson
