#pragma once

#include <vector>

#include "casson/numbers.hpp"
#include "casson/seifert.hpp"

namespace casson {

// Y_{i+1} = Y_i + (1/q) k, starting from S^3.
struct SurgeryStep {
    SeifertMatrix knot;
    Integer q;
};

struct SurgeryPresentation {
    std::vector<SurgeryStep> steps;

    // Throws InvalidArgument on q = 0.
    void validate() const;
    SurgeryPresentation reversed() const;
    SurgeryPresentation concatenated(const SurgeryPresentation& tail) const;
};

struct SphereInvariants {
    Integer casson;
    bool rohlin = false;
    bool congruent = true;
};

/// Casson contribution (q/2) D''(1) of a single (1/q)-surgery.
Integer casson_step(const SeifertMatrix& knot, const Integer& q);

Integer casson(const SurgeryPresentation& p);
bool rohlin(const SurgeryPresentation& p);

/// sign(k)/8 for the branch knot of a Seifert fibered double cover.
/// Throws NonIntegral when the signature is not divisible by 8.
Rational mubar_double_branched(const SeifertMatrix& branch);

/// Rohlin invariant of the double branched cover of S^3 along k, read off the
/// even form S + S^T of the spin 4-manifold covering B^4. Throws InvalidArgument
/// if the cover is not a homology sphere (|det(S + S^T)| != 1).
bool rohlin_double_branched(const SeifertMatrix& branch);

SphereInvariants check_casson_rohlin(const SurgeryPresentation& p);

} // namespace casson
