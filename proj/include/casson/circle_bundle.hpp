#pragma once

#include <string>
#include <vector>

#include "casson/laurent.hpp"
#include "casson/numbers.hpp"
#include "casson/seifert.hpp"

namespace casson {

/// Euler-number-e circle bundle over Y = 0-surgery on knot.
struct CircleBundleData {
    SeifertMatrix knot;
    Integer euler = 1;
};

struct VanishingCertificate {
    LaurentPolynomial alexander;
    bool arf = false;
    Integer alexander_second_derivative;
    std::vector<std::string> notes;
};

struct CircleBundleResult {
    Integer value;
    VanishingCertificate certificate;
};

/// rho(X) = 0, certified by arf(k) = 0. Throws BadEuler, NonTrivialAlexander.
CircleBundleResult circle_bundle_rho(const CircleBundleData& d);

/// lambda_FO(X) = 0, certified by D''_k(1) = 0. Throws BadEuler, NonTrivialAlexander.
CircleBundleResult circle_bundle_furuta_ohta(const CircleBundleData& d);

} // namespace casson
