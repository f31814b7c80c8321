#pragma once

#include <cstddef>
#include <vector>

#include "casson/cyclotomic.hpp"

namespace casson {

enum class Sign { negative = -1, zero = 0, positive = 1 };

/// Sign of a real algebraic number with its proof. A nonzero value carries a
/// rational enclosure [lower, upper] (dyadic endpoints from directed-rounding
/// evaluation) excluding 0; a zero carries only the exact-identity flag.
struct CertifiedSign {
    Sign value = Sign::zero;
    Rational lower;
    Rational upper;
    unsigned precision_bits = 0;
    bool exact_zero = false;
};

/// Signs a real element of Q(zeta_n). Exact zero-test first, then interval
/// evaluation at 64, 128, 256, ... bits until the enclosure excludes 0.
/// Throws InvalidArgument if the element is not real.
CertifiedSign certify_sign(const CyclotomicField& field, const CycloElement& x);

/// Square matrix over Q(zeta_n).
class CycloMatrix {
public:
    CycloMatrix(CyclotomicField field, std::size_t dim);

    const CyclotomicField& field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return dim_; }

    CycloElement& at(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
    const CycloElement& at(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

    bool is_hermitian() const;

private:
    CyclotomicField field_;
    std::size_t dim_;
    std::vector<CycloElement> entries_;
};

struct Inertia {
    std::size_t n_plus = 0;
    std::size_t n_minus = 0;
    std::size_t n_zero = 0;

    long signature() const { return static_cast<long>(n_plus) - static_cast<long>(n_minus); }
    friend bool operator==(const Inertia&, const Inertia&) = default;
};

struct SignatureCertificate {
    Inertia inertia;
    // One certified sign per congruence pivot; n_zero is the exact corank.
    std::vector<CertifiedSign> pivots;
};

/// Exact inertia of a Hermitian matrix over Q(zeta_n). Throws NotHermitian.
Inertia certified_signature(const CycloMatrix& h);
SignatureCertificate certified_signature_with_certificate(const CycloMatrix& h);

} // namespace casson
