#pragma once

#include <cstddef>
#include <vector>

#include "casson/laurent.hpp"
#include "casson/numbers.hpp"

namespace casson {

/// Integer coefficients (constant term first) of the n-th cyclotomic polynomial.
std::vector<Integer> cyclotomic_polynomial(int n);

/// An element of Q(zeta_n) in the power basis 1, zeta, ..., zeta^(d-1), d = phi(n).
struct CycloElement {
    std::vector<Rational> coeffs;

    friend bool operator==(const CycloElement&, const CycloElement&) = default;
};

/// Q(zeta_n), zeta_n = exp(2 pi i / n). Elements are reduced modulo the
/// cyclotomic polynomial, so zero-testing is exact.
class CyclotomicField {
public:
    explicit CyclotomicField(int order);

    int order() const noexcept { return order_; }
    std::size_t degree() const noexcept { return modulus_.size() - 1; }
    const std::vector<Integer>& modulus() const noexcept { return modulus_; }

    CycloElement zero() const;
    CycloElement one() const;
    CycloElement from_rational(const Rational& r) const;
    // zeta^k for any integer k
    CycloElement root_power(long k) const;

    // Reduce an arbitrary-length polynomial in zeta.
    CycloElement reduce(std::vector<Rational> poly) const;

    CycloElement add(const CycloElement& a, const CycloElement& b) const;
    CycloElement sub(const CycloElement& a, const CycloElement& b) const;
    CycloElement neg(const CycloElement& a) const;
    CycloElement mul(const CycloElement& a, const CycloElement& b) const;
    CycloElement scale(const CycloElement& a, const Rational& c) const;
    // Throws InvalidArgument on zero.
    CycloElement inverse(const CycloElement& a) const;
    // Complex conjugation, zeta -> zeta^-1.
    CycloElement conj(const CycloElement& a) const;

    bool is_zero(const CycloElement& a) const;
    bool is_real(const CycloElement& a) const;

    /// p(zeta^k), exactly.
    CycloElement evaluate(const LaurentPolynomial& p, long k) const;

private:
    int order_;
    std::vector<Integer> modulus_;
};

} // namespace casson
