#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include "casson/numbers.hpp"

namespace casson {

/// Integer Laurent polynomial in t, stored sparsely by exponent.
/// Zero coefficients are never stored, so equality is coefficient-wise.
class LaurentPolynomial {
public:
    using Terms = std::map<int, Integer>;

    LaurentPolynomial() = default;
    LaurentPolynomial(std::initializer_list<std::pair<int, long>> terms);
    explicit LaurentPolynomial(Terms terms);

    static LaurentPolynomial constant(const Integer& c);
    static LaurentPolynomial monomial(const Integer& c, int exponent);

    const Terms& terms() const noexcept { return terms_; }
    Integer coefficient(int exponent) const;
    bool is_zero() const noexcept { return terms_.empty(); }

    // Undefined on the zero polynomial.
    int min_exponent() const;
    int max_exponent() const;

    Integer at_one() const;
    Integer at_minus_one() const;

    // t^m * p
    LaurentPolynomial shifted(int m) const;
    // p(t^-1)
    LaurentPolynomial reflected() const;

    LaurentPolynomial operator-() const;
    LaurentPolynomial& operator+=(const LaurentPolynomial& other);
    LaurentPolynomial& operator-=(const LaurentPolynomial& other);
    LaurentPolynomial& operator*=(const LaurentPolynomial& other);

    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
    friend LaurentPolynomial operator*(LaurentPolynomial a, const LaurentPolynomial& b) { return a *= b; }
    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a.terms_ == b.terms_; }

    /// Highest power first, e.g. "t^2 - t + 1 - t^-1 + t^-2".
    std::string to_string() const;

private:
    void add_term(int exponent, const Integer& c);

    Terms terms_;
};

/// Multiplies p by the unit u*t^m that makes it palindromic with value 1 at t = 1.
/// Throws NotSymmetrizable when no unit multiple is palindromic, and
/// NotUnimodularAtOne when |p(1)| != 1.
LaurentPolynomial laurent_normalize_symmetric(const LaurentPolynomial& p);

Integer first_derivative_at_one(const LaurentPolynomial& p);

/// Sum of e(e-1) * coeff(e): the exact second derivative at t = 1.
Integer second_derivative_at_one(const LaurentPolynomial& p);

} // namespace casson
