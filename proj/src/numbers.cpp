#include "casson/numbers.hpp"

#include <numeric>

#include "casson/errors.hpp"

namespace casson {

Rational make_rational(const Integer& numerator, const Integer& denominator)
{
    if (denominator == 0)
        throw Error(ErrorCode::InvalidArgument, "zero denominator");
    Rational r(numerator, denominator);
    r.canonicalize();
    return r;
}

bool is_integral(const Rational& r)
{
    return r.get_den() == 1;
}

Integer to_integer(const Rational& r, const char* what)
{
    if (!is_integral(r))
        throw Error(ErrorCode::NonIntegral, std::string(what) + " = " + to_string(r) + " is not an integer");
    return r.get_num();
}

Integer mod(const Integer& a, long m)
{
    Integer r = a % m;
    if (r < 0)
        r += m;
    return r;
}

bool is_odd(const Integer& a)
{
    return mpz_odd_p(a.get_mpz_t()) != 0;
}

std::string to_string(const Integer& z)
{
    return z.get_str();
}

std::string to_string(const Rational& r)
{
    return r.get_str();
}

Rational parse_rational(const std::string& text)
{
    Rational r;
    if (text.empty() || r.set_str(text, 10) != 0)
        throw Error(ErrorCode::ParseError, "not a rational: '" + text + "'");
    if (r.get_den() == 0)
        throw Error(ErrorCode::ParseError, "zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
}

std::int64_t to_int64(const Integer& z)
{
    if (!z.fits_slong_p())
        throw Error(ErrorCode::InvalidArgument, "integer out of 64-bit range: " + z.get_str());
    return z.get_si();
}

long gcd(long a, long b)
{
    return std::gcd(a, b);
}

} // namespace casson
