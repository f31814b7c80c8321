#include "casson/laurent.hpp"

#include <sstream>

#include "casson/errors.hpp"

namespace casson {

LaurentPolynomial::LaurentPolynomial(std::initializer_list<std::pair<int, long>> terms)
{
    for (const auto& [e, c] : terms)
        add_term(e, Integer(c));
}

LaurentPolynomial::LaurentPolynomial(Terms terms)
{
    for (auto& [e, c] : terms)
        add_term(e, c);
}

LaurentPolynomial LaurentPolynomial::constant(const Integer& c)
{
    return monomial(c, 0);
}

LaurentPolynomial LaurentPolynomial::monomial(const Integer& c, int exponent)
{
    LaurentPolynomial p;
    p.add_term(exponent, c);
    return p;
}

void LaurentPolynomial::add_term(int exponent, const Integer& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Integer LaurentPolynomial::coefficient(int exponent) const
{
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Integer(0) : it->second;
}

int LaurentPolynomial::min_exponent() const
{
    return terms_.begin()->first;
}

int LaurentPolynomial::max_exponent() const
{
    return terms_.rbegin()->first;
}

Integer LaurentPolynomial::at_one() const
{
    Integer s = 0;
    for (const auto& [e, c] : terms_)
        s += c;
    return s;
}

Integer LaurentPolynomial::at_minus_one() const
{
    Integer s = 0;
    for (const auto& [e, c] : terms_)
        s += (e % 2 == 0) ? c : Integer(-c);
    return s;
}

LaurentPolynomial LaurentPolynomial::shifted(int m) const
{
    LaurentPolynomial out;
    for (const auto& [e, c] : terms_)
        out.terms_.emplace(e + m, c);
    return out;
}

LaurentPolynomial LaurentPolynomial::reflected() const
{
    LaurentPolynomial out;
    for (const auto& [e, c] : terms_)
        out.terms_.emplace(-e, c);
    return out;
}

LaurentPolynomial LaurentPolynomial::operator-() const
{
    LaurentPolynomial out;
    for (const auto& [e, c] : terms_)
        out.terms_.emplace(e, -c);
    return out;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other)
{
    for (const auto& [e, c] : other.terms_)
        add_term(e, c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other)
{
    for (const auto& [e, c] : other.terms_)
        add_term(e, -c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& other)
{
    LaurentPolynomial out;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : other.terms_)
            out.add_term(e1 + e2, c1 * c2);
    *this = std::move(out);
    return *this;
}

std::string LaurentPolynomial::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const int e = it->first;
        Integer c = it->second;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0)
                c = -c;
        }
        first = false;
        if (e == 0) {
            os << c.get_str();
            continue;
        }
        if (c != 1)
            os << c.get_str();
        os << "t";
        if (e != 1)
            os << "^" << e;
    }
    return os.str();
}

LaurentPolynomial laurent_normalize_symmetric(const LaurentPolynomial& p)
{
    if (p.is_zero())
        throw Error(ErrorCode::NotSymmetrizable, "zero polynomial");
    const int span = p.min_exponent() + p.max_exponent();
    if (span % 2 != 0)
        throw Error(ErrorCode::NotSymmetrizable, p.to_string() + " has odd exponent span");
    LaurentPolynomial q = p.shifted(-span / 2);
    if (!(q == q.reflected()))
        throw Error(ErrorCode::NotSymmetrizable, p.to_string() + " has no palindromic unit multiple");
    const Integer v = q.at_one();
    if (v == -1)
        q = -q;
    else if (v != 1)
        throw Error(ErrorCode::NotUnimodularAtOne, p.to_string() + " evaluates to " + v.get_str() + " at t = 1");
    return q;
}

Integer first_derivative_at_one(const LaurentPolynomial& p)
{
    Integer s = 0;
    for (const auto& [e, c] : p.terms())
        s += c * e;
    return s;
}

Integer second_derivative_at_one(const LaurentPolynomial& p)
{
    Integer s = 0;
    for (const auto& [e, c] : p.terms())
        s += c * (Integer(e) * (e - 1));
    return s;
}

} // namespace casson
