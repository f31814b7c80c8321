#include "casson/integer_matrix.hpp"

#include <utility>

namespace casson {

Integer determinant(IntegerMatrix m)
{
    const std::size_t n = m.dim;
    if (n == 0)
        return 1;
    Integer previous = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && m.at(r, k) == 0)
                ++r;
            if (r == n)
                return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m.at(k, j), m.at(r, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
                m.at(i, j) = std::move(v);
            }
        }
        previous = m.at(k, k);
    }
    Integer d = m.at(n - 1, n - 1);
    return sign < 0 ? Integer(-d) : d;
}

} // namespace casson
