#pragma once

#include <cstddef>
#include <vector>

#include "casson/numbers.hpp"

namespace casson {

// Row-major square integer matrix, used for exact determinants.
struct IntegerMatrix {
    std::size_t dim = 0;
    std::vector<Integer> entries;

    explicit IntegerMatrix(std::size_t n = 0) : dim(n), entries(n * n) {}

    Integer& at(std::size_t i, std::size_t j) { return entries[i * dim + j]; }
    const Integer& at(std::size_t i, std::size_t j) const { return entries[i * dim + j]; }
};

// Fraction-free (Bareiss) elimination; the empty matrix has determinant 1.
Integer determinant(IntegerMatrix m);

} // namespace casson
