#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace casson {

/// Dense matrix over GF(2), one byte per entry.
class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols);
    F2Matrix(std::initializer_list<std::initializer_list<int>> rows);

    static F2Matrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    bool get(std::size_t i, std::size_t j) const { return bits_[i * cols_ + j] != 0; }
    void set(std::size_t i, std::size_t j, bool v) { bits_[i * cols_ + j] = v ? 1 : 0; }
    void flip(std::size_t i, std::size_t j) { bits_[i * cols_ + j] ^= 1; }

    F2Matrix transpose() const;

    // Reduced row echelon form.
    F2Matrix row_reduced() const;

    friend bool operator==(const F2Matrix&, const F2Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::uint8_t> bits_;
};

std::size_t f2_rank(const F2Matrix& m);

F2Matrix operator*(const F2Matrix& a, const F2Matrix& b);

} // namespace casson
