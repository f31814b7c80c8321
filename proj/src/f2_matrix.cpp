#include "casson/f2_matrix.hpp"

#include <utility>

#include "casson/errors.hpp"

namespace casson {

F2Matrix::F2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), bits_(rows * cols, 0)
{
}

F2Matrix::F2Matrix(std::initializer_list<std::initializer_list<int>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    bits_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_)
            throw Error(ErrorCode::SizeMismatch, "ragged F2 matrix");
        for (int v : row)
            bits_.push_back(static_cast<std::uint8_t>(v & 1));
    }
}

F2Matrix F2Matrix::identity(std::size_t n)
{
    F2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i, true);
    return m;
}

F2Matrix F2Matrix::transpose() const
{
    F2Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t.set(j, i, get(i, j));
    return t;
}

F2Matrix F2Matrix::row_reduced() const
{
    F2Matrix m = *this;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols_ && pivot_row < rows_; ++col) {
        std::size_t r = pivot_row;
        while (r < rows_ && !m.get(r, col))
            ++r;
        if (r == rows_)
            continue;
        if (r != pivot_row)
            for (std::size_t j = 0; j < cols_; ++j)
                std::swap(m.bits_[r * cols_ + j], m.bits_[pivot_row * cols_ + j]);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == pivot_row || !m.get(i, col))
                continue;
            for (std::size_t j = col; j < cols_; ++j)
                m.bits_[i * cols_ + j] ^= m.bits_[pivot_row * cols_ + j];
        }
        ++pivot_row;
    }
    return m;
}

std::size_t f2_rank(const F2Matrix& m)
{
    const F2Matrix r = m.row_reduced();
    std::size_t rank = 0;
    for (std::size_t i = 0; i < r.rows(); ++i) {
        bool nonzero = false;
        for (std::size_t j = 0; j < r.cols() && !nonzero; ++j)
            nonzero = r.get(i, j);
        if (nonzero)
            ++rank;
    }
    return rank;
}

F2Matrix operator*(const F2Matrix& a, const F2Matrix& b)
{
    if (a.cols() != b.rows())
        throw Error(ErrorCode::SizeMismatch, "F2 product dimensions");
    F2Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (a.get(i, k))
                for (std::size_t j = 0; j < b.cols(); ++j)
                    if (b.get(k, j))
                        c.flip(i, j);
    return c;
}

} // namespace casson
