#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace kcr {

using Integer = mpz_class;

// Dense row-major matrix of arbitrary-precision integers. Empty shapes
// (0 x n, n x 0) are valid; they show up at the ends of chain complexes.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }
    static IntMatrix identity(std::size_t n);
    static IntMatrix diagonal(std::size_t rows, std::size_t cols, const std::vector<Integer>& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<Integer>& entries() const { return data_; }

    IntMatrix transpose() const;
    IntMatrix submatrix(const std::vector<std::size_t>& row_idx,
                        const std::vector<std::size_t>& col_idx) const;
    bool is_zero() const;

    // In-place elementary operations; used by the SNF elimination.
    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);
    void add_col_multiple(std::size_t target, std::size_t source, const Integer& factor);
    void negate_row(std::size_t r);

    std::string to_string() const;

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

// Throws std::invalid_argument on inner-dimension mismatch.
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
inline IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) { return mat_mul(a, b); }

IntMatrix operator-(const IntMatrix& a);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);

// Concatenates a grid of blocks. Every block in a grid row must share a row
// count and every block in a grid column a column count; throws
// std::invalid_argument otherwise.
IntMatrix block_matrix(const std::vector<std::vector<IntMatrix>>& blocks);

// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(const IntMatrix& a);

// Rank over the rationals, computed fraction-free.
std::size_t rational_rank(const IntMatrix& a);

// gcd of all order x order minors (0 when they all vanish). The product of
// the first `order` invariant factors equals this value, which makes it the
// reference oracle for snf(). Throws std::out_of_range unless
// 1 <= order <= min(rows, cols).
Integer determinantal_divisor(const IntMatrix& a, std::size_t order);

struct SnfDecomposition {
    // min(rows, cols) nonnegative entries, each dividing the next.
    std::vector<Integer> diagonal;
    std::size_t rank = 0;
    // left * A * right == diag(diagonal); both unimodular.
    std::optional<IntMatrix> left;
    std::optional<IntMatrix> right;
    // Inverse of `right`, tracked alongside it so kernel coordinates can be
    // read off without a separate inversion.
    std::optional<IntMatrix> right_inverse;

    // Product d_1 ... d_i of the first i invariant factors.
    Integer leading_product(std::size_t i) const;
};

SnfDecomposition snf(const IntMatrix& a, bool want_transforms = false);

// Rank over GF(2) of the matrix reduced mod 2.
std::size_t rank_mod2(const IntMatrix& a);

}  // namespace kcr
