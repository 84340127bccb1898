#include "kcr/intmat.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace kcr {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw std::invalid_argument("IntMatrix: ragged initializer");
        for (long v : r) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::diagonal(std::size_t rows, std::size_t cols, const std::vector<Integer>& d) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < d.size() && i < rows && i < cols; ++i) m(i, i) = d[i];
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::submatrix(const std::vector<std::size_t>& row_idx,
                               const std::vector<std::size_t>& col_idx) const {
    IntMatrix s(row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        for (std::size_t j = 0; j < col_idx.size(); ++j) s(i, j) = (*this)(row_idx[i], col_idx[j]);
    return s;
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return sgn(x) == 0; });
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const Integer& factor) {
    if (sgn(factor) == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(target, j) += factor * (*this)(source, j);
}

void IntMatrix::add_col_multiple(std::size_t target, std::size_t source, const Integer& factor) {
    if (sgn(factor) == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, target) += factor * (*this)(i, source);
}

void IntMatrix::negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
        os << ']';
    }
    os << ']';
    return os.str();
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("mat_mul: inner dimensions differ (" + std::to_string(a.cols()) +
                                    " vs " + std::to_string(b.rows()) + ")");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Integer& aik = a(i, k);
            if (sgn(aik) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

IntMatrix operator-(const IntMatrix& a) {
    IntMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = -a(i, j);
    return r;
}

static void require_same_shape(const IntMatrix& a, const IntMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument(std::string(op) + ": shape mismatch");
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    require_same_shape(a, b, "operator+");
    IntMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
    return r;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    require_same_shape(a, b, "operator-");
    IntMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) - b(i, j);
    return r;
}

IntMatrix block_matrix(const std::vector<std::vector<IntMatrix>>& blocks) {
    if (blocks.empty()) return {};
    const std::size_t grid_cols = blocks.front().size();
    std::vector<std::size_t> row_heights(blocks.size()), col_widths(grid_cols);
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
        if (blocks[bi].size() != grid_cols)
            throw std::invalid_argument("block_matrix: ragged block grid");
        for (std::size_t bj = 0; bj < grid_cols; ++bj) {
            const IntMatrix& b = blocks[bi][bj];
            if (bj == 0) row_heights[bi] = b.rows();
            else if (b.rows() != row_heights[bi])
                throw std::invalid_argument("block_matrix: row heights differ in block row " +
                                            std::to_string(bi));
            if (bi == 0) col_widths[bj] = b.cols();
            else if (b.cols() != col_widths[bj])
                throw std::invalid_argument("block_matrix: column widths differ in block column " +
                                            std::to_string(bj));
        }
    }
    const std::size_t total_rows = std::accumulate(row_heights.begin(), row_heights.end(), std::size_t{0});
    const std::size_t total_cols = std::accumulate(col_widths.begin(), col_widths.end(), std::size_t{0});
    IntMatrix m(total_rows, total_cols);
    std::size_t r0 = 0;
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
        std::size_t c0 = 0;
        for (std::size_t bj = 0; bj < grid_cols; ++bj) {
            const IntMatrix& b = blocks[bi][bj];
            for (std::size_t i = 0; i < b.rows(); ++i)
                for (std::size_t j = 0; j < b.cols(); ++j) m(r0 + i, c0 + j) = b(i, j);
            c0 += col_widths[bj];
        }
        r0 += row_heights[bi];
    }
    return m;
}

Integer determinant(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix is not square");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    IntMatrix m = a;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(m(k, k)) == 0) {
            std::size_t swap_with = k + 1;
            while (swap_with < n && sgn(m(swap_with, k)) == 0) ++swap_with;
            if (swap_with == n) return 0;
            m.swap_rows(k, swap_with);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = v;
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

std::size_t rational_rank(const IntMatrix& a) {
    IntMatrix m = a;
    std::size_t rank = 0;
    Integer prev = 1;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t piv = rank;
        while (piv < m.rows() && sgn(m(piv, col)) == 0) ++piv;
        if (piv == m.rows()) continue;
        m.swap_rows(rank, piv);
        for (std::size_t i = rank + 1; i < m.rows(); ++i) {
            for (std::size_t j = col + 1; j < m.cols(); ++j) {
                Integer v = m(i, j) * m(rank, col) - m(i, col) * m(rank, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = v;
            }
            m(i, col) = 0;
        }
        prev = m(rank, col);
        ++rank;
    }
    return rank;
}

namespace {

// Advances `idx` (sorted, distinct, values < n) to the next combination.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

Integer determinantal_divisor(const IntMatrix& a, std::size_t order) {
    if (order == 0 || order > std::min(a.rows(), a.cols()))
        throw std::out_of_range("determinantal_divisor: order " + std::to_string(order) +
                                " outside [1, " + std::to_string(std::min(a.rows(), a.cols())) + "]");
    Integer g = 0;
    std::vector<std::size_t> ri(order);
    std::iota(ri.begin(), ri.end(), std::size_t{0});
    do {
        std::vector<std::size_t> ci(order);
        std::iota(ci.begin(), ci.end(), std::size_t{0});
        do {
            Integer minor = determinant(a.submatrix(ri, ci));
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), minor.get_mpz_t());
            if (g == 1) return g;
        } while (next_combination(ci, a.cols()));
    } while (next_combination(ri, a.rows()));
    return g;
}

Integer SnfDecomposition::leading_product(std::size_t i) const {
    Integer p = 1;
    for (std::size_t j = 0; j < i && j < diagonal.size(); ++j) p *= diagonal[j];
    return p;
}

namespace {

// Elimination state: the working matrix plus the optional transforms.
// Row operations act on `m` and `left`; column operations on `m` and
// `right`, with the inverse operation applied to the rows of `right_inv`.
struct SnfWork {
    IntMatrix m;
    IntMatrix left, right, right_inv;
    bool track;

    void swap_rows(std::size_t a, std::size_t b) {
        m.swap_rows(a, b);
        if (track) left.swap_rows(a, b);
    }
    void swap_cols(std::size_t a, std::size_t b) {
        m.swap_cols(a, b);
        if (track) {
            right.swap_cols(a, b);
            right_inv.swap_rows(a, b);
        }
    }
    // row_target += f * row_source
    void add_row(std::size_t target, std::size_t source, const Integer& f) {
        m.add_row_multiple(target, source, f);
        if (track) left.add_row_multiple(target, source, f);
    }
    // col_target += f * col_source
    void add_col(std::size_t target, std::size_t source, const Integer& f) {
        m.add_col_multiple(target, source, f);
        if (track) {
            right.add_col_multiple(target, source, f);
            right_inv.add_row_multiple(source, target, -f);
        }
    }
    void negate_row(std::size_t r) {
        m.negate_row(r);
        if (track) left.negate_row(r);
    }
};

// Location of the entry of least nonzero absolute value in the trailing
// submatrix starting at (t, t); false when that submatrix is zero.
bool least_pivot(const IntMatrix& m, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Integer best;
    for (std::size_t i = t; i < m.rows(); ++i)
        for (std::size_t j = t; j < m.cols(); ++j) {
            const Integer& v = m(i, j);
            if (sgn(v) == 0) continue;
            if (!found || mpz_cmpabs(v.get_mpz_t(), best.get_mpz_t()) < 0) {
                best = abs(v);
                pi = i;
                pj = j;
                found = true;
                if (best == 1) return true;
            }
        }
    return found;
}

}  // namespace

SnfDecomposition snf(const IntMatrix& a, bool want_transforms) {
    const std::size_t r = a.rows(), c = a.cols();
    SnfWork w{a, {}, {}, {}, want_transforms};
    if (want_transforms) {
        w.left = IntMatrix::identity(r);
        w.right = IntMatrix::identity(c);
        w.right_inv = IntMatrix::identity(c);
    }

    const std::size_t diag_len = std::min(r, c);
    std::size_t t = 0;
    for (; t < diag_len; ++t) {
        std::size_t pi = 0, pj = 0;
        if (!least_pivot(w.m, t, pi, pj)) break;
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);

        for (;;) {
            // Clear column t below the pivot and row t right of it, keeping
            // the remainders. Any nonzero remainder is strictly smaller than
            // the pivot and becomes the next pivot.
            Integer q;
            bool remainder = false;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (sgn(w.m(i, t)) == 0) continue;
                mpz_tdiv_q(q.get_mpz_t(), w.m(i, t).get_mpz_t(), w.m(t, t).get_mpz_t());
                w.add_row(i, t, -q);
                if (sgn(w.m(i, t)) != 0) remainder = true;
            }
            for (std::size_t j = t + 1; j < c; ++j) {
                if (sgn(w.m(t, j)) == 0) continue;
                mpz_tdiv_q(q.get_mpz_t(), w.m(t, j).get_mpz_t(), w.m(t, t).get_mpz_t());
                w.add_col(j, t, -q);
                if (sgn(w.m(t, j)) != 0) remainder = true;
            }
            if (remainder) {
                std::size_t bi = t, bj = t;
                for (std::size_t i = t + 1; i < r; ++i)
                    if (sgn(w.m(i, t)) != 0 && mpz_cmpabs(w.m(i, t).get_mpz_t(), w.m(bi, bj).get_mpz_t()) < 0) bi = i, bj = t;
                for (std::size_t j = t + 1; j < c; ++j)
                    if (sgn(w.m(t, j)) != 0 && mpz_cmpabs(w.m(t, j).get_mpz_t(), w.m(bi, bj).get_mpz_t()) < 0) bi = t, bj = j;
                w.swap_rows(t, bi);
                w.swap_cols(t, bj);
                continue;
            }
            // Row and column are clear; the pivot must divide the rest of the
            // trailing block, otherwise fold the offending row in and retry.
            bool folded = false;
            for (std::size_t i = t + 1; i < r && !folded; ++i)
                for (std::size_t j = t + 1; j < c; ++j) {
                    if (!mpz_divisible_p(w.m(i, j).get_mpz_t(), w.m(t, t).get_mpz_t())) {
                        w.add_row(t, i, 1);
                        folded = true;
                        break;
                    }
                }
            if (!folded) break;
        }
        if (sgn(w.m(t, t)) < 0) w.negate_row(t);
    }

    SnfDecomposition out;
    out.rank = t;
    out.diagonal.assign(diag_len, Integer(0));
    for (std::size_t i = 0; i < t; ++i) out.diagonal[i] = w.m(i, i);
    if (want_transforms) {
        out.left = std::move(w.left);
        out.right = std::move(w.right);
        out.right_inverse = std::move(w.right_inv);
    }
    return out;
}

std::size_t rank_mod2(const IntMatrix& a) {
    std::vector<std::vector<unsigned char>> m(a.rows(), std::vector<unsigned char>(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = mpz_odd_p(a(i, j).get_mpz_t()) ? 1 : 0;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
        std::size_t piv = rank;
        while (piv < a.rows() && !m[piv][col]) ++piv;
        if (piv == a.rows()) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t i = 0; i < a.rows(); ++i)
            if (i != rank && m[i][col])
                for (std::size_t j = col; j < a.cols(); ++j) m[i][j] ^= m[rank][j];
        ++rank;
    }
    return rank;
}

}  // namespace kcr
