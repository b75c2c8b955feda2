#pragma once

// Dense matrices over a small prime field F_p.

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace nakayama::oracle
{

class fp_matrix
{
public:
    fp_matrix() = default;
    fp_matrix(int rows, int cols, std::uint32_t p) : rows_(rows), cols_(cols), p_(p), a_(std::size_t(rows) * cols, 0u) {}

    static fp_matrix identity(int n, std::uint32_t p)
    {
        fp_matrix m(n, n, p);
        for (int i = 0; i < n; ++i) {
            m(i, i) = 1;
        }
        return m;
    }

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    std::uint32_t prime() const noexcept { return p_; }

    std::uint32_t &operator()(int r, int c) { return a_[std::size_t(r) * cols_ + c]; }
    std::uint32_t operator()(int r, int c) const { return a_[std::size_t(r) * cols_ + c]; }

    bool is_zero() const
    {
        for (auto x : a_) {
            if (x) {
                return false;
            }
        }
        return true;
    }

    friend bool operator==(const fp_matrix &, const fp_matrix &) = default;

    friend fp_matrix operator*(const fp_matrix &a, const fp_matrix &b)
    {
        assert(a.cols_ == b.rows_);
        fp_matrix c(a.rows_, b.cols_, a.p_);
        for (int i = 0; i < a.rows_; ++i) {
            for (int k = 0; k < a.cols_; ++k) {
                const std::uint32_t x = a(i, k);
                if (!x) {
                    continue;
                }
                for (int j = 0; j < b.cols_; ++j) {
                    c(i, j) = (c(i, j) + x * b(k, j)) % a.p_;
                }
            }
        }
        return c;
    }

    friend fp_matrix operator-(const fp_matrix &a, const fp_matrix &b)
    {
        fp_matrix c = a;
        for (std::size_t i = 0; i < c.a_.size(); ++i) {
            c.a_[i] = (a.a_[i] + a.p_ - b.a_[i]) % a.p_;
        }
        return c;
    }

    fp_matrix transpose() const
    {
        fp_matrix t(cols_, rows_, p_);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) {
                t(j, i) = (*this)(i, j);
            }
        }
        return t;
    }

    std::uint32_t inverse(std::uint32_t x) const
    {
        // Fermat: x^(p-2)
        std::uint32_t r = 1;
        std::uint32_t b = x % p_;
        for (std::uint32_t e = p_ - 2; e; e >>= 1) {
            if (e & 1u) {
                r = r * b % p_;
            }
            b = b * b % p_;
        }
        return r;
    }

    // Reduced row echelon form in place; returns the pivot columns.
    std::vector<int> rref()
    {
        std::vector<int> pivots;
        int row = 0;
        for (int col = 0; col < cols_ && row < rows_; ++col) {
            int sel = -1;
            for (int r = row; r < rows_; ++r) {
                if ((*this)(r, col)) {
                    sel = r;
                    break;
                }
            }
            if (sel < 0) {
                continue;
            }
            if (sel != row) {
                for (int c = 0; c < cols_; ++c) {
                    std::swap((*this)(sel, c), (*this)(row, c));
                }
            }
            const std::uint32_t inv = inverse((*this)(row, col));
            for (int c = 0; c < cols_; ++c) {
                (*this)(row, c) = (*this)(row, c) * inv % p_;
            }
            for (int r = 0; r < rows_; ++r) {
                const std::uint32_t f = (*this)(r, col);
                if (r == row || !f) {
                    continue;
                }
                for (int c = 0; c < cols_; ++c) {
                    (*this)(r, c) = ((*this)(r, c) + p_ - f * (*this)(row, c) % p_) % p_;
                }
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    int rank() const
    {
        fp_matrix m = *this;
        return static_cast<int>(m.rref().size());
    }

    // Basis of the right null space, as the columns of the returned matrix.
    fp_matrix nullspace() const
    {
        fp_matrix m = *this;
        const std::vector<int> pivots = m.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (int c : pivots) {
            is_pivot[c] = true;
        }
        std::vector<int> free;
        for (int c = 0; c < cols_; ++c) {
            if (!is_pivot[c]) {
                free.push_back(c);
            }
        }
        fp_matrix basis(cols_, static_cast<int>(free.size()), p_);
        for (std::size_t k = 0; k < free.size(); ++k) {
            basis(free[k], int(k)) = 1;
            for (std::size_t r = 0; r < pivots.size(); ++r) {
                basis(pivots[r], int(k)) = (p_ - m(int(r), free[k])) % p_;
            }
        }
        return basis;
    }

    // Columns of other appended to the right.
    fp_matrix hconcat(const fp_matrix &other) const
    {
        assert(rows_ == other.rows_);
        fp_matrix c(rows_, cols_ + other.cols_, p_);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) {
                c(i, j) = (*this)(i, j);
            }
            for (int j = 0; j < other.cols_; ++j) {
                c(i, cols_ + j) = other(i, j);
            }
        }
        return c;
    }

    fp_matrix column(int j) const
    {
        fp_matrix c(rows_, 1, p_);
        for (int i = 0; i < rows_; ++i) {
            c(i, 0) = (*this)(i, j);
        }
        return c;
    }

    // Solves basis * x = rhs column by column; throws if some column is outside the span.
    // The columns of basis must be linearly independent.
    static fp_matrix coordinates(const fp_matrix &basis, const fp_matrix &rhs)
    {
        const int n = basis.cols_;
        fp_matrix aug = basis.hconcat(rhs);
        const std::vector<int> pivots = aug.rref();
        for (int c : pivots) {
            if (c >= n) {
                throw std::logic_error("vector outside the span of the basis");
            }
        }
        fp_matrix x(n, rhs.cols_, basis.p_);
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            for (int j = 0; j < rhs.cols_; ++j) {
                x(pivots[r], j) = aug(int(r), n + j);
            }
        }
        return x;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::uint32_t p_ = 2;
    std::vector<std::uint32_t> a_;
};

} // namespace nakayama::oracle
