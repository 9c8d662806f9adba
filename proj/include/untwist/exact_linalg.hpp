#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "untwist/core.hpp"
#include "untwist/laurent.hpp"

namespace untwist {

template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != rows_ * cols_)
            throw Error("matrix entry count does not match dimensions");
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }

    Matrix transposed() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw Error("matrix dimension mismatch in addition");
        Matrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i)
            r.data_[i] = a.data_[i] + b.data_[i];
        return r;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw Error("matrix dimension mismatch in multiplication");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T(0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    r(i, j) += aik * b(k, j);
            }
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    bool is_symmetric() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using LaurentMatrix = Matrix<LaurentPoly>;
using RationalMatrix = Matrix<Rational>;
using RationalLaurentMatrix = Matrix<RationalLaurentPoly>;

inline bool is_hermitian(const LaurentMatrix& m) {
    if (!m.is_square()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != m(j, i).involute()) return false;
    return true;
}

// Fraction-free Bareiss elimination; the 0x0 determinant is 1.
inline Int det(const IntMatrix& m) {
    if (!m.is_square()) throw Error("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Int(1);
    IntMatrix a = m;
    Int prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && a(pivot, k) == 0) ++pivot;
            if (pivot == n) return Int(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(pivot, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

namespace detail {

// Laplace expansion with memoization over column subsets; division-free, so
// it works over any commutative ring.
template <typename T>
T det_subset(const Matrix<T>& m, std::uint32_t cols_mask, std::size_t row,
             std::vector<std::pair<bool, T>>& memo) {
    if (cols_mask == 0) return T(1);
    auto& slot = memo[cols_mask];
    if (slot.first) return slot.second;
    T acc(0);
    int sign = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        const std::uint32_t bit = 1u << j;
        if (!(cols_mask & bit)) continue;
        const T& entry = m(row, j);
        if (!(entry == T(0))) {
            T sub = det_subset(m, cols_mask & ~bit, row + 1, memo);
            acc += sign > 0 ? entry * sub : T(0) - entry * sub;
        }
        sign = -sign;
    }
    slot = {true, acc};
    return acc;
}

template <typename T>
T det_laplace(const Matrix<T>& m) {
    if (!m.is_square()) throw Error("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return T(1);
    std::vector<std::pair<bool, T>> memo(std::size_t(1) << n, {false, T(0)});
    return det_subset(m, static_cast<std::uint32_t>((std::size_t(1) << n) - 1),
                      0, memo);
}

}  // namespace detail

constexpr std::size_t kMaxLaurentDetSize = 16;

// Symbolic determinant over Z[t, t^-1].
inline LaurentPoly det(const LaurentMatrix& m) {
    if (!m.is_square()) throw Error("determinant of a non-square matrix");
    if (m.rows() > kMaxLaurentDetSize)
        throw CapacityError("Laurent determinant limited to size " +
                            std::to_string(kMaxLaurentDetSize));
    return detail::det_laplace(m);
}

inline Rational det(const RationalMatrix& m) { return detail::det_laplace(m); }

struct SmithDecomposition {
    IntMatrix d;  // diagonal, entries nonnegative, divisibility chain
    IntMatrix u;  // unimodular, u * m * w = d
    IntMatrix w;  // unimodular
    std::vector<Int> invariant_factors;  // positive diagonal entries in order
};

// Smith normal form by repeated Euclidean reduction on the smallest pivot.
// The pivot loop also enforces the divisibility chain: if the current pivot
// fails to divide some remaining entry, that row is folded into the pivot row
// and reduction restarts.
inline SmithDecomposition smith_normal_form(const IntMatrix& input) {
    IntMatrix m = input;
    const std::size_t rows = m.rows(), cols = m.cols();
    IntMatrix u = IntMatrix::identity(rows);
    IntMatrix w = IntMatrix::identity(cols);

    auto row_sub = [&](std::size_t i, std::size_t j, const Int& q) {
        // row_i -= q * row_j, mirrored on u
        for (std::size_t c = 0; c < cols; ++c) m(i, c) -= q * m(j, c);
        for (std::size_t c = 0; c < rows; ++c) u(i, c) -= q * u(j, c);
    };
    auto col_sub = [&](std::size_t i, std::size_t j, const Int& q) {
        // col_i -= q * col_j, mirrored on w
        for (std::size_t r = 0; r < rows; ++r) m(r, i) -= q * m(r, j);
        for (std::size_t r = 0; r < cols; ++r) w(r, i) -= q * w(r, j);
    };
    auto row_swap = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < cols; ++c) std::swap(m(i, c), m(j, c));
        for (std::size_t c = 0; c < rows; ++c) std::swap(u(i, c), u(j, c));
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < rows; ++r) std::swap(m(r, i), m(r, j));
        for (std::size_t r = 0; r < cols; ++r) std::swap(w(r, i), w(r, j));
    };

    const std::size_t steps = rows < cols ? rows : cols;
    for (std::size_t t = 0; t < steps; ++t) {
        // smallest nonzero |entry| in the trailing submatrix becomes the pivot
        bool found = false;
        std::size_t pi = t, pj = t;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (m(i, j) == 0) continue;
                if (!found || abs(m(i, j)) < abs(m(pi, pj))) {
                    found = true;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;
        row_swap(t, pi);
        col_swap(t, pj);

        for (bool settled = false; !settled;) {
            // clear column t
            bool cleared = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m(i, t) == 0) continue;
                Int q = m(i, t) / m(t, t);
                row_sub(i, t, q);
                if (m(i, t) != 0) {
                    row_swap(i, t);  // remainder is strictly smaller
                    cleared = false;
                }
            }
            if (!cleared) continue;
            // clear row t
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m(t, j) == 0) continue;
                Int q = m(t, j) / m(t, t);
                col_sub(j, t, q);
                if (m(t, j) != 0) {
                    col_swap(j, t);
                    cleared = false;
                }
            }
            if (!cleared) continue;
            // divisibility chain: fold in any offending row and retry
            settled = true;
            for (std::size_t i = t + 1; settled && i < rows; ++i)
                for (std::size_t j = t + 1; settled && j < cols; ++j)
                    if (m(i, j) % m(t, t) != 0) {
                        row_sub(t, i, Int(-1));
                        settled = false;
                    }
        }
    }

    SmithDecomposition out;
    for (std::size_t i = 0; i < steps; ++i) {
        if (m(i, i) < 0) {
            for (std::size_t c = 0; c < cols; ++c) m(i, c) = -m(i, c);
            for (std::size_t c = 0; c < rows; ++c) u(i, c) = -u(i, c);
        }
        if (m(i, i) > 0) out.invariant_factors.push_back(m(i, i));
    }
    out.d = std::move(m);
    out.u = std::move(u);
    out.w = std::move(w);
    return out;
}

// Invariant factors > 1 of Z^n / M Z^n for square nonsingular M.
inline std::vector<Int> cokernel_invariants(const IntMatrix& m) {
    if (!m.is_square()) throw Error("cokernel of a non-square matrix");
    if (det(m) == 0) throw Error("infinite cokernel: determinant is zero");
    SmithDecomposition snf = smith_normal_form(m);
    std::vector<Int> out;
    for (const Int& f : snf.invariant_factors)
        if (f > 1) out.push_back(f);
    return out;
}

// Exact solution of M x = b by Cramer's rule on Bareiss determinants.
inline std::vector<Rational> solve_rational(const IntMatrix& m,
                                            const std::vector<Int>& b) {
    if (!m.is_square()) throw Error("solve requires a square matrix");
    const std::size_t n = m.rows();
    if (b.size() != n) throw Error("right-hand side has wrong length");
    Int d = det(m);
    if (d == 0) throw Error("singular matrix in rational solve");
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        IntMatrix mi = m;
        for (std::size_t r = 0; r < n; ++r) mi(r, i) = b[r];
        x[i] = Rational(det(mi)) / Rational(d);
    }
    return x;
}

inline bool is_unimodular(const IntMatrix& m) {
    if (!m.is_square()) return false;
    Int d = det(m);
    return d == 1 || d == -1;
}

// Exact inverse of a unimodular integer matrix (integer entries).
inline IntMatrix inverse_unimodular(const IntMatrix& m) {
    const std::size_t n = m.rows();
    Int d = det(m);
    if (d != 1 && d != -1)
        throw Error("matrix is not unimodular, cannot invert over Z");
    IntMatrix inv(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Int> e(n, Int(0));
        e[j] = 1;
        std::vector<Rational> col = solve_rational(m, e);
        for (std::size_t i = 0; i < n; ++i) inv(i, j) = numerator(col[i]);
    }
    return inv;
}

}  // namespace untwist
