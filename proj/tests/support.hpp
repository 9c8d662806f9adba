#pragma once

// Shared test helpers: deterministic random generators and independent
// oracles. The oracles deliberately avoid the library's code paths: naive
// cofactor determinants, elimination without transform tracking, and minor
// gcds, so they can stand as cross-checks.

#include <random>
#include <vector>

#include "untwist/untwist.hpp"

namespace testsupport {

using untwist::Int;
using untwist::IntMatrix;
using untwist::LaurentPoly;
using untwist::Rational;

inline LaurentPoly random_poly(std::mt19937& rng, int max_exp = 5,
                               int max_coeff = 9) {
    std::uniform_int_distribution<int> exp_dist(-max_exp, max_exp);
    std::uniform_int_distribution<int> coeff_dist(-max_coeff, max_coeff);
    std::uniform_int_distribution<int> count_dist(0, 5);
    LaurentPoly p;
    const int terms = count_dist(rng);
    for (int i = 0; i < terms; ++i)
        p.add_term(exp_dist(rng), Int(coeff_dist(rng)));
    return p;
}

// Random symmetric polynomial with value 0 at t = 1.
inline LaurentPoly random_alpha(std::mt19937& rng, int max_exp = 4,
                                int max_coeff = 6) {
    std::uniform_int_distribution<int> coeff_dist(-max_coeff, max_coeff);
    std::uniform_int_distribution<int> exp_dist(1, max_exp);
    LaurentPoly s;
    const int half_terms = exp_dist(rng);
    for (int i = 0; i < half_terms; ++i) {
        int e = exp_dist(rng);
        Int c(coeff_dist(rng));
        s.add_term(e, c);
        s.add_term(-e, c);
    }
    s.add_term(0, -untwist::eval_at_unit(s, 1));
    return s;
}

inline Int random_nonzero_k(std::mt19937& rng, int bound = 6) {
    std::uniform_int_distribution<int> dist(-bound, bound);
    int k = 0;
    while (k == 0) k = dist(rng);
    return Int(k);
}

inline IntMatrix random_matrix(std::mt19937& rng, std::size_t rows,
                               std::size_t cols, int bound = 5) {
    std::uniform_int_distribution<int> dist(-bound, bound);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = Int(dist(rng));
    return m;
}

inline IntMatrix random_symmetric(std::mt19937& rng, std::size_t n,
                                  int bound = 5) {
    std::uniform_int_distribution<int> dist(-bound, bound);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            m(i, j) = Int(dist(rng));
            m(j, i) = m(i, j);
        }
    return m;
}

// Product of a few elementary matrices: shears with small multipliers, swaps,
// and sign flips. Always unimodular.
inline IntMatrix random_unimodular(std::mt19937& rng, std::size_t n) {
    IntMatrix e = IntMatrix::identity(n);
    if (n == 0) return e;
    std::uniform_int_distribution<int> kind_dist(0, 4);
    std::uniform_int_distribution<std::size_t> idx_dist(0, n - 1);
    std::uniform_int_distribution<int> mult_dist(-2, 2);
    const std::size_t ops = 2 * n + 2;
    for (std::size_t s = 0; s < ops; ++s) {
        std::size_t i = idx_dist(rng), j = idx_dist(rng);
        switch (kind_dist(rng)) {
            case 0:
            case 1:
            case 2: {
                if (i == j) break;
                Int q(mult_dist(rng));
                for (std::size_t c = 0; c < n; ++c) e(i, c) += q * e(j, c);
                break;
            }
            case 3:
                for (std::size_t c = 0; c < n; ++c) std::swap(e(i, c), e(j, c));
                break;
            default:
                for (std::size_t c = 0; c < n; ++c) e(i, c) = -e(i, c);
                break;
        }
    }
    return e;
}

inline IntMatrix congruent(const IntMatrix& p, const IntMatrix& e) {
    return e.transposed() * p * e;
}

// Recursive cofactor determinant, independent of the library's Bareiss path.
inline Int naive_det(const std::vector<std::vector<Int>>& a) {
    const std::size_t n = a.size();
    if (n == 0) return Int(1);
    if (n == 1) return a[0][0];
    Int acc(0);
    int sign = 1;
    for (std::size_t j = 0; j < n; ++j) {
        if (a[0][j] != 0) {
            std::vector<std::vector<Int>> sub(n - 1,
                                              std::vector<Int>(n - 1, Int(0)));
            for (std::size_t r = 1; r < n; ++r) {
                std::size_t cc = 0;
                for (std::size_t c = 0; c < n; ++c) {
                    if (c == j) continue;
                    sub[r - 1][cc++] = a[r][c];
                }
            }
            Int term = a[0][j] * naive_det(sub);
            acc += sign > 0 ? term : -term;
        }
        sign = -sign;
    }
    return acc;
}

inline std::vector<std::vector<Int>> to_rows(const IntMatrix& m) {
    std::vector<std::vector<Int>> rows(m.rows(), std::vector<Int>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
    return rows;
}

// Naive row/column GCD elimination without transform tracking. Returns the
// positive invariant factors (including 1s).
inline std::vector<Int> naive_invariant_factors(const IntMatrix& input) {
    auto a = to_rows(input);
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<Int> out;
    std::size_t top = 0;
    while (top < rows && top < cols) {
        // locate a smallest-magnitude nonzero entry
        bool found = false;
        std::size_t pi = top, pj = top;
        for (std::size_t i = top; i < rows; ++i)
            for (std::size_t j = top; j < cols; ++j)
                if (a[i][j] != 0 &&
                    (!found || abs(a[i][j]) < abs(a[pi][pj]))) {
                    found = true;
                    pi = i;
                    pj = j;
                }
        if (!found) break;
        std::swap(a[top], a[pi]);
        for (std::size_t i = top; i < rows; ++i) std::swap(a[i][top], a[i][pj]);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (std::size_t i = top + 1; i < rows; ++i) {
                if (a[i][top] == 0) continue;
                Int q = a[i][top] / a[top][top];
                for (std::size_t c = top; c < cols; ++c)
                    a[i][c] -= q * a[top][c];
                if (a[i][top] != 0) {
                    std::swap(a[top], a[i]);
                    dirty = true;
                }
            }
            if (dirty) continue;
            for (std::size_t j = top + 1; j < cols; ++j) {
                if (a[top][j] == 0) continue;
                Int q = a[top][j] / a[top][top];
                for (std::size_t r = top; r < rows; ++r)
                    a[r][j] -= q * a[r][top];
                if (a[top][j] != 0) {
                    for (std::size_t r = top; r < rows; ++r)
                        std::swap(a[r][top], a[r][j]);
                    dirty = true;
                }
            }
            if (dirty) continue;
            for (std::size_t i = top + 1; i < rows && !dirty; ++i)
                for (std::size_t j = top + 1; j < cols && !dirty; ++j)
                    if (a[i][j] % a[top][top] != 0) {
                        for (std::size_t c = top; c < cols; ++c)
                            a[top][c] += a[i][c];
                        dirty = true;
                    }
        }
        out.push_back(abs(a[top][top]));
        ++top;
    }
    return out;
}

// Determinantal-divisor route: the k-th invariant factor is the gcd of all
// k x k minors divided by the gcd of the (k-1) x (k-1) minors.
inline std::vector<Int> minor_gcd_invariant_factors(const IntMatrix& m) {
    using boost::multiprecision::gcd;
    const std::size_t rows = m.rows(), cols = m.cols();
    const std::size_t kmax = rows < cols ? rows : cols;
    std::vector<Int> out;
    Int prev(1);
    for (std::size_t k = 1; k <= kmax; ++k) {
        // enumerate k-subsets of rows and columns
        std::vector<std::size_t> rsel(k), csel(k);
        for (std::size_t i = 0; i < k; ++i) rsel[i] = i;
        Int g(0);
        auto next_subset = [](std::vector<std::size_t>& s, std::size_t limit) {
            std::size_t k2 = s.size();
            std::size_t i = k2;
            while (i-- > 0) {
                if (s[i] + (k2 - i) < limit) {
                    ++s[i];
                    for (std::size_t j = i + 1; j < k2; ++j) s[j] = s[j - 1] + 1;
                    return true;
                }
            }
            return false;
        };
        bool more_rows = true;
        while (more_rows) {
            for (std::size_t i = 0; i < k; ++i) csel[i] = i;
            bool more_cols = true;
            while (more_cols) {
                std::vector<std::vector<Int>> sub(k, std::vector<Int>(k));
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j)
                        sub[i][j] = m(rsel[i], csel[j]);
                g = gcd(g, naive_det(sub));
                more_cols = next_subset(csel, cols);
            }
            more_rows = next_subset(rsel, rows);
        }
        if (g == 0) break;
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

}  // namespace testsupport
