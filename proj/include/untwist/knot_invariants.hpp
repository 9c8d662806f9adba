#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "untwist/exact_linalg.hpp"
#include "untwist/laurent.hpp"

namespace untwist {

// A Seifert matrix: square integer matrix of even size 2g whose
// antisymmetrization V - V^T is the intersection form of a genus-g surface
// (unimodular skew). Size 0 encodes the unknot.
class SeifertMatrix {
public:
    explicit SeifertMatrix(IntMatrix v) : v_(std::move(v)) {
        if (!v_.is_square())
            throw ValidationError("Seifert matrix must be square");
        if (v_.rows() % 2 != 0)
            throw ValidationError("Seifert matrix must have even size, got " +
                                  std::to_string(v_.rows()));
        IntMatrix skew(v_.rows(), v_.cols());
        for (std::size_t i = 0; i < v_.rows(); ++i)
            for (std::size_t j = 0; j < v_.cols(); ++j)
                skew(i, j) = v_(i, j) - v_(j, i);
        if (det(skew) != 1)
            throw ValidationError(
                "V - V^T is not a unimodular intersection form");
    }

    const IntMatrix& matrix() const { return v_; }
    std::size_t size() const { return v_.rows(); }
    std::size_t genus() const { return v_.rows() / 2; }

private:
    IntMatrix v_;
};

inline SeifertMatrix validate_seifert(IntMatrix v) {
    return SeifertMatrix(std::move(v));
}

// det(tV - V^T), symmetric-normalized so that the result is fixed by
// t -> t^-1 and takes the value 1 at t = 1.
inline LaurentPoly alexander_polynomial(const SeifertMatrix& v) {
    const IntMatrix& m = v.matrix();
    const std::size_t n = v.size();
    LaurentMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            a(i, j) = LaurentPoly::monomial(m(i, j), 1);
            a(i, j).add_term(0, -m(j, i));
        }
    // normalization cannot fail: det(V - V^T) = 1 pins the value at t = 1,
    // and det(tV - V^T) is always a unit multiple of its own involution
    return normalize_symmetric(det(a));
}

// The normalized Alexander polynomial evaluated at t = -1; an odd integer.
inline Int signed_determinant(const SeifertMatrix& v) {
    return eval_at_unit(alexander_polynomial(v), -1);
}

inline IntMatrix symmetrized_form(const SeifertMatrix& v) {
    const IntMatrix& m = v.matrix();
    return m + m.transposed();
}

// Invariant factors (> 1) of the first homology of the double branched
// cover, i.e. of coker(V + V^T).
inline std::vector<Int> double_cover_homology(const SeifertMatrix& v) {
    return cokernel_invariants(symmetrized_form(v));
}

struct KnotInvariants {
    LaurentPoly alexander;
    Int alexander_at_minus_one;
    IntMatrix symmetrized;
    std::vector<Int> dbc_invariant_factors;
};

inline KnotInvariants compute_invariants(const SeifertMatrix& v) {
    KnotInvariants inv;
    inv.alexander = alexander_polynomial(v);
    inv.alexander_at_minus_one = eval_at_unit(inv.alexander, -1);
    inv.symmetrized = symmetrized_form(v);
    inv.dbc_invariant_factors = cokernel_invariants(inv.symmetrized);
    return inv;
}

}  // namespace untwist
