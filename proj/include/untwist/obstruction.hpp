#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "untwist/core.hpp"
#include "untwist/exact_linalg.hpp"
#include "untwist/knot_invariants.hpp"
#include "untwist/laurent.hpp"
#include "untwist/linking_forms.hpp"

namespace untwist {

// The 2x2 hermitian matrix [[alpha(t), 1], [1, -k]] whose determinant is
// -(1 + k*alpha). A knot that a single k-untwisting move turns into an
// Alexander-polynomial-1 knot admits such a matrix representing its
// Blanchfield pairing, with alpha symmetric and alpha(1) = 0.
struct CandidateMatrix {
    LaurentPoly alpha;
    Int k;

    LaurentMatrix matrix() const {
        LaurentMatrix a(2, 2);
        a(0, 0) = alpha;
        a(0, 1) = LaurentPoly(1);
        a(1, 0) = LaurentPoly(1);
        a(1, 1) = LaurentPoly(-k);
        return a;
    }
};

inline CandidateMatrix candidate_matrix(LaurentPoly alpha, Int k) {
    if (k == 0) throw Error("twisting coefficient k must be nonzero");
    if (!alpha.is_symmetric())
        throw Error("candidate matrix requires symmetric alpha");
    if (eval_at_unit(alpha, 1) != 0)
        throw Error("candidate matrix requires alpha(1) = 0");
    return CandidateMatrix{std::move(alpha), std::move(k)};
}

struct FailingCoefficient {
    std::int64_t exponent;
    Int value;  // the offending coefficient of delta - 1
};

struct AlexanderResult {
    std::optional<LaurentPoly> alpha;
    std::optional<FailingCoefficient> failing;

    bool passed() const { return alpha.has_value(); }
};

// Decides whether delta = 1 + k*alpha for some alpha in Z[t, t^-1], by exact
// coefficientwise division of delta - 1 by k. The quotient, when it exists,
// is the unique witness: symmetry forces the unit ambiguity in det A(t) to
// t^0 and the value at t = 1 forces the sign, so 1 + k*alpha = delta exactly.
inline AlexanderResult alexander_obstruction(const LaurentPoly& delta_sym,
                                             const Int& k) {
    if (k == 0) throw Error("twisting coefficient k must be nonzero");
    if (!delta_sym.is_symmetric() || eval_at_unit(delta_sym, 1) != 1)
        throw Error(
            "alexander obstruction requires a symmetric polynomial with "
            "value 1 at t = 1");
    LaurentPoly shifted = delta_sym - LaurentPoly(1);
    AlexanderResult result;
    if (auto alpha = div_exact(shifted, k)) {
        // both hold automatically; a failure here is an upstream bug
        if (!alpha->is_symmetric() || eval_at_unit(*alpha, 1) != 0)
            throw Error("internal: quotient alpha lost symmetry or alpha(1) != 0");
        result.alpha = std::move(*alpha);
        return result;
    }
    for (const auto& [e, c] : shifted.terms()) {
        if (c % k != 0) {
            result.failing = FailingCoefficient{e, c};
            break;
        }
    }
    return result;
}

// True iff x^T Q x is even for all integer x, i.e. all diagonal entries are
// even. An even symmetric unimodular 2x2 form is not diagonalizable over Z;
// this parity drives the 2-vs-3 bound below.
inline bool is_even_form(const IntMatrix& q) {
    if (!q.is_symmetric()) throw Error("evenness is defined for symmetric forms");
    for (std::size_t i = 0; i < q.rows(); ++i)
        if (is_odd(q(i, i))) return false;
    return true;
}

// Bound on the algebraic unknotting number when no obstruction fires:
// 2 for odd k (the candidate matrix at t = 1 diagonalizes over Z),
// 3 for even k (one stabilization is needed first).
inline int ua_bound(const Int& k) {
    if (k == 0) throw Error("twisting coefficient k must be nonzero");
    return is_odd(k) ? 2 : 3;
}

struct CyclicityResult {
    bool passed = false;
    std::vector<Int> invariant_factors;
};

// The double branched cover of a knot admitting a candidate matrix has
// cyclic first homology.
inline CyclicityResult cyclicity_obstruction(const SeifertMatrix& v) {
    CyclicityResult r;
    r.invariant_factors = double_cover_homology(v);
    r.passed = r.invariant_factors.size() <= 1;
    return r;
}

enum class LinkingStatus { Pass, Fail, Skipped };

struct LinkingResult {
    LinkingStatus status = LinkingStatus::Skipped;
    std::optional<Int> d;
    std::optional<CyclicForm> knot_form;       // doubled linking form of the knot
    std::optional<CyclicForm> candidate_form;  // form of [[d, 1], [1, -k]]
};

// Compares the doubled linking form of the knot with the form represented by
// B = [[d, 1], [1, -k]], d = alpha(-1). Assumes the Alexander and cyclicity
// tests already passed.
inline LinkingResult linking_obstruction(const SeifertMatrix& v,
                                         const LaurentPoly& alpha,
                                         const Int& k) {
    LinkingResult r;
    Int d = eval_at_unit(alpha, -1);
    Int delta_minus_one = signed_determinant(v);
    if (d * k + 1 != delta_minus_one)
        throw Error("internal: d*k + 1 = " + Int(d * k + 1).str() +
                     " differs from the determinant " + delta_minus_one.str());

    LinkingForm doubled = scale_form(linking_form_of(symmetrized_form(v)), 2);
    auto knot_cyclic = as_cyclic(doubled);
    if (!knot_cyclic)
        throw Error("internal: linking obstruction reached with non-cyclic homology");

    IntMatrix b(2, 2);
    b(0, 0) = d;
    b(0, 1) = 1;
    b(1, 0) = 1;
    b(1, 1) = -k;
    auto cand_cyclic = as_cyclic(linking_form_of(b));
    if (!cand_cyclic)
        throw Error("internal: candidate linking form is not cyclic");
    if (knot_cyclic->n != abs(delta_minus_one) ||
        cand_cyclic->n != abs(delta_minus_one))
        throw Error("internal: linking form orders disagree with |d*k + 1|");

    r.d = std::move(d);
    r.knot_form = knot_cyclic;
    r.candidate_form = cand_cyclic;
    r.status = isometric_cyclic(*knot_cyclic, *cand_cyclic)
                   ? LinkingStatus::Pass
                   : LinkingStatus::Fail;
    return r;
}

enum class Verdict { Obstructed, NotObstructed };

// Explicit congruence of the candidate matrix over Z[1/k]:
// P = [[1, 0], [1/k, 1]] gives P^T A P = diag(alpha + 1/k, -k). The second
// entry is a unit of Z[1/k][t, t^-1], so a single 1x1 block remains.
struct RkReduction {
    RationalLaurentPoly diag_first;
    RationalLaurentPoly diag_second;
    RationalMatrix p;
};

inline RkReduction rk_reduction(const LaurentPoly& alpha, const Int& k) {
    if (k == 0) throw Error("twisting coefficient k must be nonzero");
    if (!alpha.is_symmetric() || eval_at_unit(alpha, 1) != 0)
        throw Error("reduction requires symmetric alpha with alpha(1) = 0");

    RationalMatrix p(2, 2);
    p(0, 0) = 1;
    p(0, 1) = 0;
    p(1, 0) = Rational(1) / Rational(k);
    p(1, 1) = 1;

    RationalLaurentMatrix a(2, 2);
    a(0, 0) = to_rational(alpha);
    a(0, 1) = RationalLaurentPoly(Rational(1));
    a(1, 0) = RationalLaurentPoly(Rational(1));
    a(1, 1) = RationalLaurentPoly(Rational(-k));

    RationalLaurentMatrix pl(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            pl(i, j) = RationalLaurentPoly(p(i, j));
    RationalLaurentMatrix reduced = pl.transposed() * a * pl;
    if (!reduced(0, 1).is_zero() || !reduced(1, 0).is_zero())
        throw Error("internal: congruence did not diagonalize the candidate");
    return RkReduction{reduced(0, 0), reduced(1, 1), std::move(p)};
}

struct ObstructionReport {
    std::string knot;
    Int k;
    AlexanderResult alexander;
    CyclicityResult cyclicity;
    LinkingResult linking;
    Verdict verdict = Verdict::Obstructed;
    std::optional<int> ua;    // set only when not obstructed
    std::optional<int> n_rk;  // 1 when not obstructed
    std::string notes;
};

// Runs the three necessary conditions in order (Alexander divisibility,
// cyclicity of the double cover homology, linking form isometry); the
// linking test is skipped whenever an earlier test fails. A report of
// NOT_OBSTRUCTED means every implemented necessary condition holds, nothing
// stronger.
inline ObstructionReport evaluate(const SeifertMatrix& v, const Int& k,
                                  std::string knot_name = "inline") {
    if (k == 0) throw Error("twisting coefficient k must be nonzero");
    ObstructionReport report;
    report.knot = std::move(knot_name);
    report.k = k;

    LaurentPoly delta = alexander_polynomial(v);
    report.alexander = alexander_obstruction(delta, k);
    report.cyclicity = cyclicity_obstruction(v);
    if (report.alexander.passed() && report.cyclicity.passed)
        report.linking = linking_obstruction(v, *report.alexander.alpha, k);

    if (report.alexander.passed() && report.cyclicity.passed &&
        report.linking.status == LinkingStatus::Pass) {
        report.verdict = Verdict::NotObstructed;
        report.ua = ua_bound(k);
        report.n_rk = 1;
        RkReduction rk = rk_reduction(*report.alexander.alpha, k);
        report.notes = "size-one presentation over Z[1/" + Int(abs(k)).str() +
                       "]: congruence by P = [[1, 0], [1/" + k.str() +
                       ", 1]] yields diag(" + to_string(rk.diag_first) + ", " +
                       to_string(rk.diag_second) + ")";
    }
    return report;
}

// evaluate() for every nonzero k in [k_min, k_max], ascending.
inline std::vector<ObstructionReport> scan(const SeifertMatrix& v, Int k_min,
                                           Int k_max,
                                           const std::string& knot_name = "inline") {
    if (k_min > k_max) throw Error("empty scan range: k_min exceeds k_max");
    std::vector<ObstructionReport> reports;
    for (Int k = k_min; k <= k_max; ++k) {
        if (k == 0) continue;
        reports.push_back(evaluate(v, k, knot_name));
    }
    return reports;
}

}  // namespace untwist
