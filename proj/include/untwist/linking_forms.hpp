#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "untwist/core.hpp"
#include "untwist/exact_linalg.hpp"

namespace untwist {

// Symmetric Q/Z-valued pairing on a finite abelian group of odd order,
// recorded on the invariant-factor generators. gram[i][j] is reduced to the
// canonical representative in [0, 1).
struct LinkingForm {
    std::vector<Int> invariant_factors;  // each > 1, ascending divisibility
    std::vector<std::vector<Rational>> gram;

    Int order() const {
        Int n(1);
        for (const Int& f : invariant_factors) n *= f;
        return n;
    }
};

// The form l(g, g) = a/n on Z/n; n = 1 (with a = 0) is the trivial group.
struct CyclicForm {
    Int n;
    Int a;

    CyclicForm(Int n_, Int a_) : n(std::move(n_)), a(std::move(a_)) {
        if (n < 1) throw ValidationError("cyclic form modulus must be >= 1");
        if (n == 1) {
            if (a != 0)
                throw ValidationError("trivial cyclic form must have a = 0");
            return;
        }
        if (is_even(n))
            throw ValidationError("cyclic form modulus must be odd");
        if (a <= 0 || a >= n || gcd(a, n) != 1)
            throw ValidationError(
                "cyclic form residue must be a unit in (0, n)");
    }

    bool is_trivial() const { return n == 1; }

    friend bool operator==(const CyclicForm& x, const CyclicForm& y) {
        return x.n == y.n && x.a == y.a;
    }
};

// Linking form represented by a symmetric integer matrix P with odd nonzero
// determinant: the group is coker(P) and the pairing is (a, b) -> a^T P^-1 b
// mod 1. Generators are pulled back through the Smith decomposition
// U P W = D as the columns of U^-1 at the nontrivial factors.
inline LinkingForm linking_form_of(const IntMatrix& p) {
    if (!p.is_square() || !p.is_symmetric())
        throw Error("linking form requires a symmetric matrix");
    Int d = det(p);
    if (d == 0) throw Error("linking form requires nonzero determinant");
    if (is_even(d)) throw Error("linking form requires odd determinant");

    SmithDecomposition snf = smith_normal_form(p);
    const std::size_t n = p.rows();
    IntMatrix u_inv = n > 0 ? inverse_unimodular(snf.u) : IntMatrix(0, 0);

    LinkingForm form;
    std::vector<std::vector<Int>> gens;
    for (std::size_t i = 0; i < snf.invariant_factors.size(); ++i) {
        if (snf.invariant_factors[i] <= 1) continue;
        form.invariant_factors.push_back(snf.invariant_factors[i]);
        std::vector<Int> g(n);
        for (std::size_t r = 0; r < n; ++r) g[r] = u_inv(r, i);
        gens.push_back(std::move(g));
    }

    const std::size_t m = gens.size();
    form.gram.assign(m, std::vector<Rational>(m, Rational(0)));
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<Rational> x = solve_rational(p, gens[j]);
        for (std::size_t i = 0; i < m; ++i) {
            Rational v(0);
            for (std::size_t r = 0; r < n; ++r) v += Rational(gens[i][r]) * x[r];
            form.gram[i][j] = mod1(v);
        }
    }
    return form;
}

// Same group, pairing multiplied by m. Requires gcd(m, order) = 1 so the
// result stays nondegenerate.
inline LinkingForm scale_form(const LinkingForm& l, const Int& m) {
    if (gcd(abs(m), l.order()) != 1)
        throw Error("scaling factor " + m.str() +
                     " is not coprime to the group order");
    LinkingForm out;
    out.invariant_factors = l.invariant_factors;
    out.gram = l.gram;
    for (auto& row : out.gram)
        for (auto& entry : row) entry = mod1(entry * Rational(m));
    return out;
}

// Cyclic descriptor of a form whose group has at most one invariant factor;
// nullopt when the group is not cyclic.
inline std::optional<CyclicForm> as_cyclic(const LinkingForm& l) {
    if (l.invariant_factors.empty()) return CyclicForm(Int(1), Int(0));
    if (l.invariant_factors.size() > 1) return std::nullopt;
    const Int& n = l.invariant_factors[0];
    Rational g = l.gram[0][0];
    if (n % denominator(g) != 0)
        throw Error("gram denominator does not divide the group order");
    Int a = numerator(g) * (n / denominator(g));
    a %= n;
    if (a < 0) a += n;
    return CyclicForm(n, a);
}

namespace detail {

// Trial-division factorization of an odd positive integer.
inline std::vector<std::pair<Int, unsigned>> factor_odd(Int n) {
    std::vector<std::pair<Int, unsigned>> out;
    for (Int p(3); p * p <= n; p += 2) {
        if (n % p != 0) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline Int legendre(const Int& a, const Int& p) {
    using boost::multiprecision::powm;
    Int r = powm(a % p, (p - 1) / 2, p);
    return r == p - 1 ? Int(-1) : r;
}

}  // namespace detail

// Two cyclic forms a/n and b/n are isometric iff b * a^-1 is a square unit
// mod n, i.e. a quadratic residue modulo every odd prime dividing n (squares
// lift along prime powers for odd p).
inline bool isometric_cyclic(const CyclicForm& f, const CyclicForm& g) {
    if (f.n != g.n) return false;
    if (f.n == 1) return true;
    using boost::multiprecision::powm;
    for (const auto& [p, e] : detail::factor_odd(f.n)) {
        Int a_inv = powm(f.a % p, p - 2, p);  // f.a is a unit mod p
        Int ratio = (g.a % p) * a_inv % p;
        if (detail::legendre(ratio, p) != 1) return false;
    }
    return true;
}

// Exhaustive isometry search: enumerates generator images in the target
// group, keeping tuples that reproduce the gram matrix and generate the whole
// group. Group order is capped at 5000.
inline bool isometric_bruteforce(const LinkingForm& l1, const LinkingForm& l2) {
    if (l1.invariant_factors != l2.invariant_factors) return false;
    Int order = l1.order();
    if (order > 5000)
        throw CapacityError("brute-force isometry capped at group order 5000");
    if (l1.invariant_factors.empty()) return true;

    const std::size_t m = l1.invariant_factors.size();
    std::vector<std::int64_t> factors(m);
    for (std::size_t i = 0; i < m; ++i)
        factors[i] = to_int64(l1.invariant_factors[i]);
    const std::int64_t n = to_int64(order);
    const std::int64_t scale = factors.back();  // all gram denominators divide it

    auto scaled_gram = [&](const LinkingForm& l) {
        std::vector<std::vector<std::int64_t>> g(m, std::vector<std::int64_t>(m));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                const Rational& q = l.gram[i][j];
                Int den = denominator(q);
                if (scale % den != 0)
                    throw Error("gram denominator does not divide the largest factor");
                g[i][j] = to_int64(numerator(q) * (Int(scale) / den) % scale);
            }
        return g;
    };
    auto g1 = scaled_gram(l1);
    auto g2 = scaled_gram(l2);

    if (m == 1) {
        // candidate images of the generator are u * g for u in Z/n; the image
        // generates iff u is a unit
        for (std::int64_t u = 0; u < n; ++u) {
            if (u * u % n * g2[0][0] % n != g1[0][0]) continue;
            std::int64_t a = u, b = n;
            while (b != 0) {
                std::int64_t t = a % b;
                a = b;
                b = t;
            }
            if (a == 1) return true;
        }
        return false;
    }

    // elements of the target group as mixed-radix tuples
    std::vector<std::vector<std::int64_t>> elems;
    elems.reserve(static_cast<std::size_t>(n));
    {
        std::vector<std::int64_t> cur(m, 0);
        for (std::int64_t c = 0; c < n; ++c) {
            elems.push_back(cur);
            for (std::size_t i = 0; i < m; ++i) {
                if (++cur[i] < factors[i]) break;
                cur[i] = 0;
            }
        }
    }
    auto pair2 = [&](const std::vector<std::int64_t>& x,
                     const std::vector<std::int64_t>& y) {
        std::int64_t acc = 0;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                acc = (acc + x[i] % scale * (y[j] % scale) % scale * g2[i][j]) % scale;
        return acc;
    };

    std::vector<std::size_t> image(m);
    std::vector<bool> seen;
    auto generates = [&]() {
        seen.assign(static_cast<std::size_t>(n), false);
        std::int64_t count = 0;
        std::vector<std::int64_t> coeff(m, 0);
        for (std::int64_t c = 0; c < n; ++c) {
            std::vector<std::int64_t> sum(m, 0);
            for (std::size_t i = 0; i < m; ++i) {
                const auto& h = elems[image[i]];
                for (std::size_t comp = 0; comp < m; ++comp)
                    sum[comp] = (sum[comp] + coeff[i] * h[comp]) % factors[comp];
            }
            std::size_t code = 0;
            for (std::size_t comp = m; comp-- > 0;)
                code = code * static_cast<std::size_t>(factors[comp]) +
                       static_cast<std::size_t>(sum[comp]);
            if (!seen[code]) {
                seen[code] = true;
                ++count;
            }
            for (std::size_t i = 0; i < m; ++i) {
                if (++coeff[i] < factors[i]) break;
                coeff[i] = 0;
            }
        }
        return count == n;
    };

    // depth-first over candidate images, pruning on pairing mismatches
    auto search = [&](auto&& self, std::size_t depth) -> bool {
        if (depth == m) return generates();
        for (std::size_t cand = 0; cand < elems.size(); ++cand) {
            const auto& h = elems[cand];
            bool annihilated = true;
            for (std::size_t comp = 0; comp < m; ++comp)
                if (factors[depth] * h[comp] % factors[comp] != 0) {
                    annihilated = false;
                    break;
                }
            if (!annihilated) continue;
            image[depth] = cand;
            bool ok = true;
            for (std::size_t j = 0; j <= depth && ok; ++j)
                ok = pair2(h, elems[image[j]]) == g1[depth][j];
            if (!ok) continue;
            if (self(self, depth + 1)) return true;
        }
        return false;
    };
    return search(search, 0);
}

}  // namespace untwist
