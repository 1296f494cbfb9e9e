#pragma once

/**
 * @file equivalence.hpp
 * @brief The (n, sigma)-equivalence relation on F_q*: lambda ~ mu iff
 *        lambda N_n(alpha) = mu for some nonzero alpha.
 *
 * Membership is decided through the closed form (lambda^-1 mu)^d = 1 with
 * d = (q-1)/gcd([n]_s, q-1); the other characterizations (brute-force
 * witness, subgroup membership via discrete logs) are exposed as criterion
 * votes so they can be cross-checked against each other.
 *
 * With s = 0 the classical n-equivalence of ordinary constacyclic codes
 * falls out of the same code path, since [i]_0 = i.
 */

#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "galois_field.hpp"

namespace skewcc {

namespace detail {

struct Congruence {
    bool solvable;
    std::uint64_t base;    // smallest non-negative solution
    std::uint64_t period;  // solutions are base + k*period (mod M)
    std::uint64_t count;   // number of distinct solutions in [0, M)
};

inline std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
    if (b == 0) {
        x = 1;
        y = 0;
        return a;
    }
    std::int64_t x1, y1;
    const std::int64_t g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

// Solve a*x = b (mod M), M >= 1.
inline Congruence solve_congruence(std::uint64_t a, std::uint64_t b, std::uint64_t M) {
    a %= M;
    b %= M;
    const std::uint64_t g = a == 0 ? M : std::gcd(a, M);
    if (b % g != 0) return {false, 0, 0, 0};
    const std::uint64_t Mg = M / g;
    if (Mg == 1) return {true, 0, 1, M};
    std::int64_t x, y;
    ext_gcd(static_cast<std::int64_t>(a / g), static_cast<std::int64_t>(Mg), x, y);
    std::int64_t inv = x % static_cast<std::int64_t>(Mg);
    if (inv < 0) inv += static_cast<std::int64_t>(Mg);
    const std::uint64_t base = (unsigned __int128)(b / g) * static_cast<std::uint64_t>(inv) % Mg;
    return {true, base, Mg, g};
}

}  // namespace detail

/// Fixed (field, sigma, n) triple with the derived class data:
/// class_count = gcd([n]_s, q-1) and d = (q-1)/class_count.
class EquivalenceContext {
  public:
    EquivalenceContext(const Automorphism& aut, std::uint64_t n) : aut_(aut), n_(n) {
        if (n < 1) throw InvalidArgument("length n must be >= 1");
        const std::uint64_t M = aut.field().q() - 1;
        if (M == 0) throw InvalidArgument("multiplicative group is trivial only for q = 1");
        bracket_mod_ = bracket_mod(aut, n, M);
        class_count_ = bracket_mod_ == 0 ? M : std::gcd(bracket_mod_, M);
        d_ = M / class_count_;
        // When [n]_s fits in 64 bits the exact route must agree with the
        // modular one.
        try {
            const std::uint64_t exact = bracket(aut, n);
            if (std::gcd(exact, M) != class_count_)
                throw Error("internal: exact and modular bracket computations disagree");
        } catch (const IndexTooLarge&) {
        }
    }

    const Automorphism& aut() const noexcept { return aut_; }
    const FiniteField& field() const { return aut_.field(); }
    std::uint64_t n() const noexcept { return n_; }
    /// gcd([n]_s, q-1): the number of equivalence classes.
    std::uint64_t class_count() const noexcept { return class_count_; }
    /// (q-1) / class_count: the order of the subgroup of attainable ratios.
    std::uint64_t d() const noexcept { return d_; }
    /// [n]_s reduced mod q-1.
    std::uint64_t bracket_mod_q1() const noexcept { return bracket_mod_; }

  private:
    Automorphism aut_;
    std::uint64_t n_;
    std::uint64_t bracket_mod_;
    std::uint64_t class_count_;
    std::uint64_t d_;
};

inline EquivalenceContext make_context(const Automorphism& aut, std::uint64_t n) {
    return EquivalenceContext(aut, n);
}

namespace detail {

inline void require_nonzero(const FieldElement& x, const char* who) {
    if (x.is_zero()) throw ZeroConstant(std::string(who) + " must be nonzero");
}

}  // namespace detail

/// (lambda^-1 mu)^d = 1, the closed-form membership test.
inline bool are_equivalent(const EquivalenceContext& ctx, const FieldElement& lambda, const FieldElement& mu) {
    detail::require_nonzero(lambda, "lambda");
    detail::require_nonzero(mu, "mu");
    const FieldElement ratio = inv(lambda) * mu;
    return pow(ratio, static_cast<std::int64_t>(ctx.d())) == ctx.field().one();
}

/// Smallest-encoding alpha with lambda * N_n(alpha) = mu, if one exists.
/// Solves [n]_s * i = log(lambda^-1 mu) (mod q-1) for the exponent of alpha.
inline std::optional<FieldElement> find_witness(const EquivalenceContext& ctx, const FieldElement& lambda,
                                                const FieldElement& mu) {
    detail::require_nonzero(lambda, "lambda");
    detail::require_nonzero(mu, "mu");
    const FiniteField& F = ctx.field();
    const std::uint64_t M = F.q() - 1;
    const std::uint64_t L = discrete_log(inv(lambda) * mu);
    const detail::Congruence sol = detail::solve_congruence(ctx.bracket_mod_q1(), L, M);
    if (!sol.solvable) return std::nullopt;
    std::uint32_t best = 0;
    bool found = false;
    for (std::uint64_t k = 0, i = sol.base; k < sol.count; ++k, i = (i + sol.period) % M) {
        const std::uint32_t enc = F.exp_of(i);
        if (!found || enc < best) {
            best = enc;
            found = true;
        }
    }
    return F.element(best);
}

/// Canonical representatives xi^0, ..., xi^(class_count - 1): pairwise
/// inequivalent, jointly covering F_q*.
inline std::vector<FieldElement> class_representatives(const EquivalenceContext& ctx) {
    std::vector<FieldElement> out;
    out.reserve(ctx.class_count());
    for (std::uint64_t j = 0; j < ctx.class_count(); ++j) out.push_back(ctx.field().element(ctx.field().exp_of(j)));
    return out;
}

/// Index j of the unique representative xi^j equivalent to lambda.
inline std::uint64_t classify(const EquivalenceContext& ctx, const FieldElement& lambda) {
    detail::require_nonzero(lambda, "lambda");
    const std::uint64_t j = discrete_log(lambda) % ctx.class_count();
    if (!are_equivalent(ctx, ctx.field().element(ctx.field().exp_of(j)), lambda))
        throw Error("internal: classify produced a non-equivalent representative");
    return j;
}

/// 2^gcd(n, r) - 1: the class count over F_{2^r} under the Frobenius a -> a^2.
inline std::uint64_t binary_class_count(std::uint64_t n, std::uint64_t r) {
    if (n < 1 || r < 1) throw InvalidArgument("n and r must be >= 1");
    const std::uint64_t g = std::gcd(n, r);
    if (g >= 64) throw IndexTooLarge("2^gcd(n, r) - 1 exceeds 64 bits");
    return (std::uint64_t(1) << g) - 1;
}

/// lambda^d = 1: lambda's codes are equivalent to skew cyclic ones.
inline bool scalar_equivalent_to_cyclic(const EquivalenceContext& ctx, const FieldElement& lambda) {
    detail::require_nonzero(lambda, "lambda");
    return pow(lambda, static_cast<std::int64_t>(ctx.d())) == ctx.field().one();
}

/// Outcome of one (lambda, mu) query with all five criterion votes:
///   1. brute-force witness search over F_q*
///   2. witness exists and induces a weight-preserving quotient map
///   3. lambda^-1 mu in <N_n(xi)>
///   4. lambda^-1 mu in <xi^([n]_s)>
///   5. (lambda^-1 mu)^d = 1
/// The five votes always agree; a disagreement is a bug, surfaced by tests
/// rather than masked here.
struct EquivalenceReport {
    bool equivalent;
    std::optional<FieldElement> witness;
    std::array<bool, 5> criterion_votes;
};

inline EquivalenceReport analyze(const EquivalenceContext& ctx, const FieldElement& lambda,
                                 const FieldElement& mu) {
    detail::require_nonzero(lambda, "lambda");
    detail::require_nonzero(mu, "mu");
    const FiniteField& F = ctx.field();
    const Automorphism& aut = ctx.aut();
    const std::uint64_t M = F.q() - 1;
    const std::uint64_t L = discrete_log(inv(lambda) * mu);

    EquivalenceReport rep;

    // (1) exhaustive witness search.
    bool vote1 = false;
    for (std::uint64_t e = 1; e < F.q(); ++e)
        if (lambda * norm(aut, ctx.n(), F.element(e)) == mu) {
            vote1 = true;
            break;
        }

    // (2) a witness whose coefficient scalings N_j(alpha) are all nonzero,
    // so f(x) -> f(alpha x) preserves Hamming weight on the quotient.
    rep.witness = find_witness(ctx, lambda, mu);
    bool vote2 = false;
    if (rep.witness) {
        const FieldElement& alpha = *rep.witness;
        vote2 = lambda * norm(aut, ctx.n(), alpha) == mu;
        for (std::uint64_t j = 0; vote2 && j < ctx.n(); ++j)
            if (norm(aut, j, alpha).is_zero()) vote2 = false;
    }

    // (3) membership in the subgroup generated by N_n(xi).
    const std::uint64_t log_nn_xi = discrete_log(norm(aut, ctx.n(), F.xi()));
    const std::uint64_t g3 = log_nn_xi == 0 ? M : std::gcd(log_nn_xi, M);
    const bool vote3 = L % g3 == 0;

    // (4) membership in the subgroup generated by xi^([n]_s).
    const std::uint64_t t = ctx.bracket_mod_q1();
    const std::uint64_t g4 = t == 0 ? M : std::gcd(t, M);
    const bool vote4 = L % g4 == 0;

    // (5) the closed form.
    const bool vote5 = are_equivalent(ctx, lambda, mu);

    rep.criterion_votes = {vote1, vote2, vote3, vote4, vote5};
    rep.equivalent = vote5;
    return rep;
}

/// Class counts for every n in [n_from, n_to], via the modular recurrence
/// [n+1]_s = p^s * [n]_s + 1 (mod q-1). Handles n up to 10^6 and beyond.
template <class Fn>
void for_each_class_count(const Automorphism& aut, std::uint64_t n_from, std::uint64_t n_to, Fn&& fn) {
    if (n_from < 1 || n_from > n_to) throw InvalidArgument("need 1 <= n_from <= n_to");
    const std::uint64_t M = aut.field().q() - 1;
    if (M == 1) {
        for (std::uint64_t n = n_from; n <= n_to; ++n) fn(n, std::uint64_t(1));
        return;
    }
    std::uint64_t base = 1;
    for (std::uint32_t j = 0; j < aut.s(); ++j) base = base * aut.field().p() % M;
    std::uint64_t t = bracket_mod(aut, n_from, M);
    for (std::uint64_t n = n_from;; ++n) {
        fn(n, t == 0 ? M : std::gcd(t, M));
        if (n == n_to) break;
        t = (unsigned __int128)t * base % M + 1;
        if (t == M) t = 0;
    }
}

}  // namespace skewcc
