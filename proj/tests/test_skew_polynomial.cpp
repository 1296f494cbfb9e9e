#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "skewcc/skewcc.hpp"

using namespace skewcc;

namespace {

SkewPolynomial random_poly(const Automorphism& aut, std::size_t max_deg, std::mt19937& rng) {
    std::uniform_int_distribution<std::uint32_t> digit(0, static_cast<std::uint32_t>(aut.field().q() - 1));
    std::vector<std::uint32_t> coeffs(max_deg + 1);
    for (auto& c : coeffs) c = digit(rng);
    return SkewPolynomial(aut, std::move(coeffs));
}

const std::vector<std::pair<std::uint32_t, std::uint32_t>>& small_prime_powers() {
    static const std::vector<std::pair<std::uint32_t, std::uint32_t>> v = {
        {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1}, {13, 1}, {2, 4}};
    return v;
}

}  // namespace

TEST_CASE("twisted multiplication") {
    const FiniteField F = make_field(2, 2);
    const Automorphism theta = frobenius(F, 1);
    const FieldElement xi = F.xi();

    SECTION("x * xi = xi^2 x") {
        const SkewPolynomial x = SkewPolynomial::monomial(theta, F.one(), 1);
        const SkewPolynomial c = SkewPolynomial::constant(theta, xi);
        REQUIRE((x * c).coefficients() == std::vector<std::uint32_t>{0, 3});
        // and the ring is visibly non-commutative
        REQUIRE(x * c != c * x);
    }

    SECTION("multiplying by 1 changes nothing") {
        std::mt19937 rng(7);
        const SkewPolynomial one = SkewPolynomial::constant(theta, F.one());
        for (int i = 0; i < 20; ++i) {
            const SkewPolynomial f = random_poly(theta, 6, rng);
            REQUIRE(f * one == f);
            REQUIRE(one * f == f);
        }
    }

    SECTION("(x + xi^2)(x - xi) = x^2 + 1 over GF(4)") {
        const SkewPolynomial a(theta, {3, 1});
        const SkewPolynomial b(theta, {2, 1});  // -xi = xi in characteristic 2
        REQUIRE((a * b).coefficients() == std::vector<std::uint32_t>{1, 0, 1});
    }

    SECTION("degrees add for nonzero factors") {
        std::mt19937 rng(11);
        for (auto [p, r] : small_prime_powers()) {
            const FiniteField K = make_field(p, r);
            for (std::uint32_t s = 0; s < r; ++s) {
                const Automorphism sigma = frobenius(K, s);
                for (int i = 0; i < 10; ++i) {
                    const SkewPolynomial f = random_poly(sigma, 4, rng), g = random_poly(sigma, 3, rng);
                    if (f.is_zero() || g.is_zero()) {
                        REQUIRE((f * g).is_zero());
                    } else {
                        REQUIRE(*(f * g).degree() == *f.degree() + *g.degree());
                    }
                }
            }
        }
    }

    SECTION("associativity and distributivity on random triples") {
        std::mt19937 rng(13);
        for (auto [p, r] : small_prime_powers()) {
            const FiniteField K = make_field(p, r);
            for (std::uint32_t s = 0; s < r; ++s) {
                const Automorphism sigma = frobenius(K, s);
                for (int i = 0; i < 25; ++i) {
                    const SkewPolynomial f = random_poly(sigma, 4, rng);
                    const SkewPolynomial g = random_poly(sigma, 4, rng);
                    const SkewPolynomial h = random_poly(sigma, 4, rng);
                    REQUIRE((f * g) * h == f * (g * h));
                    REQUIRE(f * (g + h) == f * g + f * h);
                    REQUIRE((f + g) * h == f * h + g * h);
                }
            }
        }
    }

    SECTION("every nontrivial sigma makes the ring non-commutative") {
        for (auto [p, r] : small_prime_powers()) {
            const FiniteField K = make_field(p, r);
            for (std::uint32_t s = 1; s < r; ++s) {
                const Automorphism sigma = frobenius(K, s);
                const SkewPolynomial x = SkewPolynomial::monomial(sigma, K.one(), 1);
                bool witness = false;
                for (std::uint64_t e = 2; e < K.q() && !witness; ++e) {
                    const SkewPolynomial c = SkewPolynomial::constant(sigma, K.element(e));
                    witness = x * c != c * x;
                }
                REQUIRE(witness);
            }
        }
    }

    SECTION("mismatched automorphisms are rejected") {
        const Automorphism id = frobenius(F, 0);
        const SkewPolynomial f = SkewPolynomial::constant(theta, xi);
        const SkewPolynomial g = SkewPolynomial::constant(id, xi);
        REQUIRE_THROWS_AS(f * g, AutomorphismMismatch);
    }
}

TEST_CASE("right division") {
    const FiniteField F = make_field(2, 2);
    const Automorphism theta = frobenius(F, 1);

    SECTION("f / f = (1, 0)") {
        const SkewPolynomial f(theta, {2, 3, 1});
        const auto [q, rem] = right_divmod(f, f);
        REQUIRE(q == SkewPolynomial::constant(theta, F.one()));
        REQUIRE(rem.is_zero());
    }

    SECTION("x^2 divided by (x - xi): quotient x + xi^2, remainder 1") {
        const SkewPolynomial f = SkewPolynomial::monomial(theta, F.one(), 2);
        const SkewPolynomial g(theta, {2, 1});
        const auto [q, rem] = right_divmod(f, g);
        REQUIRE(q.coefficients() == std::vector<std::uint32_t>{3, 1});
        REQUIRE(rem.coefficients() == std::vector<std::uint32_t>{1});
        REQUIRE(q * g + rem == f);
    }

    SECTION("short dividend passes through") {
        const SkewPolynomial f(theta, {2, 1});
        const SkewPolynomial g(theta, {1, 0, 1});
        const auto [q, rem] = right_divmod(f, g);
        REQUIRE(q.is_zero());
        REQUIRE(rem == f);
    }

    SECTION("division by zero") {
        const SkewPolynomial f(theta, {2, 1});
        REQUIRE_THROWS_AS(right_divmod(f, SkewPolynomial::zero(theta)), DivisionByZero);
        REQUIRE_THROWS_AS(is_right_divisor(SkewPolynomial::zero(theta), f), DivisionByZero);
    }

    SECTION("division identity and uniqueness on random pairs") {
        std::mt19937 rng(17);
        for (auto [p, r] : small_prime_powers()) {
            const FiniteField K = make_field(p, r);
            for (std::uint32_t s = 0; s < r; ++s) {
                const Automorphism sigma = frobenius(K, s);
                for (int i = 0; i < 30; ++i) {
                    const SkewPolynomial f = random_poly(sigma, 7, rng);
                    SkewPolynomial g = random_poly(sigma, 3, rng);
                    if (g.is_zero()) g = SkewPolynomial::constant(sigma, K.one());
                    const auto [q, rem] = right_divmod(f, g);
                    REQUIRE(q * g + rem == f);
                    REQUIRE((rem.is_zero() || *rem.degree() < *g.degree()));
                    // shifting the dividend by dq*g shifts the quotient by dq
                    // and keeps the remainder: quotients are unique
                    const SkewPolynomial dq = random_poly(sigma, 2, rng);
                    const auto [q2, rem2] = right_divmod(f + dq * g, g);
                    REQUIRE(q2 == q + dq);
                    REQUIRE(rem2 == rem);
                }
            }
        }
    }
}

TEST_CASE("right evaluation") {
    const FiniteField F = make_field(2, 2);
    const Automorphism theta = frobenius(F, 1);
    const FieldElement xi = F.xi();

    SECTION("constants evaluate to themselves") {
        for (std::uint64_t c = 0; c < 4; ++c)
            for (std::uint64_t a = 0; a < 4; ++a)
                REQUIRE(right_eval(SkewPolynomial::constant(theta, F.element(c)), F.element(a)) ==
                        F.element(c));
    }

    SECTION("x^2 at xi gives N_2(xi) = 1") {
        const SkewPolynomial f = SkewPolynomial::monomial(theta, F.one(), 2);
        REQUIRE(right_eval(f, xi) == F.one());
    }

    SECTION("lambda x^n - mu vanishes at alpha iff lambda N_n(alpha) = mu") {
        for (std::uint64_t le = 1; le < 4; ++le)
            for (std::uint64_t me = 1; me < 4; ++me)
                for (std::uint64_t ae = 1; ae < 4; ++ae)
                    for (std::size_t n = 1; n <= 6; ++n) {
                        const FieldElement lambda = F.element(le), mu = F.element(me), alpha = F.element(ae);
                        SkewPolynomial f = SkewPolynomial::monomial(theta, lambda, n) -
                                           SkewPolynomial::constant(theta, mu);
                        const bool vanishes = right_eval(f, alpha).is_zero();
                        REQUIRE(vanishes == (lambda * norm(theta, n, alpha) == mu));
                    }
    }

    SECTION("evaluation equals the remainder of division by (x - alpha)") {
        std::mt19937 rng(19);
        for (auto [p, r] : small_prime_powers()) {
            const FiniteField K = make_field(p, r);
            for (std::uint32_t s = 0; s < r; ++s) {
                const Automorphism sigma = frobenius(K, s);
                for (std::uint64_t ae = 0; ae < K.q(); ++ae) {
                    const FieldElement alpha = K.element(ae);
                    const SkewPolynomial divisor(
                        sigma, {K.neg_enc(alpha.encoding()), 1});
                    for (int i = 0; i < 10; ++i) {
                        const SkewPolynomial f = random_poly(sigma, 8, rng);
                        const auto [q, rem] = right_divmod(f, divisor);
                        REQUIRE(rem == SkewPolynomial::constant(sigma, right_eval(f, alpha)));
                    }
                }
            }
        }
    }
}

TEST_CASE("right divisor predicate") {
    const FiniteField F = make_field(2, 2);
    const Automorphism theta = frobenius(F, 1);

    SECTION("1 divides everything") {
        const SkewPolynomial one = SkewPolynomial::constant(theta, F.one());
        REQUIRE(is_right_divisor(one, SkewPolynomial(theta, {2, 3, 1})));
        REQUIRE(is_right_divisor(one, SkewPolynomial::zero(theta)));
    }

    SECTION("(x - 1) does not right-divide x^2 - xi since N_2(1) != xi") {
        const SkewPolynomial g(theta, {1, 1});
        const SkewPolynomial f = SkewPolynomial::x_power_minus(theta, 2, F.xi());
        REQUIRE_FALSE(is_right_divisor(g, f));
    }

    SECTION("(x - alpha) right-divides x^n - lambda iff the evaluation vanishes") {
        for (std::uint64_t le = 1; le < 4; ++le)
            for (std::uint64_t ae = 1; ae < 4; ++ae)
                for (std::size_t n = 1; n <= 6; ++n) {
                    const SkewPolynomial f = SkewPolynomial::x_power_minus(theta, n, F.element(le));
                    const SkewPolynomial g(theta, {F.neg_enc(static_cast<std::uint32_t>(ae)), 1});
                    REQUIRE(is_right_divisor(g, f) == right_eval(f, F.element(ae)).is_zero());
                }
    }
}

TEST_CASE("substitution scaling") {
    const FiniteField F = make_field(2, 2);
    const Automorphism theta = frobenius(F, 1);
    const FieldElement xi = F.xi();

    SECTION("alpha = 1 is the identity") {
        std::mt19937 rng(23);
        for (int i = 0; i < 10; ++i) {
            const SkewPolynomial f = random_poly(theta, 6, rng);
            REQUIRE(substitute_scale(f, F.one()) == f);
        }
    }

    SECTION("x^n picks up N_n(alpha)") {
        for (std::size_t n = 0; n <= 6; ++n)
            for (std::uint64_t ae = 1; ae < 4; ++ae) {
                const SkewPolynomial f = SkewPolynomial::monomial(theta, F.one(), n);
                const SkewPolynomial expect =
                    SkewPolynomial::monomial(theta, norm(theta, n, F.element(ae)), n);
                REQUIRE(substitute_scale(f, F.element(ae)) == expect);
            }
    }

    SECTION("1 + x + x^2 at alpha = xi becomes 1 + xi x + x^2") {
        const SkewPolynomial f(theta, {1, 1, 1});
        REQUIRE(substitute_scale(f, xi).coefficients() == std::vector<std::uint32_t>{1, 2, 1});
    }
}

TEST_CASE("centrality") {
    const FiniteField F = make_field(2, 2);
    const Automorphism theta = frobenius(F, 1);

    SECTION("pinned GF(4) cases") {
        REQUIRE(is_central(SkewPolynomial::constant(theta, F.one())));
        REQUIRE(is_central(SkewPolynomial::zero(theta)));
        REQUIRE_FALSE(is_central(SkewPolynomial::constant(theta, F.xi())));
        REQUIRE_FALSE(is_central(SkewPolynomial::monomial(theta, F.one(), 1)));
        REQUIRE(is_central(SkewPolynomial::monomial(theta, F.one(), 2)));
    }

    SECTION("structural characterization: exponents divisible by m, coefficients fixed") {
        std::mt19937 rng(29);
        for (auto [p, r] : small_prime_powers()) {
            const FiniteField K = make_field(p, r);
            for (std::uint32_t s = 0; s < r; ++s) {
                const Automorphism sigma = frobenius(K, s);
                for (int i = 0; i < 40; ++i) {
                    const SkewPolynomial f = random_poly(sigma, 6, rng);
                    bool structural = true;
                    for (std::size_t j = 0; j < f.coefficients().size(); ++j) {
                        if (f.coeff_enc(j) == 0) continue;
                        if (j % sigma.order() != 0 || sigma.apply(f.coeff(j)) != f.coeff(j)) {
                            structural = false;
                            break;
                        }
                    }
                    REQUIRE(is_central(f) == structural);
                }
            }
        }
    }

    SECTION("x^n - lambda is central iff m | n and lambda is fixed, q <= 16, n <= 12") {
        for (auto [p, r] : small_prime_powers()) {
            const FiniteField K = make_field(p, r);
            for (std::uint32_t s = 0; s < r; ++s) {
                const Automorphism sigma = frobenius(K, s);
                for (std::size_t n = 1; n <= 12; ++n)
                    for (std::uint64_t le = 1; le < K.q(); ++le) {
                        const FieldElement lambda = K.element(le);
                        const bool expect =
                            n % sigma.order() == 0 && sigma.apply(lambda) == lambda;
                        REQUIRE(is_central(SkewPolynomial::x_power_minus(sigma, n, lambda)) == expect);
                    }
            }
        }
    }
}

TEST_CASE("polynomial representation details") {
    const FiniteField F = make_field(2, 2);
    const Automorphism theta = frobenius(F, 1);

    SECTION("the zero polynomial has no degree") {
        REQUIRE_FALSE(SkewPolynomial::zero(theta).degree().has_value());
        REQUIRE(SkewPolynomial(theta, {0, 0, 0}).is_zero());
        REQUIRE(SkewPolynomial(theta, {1, 2, 0}).degree() == 1);
    }

    SECTION("monic normalization left-scales by the inverse leading coefficient") {
        const SkewPolynomial f(theta, {1, 2, 3});
        const SkewPolynomial m = f.monic();
        REQUIRE(m.is_monic());
        REQUIRE(SkewPolynomial::constant(theta, f.leading()) * m == f);
        REQUIRE_THROWS_AS(SkewPolynomial::zero(theta).monic(), ZeroArgument);
    }

    SECTION("CSV round trip") {
        const SkewPolynomial f(theta, {1, 0, 1});
        REQUIRE(f.to_csv() == "1,0,1");
        REQUIRE(parse_polynomial_csv(theta, "1,0,1") == f);
        REQUIRE(parse_polynomial_csv(theta, "0") == SkewPolynomial::zero(theta));
        REQUIRE_THROWS_AS(parse_polynomial_csv(theta, "1,x"), InvalidArgument);
        REQUIRE_THROWS_AS(parse_polynomial_csv(theta, "9,1"), InvalidArgument);
        REQUIRE_THROWS_AS(parse_polynomial_csv(theta, ""), InvalidArgument);
    }
}
