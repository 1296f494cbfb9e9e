// Walkthrough: classify the twist constants of F_4 and F_8 for small code
// lengths, then build one pair of equivalent codes and check that the
// isometry preserves the weight distribution.

#include <iostream>

#include "skewcc/skewcc.hpp"

using namespace skewcc;

int main() {
    // F_4 under the Frobenius a -> a^2: one class for odd n, three for even n.
    {
        const FiniteField F = make_field(2, 2);
        const Automorphism theta = frobenius(F, 1);
        std::cout << "F_4, sigma = Frobenius\n";
        for (std::uint64_t n = 1; n <= 6; ++n) {
            const EquivalenceContext ctx = make_context(theta, n);
            std::cout << "  n = " << n << ": " << ctx.class_count() << " class(es), representatives";
            for (const FieldElement& rep : class_representatives(ctx)) std::cout << " " << rep;
            std::cout << "\n";
        }
    }

    // F_8 under both nontrivial automorphisms: the count follows gcd(n, 3).
    {
        const FiniteField F = make_field(2, 3);
        for (std::uint32_t s : {1u, 2u}) {
            const Automorphism sigma = frobenius(F, s);
            std::cout << "F_8, s = " << s << ": counts for n = 1..9:";
            for_each_class_count(sigma, 1, 9,
                                 [](std::uint64_t, std::uint64_t count) { std::cout << " " << count; });
            std::cout << "\n";
        }
    }

    // An explicit isometry over F_4, length 3: a code over mu = xi mapped to
    // a cyclic code (lambda = 1).
    {
        const FiniteField F = make_field(2, 2);
        const Automorphism theta = frobenius(F, 1);
        const FieldElement one = F.one(), mu = F.xi();
        const EquivalenceContext ectx = make_context(theta, 3);
        const FieldElement alpha = *find_witness(ectx, one, mu);

        const CodeContext mu_ctx(theta, 3, mu);
        const SkewConstacyclicCode source =
            make_code(mu_ctx, enumerate_right_divisors(mu_ctx, 1).front());
        const CodeContext cyclic_ctx(theta, 3, one);
        const SkewConstacyclicCode image = apply_isometry(source, alpha, cyclic_ctx);

        std::cout << "F_4, n = 3: source g = " << source.generator() << " over mu = " << mu
                  << ", witness alpha = " << alpha << ", image g = " << image.generator() << "\n";
        std::cout << "  weight distributions";
        std::cout << " source:";
        for (std::uint64_t c : weight_distribution(source)) std::cout << " " << c;
        std::cout << "  image:";
        for (std::uint64_t c : weight_distribution(image)) std::cout << " " << c;
        std::cout << "\n";
    }
    return 0;
}
