#pragma once

/**
 * @file skew_polynomial.hpp
 * @brief Arithmetic in the Ore ring F_q[x, sigma]: twisted multiplication
 *        x a = sigma(a) x, right Euclidean division, right evaluation,
 *        centrality, and the substitution map f(x) -> f(alpha x).
 *
 * Coefficients are stored lowest degree first with no trailing zeros; the
 * zero polynomial is the empty sequence and reports no degree at all rather
 * than a numeric sentinel.
 */

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "galois_field.hpp"

namespace skewcc {

class SkewPolynomial {
  public:
    SkewPolynomial(const Automorphism& aut, std::vector<std::uint32_t> coeff_encodings)
        : aut_(aut), coeffs_(std::move(coeff_encodings)) {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
        for (std::uint32_t c : coeffs_)
            if (c >= aut_.field().q()) throw InvalidArgument("coefficient encoding out of range");
    }

    static SkewPolynomial zero(const Automorphism& aut) { return SkewPolynomial(aut, {}); }

    static SkewPolynomial constant(const Automorphism& aut, const FieldElement& c) {
        return SkewPolynomial(aut, {c.encoding()});
    }

    static SkewPolynomial monomial(const Automorphism& aut, const FieldElement& c, std::size_t deg) {
        std::vector<std::uint32_t> v(deg + 1, 0);
        v[deg] = c.encoding();
        return SkewPolynomial(aut, std::move(v));
    }

    /// x^n - lambda, the modulus of the ambient quotient.
    static SkewPolynomial x_power_minus(const Automorphism& aut, std::size_t n, const FieldElement& lambda) {
        std::vector<std::uint32_t> v(n + 1, 0);
        v[0] = aut.field().neg_enc(lambda.encoding());
        v[n] = 1;
        return SkewPolynomial(aut, std::move(v));
    }

    const Automorphism& aut() const noexcept { return aut_; }
    const FiniteField& field() const { return aut_.field(); }

    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Degree, or nothing for the zero polynomial.
    std::optional<std::size_t> degree() const noexcept {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }

    std::uint32_t coeff_enc(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }

    FieldElement coeff(std::size_t i) const { return field().element(coeff_enc(i)); }

    FieldElement leading() const {
        if (coeffs_.empty()) throw ZeroArgument("leading coefficient of the zero polynomial");
        return field().element(coeffs_.back());
    }

    const std::vector<std::uint32_t>& coefficients() const noexcept { return coeffs_; }

    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }

    /// Left-scale by the inverse of the leading coefficient. Preserves the
    /// generated left ideal.
    SkewPolynomial monic() const {
        if (is_zero()) throw ZeroArgument("cannot normalize the zero polynomial");
        if (is_monic()) return *this;
        const FiniteField& F = field();
        const std::uint32_t c = F.inv_enc(coeffs_.back());
        std::vector<std::uint32_t> out(coeffs_.size());
        for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = F.mul_enc(c, coeffs_[i]);
        return SkewPolynomial(aut_, std::move(out));
    }

    friend SkewPolynomial operator+(const SkewPolynomial& f, const SkewPolynomial& g) {
        ensure_same(f, g);
        const FiniteField& F = f.field();
        std::vector<std::uint32_t> out(std::max(f.coeffs_.size(), g.coeffs_.size()), 0);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.add_enc(f.coeff_enc(i), g.coeff_enc(i));
        return SkewPolynomial(f.aut_, std::move(out));
    }

    friend SkewPolynomial operator-(const SkewPolynomial& f, const SkewPolynomial& g) {
        ensure_same(f, g);
        const FiniteField& F = f.field();
        std::vector<std::uint32_t> out(std::max(f.coeffs_.size(), g.coeffs_.size()), 0);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.sub_enc(f.coeff_enc(i), g.coeff_enc(i));
        return SkewPolynomial(f.aut_, std::move(out));
    }

    /// Twisted product: the x^k coefficient of f*g is
    /// sum_{i+j=k} f_i sigma^i(g_j).
    friend SkewPolynomial operator*(const SkewPolynomial& f, const SkewPolynomial& g) {
        ensure_same(f, g);
        if (f.is_zero() || g.is_zero()) return zero(f.aut_);
        const FiniteField& F = f.field();
        std::vector<std::uint32_t> out(f.coeffs_.size() + g.coeffs_.size() - 1, 0);
        for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
            if (f.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < g.coeffs_.size(); ++j) {
                const std::uint32_t t = F.mul_enc(f.coeffs_[i], f.aut_.apply_pow_enc(i, g.coeffs_[j]));
                out[i + j] = F.add_enc(out[i + j], t);
            }
        }
        return SkewPolynomial(f.aut_, std::move(out));
    }

    friend bool operator==(const SkewPolynomial& f, const SkewPolynomial& g) {
        return f.aut_ == g.aut_ && f.coeffs_ == g.coeffs_;
    }
    friend bool operator!=(const SkewPolynomial& f, const SkewPolynomial& g) { return !(f == g); }

    /// Comma-separated encodings, lowest degree first; "0" for the zero
    /// polynomial.
    std::string to_csv() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (i) os << ',';
            os << coeffs_[i];
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const SkewPolynomial& f) { return os << f.to_csv(); }

  private:
    static void ensure_same(const SkewPolynomial& f, const SkewPolynomial& g) {
        if (f.aut_ != g.aut_) throw AutomorphismMismatch("polynomials over different Ore rings");
    }

    Automorphism aut_;
    std::vector<std::uint32_t> coeffs_;
};

inline SkewPolynomial parse_polynomial_csv(const Automorphism& aut, const std::string& csv) {
    std::vector<std::uint32_t> coeffs;
    std::istringstream is(csv);
    std::string token;
    while (std::getline(is, token, ',')) {
        std::size_t pos = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(token, &pos);
        } catch (const std::exception&) {
            throw InvalidArgument("bad coefficient '" + token + "' in polynomial");
        }
        while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos]))) ++pos;
        if (pos != token.size()) throw InvalidArgument("bad coefficient '" + token + "' in polynomial");
        if (v >= aut.field().q()) throw InvalidArgument("coefficient encoding out of range");
        coeffs.push_back(static_cast<std::uint32_t>(v));
    }
    if (coeffs.empty()) throw InvalidArgument("empty polynomial");
    return SkewPolynomial(aut, std::move(coeffs));
}

/// Right Euclidean division: f = q*g + rem with deg rem < deg g.
inline std::pair<SkewPolynomial, SkewPolynomial> right_divmod(const SkewPolynomial& f,
                                                              const SkewPolynomial& g) {
    if (f.aut() != g.aut()) throw AutomorphismMismatch("polynomials over different Ore rings");
    if (g.is_zero()) throw DivisionByZero("right division by the zero polynomial");
    const Automorphism& aut = f.aut();
    const FiniteField& F = f.field();
    if (f.is_zero() || *f.degree() < *g.degree())
        return {SkewPolynomial::zero(aut), f};

    const std::size_t dg = *g.degree();
    std::vector<std::uint32_t> rem(f.coefficients());
    std::vector<std::uint32_t> quot(*f.degree() - dg + 1, 0);
    for (std::size_t step = quot.size(); step-- > 0;) {
        const std::uint32_t top = rem[step + dg];
        if (top == 0) continue;
        // c * sigma^step(lead g) cancels the current leading term.
        const std::uint32_t c = F.mul_enc(top, F.inv_enc(aut.apply_pow_enc(step, g.coeff_enc(dg))));
        quot[step] = c;
        for (std::size_t j = 0; j <= dg; ++j) {
            const std::uint32_t t = F.mul_enc(c, aut.apply_pow_enc(step, g.coeff_enc(j)));
            rem[step + j] = F.sub_enc(rem[step + j], t);
        }
    }
    rem.resize(dg);  // everything above is cancelled
    return {SkewPolynomial(aut, std::move(quot)), SkewPolynomial(aut, std::move(rem))};
}

/// Right evaluation f(alpha) = sum_i f_i N_i(alpha), the remainder of right
/// division by (x - alpha).
inline FieldElement right_eval(const SkewPolynomial& f, const FieldElement& alpha) {
    if (&alpha.field() != &f.field()) throw FieldMismatch("evaluation point from a different field");
    const FiniteField& F = f.field();
    std::uint32_t acc = 0;
    std::uint32_t n_i = 1;  // N_0 = 1, then N_{i+1} = sigma^i(alpha) * N_i
    const std::size_t terms = f.is_zero() ? 0 : *f.degree() + 1;
    for (std::size_t i = 0; i < terms; ++i) {
        acc = F.add_enc(acc, F.mul_enc(f.coeff_enc(i), n_i));
        n_i = F.mul_enc(f.aut().apply_pow_enc(i, alpha.encoding()), n_i);
    }
    return F.element(acc);
}

inline bool is_right_divisor(const SkewPolynomial& g, const SkewPolynomial& f) {
    return right_divmod(f, g).second.is_zero();
}

/// Coefficient-level action of f(x) -> f(alpha x): scales f_j by N_j(alpha).
inline SkewPolynomial substitute_scale(const SkewPolynomial& f, const FieldElement& alpha) {
    if (&alpha.field() != &f.field()) throw FieldMismatch("scale factor from a different field");
    if (f.is_zero()) return f;
    const FiniteField& F = f.field();
    std::vector<std::uint32_t> out(f.coefficients());
    std::uint32_t n_j = 1;
    for (std::size_t j = 0; j < out.size(); ++j) {
        out[j] = F.mul_enc(out[j], n_j);
        n_j = F.mul_enc(f.aut().apply_pow_enc(j, alpha.encoding()), n_j);
    }
    return SkewPolynomial(f.aut(), std::move(out));
}

/// Centrality test by commutation: f is central iff it commutes with x and
/// with the primitive element (constants generate F_q multiplicatively, so
/// these two suffice).
inline bool is_central(const SkewPolynomial& f) {
    const Automorphism& aut = f.aut();
    const SkewPolynomial x = SkewPolynomial::monomial(aut, f.field().one(), 1);
    const SkewPolynomial c = SkewPolynomial::constant(aut, f.field().xi());
    return f * x == x * f && f * c == c * f;
}

}  // namespace skewcc
