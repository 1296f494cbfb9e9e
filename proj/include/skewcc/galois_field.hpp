#pragma once

/**
 * @file galois_field.hpp
 * @brief Exact arithmetic in GF(p^r), its multiplicative structure, and its
 *        Frobenius-power automorphisms.
 *
 * A field is built once (modulus verified irreducible, primitive element and
 * discrete-log tables computed) and is immutable afterwards. Elements are
 * represented by their packed integer encoding e = sum_i c_i * p^i where
 * (c_0, ..., c_{r-1}) are the coordinates in the basis {1, t, ..., t^{r-1}}
 * and t is a root of the modulus.
 *
 * A FieldElement holds a pointer to its field; the field must outlive every
 * element, automorphism, polynomial and code built on top of it. All types
 * here are immutable after construction and safe to share across threads.
 */

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "errors.hpp"

namespace skewcc {

class FiniteField;
class FieldElement;
class Automorphism;

namespace detail {

using Digits = std::vector<std::uint32_t>;

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::uint32_t inv_mod_prime(std::uint32_t a, std::uint32_t p) {
    // Fermat: a^(p-2) mod p.
    std::uint64_t result = 1, base = a % p;
    std::uint32_t e = p - 2;
    while (e) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

inline void strip_trailing_zeros(Digits& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

// Remainder of a modulo b over GF(p). b must be nonzero.
inline Digits poly_rem(Digits a, const Digits& b, std::uint32_t p) {
    strip_trailing_zeros(a);
    const std::size_t db = b.size() - 1;
    const std::uint32_t lead_inv = inv_mod_prime(b.back(), p);
    while (a.size() > db) {
        const std::size_t shift = a.size() - 1 - db;
        const std::uint64_t c = std::uint64_t(a.back()) * lead_inv % p;
        for (std::size_t j = 0; j <= db; ++j) {
            std::uint64_t sub = c * b[j] % p;
            std::uint32_t& tgt = a[shift + j];
            tgt = static_cast<std::uint32_t>((tgt + p - sub) % p);
        }
        strip_trailing_zeros(a);
    }
    return a;
}

inline Digits poly_mul(const Digits& a, const Digits& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Digits out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = static_cast<std::uint32_t>((out[i + j] + std::uint64_t(a[i]) * b[j]) % p);
    return out;
}

// Trial division against every monic polynomial of degree 1..deg/2.
inline bool is_irreducible(const Digits& f, std::uint32_t p) {
    const std::size_t deg = f.size() - 1;
    if (deg == 0) return false;
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Digits g(d + 1, 0);
            std::uint64_t rest = idx;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(rest % p);
                rest /= p;
            }
            g[d] = 1;
            if (poly_rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace detail

/// Exact arithmetic in GF(p^r) with a fixed irreducible modulus.
///
/// Non-copyable and non-movable: elements and automorphisms refer back to the
/// field by pointer. Construct through make_field().
class FiniteField {
  public:
    static constexpr std::uint64_t kMaxQ = std::uint64_t(1) << 20;

    FiniteField(std::uint32_t p, std::uint32_t r, const detail::Digits& modulus_coeffs)
        : p_(p), r_(r) {
        if (!detail::is_prime(p)) throw NonPrimeCharacteristic("p = " + std::to_string(p) + " is not prime");
        if (r < 1) throw DegreeMismatch("extension degree must be >= 1");
        q_ = 1;
        for (std::uint32_t i = 0; i < r; ++i) {
            q_ *= p;
            if (q_ > kMaxQ) throw InvalidArgument("field too large: q exceeds 2^20");
        }
        if (modulus_coeffs.empty()) {
            modulus_ = smallest_irreducible(p, r);
        } else {
            modulus_ = modulus_coeffs;
            if (modulus_.size() != r + 1) throw DegreeMismatch("modulus degree must equal r");
            if (modulus_.back() != 1) throw DegreeMismatch("modulus must be monic");
            for (std::uint32_t c : modulus_)
                if (c >= p) throw DegreeMismatch("modulus coefficient out of range");
            if (!detail::is_irreducible(modulus_, p))
                throw ReducibleModulus("modulus is reducible over GF(" + std::to_string(p) + ")");
        }
        build_tables();
    }

    FiniteField(const FiniteField&) = delete;
    FiniteField& operator=(const FiniteField&) = delete;

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t r() const noexcept { return r_; }
    std::uint64_t q() const noexcept { return q_; }
    const detail::Digits& modulus() const noexcept { return modulus_; }

    /// Modulus as a base-p packed integer (degree-r term included).
    std::uint64_t modulus_encoding() const noexcept {
        std::uint64_t e = 0;
        for (std::size_t i = modulus_.size(); i-- > 0;) e = e * p_ + modulus_[i];
        return e;
    }

    std::uint64_t xi_encoding() const noexcept { return xi_; }

    // --- encoding-level arithmetic -------------------------------------

    std::uint32_t add_enc(std::uint32_t a, std::uint32_t b) const {
        if (p_ == 2) return a ^ b;
        if (!add_table_.empty()) return add_table_[std::size_t(a) * q_ + b];
        return add_digitwise(a, b);
    }

    std::uint32_t neg_enc(std::uint32_t a) const { return neg_table_[a]; }

    std::uint32_t sub_enc(std::uint32_t a, std::uint32_t b) const { return add_enc(a, neg_table_[b]); }

    std::uint32_t mul_enc(std::uint32_t a, std::uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        std::uint64_t e = log_table_[a] + log_table_[b];
        if (e >= q_ - 1) e -= q_ - 1;
        return exp_table_[e];
    }

    std::uint32_t inv_enc(std::uint32_t a) const {
        if (a == 0) throw ZeroInverse("inverse of zero");
        return exp_table_[(q_ - 1 - log_table_[a]) % (q_ - 1)];
    }

    std::uint32_t pow_enc(std::uint32_t a, std::int64_t e) const {
        if (a == 0) {
            if (e > 0) return 0;
            if (e == 0) return 1;
            throw ZeroInverse("zero raised to a negative power");
        }
        const std::int64_t m = static_cast<std::int64_t>(q_ - 1);
        std::int64_t em = e % m;
        if (em < 0) em += m;
        return exp_table_[std::uint64_t(log_table_[a]) * std::uint64_t(em) % (q_ - 1)];
    }

    std::uint64_t log_enc(std::uint32_t a) const {
        if (a == 0) throw ZeroArgument("discrete log of zero");
        return log_table_[a];
    }

    std::uint32_t exp_of(std::uint64_t k) const { return exp_table_[k % (q_ - 1)]; }

    // --- element factories ---------------------------------------------

    FieldElement element(std::uint64_t encoding) const;
    FieldElement zero() const;
    FieldElement one() const;
    FieldElement xi() const;

    detail::Digits decode(std::uint32_t enc) const {
        detail::Digits d(r_, 0);
        for (std::uint32_t i = 0; i < r_; ++i) {
            d[i] = enc % p_;
            enc /= p_;
        }
        return d;
    }

  private:
    static detail::Digits smallest_irreducible(std::uint32_t p, std::uint32_t r) {
        // Lexicographically smallest monic irreducible, coefficients compared
        // low-degree-first.
        detail::Digits f(r + 1, 0);
        f[r] = 1;
        while (true) {
            if (detail::is_irreducible(f, p)) return f;
            std::uint32_t i = 0;
            for (; i < r; ++i) {
                // Low-degree-first lexicographic successor: treat c_{r-1} as
                // the fastest-moving digit.
                std::uint32_t pos = r - 1 - i;
                if (++f[pos] < p) break;
                f[pos] = 0;
            }
            if (i == r) throw ReducibleModulus("no irreducible polynomial found");  // unreachable
        }
    }

    std::uint32_t add_digitwise(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t out = 0, mult = 1;
        for (std::uint32_t i = 0; i < r_; ++i) {
            std::uint32_t da = a % p_, db = b % p_;
            out += (da + db) % p_ * mult;
            a /= p_;
            b /= p_;
            mult *= p_;
        }
        return out;
    }

    // Polynomial-representation product, used only to bootstrap the tables.
    std::uint32_t mul_raw(std::uint32_t a, std::uint32_t b) const {
        detail::Digits prod = detail::poly_mul(decode(a), decode(b), p_);
        detail::strip_trailing_zeros(prod);
        if (!prod.empty()) prod = detail::poly_rem(std::move(prod), modulus_, p_);
        std::uint32_t enc = 0;
        for (std::size_t i = prod.size(); i-- > 0;) enc = enc * p_ + prod[i];
        return enc;
    }

    std::uint32_t pow_raw(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t result = 1;
        while (e) {
            if (e & 1) result = mul_raw(result, a);
            a = mul_raw(a, a);
            e >>= 1;
        }
        return result;
    }

    void build_tables() {
        neg_table_.resize(q_);
        for (std::uint32_t a = 0; a < q_; ++a) {
            std::uint32_t out = 0, mult = 1, x = a;
            for (std::uint32_t i = 0; i < r_; ++i) {
                std::uint32_t d = x % p_;
                out += (p_ - d) % p_ * mult;
                x /= p_;
                mult *= p_;
            }
            neg_table_[a] = out;
        }

        // Smallest-encoding element of full multiplicative order q-1.
        std::vector<std::uint64_t> prime_factors;
        std::uint64_t rest = q_ - 1;
        for (std::uint64_t d = 2; d * d <= rest; ++d)
            if (rest % d == 0) {
                prime_factors.push_back(d);
                while (rest % d == 0) rest /= d;
            }
        if (rest > 1) prime_factors.push_back(rest);

        xi_ = 0;
        for (std::uint32_t cand = 1; cand < q_; ++cand) {
            bool full_order = true;
            for (std::uint64_t ell : prime_factors)
                if (pow_raw(cand, (q_ - 1) / ell) == 1) {
                    full_order = false;
                    break;
                }
            if (full_order) {
                xi_ = cand;
                break;
            }
        }

        exp_table_.resize(q_ - 1);
        log_table_.assign(q_, 0);
        std::uint32_t acc = 1;
        for (std::uint64_t k = 0; k < q_ - 1; ++k) {
            exp_table_[k] = acc;
            log_table_[acc] = k;
            acc = mul_raw(acc, static_cast<std::uint32_t>(xi_));
        }

        if (p_ != 2 && q_ <= 1024) {
            add_table_.resize(std::size_t(q_) * q_);
            for (std::uint32_t a = 0; a < q_; ++a)
                for (std::uint32_t b = 0; b < q_; ++b)
                    add_table_[std::size_t(a) * q_ + b] = add_digitwise(a, b);
        }
    }

    std::uint32_t p_;
    std::uint32_t r_;
    std::uint64_t q_;
    detail::Digits modulus_;
    std::uint64_t xi_ = 0;
    std::vector<std::uint32_t> exp_table_;
    std::vector<std::uint64_t> log_table_;
    std::vector<std::uint32_t> neg_table_;
    std::vector<std::uint32_t> add_table_;
};

/// One element of a FiniteField, identified by its packed integer encoding.
class FieldElement {
  public:
    FieldElement() : field_(nullptr), enc_(0) {}
    FieldElement(const FiniteField* field, std::uint32_t enc) : field_(field), enc_(enc) {}

    const FiniteField& field() const { return *field_; }
    std::uint32_t encoding() const noexcept { return enc_; }
    bool is_zero() const noexcept { return enc_ == 0; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        ensure_same(a, b);
        return {a.field_, a.field_->add_enc(a.enc_, b.enc_)};
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        ensure_same(a, b);
        return {a.field_, a.field_->sub_enc(a.enc_, b.enc_)};
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        ensure_same(a, b);
        return {a.field_, a.field_->mul_enc(a.enc_, b.enc_)};
    }
    FieldElement operator-() const { return {field_, field_->neg_enc(enc_)}; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.field_ == b.field_ && a.enc_ == b.enc_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }
    friend bool operator<(const FieldElement& a, const FieldElement& b) {
        ensure_same(a, b);
        return a.enc_ < b.enc_;
    }

    friend std::ostream& operator<<(std::ostream& os, const FieldElement& a) { return os << a.enc_; }

  private:
    static void ensure_same(const FieldElement& a, const FieldElement& b) {
        if (a.field_ != b.field_) throw FieldMismatch("operands belong to different fields");
    }

    const FiniteField* field_;
    std::uint32_t enc_;
};

inline FieldElement FiniteField::element(std::uint64_t encoding) const {
    if (encoding >= q_) throw InvalidArgument("element encoding out of range");
    return FieldElement(this, static_cast<std::uint32_t>(encoding));
}
inline FieldElement FiniteField::zero() const { return FieldElement(this, 0); }
inline FieldElement FiniteField::one() const { return FieldElement(this, 1); }
inline FieldElement FiniteField::xi() const { return FieldElement(this, static_cast<std::uint32_t>(xi_)); }

inline FieldElement inv(const FieldElement& a) { return a.field().element(a.field().inv_enc(a.encoding())); }

inline FieldElement pow(const FieldElement& a, std::int64_t e) {
    return a.field().element(a.field().pow_enc(a.encoding(), e));
}

inline FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * inv(b); }

/// Discrete logarithm base xi; defined on nonzero elements only.
inline std::uint64_t discrete_log(const FieldElement& a) { return a.field().log_enc(a.encoding()); }

/// Construct GF(p^r) with the default modulus: the lexicographically smallest
/// monic irreducible of degree r, coefficients compared low-degree-first.
inline FiniteField make_field(std::uint32_t p, std::uint32_t r) { return FiniteField(p, r, {}); }

inline FiniteField make_field(std::uint32_t p, std::uint32_t r, const detail::Digits& modulus) {
    return FiniteField(p, r, modulus);
}

/// Modulus given as the base-p packed integer of its coefficient sequence.
inline FiniteField make_field_packed(std::uint32_t p, std::uint32_t r, std::uint64_t packed_modulus) {
    detail::Digits coeffs;
    while (packed_modulus) {
        coeffs.push_back(static_cast<std::uint32_t>(packed_modulus % p));
        packed_modulus /= p;
    }
    return FiniteField(p, r, coeffs);
}

/// The automorphism a -> a^(p^s) of a fixed field, with its order m.
class Automorphism {
  public:
    Automorphism(const FiniteField* field, std::uint32_t s) : field_(field), s_(s) {
        const std::uint32_t r = field->r();
        if (s >= r) throw ExponentOutOfRange("Frobenius exponent must satisfy 0 <= s < r");
        m_ = r / std::gcd(r, s == 0 ? r : s);
        // Multiplier p^((s*i) mod r) for sigma^i, indexed by i mod r.
        frob_mult_.resize(r);
        for (std::uint32_t i = 0; i < r; ++i) {
            std::uint64_t e = (std::uint64_t(s) * i) % r;
            std::uint64_t m = 1;
            for (std::uint64_t j = 0; j < e; ++j) m *= field->p();
            frob_mult_[i] = m;
        }
    }

    const FiniteField& field() const { return *field_; }
    const FiniteField* field_ptr() const { return field_; }
    std::uint32_t s() const noexcept { return s_; }
    /// Order m of the automorphism: r / gcd(r, s), with m = 1 for s = 0.
    std::uint32_t order() const noexcept { return m_; }
    bool is_identity() const noexcept { return s_ == 0 || field_->r() == 1; }

    std::uint32_t apply_enc(std::uint32_t a) const { return apply_pow_enc(1, a); }

    /// sigma^i on encodings; i may be any non-negative integer.
    std::uint32_t apply_pow_enc(std::uint64_t i, std::uint32_t a) const {
        if (a == 0) return 0;
        const std::uint64_t m = field_->q() - 1;
        std::uint64_t e = field_->log_enc(a) * frob_mult_[i % field_->r()] % m;
        return field_->exp_of(e);
    }

    FieldElement apply(const FieldElement& a) const {
        ensure_member(a);
        return field_->element(apply_enc(a.encoding()));
    }

    FieldElement apply_pow(std::uint64_t i, const FieldElement& a) const {
        ensure_member(a);
        return field_->element(apply_pow_enc(i, a.encoding()));
    }

    friend bool operator==(const Automorphism& a, const Automorphism& b) {
        return a.field_ == b.field_ && a.s_ == b.s_;
    }
    friend bool operator!=(const Automorphism& a, const Automorphism& b) { return !(a == b); }

  private:
    void ensure_member(const FieldElement& a) const {
        if (&a.field() != field_) throw FieldMismatch("element does not belong to the automorphism's field");
    }

    const FiniteField* field_;
    std::uint32_t s_;
    std::uint32_t m_;
    std::vector<std::uint64_t> frob_mult_;
};

inline Automorphism frobenius(const FiniteField& field, std::uint32_t s) { return Automorphism(&field, s); }

/// Exact bracket [i]_s = (p^(si) - 1) / (p^s - 1) = 1 + p^s + ... + p^(s(i-1)),
/// with [i]_0 = i. Throws IndexTooLarge if the value does not fit in 64 bits.
inline std::uint64_t bracket(const Automorphism& aut, std::uint64_t i) {
    if (aut.s() == 0) return i;
    unsigned __int128 base = 1;
    for (std::uint32_t j = 0; j < aut.s(); ++j) base *= aut.field().p();
    unsigned __int128 acc = 0, term = 1;
    for (std::uint64_t k = 0; k < i; ++k) {
        acc += term;
        if (acc > ~std::uint64_t(0)) throw IndexTooLarge("[i]_s exceeds 64 bits; use bracket_mod");
        term *= base;
        if (k + 1 < i && term > ~std::uint64_t(0)) throw IndexTooLarge("[i]_s exceeds 64 bits; use bracket_mod");
    }
    return static_cast<std::uint64_t>(acc);
}

namespace detail {

inline std::uint64_t pow_mod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    unsigned __int128 result = 1, base = b % m;
    while (e) {
        if (e & 1) result = result * base % m;
        base = base * base % m;
        e >>= 1;
    }
    return static_cast<std::uint64_t>(result);
}

// 1 + b + ... + b^(i-1) mod m, by halving.
inline std::uint64_t geometric_sum_mod(std::uint64_t b, std::uint64_t i, std::uint64_t m) {
    if (i == 0) return 0;
    if (i % 2 == 0) {
        unsigned __int128 half = geometric_sum_mod(b, i / 2, m);
        unsigned __int128 lift = 1 + (unsigned __int128)pow_mod_u64(b, i / 2, m);
        return static_cast<std::uint64_t>(half * lift % m);
    }
    unsigned __int128 prev = geometric_sum_mod(b, i - 1, m);
    return static_cast<std::uint64_t>((prev * (b % m) + 1) % m);
}

}  // namespace detail

/// [i]_s mod m without big integers; valid for arbitrarily large i.
inline std::uint64_t bracket_mod(const Automorphism& aut, std::uint64_t i, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t base = 1;
    if (aut.s() == 0) {
        base = 1;  // [i]_0 = i = 1 + 1 + ... + 1
    } else {
        for (std::uint32_t j = 0; j < aut.s(); ++j) base *= aut.field().p();
    }
    return detail::geometric_sum_mod(base, i, m);
}

/// Twisted norm N_i(alpha) = sigma^(i-1)(alpha) ... sigma(alpha) alpha, equal
/// to alpha^([i]_s) for nonzero alpha. N_0 = 1 by convention, N_i(0) = 0 for
/// i >= 1.
inline FieldElement norm(const Automorphism& aut, std::uint64_t i, const FieldElement& alpha) {
    if (&alpha.field() != &aut.field()) throw FieldMismatch("norm argument from a different field");
    if (i == 0) return aut.field().one();
    if (alpha.is_zero()) return aut.field().zero();
    const std::uint64_t m = aut.field().q() - 1;
    const std::uint64_t e = bracket_mod(aut, i, m);
    return pow(alpha, static_cast<std::int64_t>(e));
}

/// Elements fixed by the automorphism, in encoding order. A subfield of size
/// p^gcd(r, s).
inline std::vector<FieldElement> fixed_subfield(const Automorphism& aut) {
    std::vector<FieldElement> out;
    for (std::uint64_t e = 0; e < aut.field().q(); ++e)
        if (aut.apply_enc(static_cast<std::uint32_t>(e)) == e) out.push_back(aut.field().element(e));
    return out;
}

}  // namespace skewcc
