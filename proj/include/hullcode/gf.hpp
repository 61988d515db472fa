#pragma once

// Arithmetic in GF(p^r).
//
// Elements are identified by their canonical encoding: the element with
// polynomial coefficients c_0..c_{r-1} (in the basis 1, x, ..., x^{r-1}) is the
// integer sum c_j * p^j. Encodings are therefore exactly 0..q-1, with 0 the
// additive and 1 the multiplicative identity.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hullcode/error.hpp"

namespace hullcode {

using Element = std::uint32_t;

inline constexpr std::uint64_t kDefaultFieldSizeCap = std::uint64_t{1} << 20;
inline constexpr std::uint64_t kLogTableCap = std::uint64_t{1} << 16;

inline bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Decomposes q = p^r. Empty when q is not a prime power.
inline std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power_decomposition(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    std::uint64_t p = 0;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return std::pair{static_cast<std::uint32_t>(q), std::uint32_t{1}};
    std::uint32_t r = 0;
    while (q % p == 0) {
        q /= p;
        ++r;
    }
    if (q != 1) return std::nullopt;
    return std::pair{static_cast<std::uint32_t>(p), r};
}

namespace detail {

// Polynomials over GF(p), coefficients low degree first. Used to find and
// apply the modulus; the field itself only ever sees canonical encodings.
using Poly = std::vector<std::uint32_t>;

inline void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint32_t inv_mod_prime(std::uint32_t a, std::uint32_t p) {
    // Fermat: a^(p-2)
    std::uint64_t result = 1, base = a % p;
    for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
        if (e & 1u) result = result * base % p;
        base = base * base % p;
    }
    return static_cast<std::uint32_t>(result);
}

/// Remainder of a modulo b (b nonzero, trimmed).
inline Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
    poly_trim(a);
    const std::size_t db = b.size() - 1;
    const std::uint64_t lead_inv = inv_mod_prime(b.back(), p);
    while (a.size() >= b.size()) {
        const std::uint64_t factor = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t j = 0; j <= db; ++j) {
            const std::uint64_t sub = factor * b[j] % p;
            a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + p - sub) % p);
        }
        poly_trim(a);
    }
    return a;
}

/// Brute-force irreducibility: no monic divisor of degree 1..deg/2.
inline bool poly_is_irreducible(const Poly& f, std::uint32_t p) {
    const std::size_t deg = f.size() - 1;
    if (deg <= 1) return deg == 1;
    for (std::size_t e = 1; e <= deg / 2; ++e) {
        std::uint64_t count = 1;
        for (std::size_t j = 0; j < e; ++j) count *= p;
        Poly g(e + 1, 0);
        g[e] = 1;
        for (std::uint64_t code = 0; code < count; ++code) {
            std::uint64_t c = code;
            for (std::size_t j = 0; j < e; ++j) {
                g[j] = static_cast<std::uint32_t>(c % p);
                c /= p;
            }
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

inline std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace detail

/// A finite field GF(p^r) with a fixed monic irreducible modulus.
///
/// Cheap to copy: the tables live behind a shared immutable block, so a Field
/// can be passed by value and shared across threads.
class Field {
public:
    /// GF(p^r) with the smallest monic irreducible modulus of degree r, where
    /// candidates are ordered by the canonical encoding of their lower
    /// coefficients. For r = 1 the modulus is x.
    static Field make(std::uint32_t p, std::uint32_t r, std::uint64_t size_cap = kDefaultFieldSizeCap) {
        if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
        if (r < 1) throw Error(Errc::InvalidParams, "extension degree must be at least 1");
        std::uint64_t q = 1;
        for (std::uint32_t j = 0; j < r; ++j) {
            q *= p;
            if (q > size_cap)
                throw Error(Errc::SizeCapExceeded,
                            std::to_string(p) + "^" + std::to_string(r) + " exceeds the field size cap " +
                                std::to_string(size_cap));
        }
        return Field(std::make_shared<const Impl>(p, r, q));
    }

    /// GF(q) for a prime power q.
    static Field of_order(std::uint64_t q, std::uint64_t size_cap = kDefaultFieldSizeCap) {
        const auto pr = prime_power_decomposition(q);
        if (!pr) throw Error(Errc::NotPrimePower, std::to_string(q) + " is not a prime power");
        return make(pr->first, pr->second, size_cap);
    }

    std::uint32_t characteristic() const noexcept { return impl_->p; }
    std::uint32_t degree() const noexcept { return impl_->r; }
    std::uint32_t order() const noexcept { return impl_->q; }
    /// Coefficients c_0..c_r of the modulus, c_r = 1.
    const std::vector<std::uint32_t>& modulus() const noexcept { return impl_->modulus; }

    bool contains(Element a) const noexcept { return a < impl_->q; }

    Element zero() const noexcept { return 0; }
    Element one() const noexcept { return 1; }

    Element add(Element a, Element b) const noexcept {
        const Impl& f = *impl_;
        if (f.p == 2) return a ^ b;
        if (f.r == 1) return (a + b) % f.p;
        Element out = 0;
        for (std::uint32_t j = f.r; j-- > 0;) {
            const std::uint32_t pw = f.powers[j];
            const std::uint32_t da = (a / pw) % f.p, db = (b / pw) % f.p;
            out += ((da + db) % f.p) * pw;
        }
        return out;
    }

    Element neg(Element a) const noexcept {
        const Impl& f = *impl_;
        if (f.p == 2) return a;
        if (f.r == 1) return a == 0 ? 0 : f.p - a;
        Element out = 0;
        for (std::uint32_t j = 0; j < f.r; ++j) {
            const std::uint32_t pw = f.powers[j];
            const std::uint32_t da = (a / pw) % f.p;
            out += ((f.p - da) % f.p) * pw;
        }
        return out;
    }

    Element sub(Element a, Element b) const noexcept { return add(a, neg(b)); }

    Element mul(Element a, Element b) const noexcept {
        if (a == 0 || b == 0) return 0;
        const Impl& f = *impl_;
        if (f.r == 1) return static_cast<Element>(std::uint64_t{a} * b % f.p);
        if (!f.log.empty()) return f.exp[f.log[a] + f.log[b]];
        return f.mul_slow(a, b);
    }

    Element inv(Element a) const {
        if (a == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
        const Impl& f = *impl_;
        if (!f.log.empty()) return f.exp[(f.q - 1 - f.log[a]) % (f.q - 1)];
        return pow(a, f.q - 2);
    }

    Element div(Element a, Element b) const { return mul(a, inv(b)); }

    Element pow(Element a, std::uint64_t e) const noexcept {
        Element result = 1;
        Element base = a;
        for (; e > 0; e >>= 1) {
            if (e & 1u) result = mul(result, base);
            base = mul(base, base);
        }
        return result;
    }

    Element square(Element a) const noexcept { return mul(a, a); }

    /// Multiplicative order of a nonzero element.
    std::uint64_t multiplicative_order(Element a) const {
        if (a == 0) throw Error(Errc::DivisionByZero, "zero has no multiplicative order");
        std::uint64_t n = impl_->q - 1;
        for (const std::uint64_t ell : impl_->group_order_factors)
            while (n % ell == 0 && pow(a, n / ell) == 1) n /= ell;
        return n;
    }

    bool is_primitive(Element a) const {
        return a != 0 && contains(a) && multiplicative_order(a) == impl_->q - 1;
    }

    /// Smallest-encoded generator of the multiplicative group.
    Element primitive_element() const noexcept { return impl_->primitive; }

    friend bool operator==(const Field& a, const Field& b) noexcept {
        return a.impl_ == b.impl_ ||
               (a.impl_->p == b.impl_->p && a.impl_->r == b.impl_->r && a.impl_->modulus == b.impl_->modulus);
    }

    std::string name() const {
        return "GF(" + std::to_string(impl_->q) + ")";
    }

private:
    struct Impl {
        std::uint32_t p, r, q;
        std::vector<std::uint32_t> modulus;
        std::vector<std::uint32_t> powers;  // p^j, j = 0..r-1
        std::vector<std::uint64_t> group_order_factors;
        Element primitive = 1;
        std::vector<Element> exp;  // exp[i] = primitive^i, doubled length
        std::vector<std::uint32_t> log;

        Impl(std::uint32_t p_, std::uint32_t r_, std::uint64_t q_)
            : p(p_), r(r_), q(static_cast<std::uint32_t>(q_)) {
            powers.resize(r);
            std::uint32_t pw = 1;
            for (std::uint32_t j = 0; j < r; ++j, pw *= p) powers[j] = pw;
            modulus = find_modulus();
            group_order_factors = detail::distinct_prime_factors(q - 1);
            primitive = find_primitive();
            if (r > 1 && q <= kLogTableCap) build_tables();
        }

        detail::Poly find_modulus() const {
            detail::Poly f(r + 1, 0);
            f[r] = 1;
            if (r == 1) return f;  // x
            for (std::uint64_t code = 0; code < q; ++code) {
                std::uint64_t c = code;
                for (std::uint32_t j = 0; j < r; ++j) {
                    f[j] = static_cast<std::uint32_t>(c % p);
                    c /= p;
                }
                if (detail::poly_is_irreducible(f, p)) return f;
            }
            throw Error(Errc::InternalInconsistency, "no irreducible polynomial found");
        }

        detail::Poly decode(Element a) const {
            detail::Poly out(r);
            for (std::uint32_t j = 0; j < r; ++j) {
                out[j] = a % p;
                a /= p;
            }
            return out;
        }

        Element encode(const detail::Poly& c) const {
            Element out = 0;
            for (std::size_t j = 0; j < c.size() && j < r; ++j) out += c[j] * powers[j];
            return out;
        }

        Element mul_slow(Element a, Element b) const {
            if (r == 1) return static_cast<Element>(std::uint64_t{a} * b % p);
            const detail::Poly pa = decode(a), pb = decode(b);
            detail::Poly prod(2 * r - 1, 0);
            for (std::uint32_t i = 0; i < r; ++i) {
                if (pa[i] == 0) continue;
                for (std::uint32_t j = 0; j < r; ++j)
                    prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{pa[i]} * pb[j]) % p);
            }
            return encode(detail::poly_mod(std::move(prod), modulus, p));
        }

        Element pow_slow(Element a, std::uint64_t e) const {
            Element result = 1;
            for (; e > 0; e >>= 1) {
                if (e & 1u) result = mul_slow(result, a);
                a = mul_slow(a, a);
            }
            return result;
        }

        Element find_primitive() const {
            if (q == 2) return 1;
            for (Element a = 2; a < q; ++a) {
                bool ok = true;
                for (const std::uint64_t ell : group_order_factors) {
                    if (pow_slow(a, (q - 1) / ell) == 1) {
                        ok = false;
                        break;
                    }
                }
                if (ok) return a;
            }
            throw Error(Errc::InternalInconsistency, "no primitive element found");
        }

        void build_tables() {
            exp.resize(2 * (q - 1));
            log.assign(q, 0);
            Element x = 1;
            for (std::uint32_t i = 0; i < q - 1; ++i) {
                exp[i] = x;
                exp[i + q - 1] = x;
                log[x] = i;
                x = mul_slow(x, primitive);
            }
        }
    };

    explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

    std::shared_ptr<const Impl> impl_;
};

/// An element bound to its field. Mixing elements of different fields throws
/// FieldMismatch.
class FieldElement {
public:
    FieldElement(Field field, Element value) : field_(std::move(field)), value_(value) {
        if (!field_.contains(value_))
            throw Error(Errc::DomainError, std::to_string(value) + " is not an element of " + field_.name());
    }

    const Field& field() const noexcept { return field_; }
    Element value() const noexcept { return value_; }

    FieldElement inv() const { return {field_, field_.inv(value_)}; }
    FieldElement operator-() const { return {field_, field_.neg(value_)}; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        check(a, b);
        return {a.field_, a.field_.add(a.value_, b.value_)};
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        check(a, b);
        return {a.field_, a.field_.sub(a.value_, b.value_)};
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        check(a, b);
        return {a.field_, a.field_.mul(a.value_, b.value_)};
    }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        check(a, b);
        return {a.field_, a.field_.div(a.value_, b.value_)};
    }
    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.value_ == b.value_ && a.field_ == b.field_;
    }

private:
    static void check(const FieldElement& a, const FieldElement& b) {
        if (!(a.field_ == b.field_))
            throw Error(Errc::FieldMismatch, a.field_.name() + " vs " + b.field_.name());
    }

    Field field_;
    Element value_;
};

inline Element primitive_element(const Field& f) noexcept { return f.primitive_element(); }

/// Exponent w in 0..q-2 with base^w = target, by walking the powers of base.
inline std::uint64_t discrete_log(const Field& f, Element base, Element target) {
    if (target == 0) throw Error(Errc::ZeroTarget, "discrete log of zero");
    if (!f.contains(target)) throw Error(Errc::DomainError, "target outside the field");
    if (!f.is_primitive(base))
        throw Error(Errc::BaseNotPrimitive, std::to_string(base) + " is not primitive in " + f.name());
    Element x = 1;
    for (std::uint64_t w = 0; w + 1 < f.order(); ++w) {
        if (x == target) return w;
        x = f.mul(x, base);
    }
    throw Error(Errc::InternalInconsistency, "primitive base failed to reach target");
}

/// Square root in characteristic 2, x^(2^(r-1)). Squaring is a bijection there.
inline Element sqrt_char2(const Field& f, Element x) {
    if (f.characteristic() != 2)
        throw Error(Errc::WrongCharacteristic, "square roots by Frobenius need characteristic 2");
    for (std::uint32_t j = 1; j < f.degree(); ++j) x = f.square(x);
    return x;
}

/// Smallest a with a^2 = -1. Exists iff q = 1 mod 4.
inline Element find_sqrt_minus_one(const Field& f) {
    if (f.characteristic() == 2) throw Error(Errc::WrongCharacteristic, "expected odd characteristic");
    const Element minus_one = f.neg(1);
    for (Element a = 0; a < f.order(); ++a)
        if (f.square(a) == minus_one) return a;
    throw Error(Errc::NoSquareRootOfMinusOne, "-1 is not a square in " + f.name());
}

/// Lexicographically smallest (a, b), both nonzero, with a^2 + b^2 = -1.
inline std::pair<Element, Element> find_sum_two_squares_minus_one(const Field& f) {
    if (f.characteristic() == 2) throw Error(Errc::WrongCharacteristic, "expected odd characteristic");
    const Element minus_one = f.neg(1);
    // For each a, b^2 must equal -1 - a^2; index the squares once.
    std::vector<Element> smallest_root(f.order(), 0);
    std::vector<bool> is_square(f.order(), false);
    for (Element b = f.order(); b-- > 1;) {
        const Element s = f.square(b);
        is_square[s] = true;
        smallest_root[s] = b;
    }
    for (Element a = 1; a < f.order(); ++a) {
        const Element need = f.sub(minus_one, f.square(a));
        if (need != 0 && is_square[need]) return {a, smallest_root[need]};
    }
    throw Error(Errc::NoSolution, "no nonzero a, b with a^2 + b^2 = -1 in " + f.name());
}

}  // namespace hullcode
