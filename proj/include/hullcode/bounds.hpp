#pragma once

// Gilbert-Varshamov-type existence conditions for codes with a prescribed hull
// dimension, and the success-probability bound of the random sampler.
// Everything except the entropy/rate threshold is exact.

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hullcode/error.hpp"
#include "hullcode/gf.hpp"

namespace hullcode {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct BoundReport {
    std::uint64_t q = 0;
    std::size_t m = 0, k = 0, d = 0;
    BigInt lhs;
    Rational rhs;  // a power of q; below 1 when the exponent is not positive
    bool holds = false;
    BigInt theta;
    std::vector<Rational> epsilons;  // eps_2 .. eps_k
    Rational p_jk_lower;
};

inline BigInt binomial(std::size_t n, std::size_t j) {
    if (j > n) return 0;
    if (j > n - j) j = n - j;
    BigInt out = 1;
    for (std::size_t i = 1; i <= j; ++i) {
        out *= n - j + i;
        out /= i;
    }
    return out;
}

/// q^e as an exact rational, e may be negative.
inline Rational rational_power(std::uint64_t q, long long e) {
    const BigInt mag = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(e < 0 ? -e : e));
    return e < 0 ? Rational(BigInt(1), mag) : Rational(mag);
}

namespace detail {

inline void validate_bound_params(std::uint64_t q, std::size_t m, std::size_t k, std::size_t d) {
    if (!prime_power_decomposition(q))
        throw Error(Errc::InvalidParams, std::to_string(q) + " is not a prime power");
    if (k < 1 || m < k) throw Error(Errc::InvalidParams, "need m >= k >= 1");
    if (d < 1 || d > m) throw Error(Errc::InvalidParams, "need 1 <= d <= m");
}

inline std::string rational_string(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r), den = boost::multiprecision::denominator(r);
    return den == 1 ? num.str() : num.str() + "/" + den.str();
}

}  // namespace detail

/// theta = (q-1) * sum_{j<d} (q-1)^j C(m, j): the number of (message, low-weight
/// word) incidences that can spoil a freshly drawn vector.
inline BigInt theta(std::uint64_t q, std::size_t m, std::size_t d) {
    if (d < 1 || d > m) throw Error(Errc::InvalidParams, "need 1 <= d <= m");
    BigInt sum = 0, qm1_pow = 1;
    for (std::size_t j = 0; j < d; ++j) {
        sum += qm1_pow * binomial(m, j);
        qm1_pow *= q - 1;
    }
    return sum * (q - 1);
}

/// eps_i = 1 - (1 + theta) / q^(m - 2i + 2) for i = 2..k.
inline std::vector<Rational> sampler_epsilons(std::uint64_t q, std::size_t m, std::size_t k, const BigInt& th) {
    std::vector<Rational> out;
    for (std::size_t i = 2; i <= k; ++i) {
        const long long e = static_cast<long long>(m) - 2 * static_cast<long long>(i) + 2;
        out.push_back(Rational(1) - Rational(th + 1) / rational_power(q, e));
    }
    return out;
}

/// Lower bound on the probability that k i.i.d. uniform vectors of F_q^m are
/// independent, mutually orthogonal, and span a code of distance >= d:
/// q^{-C(k,2)} * prod eps_i * (1 - theta / q^m), or 0 if any factor is negative.
inline Rational success_probability_lower_bound(std::uint64_t q, std::size_t m, std::size_t k, std::size_t d) {
    detail::validate_bound_params(q, m, k, d);
    const BigInt th = theta(q, m, d);
    Rational p = Rational(1) - Rational(th) / rational_power(q, static_cast<long long>(m));
    if (p < 0) return 0;
    for (const Rational& e : sampler_epsilons(q, m, k, th)) {
        if (e < 0) return 0;
        p *= e;
    }
    const long long pairs = static_cast<long long>(k * (k - 1) / 2);
    return p * rational_power(q, -pairs);
}

/// 1 + sum_{j<d} (q-1)^{j+1} C(m, j) < q^{m - 2k + 2}.
inline BoundReport gv_condition(std::uint64_t q, std::size_t m, std::size_t k, std::size_t d) {
    detail::validate_bound_params(q, m, k, d);
    BoundReport r;
    r.q = q;
    r.m = m;
    r.k = k;
    r.d = d;
    r.theta = theta(q, m, d);
    r.lhs = r.theta + 1;
    r.rhs = rational_power(q, static_cast<long long>(m) - 2 * static_cast<long long>(k) + 2);
    r.holds = Rational(r.lhs) < r.rhs;
    r.epsilons = sampler_epsilons(q, m, k, r.theta);
    r.p_jk_lower = success_probability_lower_bound(q, m, k, d);
    return r;
}

enum class SimplifiedForm {
    /// (d+1) C(m, d-1) < q^{m - 2k - d + 2}
    Displayed,
    /// (d+1) (q-1)^d C(m, d-1) < q^{m - 2k + 2}, the bound before (q-1)^d is relaxed to q^d.
    Intermediate,
};

/// Sufficient condition for gv_condition, valid while d - 1 <= m / 2.
/// lhs/rhs/holds describe the simplified inequality; the remaining fields are
/// the exact sampler quantities.
inline BoundReport simplified_condition(std::uint64_t q, std::size_t m, std::size_t k, std::size_t d,
                                        SimplifiedForm form = SimplifiedForm::Displayed) {
    detail::validate_bound_params(q, m, k, d);
    if (2 * (d - 1) > m)
        throw Error(Errc::HypothesisViolated,
                    "d - 1 = " + std::to_string(d - 1) + " exceeds m / 2 = " + std::to_string(m) + "/2");
    BoundReport r = gv_condition(q, m, k, d);
    const long long base_exp = static_cast<long long>(m) - 2 * static_cast<long long>(k) + 2;
    r.lhs = BigInt(d + 1) * binomial(m, d - 1);
    if (form == SimplifiedForm::Displayed) {
        r.rhs = rational_power(q, base_exp - static_cast<long long>(d));
    } else {
        r.lhs *= boost::multiprecision::pow(BigInt(q - 1), static_cast<unsigned>(d));
        r.rhs = rational_power(q, base_exp);
    }
    r.holds = Rational(r.lhs) < r.rhs;
    return r;
}

/// Binary entropy, H(0) = H(1) = 0.
inline long double entropy(long double delta) {
    if (!(delta >= 0.0L && delta <= 1.0L)) throw Error(Errc::DomainError, "entropy needs 0 <= delta <= 1");
    if (delta == 0.0L || delta == 1.0L) return 0.0L;
    return -delta * std::log2(delta) - (1.0L - delta) * std::log2(1.0L - delta);
}

/// Rate threshold (1 - delta - H(delta) / log2 q) / 2. Callers compare k/m
/// against it strictly.
inline long double epsilon0(long double delta, std::uint64_t q) {
    if (!(delta > 0.0L && delta < 0.5L)) throw Error(Errc::DomainError, "rate threshold needs 0 < delta < 1/2");
    if (q < 2) throw Error(Errc::DomainError, "rate threshold needs q >= 2");
    return 0.5L * (1.0L - delta - entropy(delta) / std::log2(static_cast<long double>(q)));
}

}  // namespace hullcode
