#pragma once

// Brute-force reference computations. These deliberately avoid the library's
// elimination and enumeration code paths; they only borrow scalar field
// arithmetic, which test_gf checks against the polynomial oracle below.

#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include "hullcode/gf.hpp"
#include "hullcode/linalg.hpp"

namespace oracle {

using hullcode::Element;
using hullcode::Field;
using hullcode::FieldMatrix;
using Word = std::vector<Element>;
using Poly = std::vector<long long>;  // coefficients low degree first

inline Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

inline Poly poly_mul(const Poly& a, const Poly& b, long long p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    return trim(out);
}

/// Reduces by repeatedly substituting x^r = -(c_0 + ... + c_{r-1} x^{r-1}).
inline Poly reduce(Poly a, const std::vector<std::uint32_t>& modulus, long long p) {
    const std::size_t r = modulus.size() - 1;
    a = trim(a);
    while (a.size() > r) {
        const long long top = a.back();
        const std::size_t shift = a.size() - 1 - r;
        a.pop_back();
        for (std::size_t j = 0; j < r; ++j) a[shift + j] = ((a[shift + j] - top * modulus[j]) % p + p) % p;
        a = trim(a);
    }
    return a;
}

inline Poly decode(Element v, long long p, std::size_t r) {
    Poly out(r, 0);
    for (std::size_t j = 0; j < r; ++j) {
        out[j] = v % p;
        v /= static_cast<Element>(p);
    }
    return trim(out);
}

inline Element encode(const Poly& a, long long p) {
    Element out = 0, pw = 1;
    for (const long long c : a) {
        out += static_cast<Element>(c) * pw;
        pw *= static_cast<Element>(p);
    }
    return out;
}

/// Field multiplication straight from polynomial arithmetic.
inline Element mul(const Field& f, Element a, Element b) {
    const long long p = f.characteristic();
    return encode(reduce(poly_mul(decode(a, p, f.degree()), decode(b, p, f.degree()), p), f.modulus(), p), p);
}

/// Irreducibility by enumerating every product of two monic factors of
/// positive degree and checking whether one equals f.
inline bool is_irreducible(const std::vector<std::uint32_t>& f, long long p) {
    const std::size_t r = f.size() - 1;
    const Poly target(f.begin(), f.end());
    const auto monics = [&](std::size_t deg) {
        std::vector<Poly> out;
        long long count = 1;
        for (std::size_t j = 0; j < deg; ++j) count *= p;
        for (long long code = 0; code < count; ++code) {
            Poly g(deg + 1, 0);
            long long c = code;
            for (std::size_t j = 0; j < deg; ++j) {
                g[j] = c % p;
                c /= p;
            }
            g[deg] = 1;
            out.push_back(g);
        }
        return out;
    };
    for (std::size_t a = 1; a < r; ++a)
        for (const Poly& g : monics(a))
            for (const Poly& h : monics(r - a))
                if (poly_mul(g, h, p) == target) return false;
    return true;
}

/// All q^k codewords x * G, computed naively.
inline std::vector<Word> all_codewords(const FieldMatrix& g) {
    const Field& f = g.field();
    std::vector<Word> out;
    std::vector<Element> x(g.rows(), 0);
    while (true) {
        Word w(g.cols(), 0);
        for (std::size_t j = 0; j < g.cols(); ++j)
            for (std::size_t i = 0; i < g.rows(); ++i) w[j] = f.add(w[j], f.mul(x[i], g(i, j)));
        out.push_back(std::move(w));
        std::size_t i = 0;
        while (i < x.size() && ++x[i] == f.order()) x[i++] = 0;
        if (i == x.size()) break;
    }
    return out;
}

inline std::set<Word> rowspace(const FieldMatrix& g) {
    const auto words = all_codewords(g);
    return {words.begin(), words.end()};
}

inline std::size_t min_weight(const FieldMatrix& g) {
    std::size_t best = g.cols() + 1;
    for (const auto& w : all_codewords(g)) {
        std::size_t wt = 0;
        for (const Element e : w) wt += e != 0;
        if (wt > 0 && wt < best) best = wt;
    }
    return best;
}

/// log_q of a set size known to be a power of q.
inline std::size_t log_q(std::size_t size, std::size_t q) {
    std::size_t e = 0;
    while (size > 1) {
        size /= q;
        ++e;
    }
    return e;
}

/// Hull dimension by testing each codeword for orthogonality to every row.
inline std::size_t hull_dim(const FieldMatrix& g) {
    const Field& f = g.field();
    std::size_t count = 0;
    for (const auto& w : rowspace(g)) {
        bool in_dual = true;
        for (std::size_t i = 0; i < g.rows() && in_dual; ++i) {
            Element acc = 0;
            for (std::size_t j = 0; j < g.cols(); ++j) acc = f.add(acc, f.mul(w[j], g(i, j)));
            in_dual = acc == 0;
        }
        count += in_dual;
    }
    return log_q(count, f.order());
}

inline FieldMatrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, std::uint64_t& state) {
    FieldMatrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            state = state * 6364136223846793005ULL + 1442695040888963407ULL;
            m(i, j) = static_cast<Element>((state >> 33) % f.order());
        }
    return m;
}

}  // namespace oracle
