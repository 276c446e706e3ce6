#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace shellcheck {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Invariant factors d1 | d2 | ... | dr (all positive) and the rank r.
struct SmithNormalForm {
    std::vector<BigInt> factors;
    std::size_t rank = 0;
};

namespace detail {

struct arithmetic_overflow {};

// Overflow-checked 64-bit arithmetic; BigInt arithmetic never throws.
inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw arithmetic_overflow{};
    return r;
}
inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw arithmetic_overflow{};
    return r;
}
inline BigInt checked_mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt checked_sub(const BigInt& a, const BigInt& b) { return a - b; }

inline std::int64_t abs_value(std::int64_t a) {
    if (a == INT64_MIN) throw arithmetic_overflow{};
    return a < 0 ? -a : a;
}
inline BigInt abs_value(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

template <typename Int>
Int gcd_of(Int a, Int b) {
    a = abs_value(a);
    b = abs_value(b);
    while (b != 0) {
        Int t = a % b;
        a = std::move(b);
        b = std::move(t);
    }
    return a;
}

/// Diagonalizes m in place by unimodular row and column operations and returns
/// the nonzero diagonal entries (not yet a divisibility chain).
template <typename Int>
std::vector<Int> diagonalize(std::vector<std::vector<Int>>& m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::vector<Int> diag;
    for (std::size_t t = 0; t < rows && t < cols; ++t) {
        bool found = false;
        std::size_t pi = t, pj = t;
        Int best = 0;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (m[i][j] == 0) continue;
                Int a = abs_value(m[i][j]);
                if (!found || a < best) {
                    best = a;
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break;
        std::swap(m[t], m[pi]);
        if (pj != t)
            for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pj]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0) continue;
                Int q = m[i][t] / m[t][t];
                for (std::size_t j = t; j < cols; ++j)
                    if (m[t][j] != 0) m[i][j] = checked_sub(m[i][j], checked_mul(q, m[t][j]));
                if (m[i][t] != 0) {
                    std::swap(m[t], m[i]);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0) continue;
                Int q = m[t][j] / m[t][t];
                for (std::size_t i = t; i < rows; ++i)
                    if (m[i][t] != 0) m[i][j] = checked_sub(m[i][j], checked_mul(q, m[i][t]));
                if (m[t][j] != 0) {
                    for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][j]);
                    clean = false;
                }
            }
        }
        diag.push_back(abs_value(m[t][t]));
    }
    return diag;
}

template <typename Int>
SmithNormalForm smith_from(std::vector<std::vector<Int>> m) {
    std::vector<Int> d = diagonalize(m);
    std::vector<BigInt> f(d.begin(), d.end());
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i + 1; j < f.size(); ++j) {
            BigInt g = gcd_of(f[i], f[j]);
            if (g == f[i]) continue;
            BigInt l = f[i] / g * f[j];
            f[i] = g;
            f[j] = l;
        }
    SmithNormalForm out;
    out.rank = f.size();
    out.factors = std::move(f);
    return out;
}

} // namespace detail

/// Smith normal form over the integers. Elimination runs on checked 64-bit
/// integers and restarts in arbitrary precision if any intermediate overflows.
inline SmithNormalForm smith_normal_form(const IntMatrix& m) {
    if (m.empty() || m[0].empty()) return {};
    for (const auto& row : m)
        if (row.size() != m[0].size()) throw std::invalid_argument("smith_normal_form: ragged matrix");
    try {
        return detail::smith_from(m);
    } catch (const detail::arithmetic_overflow&) {
        std::vector<std::vector<BigInt>> big(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) big[i].assign(m[i].begin(), m[i].end());
        return detail::smith_from(std::move(big));
    }
}

/// Same decomposition computed entirely in arbitrary precision.
inline SmithNormalForm smith_normal_form_bigint(const IntMatrix& m) {
    if (m.empty() || m[0].empty()) return {};
    std::vector<std::vector<BigInt>> big(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) big[i].assign(m[i].begin(), m[i].end());
    return detail::smith_from(std::move(big));
}

} // namespace shellcheck
