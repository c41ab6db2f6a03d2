#pragma once

#include "rinehart/rational.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace rinehart {

/// Exponent tuple in N^d; used both for polynomial monomials (d = variable
/// count) and PBW monomials (d = rank of L).
using MultiIndex = std::vector<std::uint32_t>;

inline int mi_degree(const MultiIndex& a) {
    int d = 0;
    for (auto e : a) d += static_cast<int>(e);
    return d;
}

/// Graded-lexicographic order: total degree first, then lex.
inline bool grlex_less(const MultiIndex& a, const MultiIndex& b) {
    int da = mi_degree(a), db = mi_degree(b);
    if (da != db) return da < db;
    return a < b;
}

struct GrlexLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const { return grlex_less(a, b); }
};

struct PairGrlexLess {
    bool operator()(const std::pair<MultiIndex, MultiIndex>& a,
                    const std::pair<MultiIndex, MultiIndex>& b) const {
        if (grlex_less(a.first, b.first)) return true;
        if (grlex_less(b.first, a.first)) return false;
        return grlex_less(a.second, b.second);
    }
};

inline MultiIndex mi_zero(std::size_t dim) { return MultiIndex(dim, 0); }

inline MultiIndex mi_unit(std::size_t dim, std::size_t j) {
    MultiIndex a(dim, 0);
    a[j] = 1;
    return a;
}

inline MultiIndex mi_add(const MultiIndex& a, const MultiIndex& b) {
    MultiIndex c(a);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
    return c;
}

/// Componentwise a - b; caller guarantees b <= a.
inline MultiIndex mi_sub(const MultiIndex& a, const MultiIndex& b) {
    MultiIndex c(a);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b[i];
    return c;
}

inline bool mi_leq(const MultiIndex& a, const MultiIndex& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

/// Product of per-coordinate binomial coefficients binom(a_i, b_i).
inline Rational mi_binomial(const MultiIndex& a, const MultiIndex& b) {
    Rational r(1);
    for (std::size_t i = 0; i < a.size(); ++i)
        r *= Rational::binomial(a[i], b[i]);
    return r;
}

/// Smallest index with nonzero exponent, or dim when a = 0.
inline std::size_t mi_first(const MultiIndex& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0) return i;
    return a.size();
}

/// All multi-indices of the exact total degree, ascending lex.
inline void mi_enumerate_degree(std::size_t dim, int deg, std::vector<MultiIndex>& out,
                                MultiIndex& scratch, std::size_t pos = 0) {
    if (pos + 1 == dim) {
        scratch[pos] = static_cast<std::uint32_t>(deg);
        out.push_back(scratch);
        return;
    }
    for (int e = 0; e <= deg; ++e) {
        scratch[pos] = static_cast<std::uint32_t>(e);
        mi_enumerate_degree(dim, deg - e, out, scratch, pos + 1);
    }
}

inline std::vector<MultiIndex> monomials_of_degree(std::size_t dim, int deg) {
    std::vector<MultiIndex> out;
    if (dim == 0) {
        if (deg == 0) out.push_back(MultiIndex{});
        return out;
    }
    MultiIndex scratch(dim, 0);
    mi_enumerate_degree(dim, deg, out, scratch);
    return out;
}

/// All multi-indices of total degree <= n, in ascending graded-lex order.
inline std::vector<MultiIndex> monomials_up_to(std::size_t dim, int n) {
    std::vector<MultiIndex> out;
    for (int d = 0; d <= n; ++d) {
        auto layer = monomials_of_degree(dim, d);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

inline std::string mi_str(const MultiIndex& a) {
    std::string s = "[";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a[i]);
    }
    s += "]";
    return s;
}

} // namespace rinehart
