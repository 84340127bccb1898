#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "kcr/kgraph.hpp"

namespace testing_support {

using kcr::ColorKind;
using kcr::GraphSpec;
using kcr::Integer;
using kcr::IntMatrix;
using kcr::Involution;

// spec("TDD", {2, 5, 8}) is T_1 (n=2), D_2 (m=5), D_3 (m=8).
inline GraphSpec spec(const std::string& kinds, const std::vector<long>& sizes,
                      Involution inv = Involution::Trivial) {
    GraphSpec s;
    s.involution = inv;
    for (std::size_t i = 0; i < kinds.size(); ++i)
        s.colors.push_back({kinds[i] == 'T' ? ColorKind::OffDiagonal : ColorKind::Diagonal, sizes.at(i)});
    return s;
}

inline IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
    return m;
}

// Laplace expansion along the first row.
inline Integer laplace_det(const IntMatrix& a) {
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    if (n == 1) return a(0, 0);
    Integer total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (a(0, j) == 0) continue;
        std::vector<std::size_t> rows, cols;
        for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
        for (std::size_t t = 0; t < n; ++t)
            if (t != j) cols.push_back(t);
        const Integer minor = laplace_det(a.submatrix(rows, cols));
        total += (j % 2 == 0 ? 1 : -1) * a(0, j) * minor;
    }
    return total;
}

inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
    std::vector<std::size_t> idx(k);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
        if (pos == k) {
            f(idx);
            return;
        }
        for (std::size_t i = start; i + (k - pos) <= n; ++i) {
            idx[pos] = i;
            rec(pos + 1, i + 1);
        }
    };
    rec(0, 0);
}

// Every order x order minor, by Laplace expansion.
inline std::vector<Integer> all_minors(const IntMatrix& a, std::size_t order) {
    std::vector<Integer> out;
    for_each_subset(a.rows(), order, [&](const std::vector<std::size_t>& rs) {
        for_each_subset(a.cols(), order, [&](const std::vector<std::size_t>& cs) {
            out.push_back(laplace_det(a.submatrix(rs, cs)));
        });
    });
    return out;
}

inline Integer gcd_all(const std::vector<Integer>& xs) {
    Integer g = 0;
    for (const auto& x : xs) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

inline Integer minor_gcd(const IntMatrix& a, std::size_t order) { return gcd_all(all_minors(a, order)); }

// Largest order with a nonzero (or, mod 2, odd) minor.
inline std::size_t rank_by_minors(const IntMatrix& a, bool mod2) {
    std::size_t best = 0;
    const std::size_t top = std::min(a.rows(), a.cols());
    for (std::size_t k = 1; k <= top; ++k)
        for (const auto& m : all_minors(a, k))
            if (mod2 ? mpz_odd_p(m.get_mpz_t()) : m != 0) {
                best = k;
                break;
            }
    return best;
}

inline std::vector<long> prime_factors(long n) {
    std::vector<long> out;
    for (long p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            out.push_back(p);
            n /= p;
        }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace testing_support
