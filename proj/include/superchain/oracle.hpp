#pragma once

#include <boost/multiprecision/gmp.hpp>

#include "matrix.hpp"

// Independent brute-force implementations used only for cross-validation.
// The arithmetic runs on GMP rationals, a separate stack from the main
// engine's cpp_int-backed Rational.

namespace superchain::oracle {

using DenseScalar = boost::multiprecision::mpq_rational;

/// Rectangular grid of rationals.
using DenseMatrix = std::vector<std::vector<DenseScalar>>;

inline DenseMatrix to_dense(const ExactMatrix& m) {
    DenseMatrix d(static_cast<size_t>(m.rows),
                  std::vector<DenseScalar>(static_cast<size_t>(m.cols)));
    for (const auto& [r, c, v] : m.entries)
        d[static_cast<size_t>(r)][static_cast<size_t>(c)] =
            DenseScalar(v.num().str() + "/" + v.den().str());
    return d;
}

/// Textbook Gauss-Jordan over rationals.
inline int naive_rank(DenseMatrix a) {
    if (a.empty() || a[0].empty()) return 0;
    const size_t rows = a.size(), cols = a[0].size();
    size_t rk = 0;
    for (size_t col = 0; col < cols && rk < rows; ++col) {
        size_t pivot = rk;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[rk], a[pivot]);
        const DenseScalar p = a[rk][col];
        for (size_t c = col; c < cols; ++c) a[rk][c] /= p;
        for (size_t r = 0; r < rows; ++r) {
            if (r == rk || a[r][col] == 0) continue;
            const DenseScalar f = a[r][col];
            for (size_t c = col; c < cols; ++c) a[r][c] -= f * a[rk][c];
        }
        ++rk;
    }
    return static_cast<int>(rk);
}

/// Generate-and-filter basis enumeration: all multisets of m generators of
/// degree <= cap, filtered by the weight equations, canonicalized, deduped.
inline std::set<WedgeWord> naive_enumerate(int n, int w, int h, int m, int cap) {
    if (cap < m + h) throw std::invalid_argument("naive_enumerate: cap < m + h");
    const auto pool = detail::generator_pool(n, cap);
    std::set<WedgeWord> out;
    std::vector<Generator> cur;
    // multisets as non-decreasing pool-index sequences; only running-sum
    // feasibility pruning, no structural shortcuts
    auto rec = [&](auto&& self, size_t from, int left, int wsum, int dsum) -> void {
        if (left == 0) {
            if (wsum == w && dsum == m + h) {
                auto [word, sign] = canonicalize(cur);
                if (sign != 0) out.insert(word);
            }
            return;
        }
        for (size_t i = from; i < pool.size(); ++i) {
            // pool is kind-major ascending, so every remaining pick costs at
            // least this kind
            if (wsum + pool[i].kind() * left > w) break;
            if (dsum + pool[i].degree() > m + h) continue;
            cur.push_back(pool[i]);
            self(self, i, left - 1, wsum + pool[i].kind(), dsum + pool[i].degree());
            cur.pop_back();
        }
    };
    rec(rec, 0, m, 0, 0);
    return out;
}

/// Koszul sign of reordering a factor sequence by the permutation perm
/// (result slot -> source slot), by explicit inversion counting with parity
/// weights: each inverted pair of parities p, q contributes -(-1)^{pq}.
inline int koszul_sign(const std::vector<int>& perm, const std::vector<int>& parities) {
    int sign = 1;
    for (size_t i = 0; i < perm.size(); ++i) {
        for (size_t j = i + 1; j < perm.size(); ++j) {
            if (perm[i] > perm[j]) {
                const int p = parities[static_cast<size_t>(perm[i])];
                const int q = parities[static_cast<size_t>(perm[j])];
                if (!(p == 1 && q == 1)) sign = -sign;
            }
        }
    }
    return sign;
}

}  // namespace superchain::oracle
