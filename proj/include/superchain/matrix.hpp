#pragma once

#include <cstdint>
#include <optional>
#include <tuple>

#include "boundary.hpp"

namespace superchain {

/// Sparse exact-rational matrix of the boundary operator in chain bases.
struct ExactMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::tuple<int, int, Rational>> entries;  // no explicit zeros
};

/// Column k holds the coordinates of d(words[k]) in the basis one degree
/// below.  An image word missing from the target basis is a weight-invariance
/// breach and signals a bug, never user error.
inline ExactMatrix boundary_matrix(const ComplexSlice& slice, int m) {
    const ChainBasis& domain = slice.basis(m);
    const ChainBasis& target = slice.basis(m - 1);
    ExactMatrix mat;
    mat.rows = target.dim();
    mat.cols = domain.dim();
    for (int col = 0; col < domain.dim(); ++col) {
        const Chain image = boundary(domain.words[static_cast<size_t>(col)]);
        for (const auto& [word, coeff] : image.terms) {
            auto it = target.index.find(word);
            if (it == target.index.end())
                throw std::logic_error("boundary_matrix: image word outside target basis "
                                       "(weight invariance violated)");
            mat.entries.emplace_back(it->second, col, coeff);
        }
    }
    return mat;
}

namespace detail {

/// Bareiss over int64 with 128-bit intermediates; bails out (nullopt) if any
/// eliminated entry leaves the int64 range.  Same pivot rule as the big-int
/// path, so both compute identical eliminations.
inline std::optional<int> bareiss_rank_int64(std::vector<std::vector<long long>>& a) {
    const int rows = static_cast<int>(a.size());
    const int cols = static_cast<int>(a[0].size());
    int rk = 0;
    long long prev = 1;
    for (int col = 0; col < cols && rk < rows; ++col) {
        int pivot = -1;
        for (int r = rk; r < rows; ++r) {
            if (a[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(a[static_cast<size_t>(rk)], a[static_cast<size_t>(pivot)]);
        const auto& top = a[static_cast<size_t>(rk)];
        for (int r = rk + 1; r < rows; ++r) {
            auto& row = a[static_cast<size_t>(r)];
            // rows with f = 0 still need the top[col]/prev rescaling to keep
            // every entry a minor of the original matrix
            const long long f = row[static_cast<size_t>(col)];
            for (int c = col + 1; c < cols; ++c) {
                const __int128 v =
                    (static_cast<__int128>(top[static_cast<size_t>(col)]) *
                         row[static_cast<size_t>(c)] -
                     static_cast<__int128>(f) * top[static_cast<size_t>(c)]) /
                    prev;  // exact division (Bareiss)
                if (v > INT64_MAX || v < INT64_MIN) return std::nullopt;
                row[static_cast<size_t>(c)] = static_cast<long long>(v);
            }
            row[static_cast<size_t>(col)] = 0;
        }
        prev = top[static_cast<size_t>(col)];
        ++rk;
    }
    return rk;
}

/// Fallback for matrices whose Bareiss minors leave the int64 range:
/// integer elimination with the same first-nonzero pivot rule, keeping
/// entries small by dividing each updated row by its gcd instead of by the
/// previous pivot.  Exact and fraction-free; only the row scalings differ
/// from the minor-division form, so the rank is unchanged.
inline int gcd_reduced_rank_big(std::vector<std::vector<BigInt>>& a) {
    const int rows = static_cast<int>(a.size());
    const int cols = static_cast<int>(a[0].size());
    int rk = 0;
    for (int col = 0; col < cols && rk < rows; ++col) {
        int pivot = -1;
        for (int r = rk; r < rows; ++r) {
            if (a[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(a[static_cast<size_t>(rk)], a[static_cast<size_t>(pivot)]);
        const auto& top = a[static_cast<size_t>(rk)];
        for (int r = rk + 1; r < rows; ++r) {
            auto& row = a[static_cast<size_t>(r)];
            if (row[static_cast<size_t>(col)] == 0) continue;
            BigInt g = 0;
            for (int c = col + 1; c < cols; ++c) {
                row[static_cast<size_t>(c)] =
                    top[static_cast<size_t>(col)] * row[static_cast<size_t>(c)] -
                    row[static_cast<size_t>(col)] * top[static_cast<size_t>(c)];
                g = boost::integer::gcd(g, boost::multiprecision::abs(
                                               row[static_cast<size_t>(c)]));
            }
            row[static_cast<size_t>(col)] = 0;
            if (g > 1)
                for (int c = col + 1; c < cols; ++c) row[static_cast<size_t>(c)] /= g;
        }
        ++rk;
    }
    return rk;
}

}  // namespace detail

/// Exact rank over the rationals: clear denominators per row, then Bareiss
/// fraction-free elimination with first-nonzero pivoting.  Runs in machine
/// integers while the eliminated entries fit and falls back to big integers
/// otherwise; the pivot sequence is the same either way.
inline int rank(const ExactMatrix& mat) {
    if (mat.rows == 0 || mat.cols == 0) return 0;
    std::vector<std::vector<Rational>> dense(
        static_cast<size_t>(mat.rows),
        std::vector<Rational>(static_cast<size_t>(mat.cols)));
    for (const auto& [r, c, v] : mat.entries)
        dense[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;

    std::vector<std::vector<BigInt>> a(static_cast<size_t>(mat.rows),
                                       std::vector<BigInt>(static_cast<size_t>(mat.cols)));
    for (int r = 0; r < mat.rows; ++r) {
        BigInt lcm = 1;
        for (int c = 0; c < mat.cols; ++c) {
            const BigInt& d = dense[static_cast<size_t>(r)][static_cast<size_t>(c)].den();
            lcm = lcm / boost::integer::gcd(lcm, d) * d;
        }
        for (int c = 0; c < mat.cols; ++c) {
            const Rational& v = dense[static_cast<size_t>(r)][static_cast<size_t>(c)];
            a[static_cast<size_t>(r)][static_cast<size_t>(c)] = v.num() * (lcm / v.den());
        }
    }

    bool fits = true;
    std::vector<std::vector<long long>> small(
        static_cast<size_t>(mat.rows),
        std::vector<long long>(static_cast<size_t>(mat.cols)));
    for (int r = 0; fits && r < mat.rows; ++r) {
        for (int c = 0; fits && c < mat.cols; ++c) {
            const BigInt& v = a[static_cast<size_t>(r)][static_cast<size_t>(c)];
            if (v > INT64_MAX || v < INT64_MIN)
                fits = false;
            else
                small[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                    static_cast<long long>(v);
        }
    }
    if (fits) {
        if (auto rk = detail::bareiss_rank_int64(small)) return *rk;
    }
    return detail::gcd_reduced_rank_big(a);
}

}  // namespace superchain
