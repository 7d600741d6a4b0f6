#pragma once

#include <functional>
#include <map>
#include <set>
#include <unordered_map>

#include "wedge.hpp"

namespace superchain {

/// Ordered basis of one chain space, with the inverse index map.
struct ChainBasis {
    std::vector<WedgeWord> words;
    std::unordered_map<WedgeWord, int, WedgeWordHash> index;

    static ChainBasis from_set(const std::set<WedgeWord>& ws) {
        return from_sorted({ws.begin(), ws.end()});
    }

    /// Takes ownership of an already-sorted, duplicate-free word list.
    static ChainBasis from_sorted(std::vector<WedgeWord> ws) {
        ChainBasis b;
        b.words = std::move(ws);
        b.index.reserve(b.words.size());
        for (size_t i = 0; i < b.words.size(); ++i)
            b.index.emplace(b.words[i], static_cast<int>(i));
        return b;
    }

    int dim() const { return static_cast<int>(words.size()); }
    bool operator==(const ChainBasis& o) const { return words == o.words; }
};

namespace detail {

// Strictly increasing k-tuples of integers >= lo summing to s.
inline void distinct_tuples(int k, int lo, int s, std::vector<int>& cur,
                            const std::function<void(const std::vector<int>&)>& emit) {
    if (k == 0) {
        if (s == 0) emit(cur);
        return;
    }
    for (int v = lo;; ++v) {
        const int min_tail = (k - 1) * v + k * (k - 1) / 2;  // v+1, v+2, ...
        if (v + min_tail > s) break;
        cur.push_back(v);
        distinct_tuples(k - 1, v + 1, s - v, cur, emit);
        cur.pop_back();
    }
}

// Non-decreasing k-tuples of integers >= lo summing to s.
inline void multiset_tuples(int k, int lo, int s, std::vector<int>& cur,
                            const std::function<void(const std::vector<int>&)>& emit) {
    if (k == 0) {
        if (s == 0) emit(cur);
        return;
    }
    for (int v = lo; v * k <= s; ++v) {
        cur.push_back(v);
        multiset_tuples(k - 1, v, s - v, cur, emit);
        cur.pop_back();
    }
}

inline void monomials_of_degree(int n, int d, Monomial& cur, int coord,
                                const std::function<void(const Monomial&)>& emit) {
    if (coord == n) {
        cur.exponents[static_cast<size_t>(n - 1)] = d;
        emit(cur);
        return;
    }
    for (int e = 0; e <= d; ++e) {
        cur.exponents[static_cast<size_t>(coord - 1)] = e;
        monomials_of_degree(n, d - e, cur, coord + 1, emit);
    }
}

/// All generators of dimension n with polynomial degree <= max_degree,
/// sorted in the canonical generator order.
inline std::vector<Generator> generator_pool(int n, int max_degree) {
    std::vector<Generator> pool;
    auto add_for_mono = [&](const Monomial& m) {
        for (int dir = 1; dir <= n; ++dir) pool.push_back(make_vector_field(dir, m));
        // index subsets of {1..n} as bitmasks
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            IntSeq idx;
            for (int k = 1; k <= n; ++k)
                if (mask & (1u << (k - 1))) idx.push_back(k);
            pool.push_back(make_form(std::move(idx), m));
        }
    };
    for (int d = 0; d <= max_degree; ++d) {
        Monomial cur(n);
        monomials_of_degree(n, d, cur, 1, add_for_mono);
    }
    std::sort(pool.begin(), pool.end());
    return pool;
}

// Non-decreasing generator sequences with exact factor count, kind sum and
// degree sum; equal even-parity factors are skipped.  The DFS visits factor
// sequences in ascending lexicographic order, so `out` stays sorted.
inline void pool_search(const std::vector<Generator>& pool, size_t from, int slots,
                        int want_w, int want_deg, std::vector<Generator>& cur,
                        std::vector<WedgeWord>& out, int max_kind) {
    if (slots == 0) {
        if (want_w == 0 && want_deg == 0) out.push_back(WedgeWord{cur});
        return;
    }
    if (want_w < 0 || want_deg < 0 || want_w > slots * max_kind) return;
    for (size_t i = from; i < pool.size(); ++i) {
        const Generator& g = pool[i];
        if (g.kind() * slots > want_w) break;  // pool is kind-major ascending
        if (g.degree() > want_deg) continue;
        if (!cur.empty() && g.parity() == 0 && g == cur.back()) continue;
        cur.push_back(g);
        pool_search(pool, g.parity() == 1 ? i : i + 1, slots - 1, want_w - g.kind(),
                    want_deg - g.degree(), cur, out, max_kind);
        cur.pop_back();
    }
}

}  // namespace detail

/// Exactly the canonical wedge words with m factors, kind sum w and
/// polynomial degree sum m + h.  For n = 1 this follows the (a, b, c)
/// decomposition of the kind-0 / kind-1 / kind-2 blocks; n > 1 uses pruned
/// recursive generation over the generator order.
inline ChainBasis enumerate_basis(int n, int w, int h, int m) {
    if (n < 1 || w < 0 || m < 1) throw std::invalid_argument("enumerate_basis: bad arguments");
    std::set<WedgeWord> out;
    const int total_degree = m + h;
    if (total_degree < 0) return ChainBasis::from_set(out);

    if (n == 1) {
        for (int c = 0; 2 * c <= w; ++c) {
            const int b = w - 2 * c;
            const int a = m - b - c;
            if (a < 0) continue;
            std::vector<int> da, db, dc;
            for (int sa = 0; sa <= total_degree; ++sa) {
                for (int sb = 0; sa + sb <= total_degree; ++sb) {
                    const int sc = total_degree - sa - sb;
                    detail::distinct_tuples(a, 0, sa, da, [&](const std::vector<int>& A) {
                        detail::multiset_tuples(b, 0, sb, db, [&](const std::vector<int>& B) {
                            detail::distinct_tuples(c, 0, sc, dc,
                                                    [&](const std::vector<int>& C) {
                                std::vector<Generator> fs;
                                fs.reserve(static_cast<size_t>(m));
                                for (int v : A) fs.push_back(vf1(v));
                                for (int v : B) fs.push_back(fn1(v));
                                for (int v : C) fs.push_back(fm1(v));
                                out.insert(WedgeWord{std::move(fs)});
                            });
                        });
                    });
                }
            }
        }
        return ChainBasis::from_set(out);
    }

    const auto pool = detail::generator_pool(n, total_degree);
    std::vector<Generator> cur;
    std::vector<WedgeWord> sorted;
    detail::pool_search(pool, 0, m, w, total_degree, cur, sorted, n + 1);
    return ChainBasis::from_sorted(std::move(sorted));
}

/// Range of degrees m with nonempty chain space.
struct MRange {
    bool empty = true;
    int lo = 0;
    int hi = -1;
};

namespace detail {

inline int count_monomials(int n, int d) {
    // C(d + n - 1, n - 1)
    long r = 1;
    for (int t = 1; t <= n - 1; ++t) r = r * (d + t) / t;
    return static_cast<int>(r);
}

/// Degrees of the cheapest distinct kind-0 generators, ascending.
inline int nth_vector_field_degree(int n, int a) {
    int d = 0, seen = 0;
    for (;;) {
        seen += n * count_monomials(n, d);
        if (seen > a) return d;
        ++d;
    }
}

}  // namespace detail

namespace detail {

/// Upper bound on the word length of a nonempty chain space: the count a of
/// distinct vector-field factors is finite because their minimal total degree
/// grows faster than the degree budget a + w + h, and every other factor
/// contributes at least 1 to w, so m <= a + w.  Returns -1 when no length is
/// feasible.
inline int max_word_length(int n, int w, int h) {
    int a_max = -1;
    int min_deg = 0;
    for (int a = 0;; ++a) {
        if (a > 0) min_deg += nth_vector_field_degree(n, a - 1);
        if (min_deg <= a + w + h) {
            a_max = a;
        } else if (a > 0 && nth_vector_field_degree(n, a - 1) >= 2) {
            break;  // the deficit only grows from here
        }
        if (a > 4096) break;
    }
    return a_max < 0 ? -1 : a_max + w;
}

}  // namespace detail

/// Smallest / largest m with nonempty basis, by feasibility scan.
inline MRange m_range(int n, int w, int h) {
    MRange r;
    const int m_hi = detail::max_word_length(n, w, h);
    for (int m = std::max(1, -h); m <= m_hi; ++m) {
        if (enumerate_basis(n, w, h, m).dim() == 0) continue;
        if (r.empty) {
            r.empty = false;
            r.lo = m;
        }
        r.hi = m;
    }
    return r;
}

/// The family {C^m_{w,h}} for fixed (n, w, h).
struct ComplexSlice {
    int n = 1, w = 0, h = 0;
    MRange range;
    std::map<int, ChainBasis> bases;

    const ChainBasis& basis(int m) const {
        static const ChainBasis kEmpty;
        auto it = bases.find(m);
        return it == bases.end() ? kEmpty : it->second;
    }
    int dim(int m) const { return basis(m).dim(); }
};

inline ComplexSlice make_slice(int n, int w, int h) {
    ComplexSlice s;
    s.n = n;
    s.w = w;
    s.h = h;
    // single enumeration pass; the range is read off the nonempty bases
    const int m_hi = detail::max_word_length(n, w, h);
    for (int m = std::max(1, -h); m <= m_hi; ++m) {
        ChainBasis basis = enumerate_basis(n, w, h, m);
        if (basis.dim() == 0) continue;
        if (s.range.empty) {
            s.range.empty = false;
            s.range.lo = m;
        }
        s.range.hi = m;
        s.bases.emplace(m, std::move(basis));
    }
    return s;
}

namespace detail {

/// The explicit bases of the w = 2 diagonal complex (m = 2..5).
inline std::vector<std::vector<Generator>> w2_basis_factors(int k) {
    switch (k) {
        case 0:
            return {{vf1(0), fm1(0)}, {fn1(0), fn1(0)}};
        case 1:
            return {{vf1(0), vf1(1), fm1(0)},
                    {vf1(0), fn1(0), fn1(1)},
                    {vf1(1), fn1(0), fn1(0)}};
        case 2:
            return {{vf1(0), vf1(1), fn1(0), fn1(1)}, {vf1(0), vf1(2), fn1(0), fn1(0)}};
        case 3:
            return {{vf1(0), vf1(1), vf1(2), fn1(0), fn1(0)}};
        default:
            throw std::invalid_argument("w2_basis_factors: k out of range");
    }
}

}  // namespace detail

/// Closed-form basis of C^{w+k}_{w,-w}: (K[1][0])^{w-2} wedged onto the
/// explicit w = 2 bases, materialized as canonical words.
inline ChainBasis closed_form_basis(int w, int k) {
    if (w <= 2) throw std::invalid_argument("closed_form_basis: requires w > 2");
    std::set<WedgeWord> out;
    for (auto factors : detail::w2_basis_factors(k)) {
        for (int t = 0; t < w - 2; ++t) factors.push_back(fn1(0));
        auto [word, sign] = canonicalize(std::move(factors));
        if (sign != 0) out.insert(word);
    }
    return ChainBasis::from_set(out);
}

/// Multiplication by 1 ^ ... ^ 1 (w - 2 copies): maps C^m_{2,-2} into
/// C^{(w-2)+m}_{w,-w}.
inline Chain ii_multiply(int w, const Chain& c) {
    if (w <= 2) throw std::invalid_argument("ii_multiply: requires w > 2");
    Chain ones;
    std::vector<Generator> fs(static_cast<size_t>(w - 2), fn1(0));
    ones.add(WedgeWord{std::move(fs)}, Rational(1));
    for (const auto& [word, coeff] : c.terms) {
        (void)coeff;
        if (word.primary_weight() != 2 || word.secondary_weight() != -2)
            throw std::invalid_argument("ii_multiply: chain is not of weight (2,-2)");
    }
    return wedge(ones, c);
}

}  // namespace superchain
