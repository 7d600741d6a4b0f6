#pragma once

#include <optional>
#include <random>

#include "homology.hpp"
#include "oracle.hpp"
#include "text.hpp"

namespace superchain {

/// Outcome of one machine-checked claim over a parameter grid.
struct VerificationReport {
    struct Counterexample {
        std::string word;
        std::string lhs;
        std::string rhs;
    };

    std::string claim;
    std::string grid;
    bool pass = true;
    std::optional<Counterexample> counterexample;
    std::vector<std::string> notes;

    void fail(std::string word, std::string lhs, std::string rhs) {
        if (!pass) return;
        pass = false;
        counterexample = Counterexample{std::move(word), std::move(lhs), std::move(rhs)};
    }
    void require(bool ok, const std::string& word, const std::string& lhs,
                 const std::string& rhs) {
        if (!ok) fail(word, lhs, rhs);
    }
};

namespace detail {

inline long long integer_coefficient(const Rational& c) {
    if (c.den() != 1)
        throw std::logic_error("boundary coefficient is not an integer");
    return static_cast<long long>(c.num());
}

}  // namespace detail

/// d(d(word)) = 0 for every basis word of every degree of the slice (n,w,h).
///
/// Streaming form: the boundary of each basis word is computed once, stored
/// as an integer column over the basis one degree below, and d(d(word)) is
/// read off by composing each new column with the stored ones.  Only two
/// adjacent degrees are materialized at a time, which keeps the large n = 2
/// slices within time and memory budgets.
inline VerificationReport verify_d_squared(int n, int w, int h) {
    VerificationReport rep;
    rep.claim = "d2";
    rep.grid = "n=" + std::to_string(n) + " w=" + std::to_string(w) +
               " h=" + std::to_string(h);
    using Column = std::vector<std::pair<int, long long>>;
    const int m_hi = detail::max_word_length(n, w, h);
    ChainBasis prev;                 // basis one degree below
    std::vector<Column> prev_cols;   // its boundary columns, two degrees below
    std::vector<long long> acc;      // dense accumulator over rows of prev_cols
    std::vector<int> touched;
    for (int m = std::max(1, -h); m <= m_hi; ++m) {
        ChainBasis cur = enumerate_basis(n, w, h, m);
        std::vector<Column> cols(static_cast<size_t>(cur.dim()));
        for (int j = 0; j < cur.dim(); ++j) {
            const WedgeWord& word = cur.words[static_cast<size_t>(j)];
            const Chain image = boundary(word);
            Column& col = cols[static_cast<size_t>(j)];
            for (const auto& [iw, coeff] : image.terms) {
                auto it = prev.index.find(iw);
                if (it == prev.index.end())
                    throw std::logic_error(
                        "verify_d_squared: image word outside the basis one degree "
                        "below (weight invariance violated)");
                col.emplace_back(it->second, detail::integer_coefficient(coeff));
            }
            if (acc.empty()) continue;
            for (const auto& [r, v] : col) {
                for (const auto& [r2, v2] : prev_cols[static_cast<size_t>(r)]) {
                    if (acc[static_cast<size_t>(r2)] == 0) touched.push_back(r2);
                    acc[static_cast<size_t>(r2)] += v * v2;
                }
            }
            for (int r2 : touched) {
                if (acc[static_cast<size_t>(r2)] != 0)
                    rep.fail(format_word(word),
                             "d(d(word)) coefficient " +
                                 std::to_string(acc[static_cast<size_t>(r2)]) +
                                 " at row " + std::to_string(r2) + " of degree " +
                                 std::to_string(m - 2),
                             "0");
                acc[static_cast<size_t>(r2)] = 0;
            }
            touched.clear();
        }
        acc.assign(static_cast<size_t>(prev.dim()), 0);
        prev = std::move(cur);
        prev_cols = std::move(cols);
    }
    return rep;
}

/// Theorem 1 off the degenerate locus: all Betti numbers below mH vanish and
/// the last equals the alternating dimension sum; also re-derives the Euler
/// field identity d(E ^ Y) = -E ^ dY + (h + w) Y on every basis word.
inline VerificationReport verify_acyclicity(int n, int w, int h) {
    VerificationReport rep;
    rep.claim = "acyclic";
    rep.grid = "n=" + std::to_string(n) + " w=" + std::to_string(w) +
               " h=" + std::to_string(h);
    if (h == -w) throw std::invalid_argument("verify_acyclicity: requires h != -w");
    const ComplexSlice slice = make_slice(n, w, h);
    const HomologyReport rep_h = betti(slice);
    int alternating = 0;
    for (const auto& row : rep_h.rows)
        alternating += ((row.m % 2 == 0) ? 1 : -1) * row.dim;
    for (const auto& row : rep_h.rows) {
        if (row.m < slice.range.hi) {
            rep.require(row.betti == 0, "betti at m=" + std::to_string(row.m),
                        std::to_string(row.betti), "0");
        } else {
            const int expected = ((row.m % 2 == 0) ? 1 : -1) * alternating;
            rep.require(row.betti == expected, "last betti at m=" + std::to_string(row.m),
                        std::to_string(row.betti), std::to_string(expected));
        }
    }
    const Chain euler = chain_of(euler_field(n));
    for (const auto& [m, basis] : slice.bases) {
        (void)m;
        for (const auto& word : basis.words) {
            const Chain y(word);
            const Chain lhs = boundary(wedge(euler, y));
            const Chain rhs = -wedge(euler, boundary(y)) + y * Rational(h + w);
            rep.require(lhs == rhs, format_word(word), format_chain(lhs),
                        format_chain(rhs));
        }
    }
    return rep;
}

/// Prop. 1 weight containment plus the Euler eigenvalue i + j - 1, over all
/// generator pairs with polynomial degree <= cap.
inline VerificationReport verify_prop1(int n, int cap) {
    VerificationReport rep;
    rep.claim = "prop1";
    rep.grid = "n=" + std::to_string(n) + " degree<=" + std::to_string(cap);
    const auto pool = detail::generator_pool(n, cap);
    const Element euler = euler_field(n);
    for (const auto& g : pool) {
        const Element eig = bracket(euler, Element(g)) -
                            Element(g, Rational(g.kind() + g.degree() - 1));
        rep.require(eig.is_zero(), "[E, " + format_element(Element(g)) + "]",
                    format_element(bracket(euler, Element(g))),
                    std::to_string(g.kind() + g.degree() - 1) + " * generator");
    }
    for (const auto& ga : pool) {
        for (const auto& gb : pool) {
            const Element br = bracket(Element(ga), Element(gb));
            for (const auto& [g, c] : br.terms) {
                (void)c;
                const bool ok = g.kind() == ga.kind() + gb.kind() &&
                                g.degree() == ga.degree() + gb.degree() - 1;
                rep.require(ok,
                            "[" + format_element(Element(ga)) + ", " +
                                format_element(Element(gb)) + "]",
                            format_element(Element(g)),
                            "K[" + std::to_string(ga.kind() + gb.kind()) + "][" +
                                std::to_string(ga.degree() + gb.degree() - 1) + "]");
            }
        }
    }
    return rep;
}

/// Super antisymmetry on generator pairs and the super Jacobi identity on
/// generator triples.
inline VerificationReport verify_jacobi(int n, int pair_cap, int triple_cap) {
    VerificationReport rep;
    rep.claim = "jacobi";
    rep.grid = "n=" + std::to_string(n) + " pairs<=" + std::to_string(pair_cap) +
               " triples<=" + std::to_string(triple_cap);
    const auto pool = detail::generator_pool(n, pair_cap);
    for (const auto& ga : pool) {
        for (const auto& gb : pool) {
            const int s = (ga.parity() * gb.parity()) % 2 == 0 ? 1 : -1;
            const Element sum = bracket(Element(ga), Element(gb)) +
                                bracket(Element(gb), Element(ga)) * Rational(s);
            rep.require(sum.is_zero(),
                        "[" + format_element(Element(ga)) + ", " +
                            format_element(Element(gb)) + "] antisymmetry",
                        format_element(sum), "0");
        }
    }
    const auto tpool = detail::generator_pool(n, triple_cap);
    const size_t np = tpool.size();
    for (size_t ia = 0; ia < np; ++ia) {
        for (size_t ib = ia; ib < np; ++ib) {
            for (size_t ic = ib; ic < np; ++ic) {
                const Element a(tpool[ia]), b(tpool[ib]), c(tpool[ic]);
                const int pa = tpool[ia].parity(), pb = tpool[ib].parity(),
                          pc = tpool[ic].parity();
                auto sgn = [](int e) { return Rational(e % 2 == 0 ? 1 : -1); };
                const Element sum = bracket(a, bracket(b, c)) * sgn(pa * pc) +
                                    bracket(b, bracket(c, a)) * sgn(pb * pa) +
                                    bracket(c, bracket(a, b)) * sgn(pc * pb);
                rep.require(sum.is_zero(),
                            "jacobi(" + format_element(a) + "; " + format_element(b) +
                                "; " + format_element(c) + ")",
                            format_element(sum), "0");
            }
        }
    }
    return rep;
}

/// Theorem II: closed-form bases equal the enumerated bases on the diagonal.
inline VerificationReport verify_theorem2(int w_lo, int w_hi) {
    VerificationReport rep;
    rep.claim = "thm2";
    rep.grid = "w=" + std::to_string(w_lo) + ":" + std::to_string(w_hi) + " k=0:3";
    for (int w = w_lo; w <= w_hi; ++w) {
        for (int k = 0; k <= 3; ++k) {
            const ChainBasis closed = closed_form_basis(w, k);
            const ChainBasis direct = enumerate_basis(1, w, -w, w + k);
            if (closed == direct) continue;
            std::string lhs, rhs;
            for (const auto& word : closed.words) lhs += format_word(word) + "; ";
            for (const auto& word : direct.words) rhs += format_word(word) + "; ";
            rep.fail("w=" + std::to_string(w) + " k=" + std::to_string(k), lhs, rhs);
        }
    }
    return rep;
}

namespace detail {

inline Chain ones_chain(int count) {
    return Chain(WedgeWord{std::vector<Generator>(static_cast<size_t>(count), fn1(0))});
}

}  // namespace detail

/// Theorem 5 / Remark: a single per-w sign sigma reconciles d(II ^ x) with
/// the (1^)^{w-3} ^ d' expression on every basis word, the Remark shortcut
/// holds with the same sign, and the diagram defect A_1 is witnessed nonzero.
///
/// One correction to the printed statement: the A_1 term enters with
/// multiplicity w - 2, one copy per prepended constant.  Each of the w - 2
/// constants pairs with B_j at the same sign (the sign exponent
/// i - 1 + sum of middle kinds is independent of the constant's slot i), so
/// the derivation's sum over i collapses to (w - 2) identical terms, not one.
/// The printed coefficient 1 is exact only at w = 3; the check below uses
/// the multiplicity and records the discrepancy as a note.
inline VerificationReport verify_theorem5(int w_lo, int w_hi) {
    VerificationReport rep;
    rep.claim = "thm5";
    rep.grid = "w=" + std::to_string(w_lo) + ":" + std::to_string(w_hi) + " k=0:3";
    for (int w = w_lo; w <= w_hi; ++w) {
        int sigma = 0;
        bool defect_witnessed = false;
        const Rational mult(w - 2);
        for (int k = 0; k <= 3; ++k) {
            for (const auto& x : enumerate_basis(1, 2, -2, 2 + k).words) {
                const Chain xc(x);
                const Chain lhs = boundary(ii_multiply(w, xc));
                const Chain corr = wedge(detail::ones_chain(w - 3), a1_block(x));
                const Chain rhs =
                    wedge(detail::ones_chain(w - 2), boundary(xc)) + corr * mult;
                if (!corr.is_zero()) defect_witnessed = true;
                if (lhs.is_zero() && rhs.is_zero()) continue;
                int s = 0;
                if (lhs == rhs)
                    s = 1;
                else if (lhs == -rhs)
                    s = -1;
                if (s == 0) {
                    rep.fail("w=" + std::to_string(w) + " word " + format_word(x),
                             format_chain(lhs), format_chain(rhs));
                    continue;
                }
                if (sigma == 0) sigma = s;
                rep.require(s == sigma,
                            "w=" + std::to_string(w) + " sign at " + format_word(x),
                            std::to_string(s), std::to_string(sigma));
                // Remark shortcut, same sign and same multiplicity
                const Chain defect = lhs - ii_multiply(w, boundary(xc)) * Rational(sigma);
                rep.require(defect == corr * (mult * Rational(sigma)),
                            "w=" + std::to_string(w) + " remark at " + format_word(x),
                            format_chain(defect),
                            format_chain(corr * (mult * Rational(sigma))));
            }
        }
        const int printed = ((w - 2) % 2 == 0) ? 1 : -1;
        rep.notes.push_back("w=" + std::to_string(w) + " sigma=" + std::to_string(sigma) +
                            (sigma == printed ? " (matches (-1)^(w-2))"
                                              : " (differs from (-1)^(w-2))"));
        if (w > 3)
            rep.notes.push_back("w=" + std::to_string(w) +
                                " A_1 term carries multiplicity w-2=" +
                                std::to_string(w - 2) + " (printed statement has 1)");
        rep.require(defect_witnessed, "w=" + std::to_string(w),
                    "no word with nonzero A_1 block", "diagram defect witness");
    }
    return rep;
}

namespace detail {

inline ExactMatrix map_matrix(const ChainBasis& domain, const ChainBasis& target,
                              const std::function<Chain(const WedgeWord&)>& f) {
    ExactMatrix mat;
    mat.rows = target.dim();
    mat.cols = domain.dim();
    for (int col = 0; col < domain.dim(); ++col) {
        const Chain image = f(domain.words[static_cast<size_t>(col)]);
        for (const auto& [word, coeff] : image.terms) {
            auto it = target.index.find(word);
            if (it == target.index.end())
                throw std::logic_error("map_matrix: image word outside target basis");
            mat.entries.emplace_back(it->second, col, coeff);
        }
    }
    return mat;
}

struct Lemma6Row {
    std::vector<Generator> word;
    Chain expected_boundary;
    Chain expected_a1;
};

/// The proof table of the rank lemma: each w = 2 basis word with its
/// boundary and its A_1 column.
inline std::vector<Lemma6Row> lemma6_table() {
    std::vector<Lemma6Row> rows;
    auto add = [&](std::vector<Generator> word, Chain db, Chain a1) {
        rows.push_back({std::move(word), std::move(db), std::move(a1)});
    };
    const Chain zero;
    add({vf1(0), vf1(1), vf1(2), fn1(0), fn1(0)}, zero, zero);
    add({vf1(0), vf1(1), fn1(0), fn1(1)},
        chain_of({vf1(1), fn1(0), fn1(0)}) + chain_of({vf1(0), vf1(1), fm1(0)}),
        chain_of({vf1(0), vf1(1), fn1(0), fm1(0)}));
    add({vf1(0), vf1(2), fn1(0), fn1(0)},
        chain_of({vf1(1), fn1(0), fn1(0)}, Rational(2)), zero);
    add({vf1(0), vf1(1), fm1(0)}, zero, zero);
    add({vf1(0), fn1(0), fn1(1)},
        chain_of({fn1(0), fn1(0)}) - chain_of({vf1(0), fm1(0)}),
        chain_of({vf1(0), fn1(0), fm1(0)}));
    add({vf1(1), fn1(0), fn1(0)}, zero, zero);
    add({vf1(0), fm1(0)}, zero, zero);
    add({fn1(0), fn1(0)}, zero, zero);
    return rows;
}

}  // namespace detail

/// Rank lemma and its corollary: rank(1 ^ d) = rank(d') on C^{2+k}_{2,-2},
/// the proof table is reproduced entry-for-entry, and the diagonal boundary
/// ranks at every w > 2 equal those at w = 2.
inline VerificationReport verify_lemma_ranks(int w_lo = 3, int w_hi = 10) {
    VerificationReport rep;
    rep.claim = "lemma-ranks";
    rep.grid = "k=0:3 w=" + std::to_string(w_lo) + ":" + std::to_string(w_hi);
    const Chain one_chain = chain_of(Element(constant_one(1)));
    const int expected_rank[4] = {0, 1, 2, 0};
    for (int k = 0; k <= 3; ++k) {
        const ChainBasis domain = enumerate_basis(1, 2, -2, 2 + k);
        const ChainBasis target = enumerate_basis(1, 3, -3, 2 + k);
        const ExactMatrix wedge_d = detail::map_matrix(
            domain, target,
            [&](const WedgeWord& x) { return wedge(one_chain, boundary(x)); });
        const ExactMatrix d_prime = detail::map_matrix(
            domain, target, [](const WedgeWord& x) { return boundary_prime(Chain(x)); });
        const int ra = rank(wedge_d), rb = rank(d_prime);
        rep.notes.push_back("k=" + std::to_string(k) + " rank(1^d)=" + std::to_string(ra) +
                            " rank(d')=" + std::to_string(rb));
        rep.require(ra == rb, "k=" + std::to_string(k), std::to_string(ra),
                    std::to_string(rb));
        rep.require(ra == expected_rank[k], "k=" + std::to_string(k) + " rank value",
                    std::to_string(ra), std::to_string(expected_rank[k]));
    }
    for (const auto& row : detail::lemma6_table()) {
        auto [word, sign] = canonicalize(row.word);
        const Chain db = boundary(word) * Rational(sign);
        const Chain a1 = a1_block(word) * Rational(sign);
        rep.require(db == row.expected_boundary, "table d at " + format_word(word),
                    format_chain(db), format_chain(row.expected_boundary));
        rep.require(a1 == row.expected_a1, "table A_1 at " + format_word(word),
                    format_chain(a1), format_chain(row.expected_a1));
    }
    const ComplexSlice base = make_slice(1, 2, -2);
    for (int w = w_lo; w <= w_hi; ++w) {
        const ComplexSlice slice = make_slice(1, w, -w);
        for (int k = 0; k <= 3; ++k) {
            const int rw = rank(boundary_matrix(slice, w + k + 1));
            const int r2 = rank(boundary_matrix(base, 3 + k));
            rep.require(rw == r2,
                        "corollary w=" + std::to_string(w) + " k=" + std::to_string(k),
                        std::to_string(rw), std::to_string(r2));
        }
    }
    return rep;
}

/// Cross-validation against the brute-force oracle: Bareiss rank vs naive
/// dense rank, fast enumeration vs generate-and-filter, canonicalize sign vs
/// explicit Koszul sign on random factor sequences.
inline VerificationReport verify_oracle(unsigned seed = 20260823) {
    VerificationReport rep;
    rep.claim = "oracle";
    rep.grid = "ranks: diag w<=10 and w<=5 |h|<=5; enumeration: w<=8 h=-8:4; "
               "signs: 1000 random words";
    auto check_slice_ranks = [&](int w, int h) {
        const ComplexSlice slice = make_slice(1, w, h);
        if (slice.range.empty) return;
        for (int m = slice.range.lo; m <= slice.range.hi; ++m) {
            const ExactMatrix mat = boundary_matrix(slice, m);
            const int fast = rank(mat);
            const int naive = oracle::naive_rank(oracle::to_dense(mat));
            rep.require(fast == naive,
                        "rank w=" + std::to_string(w) + " h=" + std::to_string(h) +
                            " m=" + std::to_string(m),
                        std::to_string(fast), std::to_string(naive));
        }
    };
    for (int w = 0; w <= 10; ++w) check_slice_ranks(w, -w);
    for (int w = 0; w <= 5; ++w)
        for (int h = -5; h <= 5; ++h) check_slice_ranks(w, h);

    for (int w = 0; w <= 8; ++w) {
        for (int h = -8; h <= 4; ++h) {
            const MRange range = m_range(1, w, h);
            if (range.empty) continue;
            for (int m = 1; m <= range.hi; ++m) {
                const ChainBasis fast = enumerate_basis(1, w, h, m);
                const auto naive = oracle::naive_enumerate(1, w, h, m, std::max(0, m + h));
                const std::set<WedgeWord> fast_set(fast.words.begin(), fast.words.end());
                rep.require(fast_set == naive,
                            "enumeration w=" + std::to_string(w) + " h=" +
                                std::to_string(h) + " m=" + std::to_string(m),
                            std::to_string(fast.dim()), std::to_string(naive.size()));
            }
        }
    }

    std::mt19937 rng(seed);
    const auto pool = detail::generator_pool(1, 3);
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> len(2, 6);
    for (int iter = 0; iter < 1000; ++iter) {
        const int m = len(rng);
        std::vector<Generator> factors;
        for (int i = 0; i < m; ++i) factors.push_back(pool[pick(rng)]);
        const auto [word, sign] = canonicalize(factors);
        (void)word;
        if (sign == 0) {
            bool dup_even = false;
            for (size_t i = 0; i < factors.size(); ++i)
                for (size_t j = i + 1; j < factors.size(); ++j)
                    if (factors[i] == factors[j] && factors[i].parity() == 0)
                        dup_even = true;
            rep.require(dup_even, "zero word without repeated even factor",
                        format_word(WedgeWord{factors}), "repeated even factor");
            continue;
        }
        // stable argsort: result slot -> source slot
        std::vector<int> perm(factors.size());
        for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
        std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
            return factors[static_cast<size_t>(a)] < factors[static_cast<size_t>(b)];
        });
        std::vector<int> parities;
        for (const auto& g : factors) parities.push_back(g.parity());
        const int expected = oracle::koszul_sign(perm, parities);
        rep.require(sign == expected, "sign of " + format_word(WedgeWord{factors}),
                    std::to_string(sign), std::to_string(expected));
    }
    return rep;
}

}  // namespace superchain
