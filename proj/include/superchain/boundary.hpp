#pragma once

#include "basis.hpp"
#include "calculus.hpp"
#include "wedge.hpp"

namespace superchain {

/// Chevalley-Eilenberg boundary of one wedge word:
///   sum_{i<j} (-1)^{i-1 + a_i sum_{i<s<j} a_s}
///             A_1 ^ ... A_i-hat ... ^ [A_i, A_j] ^ ... ^ A_m
/// with a_s the kind index and the bracket replacing position j.
inline Chain boundary(const WedgeWord& word) {
    Chain out;
    const auto& fs = word.factors;
    const int m = word.size();
    for (int i = 0; i < m; ++i) {
        int middle_kinds = 0;
        for (int j = i + 1; j < m; ++j) {
            const int exponent = i + fs[static_cast<size_t>(i)].kind() * middle_kinds;
            const int base_sign = (exponent % 2 == 0) ? 1 : -1;
            const Element br = bracket(Element(fs[static_cast<size_t>(i)]),
                                       Element(fs[static_cast<size_t>(j)]));
            for (const auto& [g, c] : br.terms) {
                std::vector<Generator> rest;
                rest.reserve(static_cast<size_t>(m - 1));
                for (int s = 0; s < m; ++s) {
                    if (s == i) continue;
                    rest.push_back(s == j ? g : fs[static_cast<size_t>(s)]);
                }
                auto [w, sign] = canonicalize(std::move(rest));
                if (sign != 0) out.add(w, c * Rational(base_sign * sign));
            }
            middle_kinds += fs[static_cast<size_t>(j)].kind();
        }
    }
    return out;
}

inline Chain boundary(const Chain& c) {
    Chain out;
    for (const auto& [word, coeff] : c.terms) out += boundary(word) * coeff;
    return out;
}

/// A_1 correction operator on a block of kind-1 factors:
///   (-1)^b sum_{j<=b} B_1 ^ ... B_j-hat ... ^ B_b ^ [1, B_j],  0 for b = 0.
inline Chain a1_operator(const std::vector<Generator>& bs) {
    for (const auto& g : bs)
        if (g.kind() != 1) throw std::invalid_argument("a1_operator: factors must be kind 1");
    Chain out;
    const int b = static_cast<int>(bs.size());
    if (b == 0) return out;
    const Rational outer((b % 2 == 0) ? 1 : -1);
    const Element one(constant_one(bs.front().dimension()));
    for (int j = 0; j < b; ++j) {
        const Element br = bracket(one, Element(bs[static_cast<size_t>(j)]));
        for (const auto& [g, c] : br.terms) {
            std::vector<Generator> rest;
            for (int s = 0; s < b; ++s)
                if (s != j) rest.push_back(bs[static_cast<size_t>(s)]);
            rest.push_back(g);
            auto [w, sign] = canonicalize(std::move(rest));
            if (sign != 0) out.add(w, outer * c * Rational(sign));
        }
    }
    return out;
}

/// As ^ A_1(Bs) ^ Cs for a canonical word As ^ Bs ^ Cs split by kind
/// (0 / 1 / higher).
inline Chain a1_block(const WedgeWord& word) {
    std::vector<Generator> as, bs, cs;
    for (const auto& g : word.factors) {
        if (g.kind() == 0)
            as.push_back(g);
        else if (g.kind() == 1)
            bs.push_back(g);
        else
            cs.push_back(g);
    }
    Chain mid = a1_operator(bs);
    if (!as.empty()) mid = wedge(Chain(WedgeWord{as}), mid);
    if (!cs.empty()) mid = wedge(mid, Chain(WedgeWord{cs}));
    return mid;
}

/// The shortcut operator on the w = 2 diagonal complex:
///   d'(As ^ Bs ^ Cs) := 1 ^ d(As ^ Bs ^ Cs) + As ^ A_1(Bs) ^ Cs.
/// Every term carries primary weight 3, so the codomain is C^m_{3,-3}.
inline Chain boundary_prime(const Chain& c) {
    Chain out;
    const Chain one_chain = chain_of(Element(constant_one(1)));
    for (const auto& [word, coeff] : c.terms) {
        if (word.primary_weight() != 2 || word.secondary_weight() != -2)
            throw std::invalid_argument("boundary_prime: chain is not of weight (2,-2)");
        Chain part = wedge(one_chain, boundary(word)) + a1_block(word);
        out += part * coeff;
    }
    return out;
}

}  // namespace superchain
