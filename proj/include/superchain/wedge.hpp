#pragma once

#include <map>
#include <utility>
#include <vector>

#include "element.hpp"

namespace superchain {

/// Canonically ordered wedge of generators.  Factors are non-decreasing in
/// the generator total order; two equal even-parity factors make the zero
/// word, which is never stored.
struct WedgeWord {
    std::vector<Generator> factors;

    int size() const { return static_cast<int>(factors.size()); }

    int primary_weight() const {
        int w = 0;
        for (const auto& g : factors) w += g.kind();
        return w;
    }
    int secondary_weight() const {
        int h = -size();
        for (const auto& g : factors) h += g.degree();
        return h;
    }

    bool operator==(const WedgeWord& o) const = default;
};

inline bool operator<(const WedgeWord& a, const WedgeWord& b) {
    return std::lexicographical_compare(a.factors.begin(), a.factors.end(),
                                        b.factors.begin(), b.factors.end());
}

/// FNV-1a over the defining data of each factor.
struct WedgeWordHash {
    size_t operator()(const WedgeWord& w) const {
        size_t h = 1469598103934665603ull;
        auto mix = [&](size_t v) {
            h ^= v;
            h *= 1099511628211ull;
        };
        for (const auto& g : w.factors) {
            mix(static_cast<size_t>(g.direction) + 1);
            for (int i : g.form_indices) mix(static_cast<size_t>(i) + 0x100);
            for (int e : g.mono.exponents) mix(static_cast<size_t>(e) + 0x10000);
            mix(0x9e3779b97f4a7c15ull);
        }
        return h;
    }
};

/// Stable-sorts the factors into canonical order.  Each adjacent
/// transposition of parities p, q contributes the Koszul sign -(-1)^{pq};
/// returns sign 0 and an empty word when two equal even-parity factors occur.
inline std::pair<WedgeWord, int> canonicalize(std::vector<Generator> factors) {
    int sign = 1;
    for (size_t i = 1; i < factors.size(); ++i) {
        for (size_t j = i; j > 0 && factors[j] < factors[j - 1]; --j) {
            // -(-1)^{pq} is +1 exactly when both parities are odd
            if (!(factors[j].parity() == 1 && factors[j - 1].parity() == 1)) sign = -sign;
            std::swap(factors[j], factors[j - 1]);
        }
    }
    for (size_t i = 1; i < factors.size(); ++i) {
        if (factors[i].parity() == 0 && factors[i] == factors[i - 1])
            return {WedgeWord{}, 0};
    }
    return {WedgeWord{std::move(factors)}, sign};
}

/// Rational combination of wedge words.
struct Chain {
    std::map<WedgeWord, Rational> terms;

    Chain() = default;
    explicit Chain(const WedgeWord& w, Rational c = Rational(1)) { add(w, c); }

    bool is_zero() const { return terms.empty(); }

    void add(const WedgeWord& w, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms.emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    Chain& operator+=(const Chain& o) {
        for (const auto& [w, c] : o.terms) add(w, c);
        return *this;
    }
    Chain& operator-=(const Chain& o) {
        for (const auto& [w, c] : o.terms) add(w, -c);
        return *this;
    }
    Chain operator+(const Chain& o) const {
        Chain r = *this;
        r += o;
        return r;
    }
    Chain operator-(const Chain& o) const {
        Chain r = *this;
        r -= o;
        return r;
    }
    Chain operator*(const Rational& c) const {
        Chain r;
        for (const auto& [w, v] : terms) r.add(w, v * c);
        return r;
    }
    Chain operator-() const { return *this * Rational(-1); }

    bool operator==(const Chain& o) const { return terms == o.terms; }
};

/// Chain with the given factors, canonicalized (may be zero).
inline Chain chain_of(std::vector<Generator> factors, Rational c = Rational(1)) {
    auto [word, sign] = canonicalize(std::move(factors));
    Chain r;
    if (sign != 0) r.add(word, c * Rational(sign));
    return r;
}

/// Degree-1 chain from each term of an element.
inline Chain chain_of(const Element& e) {
    Chain r;
    for (const auto& [g, c] : e.terms) r.add(WedgeWord{{g}}, c);
    return r;
}

/// Bilinear wedge: concatenates factor sequences, then canonicalizes.
inline Chain wedge(const Chain& a, const Chain& b) {
    Chain r;
    for (const auto& [wa, ca] : a.terms) {
        for (const auto& [wb, cb] : b.terms) {
            std::vector<Generator> fs = wa.factors;
            fs.insert(fs.end(), wb.factors.begin(), wb.factors.end());
            auto [word, sign] = canonicalize(std::move(fs));
            if (sign != 0) r.add(word, ca * cb * Rational(sign));
        }
    }
    return r;
}

}  // namespace superchain
