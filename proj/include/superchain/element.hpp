#pragma once

#include <map>

#include "generator.hpp"
#include "rational.hpp"

namespace superchain {

/// Finite rational linear combination of Generators.  Zero coefficients are
/// pruned eagerly, so the empty term map is the unique zero and equality is
/// structural.
struct Element {
    std::map<Generator, Rational> terms;

    Element() = default;
    explicit Element(const Generator& g, Rational c = Rational(1)) {
        add(g, std::move(c));
    }

    bool is_zero() const { return terms.empty(); }

    void add(const Generator& g, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms.emplace(g, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    Element& operator+=(const Element& o) {
        for (const auto& [g, c] : o.terms) add(g, c);
        return *this;
    }
    Element& operator-=(const Element& o) {
        for (const auto& [g, c] : o.terms) add(g, -c);
        return *this;
    }
    Element operator+(const Element& o) const {
        Element r = *this;
        r += o;
        return r;
    }
    Element operator-(const Element& o) const {
        Element r = *this;
        r -= o;
        return r;
    }
    Element operator*(const Rational& c) const {
        Element r;
        for (const auto& [g, v] : terms) r.add(g, v * c);
        return r;
    }
    Element operator-() const { return *this * Rational(-1); }

    bool operator==(const Element& o) const { return terms == o.terms; }
};

}  // namespace superchain
