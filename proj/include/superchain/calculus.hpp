#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "element.hpp"

namespace superchain {

/// d applied to a pure-form element:
/// d(x^P dx^A) = sum_k (d x^P / d x_k) dx_k ^ dx^A with indices re-sorted.
inline Element exterior_derivative(const Element& e) {
    Element out;
    for (const auto& [g, c] : e.terms) {
        if (g.is_vector_field())
            throw std::invalid_argument("exterior_derivative: vector-field generator");
        const int n = g.dimension();
        for (int k = 1; k <= n; ++k) {
            const int ek = g.mono.exponent(k);
            if (ek == 0) continue;
            if (std::binary_search(g.form_indices.begin(), g.form_indices.end(), k))
                continue;  // dx_k ^ dx^A = 0
            // dx_k passes the indices of A smaller than k
            const auto below = std::lower_bound(g.form_indices.begin(),
                                                g.form_indices.end(), k) -
                               g.form_indices.begin();
            IntSeq idx = g.form_indices;
            idx.insert(idx.begin() + below, k);
            const int sign = (below % 2 == 0) ? 1 : -1;
            out.add(make_form(std::move(idx), g.mono.lowered(k)),
                    c * Rational(sign * ek));
        }
    }
    return out;
}

/// i_X applied to a pure-form element; contraction of a 0-form is 0.
inline Element interior_product(const Element& X, const Element& e) {
    Element out;
    for (const auto& [gx, cx] : X.terms) {
        if (!gx.is_vector_field())
            throw std::invalid_argument("interior_product: first argument must be vector fields");
        for (const auto& [gf, cf] : e.terms) {
            if (gf.is_vector_field())
                throw std::invalid_argument("interior_product: second argument must be forms");
            auto it = std::find(gf.form_indices.begin(), gf.form_indices.end(),
                                gx.direction);
            if (it == gf.form_indices.end()) continue;
            const auto pos = it - gf.form_indices.begin();
            IntSeq idx = gf.form_indices;
            idx.erase(idx.begin() + pos);
            const int sign = (pos % 2 == 0) ? 1 : -1;
            out.add(make_form(std::move(idx), gx.mono * gf.mono),
                    cx * cf * Rational(sign));
        }
    }
    return out;
}

/// Cartan formula: L_X = i_X d + d i_X.
inline Element lie_derivative(const Element& X, const Element& e) {
    return interior_product(X, exterior_derivative(e)) +
           exterior_derivative(interior_product(X, e));
}

namespace detail {

// [f d/dx_i, g d/dx_j] = f (d g / d x_i) d/dx_j - g (d f / d x_j) d/dx_i
inline Element vf_bracket(const Generator& a, const Generator& b) {
    Element out;
    const int ei = b.mono.exponent(a.direction);
    if (ei > 0)
        out.add(make_vector_field(b.direction, a.mono * b.mono.lowered(a.direction)),
                Rational(ei));
    const int ej = a.mono.exponent(b.direction);
    if (ej > 0)
        out.add(make_vector_field(a.direction, b.mono * a.mono.lowered(b.direction)),
                Rational(-ej));
    return out;
}

// Exterior product of two monomial forms, with the merge sign; zero when the
// index sets intersect.
inline std::optional<std::pair<Generator, int>> form_wedge(const Generator& a,
                                                           const Generator& b) {
    IntSeq idx;
    idx.reserve(a.form_indices.size() + b.form_indices.size());
    int inversions = 0;
    size_t i = 0, j = 0;
    while (i < a.form_indices.size() && j < b.form_indices.size()) {
        if (a.form_indices[i] == b.form_indices[j]) return std::nullopt;
        if (a.form_indices[i] < b.form_indices[j]) {
            idx.push_back(a.form_indices[i++]);
        } else {
            // b's index jumps over the remaining indices of a
            inversions += static_cast<int>(a.form_indices.size() - i);
            idx.push_back(b.form_indices[j++]);
        }
    }
    while (i < a.form_indices.size()) idx.push_back(a.form_indices[i++]);
    while (j < b.form_indices.size()) idx.push_back(b.form_indices[j++]);
    const int sign = (inversions % 2 == 0) ? 1 : -1;
    return std::pair(make_form(std::move(idx), a.mono * b.mono), sign);
}

}  // namespace detail

/// The super bracket:
///   [X, Y]      Lie bracket of vector fields,
///   [X, alpha]  Lie derivative,
///   [alpha, beta] = (-1)^a d(alpha ^ beta)  with a the form degree of alpha,
///   [alpha, X] extended by super antisymmetry.
inline Element bracket(const Element& a, const Element& b) {
    Element out;
    for (const auto& [ga, ca] : a.terms) {
        for (const auto& [gb, cb] : b.terms) {
            const Rational c = ca * cb;
            if (ga.is_vector_field() && gb.is_vector_field()) {
                out += detail::vf_bracket(ga, gb) * c;
            } else if (ga.is_vector_field()) {
                out += lie_derivative(Element(ga), Element(gb)) * c;
            } else if (gb.is_vector_field()) {
                // [alpha, X] := -(-1)^{parity(alpha) parity(X)} [X, alpha]
                const int s = (ga.parity() * gb.parity()) % 2 == 0 ? -1 : 1;
                out += lie_derivative(Element(gb), Element(ga)) * (c * Rational(s));
            } else {
                auto w = detail::form_wedge(ga, gb);
                if (!w) continue;
                const int deg_a = ga.kind() - 1;
                const int s = (deg_a % 2 == 0 ? 1 : -1) * w->second;
                out += exterior_derivative(Element(w->first)) * (c * Rational(s));
            }
        }
    }
    return out;
}

/// The Euler vector field E = sum_k x_k d/dx_k; [E, g] = (i + j - 1) g for
/// every generator g in K[i][j].
inline Element euler_field(int n) {
    Element e;
    for (int k = 1; k <= n; ++k) {
        Monomial m(n);
        m.exponents[static_cast<size_t>(k - 1)] = 1;
        e.add(make_vector_field(k, std::move(m)), Rational(1));
    }
    return e;
}

struct DoubleWeight {
    int w;       // redefined primary weight (the kind index)
    int h;       // secondary weight
    int parity;  // kind mod 2
};

inline DoubleWeight double_weight(const Generator& g) {
    return {g.primary_weight(), g.secondary_weight(), g.parity()};
}

}  // namespace superchain
