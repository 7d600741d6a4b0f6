#pragma once

#include <stdexcept>
#include <tuple>
#include <vector>

#include "monomial.hpp"

namespace superchain {

/// One basis symbol of the superalgebra: a monomial-coefficient vector field
/// x^P d/dx_k or a monomial-coefficient q-form x^P dx_{i_1} ^ ... ^ dx_{i_q}
/// (q = 0 gives a polynomial function).
///
/// Kind index: 0 for vector fields, q+1 for q-forms, so a generator of kind i
/// with polynomial degree j spans K[i][j].  Parity is kind mod 2; the
/// redefined primary weight is the kind itself and the secondary weight is
/// degree - 1.
struct Generator {
    Monomial mono;
    int direction = 0;       // 1..n for vector fields, 0 otherwise
    IntSeq form_indices;     // strictly increasing, forms only

    bool is_vector_field() const { return direction != 0; }
    bool is_form() const { return direction == 0; }

    int dimension() const { return mono.dimension(); }
    int kind() const {
        return is_vector_field() ? 0 : static_cast<int>(form_indices.size()) + 1;
    }
    int parity() const { return kind() % 2; }
    int degree() const { return mono.degree(); }

    int primary_weight() const { return kind(); }
    int original_primary_weight() const { return -kind(); }
    int secondary_weight() const { return degree() - 1; }

    bool operator==(const Generator& o) const = default;
};

/// Total order: kind, then polynomial degree, then direction / form-index
/// set, then exponent vector (all ascending / lexicographic).
inline bool operator<(const Generator& a, const Generator& b) {
    if (a.kind() != b.kind()) return a.kind() < b.kind();
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    if (a.direction != b.direction) return a.direction < b.direction;
    if (a.form_indices != b.form_indices) return a.form_indices < b.form_indices;
    return a.mono.exponents < b.mono.exponents;
}

inline Generator make_vector_field(int direction, Monomial mono) {
    if (direction < 1 || direction > mono.dimension())
        throw std::invalid_argument("make_vector_field: direction out of range");
    Generator g;
    g.mono = std::move(mono);
    g.direction = direction;
    return g;
}

inline Generator make_form(IntSeq indices, Monomial mono) {
    for (size_t t = 0; t < indices.size(); ++t) {
        if (indices[t] < 1 || indices[t] > mono.dimension())
            throw std::invalid_argument("make_form: index out of range");
        if (t > 0 && indices[t] <= indices[t - 1])
            throw std::invalid_argument("make_form: indices must be strictly increasing");
    }
    Generator g;
    g.mono = std::move(mono);
    g.form_indices = std::move(indices);
    return g;
}

// n=1 shorthands: x^d d/dx, x^d, x^d dx.
inline Generator vf1(int d) { return make_vector_field(1, mono1(d)); }
inline Generator fn1(int d) { return make_form({}, mono1(d)); }
inline Generator fm1(int d) { return make_form({1}, mono1(d)); }

/// The constant function 1 (the degree-0 form), any dimension.
inline Generator constant_one(int n) { return make_form({}, Monomial(n)); }

}  // namespace superchain
