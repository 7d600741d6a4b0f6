#pragma once

#include <boost/container/small_vector.hpp>
#include <stdexcept>

namespace superchain {

/// Small integer sequences (exponent vectors, form index sets) live inline
/// for the common low-dimensional case; words are allocation-heavy otherwise.
using IntSeq = boost::container::small_vector<int, 4>;

/// Monomial x^P in n coordinates, stored as the exponent vector P.
struct Monomial {
    IntSeq exponents;

    Monomial() = default;
    explicit Monomial(int n) : exponents(static_cast<size_t>(n), 0) {
        if (n < 1) throw std::invalid_argument("Monomial: dimension must be >= 1");
    }
    Monomial(std::initializer_list<int> e) : exponents(e) {}

    int dimension() const { return static_cast<int>(exponents.size()); }
    int degree() const {
        int d = 0;
        for (int e : exponents) d += e;
        return d;
    }

    /// x^P * x^Q
    Monomial operator*(const Monomial& o) const {
        Monomial r = *this;
        for (size_t k = 0; k < exponents.size(); ++k) r.exponents[k] += o.exponents[k];
        return r;
    }

    /// Exponent of coordinate k (1-based).
    int exponent(int k) const { return exponents[static_cast<size_t>(k - 1)]; }

    /// x^P with the exponent of coordinate k (1-based) lowered by one.
    Monomial lowered(int k) const {
        Monomial r = *this;
        r.exponents[static_cast<size_t>(k - 1)] -= 1;
        return r;
    }

    bool operator==(const Monomial& o) const { return exponents == o.exponents; }
    bool operator<(const Monomial& o) const { return exponents < o.exponents; }
};

/// Univariate convenience: x^d at n=1.
inline Monomial mono1(int d) {
    Monomial m(1);
    m.exponents[0] = d;
    return m;
}

}  // namespace superchain
