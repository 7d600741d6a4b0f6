#pragma once

#include "matrix.hpp"

namespace superchain {

/// Per-degree dimension / rank / Betti table of one weighted slice.
/// rank(m) is the rank of d : C_m -> C_{m-1};
/// Betti_m = dim C_m - rank(m) - rank(m+1).
struct HomologyReport {
    struct Row {
        int m = 0;
        int dim = 0;
        int rank = 0;
        int betti = 0;
    };
    int n = 1, w = 0, h = 0;
    std::vector<Row> rows;

    std::vector<int> betti_profile() const {
        std::vector<int> b;
        b.reserve(rows.size());
        for (const auto& r : rows) b.push_back(r.betti);
        return b;
    }

    /// Euler characteristic two ways: alternating sums of Betti numbers and
    /// of chain dimensions agree.
    bool euler_identity_holds() const {
        int lhs = 0, rhs = 0;
        for (const auto& r : rows) {
            const int s = (r.m % 2 == 0) ? 1 : -1;
            lhs += s * r.betti;
            rhs += s * r.dim;
        }
        return lhs == rhs;
    }
};

inline HomologyReport betti(const ComplexSlice& slice) {
    HomologyReport rep;
    rep.n = slice.n;
    rep.w = slice.w;
    rep.h = slice.h;
    if (slice.range.empty) return rep;
    std::map<int, int> ranks;  // m -> rank of d : C_m -> C_{m-1}
    for (int m = slice.range.lo; m <= slice.range.hi; ++m)
        ranks[m] = rank(boundary_matrix(slice, m));
    ranks[slice.range.hi + 1] = 0;
    for (int m = slice.range.lo; m <= slice.range.hi; ++m) {
        HomologyReport::Row row;
        row.m = m;
        row.dim = slice.dim(m);
        row.rank = ranks[m];
        row.betti = row.dim - ranks[m] - ranks[m + 1];
        rep.rows.push_back(row);
    }
    return rep;
}

}  // namespace superchain
