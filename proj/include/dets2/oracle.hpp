#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dets2/linalg.hpp"
#include "dets2/partition.hpp"

// Brute-force second opinions.  Nothing here shares elimination or search
// code with the production paths; that is the point.

namespace dets2 {

// Laplace cofactor expansion, memoized on the set of remaining columns.
// Division-free and independent of the pivoting order. Exponential: capped
// at 8x8, or 15x15 when the caller opts in.
template <class S>
S det_cofactor(const MatrixX<S>& m, bool allow_large = false) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det_cofactor: matrix is not square");
    const int n = static_cast<int>(m.rows());
    const int cap = allow_large ? 15 : 8;
    if (n > cap)
        throw std::invalid_argument("det_cofactor: size " + std::to_string(n) + " over the cap of " +
                                    std::to_string(cap));
    const S zero = zero_like(m);
    const S one = one_like(m);
    if (n == 0) return one;

    // sub[mask] = det of the submatrix on rows n-popcount(mask)..n-1 and the
    // columns in mask; expansion along the first of those rows
    const std::uint32_t full = (std::uint32_t(1) << n) - 1;
    std::vector<S> sub(static_cast<std::size_t>(full) + 1, zero);
    sub[0] = one;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const int row = n - std::popcount(mask);
        S acc = zero;
        int place = 0;
        for (std::uint32_t bits = mask; bits != 0; bits &= bits - 1, ++place) {
            const int col = std::countr_zero(bits);
            const S& entry = m(row, col);
            if (!is_zero(entry)) {
                const S term = entry * sub[mask ^ (std::uint32_t(1) << col)];
                acc = (place % 2 == 1) ? S(acc - term) : S(acc + term);
            }
        }
        sub[mask] = acc;
    }
    return sub[full];
}

template <class S>
S det_cofactor(const SystemMatrix<S>& sm, bool allow_large = false) {
    return det_cofactor(sm.m, allow_large);
}

// Iterative DFS cycle detection per color class; second opinion to the
// union-find in cycle_free_report.
inline CycleFreeReport dfs_cycle_check(const Partition& p) {
    const int d = p.d();
    const int n = vertex_count(d);
    CycleFreeReport rep;
    rep.per_color.assign(static_cast<std::size_t>(d), true);
    for (int c = 1; c <= d; ++c) {
        std::vector<std::vector<int>> adj(static_cast<std::size_t>(n + 1));
        for (Edge e : edges(d)) {
            if (p.color(e) != c) continue;
            adj[static_cast<std::size_t>(e.i)].push_back(e.j);
            adj[static_cast<std::size_t>(e.j)].push_back(e.i);
        }
        std::vector<bool> seen(static_cast<std::size_t>(n + 1), false);
        bool cycle = false;
        for (int start = 1; start <= n && !cycle; ++start) {
            if (seen[static_cast<std::size_t>(start)]) continue;
            // stack of (vertex, parent)
            std::vector<std::pair<int, int>> stack{{start, 0}};
            seen[static_cast<std::size_t>(start)] = true;
            while (!stack.empty() && !cycle) {
                auto [v, parent] = stack.back();
                stack.pop_back();
                for (int w : adj[static_cast<std::size_t>(v)]) {
                    if (w == parent) continue;
                    if (seen[static_cast<std::size_t>(w)]) {
                        cycle = true;
                        break;
                    }
                    seen[static_cast<std::size_t>(w)] = true;
                    stack.push_back({w, v});
                }
            }
        }
        rep.per_color[static_cast<std::size_t>(c - 1)] = !cycle;
    }
    rep.cycle_free = true;
    for (bool ok : rep.per_color) rep.cycle_free = rep.cycle_free && ok;
    return rep;
}

struct D2Report {
    long long total = 0;
    long long cycle_free = 0;
    // table[cf][nz]: cf = cycle-free (DFS), nz = invariant nonzero over Q
    long long table[2][2] = {{0, 0}, {0, 0}};
    bool off_diagonal_zero() const { return table[0][1] == 0 && table[1][0] == 0; }
};

// Walks all 64 partitions at d=2 and tabulates cycle-freeness against the
// vanishing of the invariant.
inline D2Report exhaustive_d2_report() {
    D2Report rep;
    RationalField field;
    PartitionEnumerator en(2);
    while (auto p = en.next()) {
        ++rep.total;
        const bool cf = dfs_cycle_check(*p).cycle_free;
        const bool nz = !det_s2(partition_to_tensor(*p, field)).is_zero();
        rep.cycle_free += cf ? 1 : 0;
        ++rep.table[cf ? 1 : 0][nz ? 1 : 0];
    }
    return rep;
}

struct GoldenValues {
    std::map<int, std::string> canonical_det; // d -> det_s2 of the canonical tensor, over Q
    long long d2_cycle_free = 0;

    friend bool operator==(const GoldenValues&, const GoldenValues&) = default;
};

// Recomputes every committed golden value, cross-checking each determinant
// along two independent routes (three for d <= 3, where cofactor expansion
// is feasible). Throws if any routes disagree.
inline GoldenValues regenerate_golden() {
    GoldenValues out;
    RationalField field;
    for (int d = 2; d <= 6; ++d) {
        const auto canonical = canonical_tensor(d, field);
        const auto reduced = reduced_matrix(canonical, 1);
        const Rational raw = det_exact(reduced);
        const Rational via_division = detail::det_field_elimination(reduced.m);
        if (raw != via_division)
            throw InvariantViolation("golden regen: elimination routes disagree at d=" + std::to_string(d));
        if (d <= 3) {
            const Rational via_cofactor = det_cofactor(reduced, /*allow_large=*/true);
            if (raw != via_cofactor)
                throw InvariantViolation("golden regen: cofactor route disagrees at d=" + std::to_string(d));
        }
        const Rational normalized = det_s2(canonical);
        out.canonical_det[d] = normalized.str();
    }
    const D2Report d2 = exhaustive_d2_report();
    if (!d2.off_diagonal_zero())
        throw InvariantViolation("golden regen: d=2 exhaustive table has off-diagonal mass");
    out.d2_cycle_free = d2.cycle_free;
    return out;
}

} // namespace dets2
