#pragma once

#include <string>

#include "dets2/linalg.hpp"
#include "dets2/random.hpp"

namespace dets2 {

// 2d points in V_d, one column per point.
template <class S>
struct PointConfig {
    using Field = typename FieldOf<S>::type;

    int d = 0;
    Field field;
    MatrixX<S> points; // d rows, 2d columns

    PointConfig(int d_, Field field_) : d(d_), field(field_), points(d_, 2 * d_) {
        if (d_ < 1) throw std::invalid_argument("PointConfig: d must be >= 1");
        points.fill(field.zero());
    }

    auto point(int i) const { return points.col(i - 1); } // 1-based
};

// slot (i,j) = p_j - p_i
template <class S>
EdgeTensor<S> points_to_differences(const PointConfig<S>& c) {
    EdgeTensor<S> t(c.d, c.field);
    for (Edge e : edges(c.d)) t.set_vec(e, c.point(e.j) - c.point(e.i));
    return t;
}

enum class WitnessCase { case_one, case_two, degenerate };

inline std::string witness_case_name(WitnessCase w) {
    switch (w) {
        case WitnessCase::case_one: return "I";
        case WitnessCase::case_two: return "II";
        case WitnessCase::degenerate: return "degenerate";
    }
    return "?";
}

template <class S>
struct GeometricWitness {
    KernelWitness<S> witness;
    WitnessCase branch = WitnessCase::degenerate;
};

// Explicit nontrivial solution of the system attached to the difference
// tensor of a point configuration, built from one linear dependence among
// the vectors p_t - p_1:
//   find (l_2,...,l_2d), not all zero, with sum_t (-1)^t l_t (p_t - p_1) = 0,
//   put L = sum_t (-1)^t l_t, then
//     L != 0:  coeff(1,j) = l_j,  coeff(i,j) = l_i l_j / L          (case I)
//     L == 0:  a = first index with l_a != 0,
//              coeff(i,j) = 0 for i < a, l_i l_j / l_a for i >= a   (case II)
// The witness is checked against all 2d equations before being returned.
template <class S>
GeometricWitness<S> geometric_witness(const PointConfig<S>& c) {
    const int d = c.d;
    const int n = vertex_count(d);
    const auto& field = c.field;
    const S zero = field.zero();
    const S one = field.one();

    EdgeTensor<S> diffs = points_to_differences(c);

    GeometricWitness<S> out;
    out.witness.d = d;
    out.witness.coeffs.resize(edge_count(d));
    out.witness.coeffs.fill(zero);

    if (is_zero_matrix(diffs.vectors())) {
        // all points coincide; any single-edge assignment solves the system
        out.witness.coeffs(0) = one;
        out.branch = WitnessCase::degenerate;
        return out;
    }

    // columns (-1)^t (p_t - p_1), t = 2..2d; 2d-1 > d forces a dependence
    MatrixX<S> cols(d, n - 1);
    for (int t = 2; t <= n; ++t) {
        const S sgn = (t % 2 == 0) ? one : -one;
        cols.col(t - 2) = diffs.vec(Edge{1, t}) * sgn;
    }
    auto kernel = kernel_basis(cols);
    if (kernel.empty())
        throw InvariantViolation("geometric_witness: no dependence among 2d-1 vectors in dimension d");
    const VectorX<S>& lambda = kernel.front(); // lambda(t-2) is l_t

    S capital_lambda = zero;
    for (int t = 2; t <= n; ++t) {
        const S sgn = (t % 2 == 0) ? one : -one;
        capital_lambda += sgn * lambda(t - 2);
    }

    auto l = [&](int t) -> const S& { return lambda(t - 2); };

    if (!is_zero(capital_lambda)) {
        out.branch = WitnessCase::case_one;
        const S inv = capital_lambda.inverse();
        for (Edge e : edges(d)) {
            const S value = e.i == 1 ? l(e.j) : S(l(e.i) * l(e.j) * inv);
            out.witness.coeffs(column_index(e, d) - 1) = value;
        }
    } else {
        out.branch = WitnessCase::case_two;
        int a = 0;
        for (int t = 2; t <= n; ++t) {
            if (!is_zero(l(t))) {
                a = t;
                break;
            }
        }
        if (a == 0)
            throw InvariantViolation("geometric_witness: kernel vector is zero");
        const S inv = l(a).inverse();
        for (Edge e : edges(d)) {
            if (e.i < a) continue; // coefficient zero
            out.witness.coeffs(column_index(e, d) - 1) = l(e.i) * l(e.j) * inv;
        }
    }

    if (!out.witness.nontrivial())
        throw InvariantViolation("geometric_witness: constructed witness is trivial");
    VectorX<S> residual = apply(full_matrix(diffs).m, out.witness.coeffs, zero);
    if (!is_zero_vector(residual))
        throw InvariantViolation("geometric_witness: witness fails the vertex equations");
    return out;
}

template <class S>
struct VanishingReport {
    S det;
    GeometricWitness<S> witness;
};

// Difference tensors always land in the kernel of the invariant; a nonzero
// determinant here is a hard failure.
template <class S>
VanishingReport<S> assert_vanishing(const PointConfig<S>& c) {
    VanishingReport<S> rep{det_s2(points_to_differences(c)), geometric_witness(c)};
    if (!is_zero(rep.det))
        throw InvariantViolation("assert_vanishing: difference tensor has nonzero invariant");
    return rep;
}

template <class F>
PointConfig<typename F::Scalar> random_points(SeededRng& rng, int d, const F& field) {
    PointConfig<typename F::Scalar> c(d, field);
    for (int i = 1; i <= vertex_count(d); ++i)
        c.points.col(i - 1) = random_vector(rng, d, field);
    return c;
}

} // namespace dets2
