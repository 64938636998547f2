#pragma once

#include <string>
#include <vector>

#include "dets2/edge_tensor.hpp"

namespace dets2 {

// Matrix of (part of) the linear system attached to an edge tensor, with
// provenance: which vertex equation each d-row block came from, and the
// colex edge behind each column. Row blocks are d rows each, in the order
// listed in block_equations.
template <class S>
struct SystemMatrix {
    MatrixX<S> m;
    std::vector<int> block_equations;
    int d = 0;

    Eigen::Index rows() const { return m.rows(); }
    Eigen::Index cols() const { return m.cols(); }
    int equation_of_row(Eigen::Index r) const { return block_equations[static_cast<std::size_t>(r) / d]; }
    Edge edge_of_col(Eigen::Index c) const { return edge_at(static_cast<int>(c) + 1, d); }
};

namespace detail {

// Writes the d x E block for vertex equation k:
//   column (s,k), s < k   gets (-1)^{s-1} v_{s,k}
//   column (k,t), t > k   gets (-1)^t     v_{k,t}
// Columns of edges not incident to k stay zero.
template <class S>
void fill_equation_block(MatrixX<S>& block, const EdgeTensor<S>& t, int k) {
    const int d = t.d();
    const S one = t.field().one();
    const S minus_one = -one;
    block.resize(d, edge_count(d));
    block.fill(t.field().zero());
    for (int s = 1; s < k; ++s) {
        const S& sgn = (s % 2 == 1) ? one : minus_one;
        block.col(column_index(Edge{s, k}, d) - 1) = t.vec(Edge{s, k}) * sgn;
    }
    for (int u = k + 1; u <= vertex_count(d); ++u) {
        const S& sgn = (u % 2 == 0) ? one : minus_one;
        block.col(column_index(Edge{k, u}, d) - 1) = t.vec(Edge{k, u}) * sgn;
    }
}

} // namespace detail

// M_k: the d x d(2d-1) matrix of the single vertex equation k.
template <class S>
SystemMatrix<S> equation_matrix(const EdgeTensor<S>& t, int k) {
    if (k < 1 || k > vertex_count(t.d()))
        throw std::out_of_range("equation index " + std::to_string(k) + " out of range");
    SystemMatrix<S> out;
    out.d = t.d();
    out.block_equations = {k};
    detail::fill_equation_block(out.m, t, k);
    return out;
}

// A: all 2d vertex equations stacked in increasing order, 2d^2 x d(2d-1).
template <class S>
SystemMatrix<S> full_matrix(const EdgeTensor<S>& t) {
    const int d = t.d();
    SystemMatrix<S> out;
    out.d = d;
    out.m.resize(2 * d * d, edge_count(d));
    MatrixX<S> block;
    for (int k = 1; k <= vertex_count(d); ++k) {
        detail::fill_equation_block(block, t, k);
        out.m.middleRows(static_cast<Eigen::Index>(k - 1) * d, d) = block;
        out.block_equations.push_back(k);
    }
    return out;
}

// A_omit: the square d(2d-1) x d(2d-1) matrix with equation `omit` removed,
// remaining blocks in increasing order.
template <class S>
SystemMatrix<S> reduced_matrix(const EdgeTensor<S>& t, int omit) {
    const int d = t.d();
    if (omit < 1 || omit > vertex_count(d))
        throw std::out_of_range("equation index " + std::to_string(omit) + " out of range");
    SystemMatrix<S> out;
    out.d = d;
    out.m.resize(edge_count(d), edge_count(d));
    MatrixX<S> block;
    Eigen::Index row = 0;
    for (int k = 1; k <= vertex_count(d); ++k) {
        if (k == omit) continue;
        detail::fill_equation_block(block, t, k);
        out.m.middleRows(row, d) = block;
        out.block_equations.push_back(k);
        row += d;
    }
    return out;
}

} // namespace dets2
