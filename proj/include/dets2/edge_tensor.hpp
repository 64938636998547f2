#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dets2/edge.hpp"
#include "dets2/errors.hpp"
#include "dets2/matrix.hpp"

namespace dets2 {

// Assignment of a vector v_{i,j} in V_d to every edge (i,j) of K_{2d}.
// Stored as a d x d(2d-1) matrix, one column per edge in colex order.
// Value semantics; treat instances as immutable and use with_slot for
// single-slot edits.
template <class S>
class EdgeTensor {
public:
    using Field = typename FieldOf<S>::type;
    using Matrix = MatrixX<S>;
    using Vector = VectorX<S>;

    EdgeTensor(int d, Field field) : d_(d), field_(field), m_(d, edge_count(d)) {
        if (d < 1) throw std::invalid_argument("EdgeTensor: d must be >= 1");
        m_.fill(field_.zero());
    }

    int d() const { return d_; }
    int vertices() const { return 2 * d_; }
    const Field& field() const { return field_; }
    const Matrix& vectors() const { return m_; }

    auto vec(Edge e) const { return m_.col(col0(e)); }

    void set_vec(Edge e, const Vector& v) {
        if (v.size() != d_) throw std::invalid_argument("EdgeTensor: vector length != d");
        m_.col(col0(e)) = v;
    }

    EdgeTensor with_slot(Edge e, const Vector& v) const {
        EdgeTensor out = *this;
        out.set_vec(e, v);
        return out;
    }

    friend bool operator==(const EdgeTensor& a, const EdgeTensor& b) {
        if (a.d_ != b.d_) return false;
        for (Eigen::Index c = 0; c < a.m_.cols(); ++c)
            for (Eigen::Index r = 0; r < a.m_.rows(); ++r)
                if (a.m_(r, c) != b.m_(r, c)) return false;
        return true;
    }

private:
    Eigen::Index col0(Edge e) const { return column_index(e, d_) - 1; }

    int d_;
    Field field_;
    Matrix m_;
};

// The distinguished basis-vector assignment whose slot (i,j) is e_t exactly
// when one of the four selection rules below fires. Exactly one rule must
// match per edge; anything else is a broken table and throws.
template <class F>
EdgeTensor<typename F::Scalar> canonical_tensor(int d, F field) {
    if (d < 2) throw std::invalid_argument("canonical_tensor: d must be >= 2");
    EdgeTensor<typename F::Scalar> out(d, field);
    for (Edge e : edges(d)) {
        int hits = 0;
        int chosen = 0;
        for (int t = 1; t <= d; ++t) {
            bool match = (e.j == 2 * t - 1 && e.i < 2 * t - 1 && e.i % 2 == 1) ||
                         (e.j == 2 * t && e.i < 2 * t && e.i % 2 == 0) ||
                         (e.i == 2 * t - 1 && e.j > 2 * t - 1 && e.j % 2 == 0) ||
                         (e.i == 2 * t && e.j > 2 * t && e.j % 2 == 1);
            if (match) {
                ++hits;
                chosen = t;
            }
        }
        if (hits != 1)
            throw InvariantViolation("canonical_tensor: " + std::to_string(hits) +
                                     " selection rules fired for edge (" + std::to_string(e.i) +
                                     "," + std::to_string(e.j) + "), expected exactly 1");
        VectorX<typename F::Scalar> v(d);
        v.fill(field.zero());
        v(chosen - 1) = field.one();
        out.set_vec(e, v);
    }
    return out;
}

// If every slot is a standard basis vector, returns the basis index (1..d)
// per edge in colex order; otherwise nothing.
template <class S>
std::optional<std::vector<int>> basis_labels(const EdgeTensor<S>& t) {
    const S zero = t.field().zero();
    const S one = t.field().one();
    std::vector<int> labels;
    labels.reserve(edge_count(t.d()));
    for (Edge e : edges(t.d())) {
        auto v = t.vec(e);
        int label = 0;
        for (int r = 0; r < t.d(); ++r) {
            if (v(r) == one) {
                if (label != 0) return std::nullopt;
                label = r + 1;
            } else if (!(v(r) == zero)) {
                return std::nullopt;
            }
        }
        if (label == 0) return std::nullopt;
        labels.push_back(label);
    }
    return labels;
}

} // namespace dets2
