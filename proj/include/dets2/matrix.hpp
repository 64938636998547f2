#pragma once

#include <Eigen/Core>

#include "dets2/field.hpp"

namespace dets2 {

template <class S>
using MatrixX = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

template <class S>
using VectorX = Eigen::Matrix<S, Eigen::Dynamic, 1>;

inline Rational zero_like(const MatrixX<Rational>&) { return Rational(0); }
inline Rational one_like(const MatrixX<Rational>&) { return Rational(1); }

// For prime-field matrices the modulus is recovered from any attached entry.
inline Fp zero_like(const MatrixX<Fp>& m) {
    for (Eigen::Index c = 0; c < m.cols(); ++c)
        for (Eigen::Index r = 0; r < m.rows(); ++r)
            if (m(r, c).modulus() != 0) return Fp(0, m(r, c).modulus());
    return Fp(0);
}
inline Fp one_like(const MatrixX<Fp>& m) {
    Fp z = zero_like(m);
    return z.modulus() != 0 ? Fp(1, z.modulus()) : Fp(1);
}

template <class S>
bool is_zero_matrix(const MatrixX<S>& m) {
    for (Eigen::Index c = 0; c < m.cols(); ++c)
        for (Eigen::Index r = 0; r < m.rows(); ++r)
            if (!is_zero(m(r, c))) return false;
    return true;
}

template <class S>
bool is_zero_vector(const VectorX<S>& v) {
    for (Eigen::Index r = 0; r < v.size(); ++r)
        if (!is_zero(v(r))) return false;
    return true;
}

// plain mat * vec, written out so no scalar literals are manufactured
template <class S>
VectorX<S> apply(const MatrixX<S>& m, const VectorX<S>& x, const S& zero) {
    VectorX<S> out(m.rows());
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        S acc = zero;
        for (Eigen::Index c = 0; c < m.cols(); ++c) acc += m(r, c) * x(c);
        out(r) = acc;
    }
    return out;
}

} // namespace dets2
