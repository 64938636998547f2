#pragma once

#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "dets2/system.hpp"

namespace dets2 {

namespace detail {

// Fraction-free (Bareiss) elimination on an integer matrix, row-major.
// All divisions are exact. Destroys the buffer.
inline mpz_class bareiss_det(std::vector<mpz_class>& a, int n) {
    if (n == 0) return 1;
    int sign = 1;
    mpz_class prev(1);
    for (int k = 0; k + 1 < n; ++k) {
        int piv = -1;
        for (int r = k; r < n; ++r) {
            if (a[static_cast<std::size_t>(r) * n + k] != 0) {
                piv = r;
                break;
            }
        }
        if (piv < 0) return 0;
        if (piv != k) {
            for (int c = k; c < n; ++c)
                std::swap(a[static_cast<std::size_t>(k) * n + c], a[static_cast<std::size_t>(piv) * n + c]);
            sign = -sign;
        }
        const std::size_t kk = static_cast<std::size_t>(k) * n;
        mpz_class t;
        for (int i = k + 1; i < n; ++i) {
            const std::size_t ii = static_cast<std::size_t>(i) * n;
            for (int j = k + 1; j < n; ++j) {
                t = a[ii + j] * a[kk + k] - a[ii + k] * a[kk + j];
                mpz_divexact(a[ii + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a[kk + k];
    }
    mpz_class det = a[static_cast<std::size_t>(n - 1) * n + (n - 1)];
    return sign < 0 ? mpz_class(-det) : det;
}

// Ordinary elimination over a field, first nonzero pivot in column order.
template <class S>
S det_field_elimination(MatrixX<S> m) {
    const Eigen::Index n = m.rows();
    S det = one_like(m);
    if (n == 0) return det;
    bool negate = false;
    for (Eigen::Index k = 0; k < n; ++k) {
        Eigen::Index piv = -1;
        for (Eigen::Index r = k; r < n; ++r) {
            if (!is_zero(m(r, k))) {
                piv = r;
                break;
            }
        }
        if (piv < 0) return zero_like(m);
        if (piv != k) {
            m.row(k).swap(m.row(piv));
            negate = !negate;
        }
        det *= m(k, k);
        const S inv = m(k, k).inverse();
        for (Eigen::Index r = k + 1; r < n; ++r) {
            if (is_zero(m(r, k))) continue;
            const S f = m(r, k) * inv;
            for (Eigen::Index c = k; c < n; ++c) m(r, c) -= f * m(k, c);
        }
    }
    return negate ? -det : det;
}

} // namespace detail

// Exact determinant. Rational matrices are routed through an integer matrix
// (row denominators cleared, the cleared factor divided back at the end) and
// fraction-free elimination; prime-field matrices use plain elimination.
inline Rational det_exact(const MatrixX<Rational>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det_exact: matrix is not square");
    const int n = static_cast<int>(m.rows());
    std::vector<mpz_class> a(static_cast<std::size_t>(n) * n);
    mpz_class denom(1);
    for (int i = 0; i < n; ++i) {
        mpz_class l(1);
        for (int j = 0; j < n; ++j) l = lcm(l, m(i, j).den());
        for (int j = 0; j < n; ++j)
            a[static_cast<std::size_t>(i) * n + j] = m(i, j).num() * (l / m(i, j).den());
        denom *= l;
    }
    return Rational(detail::bareiss_det(a, n), denom);
}

inline Fp det_exact(const MatrixX<Fp>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det_exact: matrix is not square");
    return detail::det_field_elimination(m);
}

template <class S>
S det_exact(const SystemMatrix<S>& sm) {
    return det_exact(sm.m);
}

// Reduced row echelon form in place; returns the pivot columns.
template <class S>
std::vector<Eigen::Index> rref_in_place(MatrixX<S>& m) {
    std::vector<Eigen::Index> pivots;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
        Eigen::Index piv = -1;
        for (Eigen::Index r = row; r < m.rows(); ++r) {
            if (!is_zero(m(r, col))) {
                piv = r;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != row) m.row(row).swap(m.row(piv));
        const S inv = m(row, col).inverse();
        for (Eigen::Index c = col; c < m.cols(); ++c) m(row, c) *= inv;
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            if (r == row || is_zero(m(r, col))) continue;
            const S f = m(r, col);
            for (Eigen::Index c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

// Echelon-normalized null-space basis: one vector per free column, in
// increasing column order, with coefficient 1 at its free column. Empty
// exactly when the kernel is trivial. Rectangular input is fine.
template <class S>
std::vector<VectorX<S>> kernel_basis(const MatrixX<S>& m0) {
    MatrixX<S> m = m0;
    const S zero = zero_like(m);
    const S one = one_like(m);
    const auto pivots = rref_in_place(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (auto c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<VectorX<S>> basis;
    for (Eigen::Index f = 0; f < m.cols(); ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        VectorX<S> x(m.cols());
        x.fill(zero);
        x(f) = one;
        for (std::size_t k = 0; k < pivots.size(); ++k)
            x(pivots[k]) = -m(static_cast<Eigen::Index>(k), f);
        basis.push_back(std::move(x));
    }
    return basis;
}

// Nontrivial solution of the edge-indexed linear system; also the
// coefficients certifying geometric degeneracy.
template <class S>
struct KernelWitness {
    int d = 0;
    VectorX<S> coeffs; // colex edge order

    S coeff(Edge e) const { return coeffs(column_index(e, d) - 1); }
    bool nontrivial() const { return !is_zero_vector(coeffs); }
};

template <class S>
std::vector<KernelWitness<S>> kernel_basis(const SystemMatrix<S>& sm) {
    std::vector<KernelWitness<S>> out;
    for (auto& v : kernel_basis(sm.m)) out.push_back(KernelWitness<S>{sm.d, std::move(v)});
    return out;
}

// Sign that makes the map positive on the canonical tensor. Determined once
// per d over the rationals and cached; characteristic-p evaluations reuse it.
inline int canonical_orientation(int d) {
    static std::mutex mu;
    static std::map<int, int> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    Rational raw = det_exact(reduced_matrix(canonical_tensor(d, RationalField{}), 1));
    if (raw.is_zero())
        throw InvariantViolation("canonical tensor has singular system at d=" + std::to_string(d));
    int sign = raw.sign();
    cache.emplace(d, sign);
    return sign;
}

// The det^S2 invariant: determinant of the reduced system with equation 1
// removed, colex columns, increasing row blocks, normalized so the canonical
// tensor evaluates to a positive value. Multilinear in the slots; vanishes
// whenever some vertex triple carries three equal vectors.
template <class S>
S det_s2(const EdgeTensor<S>& t) {
    S raw = det_exact(reduced_matrix(t, 1));
    return canonical_orientation(t.d()) < 0 ? -raw : raw;
}

template <class S>
struct InvarianceReport {
    std::vector<S> values; // det of the reduced system, per omitted equation
    bool all_equal = false;
    S common;
};

// det of the reduced system must not depend on which equation is omitted.
template <class S>
InvarianceReport<S> invariance_check(const EdgeTensor<S>& t) {
    InvarianceReport<S> rep;
    for (int k = 1; k <= vertex_count(t.d()); ++k)
        rep.values.push_back(det_exact(reduced_matrix(t, k)));
    rep.common = rep.values.front();
    rep.all_equal = true;
    for (const S& v : rep.values)
        if (!(v == rep.common)) rep.all_equal = false;
    return rep;
}

template <class S>
struct MultilinearityReport {
    S combined; // det_s2 with slot e := a*u + b*v
    S at_u;
    S at_v;
    S expected; // a*at_u + b*at_v
    bool holds = false;
};

template <class S>
MultilinearityReport<S> multilinearity_check(const EdgeTensor<S>& t, Edge e, const VectorX<S>& u,
                                             const VectorX<S>& v, const S& a, const S& b) {
    if (u.size() != t.d() || v.size() != t.d())
        throw std::invalid_argument("multilinearity_check: vector length != d");
    MultilinearityReport<S> rep;
    VectorX<S> mix = u * a + v * b;
    rep.combined = det_s2(t.with_slot(e, mix));
    rep.at_u = det_s2(t.with_slot(e, u));
    rep.at_v = det_s2(t.with_slot(e, v));
    rep.expected = a * rep.at_u + b * rep.at_v;
    rep.holds = rep.combined == rep.expected;
    return rep;
}

} // namespace dets2
