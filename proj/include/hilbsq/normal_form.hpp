#pragma once

// Integer normal forms over an exact Euclidean scalar.
//
// Everything here is templated on the scalar so the same code runs on the
// arbitrary-precision Integer used by the library and on machine integers in
// tests. Machine integers are only safe for small inputs: no overflow checks.

#include "hilbsq/integer.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace hilbsq {

namespace detail {

template <class S>
S abs_value(const S& x) {
    return x < 0 ? S(-x) : x;
}

// Returns (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0.
template <class S>
std::tuple<S, S, S> extended_gcd(const S& a, const S& b) {
    S old_r = a, r = b;
    S old_s = 1, s = 0;
    S old_t = 0, t = 1;
    while (r != 0) {
        S q = old_r / r;
        S tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) return {S(-old_r), S(-old_s), S(-old_t)};
    return {old_r, old_s, old_t};
}

template <class S>
S floor_quotient(const S& a, const S& b) {
    S q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
    return q;
}

// Quotient rounded to the nearest integer, so |a - q*b| <= |b|/2.
template <class S>
S nearest_quotient(const S& a, const S& b) {
    const S two_b = 2 * b;
    return floor_quotient(S(2 * a + (b < 0 ? S(-b) : b)), S(two_b < 0 ? S(-two_b) : two_b)) * (b < 0 ? S(-1) : S(1));
}

// rows (p, q) <- [[s, t], [u, v]] * rows (p, q)
template <class S>
void combine_rows(Matrix<S>& m, Eigen::Index p, Eigen::Index q, const S& s, const S& t,
                  const S& u, const S& v) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        S x = m(p, c);
        S y = m(q, c);
        m(p, c) = s * x + t * y;
        m(q, c) = u * x + v * y;
    }
}

// cols (p, q) <- cols (p, q) * [[s, u], [t, v]]
template <class S>
void combine_cols(Matrix<S>& m, Eigen::Index p, Eigen::Index q, const S& s, const S& t,
                  const S& u, const S& v) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        S x = m(r, p);
        S y = m(r, q);
        m(r, p) = s * x + t * y;
        m(r, q) = u * x + v * y;
    }
}

}  // namespace detail

/// Exact determinant by fraction-free (Bareiss) elimination.
template <class S>
S determinant(Matrix<S> m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
    const Eigen::Index n = m.rows();
    if (n == 0) return S(1);
    S sign = 1;
    S prev = 1;
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            Eigen::Index swap = k + 1;
            while (swap < n && m(swap, k) == 0) ++swap;
            if (swap == n) return S(0);
            m.row(k).swap(m.row(swap));
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j) {
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            }
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

template <class S>
struct HermiteForm {
    Matrix<S> h;        ///< row echelon form, positive pivots, reduced above pivots
    Matrix<S> u;        ///< unimodular, u * a == h
    Eigen::Index rank;  ///< number of nonzero rows of h
};

/// Row-style Hermite normal form: u * a = h with h in reduced echelon form.
///
/// Pivots are positive and entries above a pivot lie in [0, pivot). The zero
/// rows of h sit at the bottom, so the matching rows of u span the left kernel
/// of a.
template <class S>
HermiteForm<S> hermite_normal_form(const Matrix<S>& a) {
    const Eigen::Index rows = a.rows();
    const Eigen::Index cols = a.cols();
    Matrix<S> h = a;
    Matrix<S> u = Matrix<S>::Identity(rows, rows);
    Eigen::Index pivot_row = 0;
    for (Eigen::Index col = 0; col < cols && pivot_row < rows; ++col) {
        Eigen::Index first = pivot_row;
        while (first < rows && h(first, col) == 0) ++first;
        if (first == rows) continue;
        if (first != pivot_row) {
            h.row(first).swap(h.row(pivot_row));
            u.row(first).swap(u.row(pivot_row));
        }
        for (Eigen::Index i = pivot_row + 1; i < rows; ++i) {
            if (h(i, col) == 0) continue;
            const S x = h(pivot_row, col);
            const S y = h(i, col);
            auto [g, s, t] = detail::extended_gcd(x, y);
            const S xg = x / g;
            const S yg = y / g;
            detail::combine_rows(h, pivot_row, i, s, t, S(-yg), xg);
            detail::combine_rows(u, pivot_row, i, s, t, S(-yg), xg);
        }
        if (h(pivot_row, col) < 0) {
            h.row(pivot_row) *= S(-1);
            u.row(pivot_row) *= S(-1);
        }
        const S pivot = h(pivot_row, col);
        for (Eigen::Index i = 0; i < pivot_row; ++i) {
            const S q = detail::floor_quotient(h(i, col), pivot);
            if (q == 0) continue;
            h.row(i) -= q * h.row(pivot_row);
            u.row(i) -= q * u.row(pivot_row);
        }
        ++pivot_row;
    }
    return {std::move(h), std::move(u), pivot_row};
}

template <class S>
struct SmithForm {
    Matrix<S> d;      ///< diagonal, d_1 | d_2 | ..., nonnegative
    Matrix<S> p;      ///< unimodular row transform
    Matrix<S> q;      ///< unimodular column transform
    Matrix<S> p_inv;  ///< inverse of p
    Eigen::Index rank;

    /// Nonzero diagonal entries in order.
    std::vector<S> invariant_factors() const {
        std::vector<S> out;
        for (Eigen::Index i = 0; i < rank; ++i) out.push_back(d(i, i));
        return out;
    }
};

/// Smith normal form: p * a * q = d.
template <class S>
SmithForm<S> smith_normal_form(const Matrix<S>& a) {
    using detail::abs_value;
    const Eigen::Index rows = a.rows();
    const Eigen::Index cols = a.cols();
    Matrix<S> d = a;
    Matrix<S> p = Matrix<S>::Identity(rows, rows);
    Matrix<S> p_inv = Matrix<S>::Identity(rows, rows);
    Matrix<S> q = Matrix<S>::Identity(cols, cols);

    auto row_transform = [&](Eigen::Index r0, Eigen::Index r1, const S& s, const S& t,
                             const S& u, const S& v) {
        // [[s,t],[u,v]] has determinant 1; its inverse is [[v,-t],[-u,s]].
        detail::combine_rows(d, r0, r1, s, t, u, v);
        detail::combine_rows(p, r0, r1, s, t, u, v);
        detail::combine_cols(p_inv, r0, r1, v, S(-u), S(-t), s);
    };
    auto col_transform = [&](Eigen::Index c0, Eigen::Index c1, const S& s, const S& t,
                             const S& u, const S& v) {
        detail::combine_cols(d, c0, c1, s, t, u, v);
        detail::combine_cols(q, c0, c1, s, t, u, v);
    };

    const Eigen::Index steps = std::min(rows, cols);
    Eigen::Index rank = 0;
    for (Eigen::Index k = 0; k < steps; ++k) {
        bool empty = false;
        for (;;) {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            Eigen::Index pr = -1, pc = -1;
            for (Eigen::Index i = k; i < rows; ++i) {
                for (Eigen::Index j = k; j < cols; ++j) {
                    if (d(i, j) == 0) continue;
                    if (pr < 0 || abs_value(d(i, j)) < abs_value(d(pr, pc))) {
                        pr = i;
                        pc = j;
                    }
                }
            }
            if (pr < 0) {
                empty = true;
                break;
            }
            if (pr != k) {
                d.row(pr).swap(d.row(k));
                p.row(pr).swap(p.row(k));
                p_inv.col(pr).swap(p_inv.col(k));
            }
            if (pc != k) {
                d.col(pc).swap(d.col(k));
                q.col(pc).swap(q.col(k));
            }

            // Euclidean step: leave only remainders in row and column k.
            const S pivot = d(k, k);
            bool remainder = false;
            for (Eigen::Index i = k + 1; i < rows; ++i) {
                if (d(i, k) == 0) continue;
                const S quot = detail::nearest_quotient(d(i, k), pivot);
                if (quot != 0) row_transform(k, i, S(1), S(0), S(-quot), S(1));
                remainder = remainder || d(i, k) != 0;
            }
            for (Eigen::Index j = k + 1; j < cols; ++j) {
                if (d(k, j) == 0) continue;
                const S quot = detail::nearest_quotient(d(k, j), pivot);
                if (quot != 0) col_transform(k, j, S(1), S(0), S(-quot), S(1));
                remainder = remainder || d(k, j) != 0;
            }
            if (remainder) continue;

            // Divisibility chain: fold an offending row into the pivot row.
            Eigen::Index bad_row = -1;
            for (Eigen::Index i = k + 1; i < rows && bad_row < 0; ++i) {
                for (Eigen::Index j = k + 1; j < cols; ++j) {
                    if (d(i, j) % pivot != 0) {
                        bad_row = i;
                        break;
                    }
                }
            }
            if (bad_row < 0) break;
            row_transform(k, bad_row, S(1), S(1), S(0), S(1));
        }
        if (empty) break;
        if (d(k, k) < 0) {
            d.row(k) *= S(-1);
            p.row(k) *= S(-1);
            p_inv.col(k) *= S(-1);
        }
        rank = k + 1;
    }
    return {std::move(d), std::move(p), std::move(q), std::move(p_inv), rank};
}

template <class S>
Eigen::Index matrix_rank(const Matrix<S>& a) {
    return hermite_normal_form(a).rank;
}

/// Pairwise size reduction of the columns under the standard dot product.
/// Keeps the span; shortens coordinate vectors of bases found by elimination.
template <class S>
Matrix<S> reduce_basis(Matrix<S> basis) {
    const Eigen::Index n = basis.cols();
    bool changed = true;
    while (changed) {
        changed = false;
        for (Eigen::Index j = 0; j < n; ++j) {
            const S jj = basis.col(j).squaredNorm();
            if (jj == 0) continue;
            for (Eigen::Index i = 0; i < n; ++i) {
                if (i == j) continue;
                const S ij = basis.col(i).dot(basis.col(j));
                if (2 * detail::abs_value(ij) <= jj) continue;
                const S quot = detail::nearest_quotient(ij, jj);
                basis.col(i) -= quot * basis.col(j);
                changed = true;
            }
        }
    }
    return basis;
}

/// Basis (as columns) of the integer kernel {x in Z^n : a x = 0}.
///
/// Computed from the row HNF of a^T; the result is always primitive.
template <class S>
Matrix<S> integer_kernel(const Matrix<S>& a) {
    const Matrix<S> at = a.transpose();
    const HermiteForm<S> hf = hermite_normal_form(at);
    const Eigen::Index n = a.cols();
    Matrix<S> basis(n, n - hf.rank);
    for (Eigen::Index i = hf.rank; i < n; ++i) basis.col(i - hf.rank) = hf.u.row(i).transpose();
    return reduce_basis(std::move(basis));
}

/// Primitive closure (Q-span intersected with Z^n) of the column span of b.
template <class S>
Matrix<S> saturate(const Matrix<S>& basis) {
    const SmithForm<S> sf = smith_normal_form(basis);
    return sf.p_inv.leftCols(sf.rank);
}

/// True when the columns of basis span a primitive sublattice.
template <class S>
bool is_primitive_basis(const Matrix<S>& basis) {
    const SmithForm<S> sf = smith_normal_form(basis);
    for (Eigen::Index i = 0; i < sf.rank; ++i) {
        if (sf.d(i, i) != 1) return false;
    }
    return true;
}

/// Canonical row-HNF (nonzero rows only) of the Z-span of the columns.
template <class S>
Matrix<S> span_hnf(const Matrix<S>& basis) {
    const HermiteForm<S> hf = hermite_normal_form(Matrix<S>(basis.transpose()));
    return hf.h.topRows(hf.rank);
}

/// True when two column bases span the same Z-module.
template <class S>
bool same_span(const Matrix<S>& a, const Matrix<S>& b) {
    if (a.rows() != b.rows()) return false;
    const Matrix<S> ha = span_hnf(a);
    const Matrix<S> hb = span_hnf(b);
    return ha.rows() == hb.rows() && ha == hb;
}

}  // namespace hilbsq
