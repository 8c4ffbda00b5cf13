#pragma once
// Exact linear algebra: Gaussian elimination over fields, Smith normal form
// over the integers, and the kernel/image subquotients both feed into.  The
// integer routines decide solvability integrally, never rationally.

#include <algorithm>
#include <optional>
#include <vector>

#include "lnd/matrix.hpp"

namespace lnd {

// ---------------------------------------------------------------- fields --

// In-place reduced row echelon form; returns pivot columns in order.
template <class R>
    requires(R::is_field)
std::vector<int> row_reduce(Matrix<R>& m) {
    const R ring = m.ring();
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int sel = -1;
        for (int i = row; i < m.rows(); ++i)
            if (!ring.is_zero(m.at(i, col))) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        if (sel != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(row, j));
        const auto s = ring.inv(m.at(row, col));
        for (int j = 0; j < m.cols(); ++j) m.at(row, j) = ring.mul(s, m.at(row, j));
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || ring.is_zero(m.at(i, col))) continue;
            const auto f = m.at(i, col);
            for (int j = 0; j < m.cols(); ++j)
                m.at(i, j) = ring.sub(m.at(i, j), ring.mul(f, m.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class R>
    requires(R::is_field)
int rank_field(Matrix<R> m) {
    return static_cast<int>(row_reduce(m).size());
}

// Columns form a basis of the null space.
template <class R>
    requires(R::is_field)
Matrix<R> kernel_basis_field(Matrix<R> m) {
    const R ring = m.ring();
    const int n = m.cols();
    const auto pivots = row_reduce(m);
    std::vector<bool> is_pivot(static_cast<size_t>(n), false);
    for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
    std::vector<int> free_cols;
    for (int j = 0; j < n; ++j)
        if (!is_pivot[static_cast<size_t>(j)]) free_cols.push_back(j);
    Matrix<R> out(ring, n, static_cast<int>(free_cols.size()));
    for (size_t k = 0; k < free_cols.size(); ++k) {
        const int f = free_cols[k];
        out.at(f, static_cast<int>(k)) = ring.one();
        for (size_t r = 0; r < pivots.size(); ++r)
            out.at(pivots[r], static_cast<int>(k)) = ring.neg(m.at(static_cast<int>(r), f));
    }
    return out;
}

// Canonical solution of m x = b with free variables set to zero.
template <class R>
    requires(R::is_field)
std::optional<Vec<R>> solve_field(const Matrix<R>& m, const Vec<R>& b) {
    const R ring = m.ring();
    Matrix<R> aug(ring, m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[static_cast<size_t>(i)];
    }
    const auto pivots = row_reduce(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    Vec<R> x = zero_vec(ring, m.cols());
    for (size_t r = 0; r < pivots.size(); ++r)
        x[static_cast<size_t>(pivots[r])] = aug.at(static_cast<int>(r), m.cols());
    return x;
}

// ------------------------------------------------------------- integers --

using IntMatrix = Matrix<ZRing>;
using IntVec = Vec<ZRing>;

// D = U * M * V with U, V unimodular and D diagonal, d1 | d2 | ... ; the
// inverses are tracked during reduction so callers never invert.
struct Smith {
    IntMatrix U, D, V, Uinv, Vinv;
    std::vector<Int> diagonal() const;
    int rank() const;
};

Smith smith_normal_form(const IntMatrix& m);

// Basis of the kernel lattice (a saturated sublattice, hence free).
IntMatrix kernel_basis_int(const IntMatrix& m);

// Integral solve of m x = b; canonical solution from the normal form with
// all free coordinates zero.  nullopt means no integer solution exists.
std::optional<IntVec> solve_int(const IntMatrix& m, const IntVec& b);

// ------------------------------------------------------------- generic ---

template <class R>
Matrix<R> kernel_basis(const Matrix<R>& m) {
    if constexpr (R::is_field)
        return kernel_basis_field(m);
    else
        return kernel_basis_int(m);
}

template <class R>
std::optional<Vec<R>> solve_linear(const Matrix<R>& m, const Vec<R>& b) {
    if constexpr (R::is_field)
        return solve_field(m, b);
    else
        return solve_int(m, b);
}

// Dimension of the affine solution set of m x = b when solvable.
template <class R>
long solution_freedom(const Matrix<R>& m) {
    if constexpr (R::is_field)
        return m.cols() - rank_field(Matrix<R>(m));
    else
        return kernel_basis_int(m).cols();
}

// Exact (co)homology data: free rank plus elementary divisors (> 1, each
// dividing the next); torsion is empty over fields.
template <class R>
struct CohomologyResult {
    long free_rank = 0;
    std::vector<Int> torsion;
    std::vector<Vec<R>> representatives;  // cocycles spanning the reported group

    bool trivial() const { return free_rank == 0 && torsion.empty(); }
    std::string to_string() const {
        std::string s = "rank=" + std::to_string(free_rank) + " torsion=[";
        for (size_t i = 0; i < torsion.size(); ++i) {
            if (i) s += ',';
            s += to_decimal(torsion[i]);
        }
        return s + "]";
    }
};

// ker(d_out) / im(d_in) where the image is generated by the columns of
// d_in.  Requires d_out * d_in = 0 (checked).
template <class R>
CohomologyResult<R> subquotient(const Matrix<R>& d_out, const Matrix<R>& d_in) {
    if (!d_out.mul(d_in).is_zero())
        throw InternalError("subquotient: image does not land in the kernel");
    CohomologyResult<R> res;
    const R ring = d_out.ring();
    if constexpr (R::is_field) {
        const Matrix<R> k = kernel_basis_field(d_out);
        const int rank_im = rank_field(Matrix<R>(d_in));
        res.free_rank = k.cols() - rank_im;
        // Kernel columns that grow the rank of [image | kernel prefix]
        // represent a basis of the quotient.
        int have = rank_im;
        for (int t = 1; t <= k.cols() && have < rank_im + res.free_rank; ++t) {
            Matrix<R> probe(ring, d_out.cols(), d_in.cols() + t);
            for (int j = 0; j < d_in.cols(); ++j)
                for (int i = 0; i < d_out.cols(); ++i) probe.at(i, j) = d_in.at(i, j);
            for (int j = 0; j < t; ++j)
                for (int i = 0; i < d_out.cols(); ++i) probe.at(i, d_in.cols() + j) = k.at(i, j);
            const int rk = rank_field(std::move(probe));
            if (rk > have) {
                res.representatives.push_back(k.col(t - 1));
                have = rk;
            }
        }
        return res;
    } else {
        const Smith s1 = smith_normal_form(d_out);
        const auto diag = s1.diagonal();
        std::vector<int> free_idx;
        for (int j = 0; j < d_out.cols(); ++j) {
            const bool zero = j >= static_cast<int>(diag.size()) || sgn(diag[static_cast<size_t>(j)]) == 0;
            if (zero) free_idx.push_back(j);
        }
        const int k = static_cast<int>(free_idx.size());
        // Image columns in kernel-basis coordinates: rows of Vinv * c at the
        // free indices (the others must vanish since the column is a cocycle).
        IntMatrix w(ZRing{}, k, d_in.cols());
        for (int j = 0; j < d_in.cols(); ++j) {
            const IntVec y = s1.Vinv.mul_vec(d_in.col(j));
            for (int i = 0; i < d_out.cols(); ++i) {
                const bool is_free =
                    std::find(free_idx.begin(), free_idx.end(), i) != free_idx.end();
                if (!is_free && sgn(y[static_cast<size_t>(i)]) != 0)
                    throw InternalError("subquotient: image column outside the kernel lattice");
            }
            for (int i = 0; i < k; ++i) w.at(i, j) = y[static_cast<size_t>(free_idx[static_cast<size_t>(i)])];
        }
        const Smith s2 = smith_normal_form(w);
        const auto d2 = s2.diagonal();
        IntMatrix kmat(ZRing{}, d_out.cols(), k);
        for (int j = 0; j < k; ++j) kmat.set_col(j, s1.V.col(free_idx[static_cast<size_t>(j)]));
        const IntMatrix gens = kmat.mul(s2.Uinv);
        for (int i = 0; i < k; ++i) {
            const Int d = i < static_cast<int>(d2.size()) ? d2[static_cast<size_t>(i)] : Int(0);
            if (d == 1) continue;
            if (d > 1) res.torsion.push_back(d);
            else ++res.free_rank;  // d == 0
            res.representatives.push_back(gens.col(i));
        }
        return res;
    }
}

// Canonical coset representative of v modulo the column lattice/span of b.
template <class R>
Vec<R> reduce_mod_image(const Matrix<R>& b, const Vec<R>& v) {
    const R ring = b.ring();
    if constexpr (R::is_field) {
        Matrix<R> bt = b.transpose();
        const auto pivots = row_reduce(bt);
        Vec<R> out = v;
        for (size_t r = 0; r < pivots.size(); ++r) {
            const auto c = out[static_cast<size_t>(pivots[r])];
            if (ring.is_zero(c)) continue;
            for (int j = 0; j < bt.cols(); ++j)
                out[static_cast<size_t>(j)] =
                    ring.sub(out[static_cast<size_t>(j)], ring.mul(c, bt.at(static_cast<int>(r), j)));
        }
        return out;
    } else {
        const Smith s = smith_normal_form(b);
        IntVec w = s.U.mul_vec(v);
        const auto diag = s.diagonal();
        for (size_t i = 0; i < diag.size(); ++i) {
            if (sgn(diag[i]) == 0) continue;
            Int r = w[i] % diag[i];
            if (sgn(r) < 0) r += diag[i];
            w[i] = r;
        }
        return s.Uinv.mul_vec(w);
    }
}

}  // namespace lnd
