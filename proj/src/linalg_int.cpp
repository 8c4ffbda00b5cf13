#include "lnd/linalg.hpp"

namespace lnd {

std::vector<Int> Smith::diagonal() const {
    std::vector<Int> out;
    const int n = std::min(D.rows(), D.cols());
    out.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) out.push_back(D.at(i, i));
    return out;
}

int Smith::rank() const {
    int r = 0;
    for (const auto& d : diagonal())
        if (sgn(d) != 0) ++r;
    return r;
}

namespace {

// Elementary operations applied to D are mirrored on U/V and undone on
// Uinv/Vinv so D = U*M*V stays invariant.
struct Reducer {
    IntMatrix& D;
    IntMatrix& U;
    IntMatrix& Uinv;
    IntMatrix& V;
    IntMatrix& Vinv;

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int k = 0; k < D.cols(); ++k) std::swap(D.at(i, k), D.at(j, k));
        for (int k = 0; k < U.cols(); ++k) std::swap(U.at(i, k), U.at(j, k));
        for (int k = 0; k < Uinv.rows(); ++k) std::swap(Uinv.at(k, i), Uinv.at(k, j));
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int k = 0; k < D.rows(); ++k) std::swap(D.at(k, i), D.at(k, j));
        for (int k = 0; k < V.rows(); ++k) std::swap(V.at(k, i), V.at(k, j));
        for (int k = 0; k < Vinv.cols(); ++k) std::swap(Vinv.at(i, k), Vinv.at(j, k));
    }
    // row_i += c * row_j
    void add_row(int i, int j, const Int& c) {
        if (sgn(c) == 0) return;
        for (int k = 0; k < D.cols(); ++k) D.at(i, k) += c * D.at(j, k);
        for (int k = 0; k < U.cols(); ++k) U.at(i, k) += c * U.at(j, k);
        for (int k = 0; k < Uinv.rows(); ++k) Uinv.at(k, j) -= c * Uinv.at(k, i);
    }
    // col_j += c * col_i
    void add_col(int j, int i, const Int& c) {
        if (sgn(c) == 0) return;
        for (int k = 0; k < D.rows(); ++k) D.at(k, j) += c * D.at(k, i);
        for (int k = 0; k < V.rows(); ++k) V.at(k, j) += c * V.at(k, i);
        for (int k = 0; k < Vinv.cols(); ++k) Vinv.at(i, k) -= c * Vinv.at(j, k);
    }
    void negate_row(int i) {
        for (int k = 0; k < D.cols(); ++k) D.at(i, k) = -D.at(i, k);
        for (int k = 0; k < U.cols(); ++k) U.at(i, k) = -U.at(i, k);
        for (int k = 0; k < Uinv.rows(); ++k) Uinv.at(k, i) = -Uinv.at(k, i);
    }
};

}  // namespace

Smith smith_normal_form(const IntMatrix& m) {
    const ZRing z;
    const int rows = m.rows(), cols = m.cols();
    Smith s{IntMatrix::identity(z, rows), m, IntMatrix::identity(z, cols),
            IntMatrix::identity(z, rows), IntMatrix::identity(z, cols)};
    Reducer red{s.D, s.U, s.Uinv, s.V, s.Vinv};

    const int steps = std::min(rows, cols);
    for (int t = 0; t < steps; ++t) {
        for (;;) {
            // Smallest-magnitude nonzero entry of the trailing block as pivot.
            int pi = -1, pj = -1;
            Int best;
            for (int i = t; i < rows; ++i)
                for (int j = t; j < cols; ++j) {
                    const Int& x = s.D.at(i, j);
                    if (sgn(x) == 0) continue;
                    Int ax = abs(x);
                    if (pi < 0 || ax < best) {
                        best = ax;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) {
                t = steps;  // trailing block is zero
                break;
            }
            red.swap_rows(t, pi);
            red.swap_cols(t, pj);
            if (sgn(s.D.at(t, t)) < 0) red.negate_row(t);

            bool dirty = false;
            for (int i = t + 1; i < rows; ++i) {
                if (sgn(s.D.at(i, t)) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), s.D.at(i, t).get_mpz_t(), s.D.at(t, t).get_mpz_t());
                red.add_row(i, t, -q);
                if (sgn(s.D.at(i, t)) != 0) dirty = true;
            }
            for (int j = t + 1; j < cols; ++j) {
                if (sgn(s.D.at(t, j)) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), s.D.at(t, j).get_mpz_t(), s.D.at(t, t).get_mpz_t());
                red.add_col(j, t, -q);
                if (sgn(s.D.at(t, j)) != 0) dirty = true;
            }
            if (dirty) continue;  // remainders became new, smaller pivot candidates

            // The pivot must divide the entire trailing block for the
            // divisibility chain; drag a bad row up and retry otherwise.
            int bad = -1;
            for (int i = t + 1; i < rows && bad < 0; ++i)
                for (int j = t + 1; j < cols; ++j)
                    if (!mpz_divisible_p(s.D.at(i, j).get_mpz_t(), s.D.at(t, t).get_mpz_t())) {
                        bad = i;
                        break;
                    }
            if (bad >= 0) {
                red.add_row(t, bad, Int(1));
                continue;
            }
            break;
        }
        if (t >= steps) break;
    }
    return s;
}

IntMatrix kernel_basis_int(const IntMatrix& m) {
    const ZRing z;
    const Smith s = smith_normal_form(m);
    const auto diag = s.diagonal();
    std::vector<int> free_idx;
    for (int j = 0; j < m.cols(); ++j) {
        const bool zero = j >= static_cast<int>(diag.size()) || sgn(diag[static_cast<size_t>(j)]) == 0;
        if (zero) free_idx.push_back(j);
    }
    IntMatrix out(z, m.cols(), static_cast<int>(free_idx.size()));
    for (size_t k = 0; k < free_idx.size(); ++k)
        out.set_col(static_cast<int>(k), s.V.col(free_idx[k]));
    return out;
}

std::optional<IntVec> solve_int(const IntMatrix& m, const IntVec& b) {
    const ZRing z;
    const Smith s = smith_normal_form(m);
    const auto diag = s.diagonal();
    const IntVec c = s.U.mul_vec(b);
    IntVec y = zero_vec(z, m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        const bool has_pivot =
            i < static_cast<int>(diag.size()) && sgn(diag[static_cast<size_t>(i)]) != 0;
        if (has_pivot) {
            if (!mpz_divisible_p(c[static_cast<size_t>(i)].get_mpz_t(),
                                 diag[static_cast<size_t>(i)].get_mpz_t()))
                return std::nullopt;
            Int q;
            mpz_divexact(q.get_mpz_t(), c[static_cast<size_t>(i)].get_mpz_t(),
                         diag[static_cast<size_t>(i)].get_mpz_t());
            y[static_cast<size_t>(i)] = q;
        } else if (sgn(c[static_cast<size_t>(i)]) != 0) {
            return std::nullopt;
        }
    }
    return s.V.mul_vec(y);
}

}  // namespace lnd
