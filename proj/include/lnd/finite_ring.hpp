#pragma once
// Finite-rank commutative unital rings given by basis and structure
// constants, together with their derivations and the Hochschild complex.
// Everything is exact over the chosen base ring.

#include <optional>
#include <string>
#include <vector>

#include "lnd/linalg.hpp"
#include "lnd/tensor.hpp"

namespace lnd {

template <class R>
struct FiniteRing {
    using Elem = typename R::Elem;

    R base;
    int rank = 0;
    std::vector<std::string> basis_names;
    Vec<R> unit;                        // coordinates of 1
    std::vector<std::vector<Vec<R>>> mult;  // mult[i][j] = coordinates of e_i * e_j

    // Bilinear product of coordinate vectors.
    Vec<R> mul(const Vec<R>& a, const Vec<R>& b) const {
        Vec<R> out = zero_vec(base, rank);
        for (int i = 0; i < rank; ++i) {
            if (base.is_zero(a[static_cast<size_t>(i)])) continue;
            for (int j = 0; j < rank; ++j) {
                if (base.is_zero(b[static_cast<size_t>(j)])) continue;
                const auto c = base.mul(a[static_cast<size_t>(i)], b[static_cast<size_t>(j)]);
                const auto& mij = mult[static_cast<size_t>(i)][static_cast<size_t>(j)];
                for (int k = 0; k < rank; ++k)
                    out[static_cast<size_t>(k)] =
                        base.add(out[static_cast<size_t>(k)],
                                 base.mul(c, mij[static_cast<size_t>(k)]));
            }
        }
        return out;
    }

    Vec<R> basis_vec(int i) const {
        Vec<R> v = zero_vec(base, rank);
        v[static_cast<size_t>(i)] = base.one();
        return v;
    }

    // Matrix of multiplication by the element with coordinates a.
    Matrix<R> mul_operator(const Vec<R>& a) const {
        Matrix<R> m(base, rank, rank);
        for (int j = 0; j < rank; ++j) m.set_col(j, mul(a, basis_vec(j)));
        return m;
    }

    bool operator==(const FiniteRing& o) const {
        return base == o.base && rank == o.rank && unit == o.unit && mult == o.mult;
    }
};

struct RingViolation {
    enum class Kind { Commutativity, Associativity, Unit } kind;
    int i = 0, j = 0, k = 0;
    std::string to_string() const {
        switch (kind) {
            case Kind::Commutativity:
                return "commutativity fails at (" + std::to_string(i) + "," + std::to_string(j) + ")";
            case Kind::Associativity:
                return "associativity fails at (" + std::to_string(i) + "," + std::to_string(j) +
                       "," + std::to_string(k) + ")";
            case Kind::Unit:
                return "unit law fails at " + std::to_string(i);
        }
        return "?";
    }
};

// Exhaustive check of commutativity, associativity and the unit law;
// reports the first violation in scan order.
template <class R>
std::optional<RingViolation> validate_ring(const FiniteRing<R>& a) {
    for (int i = 0; i < a.rank; ++i)
        for (int j = i + 1; j < a.rank; ++j)
            if (a.mult[static_cast<size_t>(i)][static_cast<size_t>(j)] !=
                a.mult[static_cast<size_t>(j)][static_cast<size_t>(i)])
                return RingViolation{RingViolation::Kind::Commutativity, i, j, 0};
    for (int i = 0; i < a.rank; ++i)
        for (int j = 0; j < a.rank; ++j)
            for (int k = 0; k < a.rank; ++k) {
                const auto left =
                    a.mul(a.mult[static_cast<size_t>(i)][static_cast<size_t>(j)], a.basis_vec(k));
                const auto right =
                    a.mul(a.basis_vec(i), a.mult[static_cast<size_t>(j)][static_cast<size_t>(k)]);
                if (left != right)
                    return RingViolation{RingViolation::Kind::Associativity, i, j, k};
            }
    for (int i = 0; i < a.rank; ++i)
        if (a.mul(a.unit, a.basis_vec(i)) != a.basis_vec(i))
            return RingViolation{RingViolation::Kind::Unit, i, 0, 0};
    return std::nullopt;
}

// ---------------------------------------------------------------- builders

// The base ring itself as a rank-1 ring.
template <class R>
FiniteRing<R> scalar_ring(const R& base) {
    FiniteRing<R> a;
    a.base = base;
    a.rank = 1;
    a.basis_names = {"1"};
    a.unit = {base.one()};
    a.mult = {{{base.one()}}};
    return a;
}

// k[x]/(x^(cap+1)) with basis 1, x, ..., x^cap.
template <class R>
FiniteRing<R> truncated_power_ring(const R& base, int cap) {
    FiniteRing<R> a;
    a.base = base;
    a.rank = cap + 1;
    for (int i = 0; i <= cap; ++i)
        a.basis_names.push_back(i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i)));
    a.unit = a.basis_vec(0);
    a.mult.assign(static_cast<size_t>(a.rank), std::vector<Vec<R>>(static_cast<size_t>(a.rank)));
    for (int i = 0; i <= cap; ++i)
        for (int j = 0; j <= cap; ++j) {
            Vec<R> v = zero_vec(base, a.rank);
            if (i + j <= cap) v[static_cast<size_t>(i + j)] = base.one();
            a.mult[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
        }
    return a;
}

// k[x]/(x^2 - c1 x - c0): rank 2, covers dual numbers, split and quadratic
// field extensions.
template <class R>
FiniteRing<R> quadratic_ring(const R& base, long c0, long c1) {
    FiniteRing<R> a;
    a.base = base;
    a.rank = 2;
    a.basis_names = {"1", "x"};
    a.unit = a.basis_vec(0);
    a.mult.assign(2, std::vector<Vec<R>>(2));
    a.mult[0][0] = a.basis_vec(0);
    a.mult[0][1] = a.basis_vec(1);
    a.mult[1][0] = a.basis_vec(1);
    Vec<R> xx = zero_vec(base, 2);
    xx[0] = base.from_long(c0);
    xx[1] = base.from_long(c1);
    a.mult[1][1] = xx;
    return a;
}

template <class R>
FiniteRing<R> dual_numbers(const R& base) {
    return quadratic_ring(base, 0, 0);
}

// k[x,y]/(x^2, xy, y^2): rank 3 with a square-zero part.
template <class R>
FiniteRing<R> square_zero_two_vars(const R& base) {
    FiniteRing<R> a;
    a.base = base;
    a.rank = 3;
    a.basis_names = {"1", "x", "y"};
    a.unit = a.basis_vec(0);
    a.mult.assign(3, std::vector<Vec<R>>(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == 0)
                a.mult[static_cast<size_t>(i)][static_cast<size_t>(j)] = a.basis_vec(j);
            else if (j == 0)
                a.mult[static_cast<size_t>(i)][static_cast<size_t>(j)] = a.basis_vec(i);
            else
                a.mult[static_cast<size_t>(i)][static_cast<size_t>(j)] = zero_vec(base, 3);
        }
    return a;
}

// k x k with componentwise product.
template <class R>
FiniteRing<R> product_of_two_copies(const R& base) {
    FiniteRing<R> a;
    a.base = base;
    a.rank = 2;
    a.basis_names = {"e1", "e2"};
    a.unit = {base.one(), base.one()};
    a.mult.assign(2, std::vector<Vec<R>>(2));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            Vec<R> v = zero_vec(base, 2);
            if (i == j) v[static_cast<size_t>(i)] = base.one();
            a.mult[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
        }
    return a;
}

// ------------------------------------------------------------ derivations

// Leibniz constraint rows for an unknown additive map, one block per basis
// pair: f(e_i e_j) - e_i f(e_j) - f(e_i) e_j = 0.  Unknown layout: column
// j of the matrix occupies unknowns [j*rank, (j+1)*rank).
template <class R>
Matrix<R> leibniz_system(const FiniteRing<R>& a) {
    const R& k = a.base;
    const int r = a.rank;
    Matrix<R> sys(k, r * r * r, r * r);
    int row0 = 0;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            // f(e_i e_j): sum_l mult[i][j][l] * f(e_l)
            const auto& mij = a.mult[static_cast<size_t>(i)][static_cast<size_t>(j)];
            for (int l = 0; l < r; ++l)
                for (int c = 0; c < r; ++c)
                    sys.at(row0 + c, l * r + c) =
                        k.add(sys.at(row0 + c, l * r + c), mij[static_cast<size_t>(l)]);
            // -e_i f(e_j): f(e_j) has coordinates (unknown column j); left
            // multiplication by e_i mixes them through mult[i][.].
            for (int l = 0; l < r; ++l) {
                const auto& mil = a.mult[static_cast<size_t>(i)][static_cast<size_t>(l)];
                for (int c = 0; c < r; ++c)
                    sys.at(row0 + c, j * r + l) =
                        k.sub(sys.at(row0 + c, j * r + l), mil[static_cast<size_t>(c)]);
            }
            // -f(e_i) e_j
            for (int l = 0; l < r; ++l) {
                const auto& mlj = a.mult[static_cast<size_t>(l)][static_cast<size_t>(j)];
                for (int c = 0; c < r; ++c)
                    sys.at(row0 + c, i * r + l) =
                        k.sub(sys.at(row0 + c, i * r + l), mlj[static_cast<size_t>(c)]);
            }
            row0 += r;
        }
    return sys;
}

template <class R>
Matrix<R> matrix_from_flat(const R& ring, int rank, const Vec<R>& flat) {
    Matrix<R> m(ring, rank, rank);
    for (int j = 0; j < rank; ++j)
        for (int i = 0; i < rank; ++i) m.at(i, j) = flat[static_cast<size_t>(j * rank + i)];
    return m;
}

template <class R>
Vec<R> flatten_matrix(const Matrix<R>& m) {
    Vec<R> flat;
    flat.reserve(static_cast<size_t>(m.rows()) * static_cast<size_t>(m.cols()));
    for (int j = 0; j < m.cols(); ++j)
        for (int i = 0; i < m.rows(); ++i) flat.push_back(m.at(i, j));
    return flat;
}

// Generating set of Der(A): basis of the Leibniz kernel (a saturated lattice
// over Z, a subspace over fields).
template <class R>
std::vector<Matrix<R>> derivation_basis(const FiniteRing<R>& a) {
    const Matrix<R> k = kernel_basis(leibniz_system(a));
    std::vector<Matrix<R>> out;
    for (int j = 0; j < k.cols(); ++j) out.push_back(matrix_from_flat(a.base, a.rank, k.col(j)));
    return out;
}

template <class R>
bool is_derivation(const FiniteRing<R>& a, const Matrix<R>& f) {
    for (int i = 0; i < a.rank; ++i)
        for (int j = 0; j < a.rank; ++j) {
            const auto lhs = f.mul_vec(a.mult[static_cast<size_t>(i)][static_cast<size_t>(j)]);
            const auto rhs = vec_add(a.base, a.mul(a.basis_vec(i), f.col(j)),
                                     a.mul(f.col(i), a.basis_vec(j)));
            if (lhs != rhs) return false;
        }
    return true;
}

// -------------------------------------------------------------- Hochschild

// Alternating-sum differential C^(n) -> C^(n+1) applied to one cochain; the
// arity-0 case treats the tensor as an element of A and lands in the
// (commutative, hence zero) first differential.
template <class R>
Tensor<R> hochschild_differential(const FiniteRing<R>& a, const Tensor<R>& f) {
    const R& k = a.base;
    const int r = a.rank;
    const int n = f.arity + 1;
    Tensor<R> out(k, r, n);
    std::vector<int> idx(static_cast<size_t>(n), 0);
    for (;;) {
        Vec<R> acc = zero_vec(k, r);
        // a_1 * f(a_2 (x) ... (x) a_n)
        {
            std::vector<int> rest(idx.begin() + 1, idx.end());
            acc = vec_add(k, acc, a.mul(a.basis_vec(idx[0]), f.value_at(rest)));
        }
        // alternating contractions of adjacent slots
        for (int i = 1; i <= n - 1; ++i) {
            std::vector<Vec<R>> args;
            args.reserve(static_cast<size_t>(n - 1));
            for (int t = 0; t < n; ++t) {
                if (t == i - 1) {
                    args.push_back(a.mul(a.basis_vec(idx[static_cast<size_t>(t)]),
                                         a.basis_vec(idx[static_cast<size_t>(t + 1)])));
                    ++t;  // skip the merged slot
                } else {
                    args.push_back(a.basis_vec(idx[static_cast<size_t>(t)]));
                }
            }
            const auto v = f.eval(args);
            acc = (i % 2) ? vec_sub(k, acc, v) : vec_add(k, acc, v);
        }
        // (+-) f(a_1 (x) ... (x) a_{n-1}) * a_n
        {
            std::vector<int> head(idx.begin(), idx.end() - 1);
            const auto v = a.mul(f.value_at(head), a.basis_vec(idx[static_cast<size_t>(n - 1)]));
            acc = (n % 2) ? vec_sub(k, acc, v) : vec_add(k, acc, v);
        }
        out.set_value(idx, acc);
        int t = n - 1;
        while (t >= 0 && idx[static_cast<size_t>(t)] == r - 1) idx[static_cast<size_t>(t--)] = 0;
        if (t < 0) break;
        ++idx[static_cast<size_t>(t)];
    }
    return out;
}

// Matrix of the differential C^n -> C^(n+1) in the flat column-major
// coordinates of the tensors.
template <class R>
Matrix<R> hochschild_matrix(const FiniteRing<R>& a, int n) {
    const R& k = a.base;
    const int r = a.rank;
    const long dim_in = static_cast<long>(r) * pow_long(r, n);
    const long dim_out = static_cast<long>(r) * pow_long(r, n + 1);
    Matrix<R> m(k, static_cast<int>(dim_out), static_cast<int>(dim_in));
    for (long c = 0; c < dim_in; ++c) {
        Tensor<R> unit(k, r, n);
        unit.vals.at(static_cast<int>(c % r), static_cast<int>(c / r)) = k.one();
        const Tensor<R> img = hochschild_differential(a, unit);
        for (int col = 0; col < img.vals.cols(); ++col)
            for (int row = 0; row < r; ++row)
                m.at(col * r + row, static_cast<int>(c)) = img.vals.at(row, col);
    }
    return m;
}

template <class R>
Vec<R> flatten_tensor(const Tensor<R>& t) {
    return flatten_matrix(t.vals);
}

// ker(b_n) / im(b_{n-1}); n = 0 returns A itself (the commutative case).
template <class R>
CohomologyResult<R> hochschild_cohomology(const FiniteRing<R>& a, int n) {
    if (n == 0) {
        CohomologyResult<R> res;
        res.free_rank = a.rank;  // b_0 vanishes on a commutative ring
        return res;
    }
    const Matrix<R> d_out = hochschild_matrix(a, n);
    const Matrix<R> d_in = hochschild_matrix(a, n - 1);
    return subquotient(d_out, d_in);
}

}  // namespace lnd
