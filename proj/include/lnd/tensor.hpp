#pragma once
// n-ary additive maps A^(tensor n) -> A on a rank-r ring, stored as an
// r x r^n matrix whose column at multi-index (i_1, ..., i_n) is the value on
// e_{i_1} (x) ... (x) e_{i_n}.  Multi-indices are ordered with i_1 major.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "lnd/matrix.hpp"

namespace lnd {

inline long pow_long(long base, int exp) {
    long out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

template <class R>
struct Tensor {
    int arity = 0;
    int rank = 0;
    Matrix<R> vals;  // rank x rank^arity

    Tensor() = default;
    Tensor(R ring, int rank_, int arity_)
        : arity(arity_), rank(rank_),
          vals(ring, rank_, static_cast<int>(pow_long(rank_, arity_))) {}

    static long col_index(int rank, const std::vector<int>& idx) {
        long c = 0;
        for (int i : idx) c = c * rank + i;
        return c;
    }

    Vec<R> value_at(const std::vector<int>& idx) const {
        return vals.col(static_cast<int>(col_index(rank, idx)));
    }
    void set_value(const std::vector<int>& idx, const Vec<R>& v) {
        vals.set_col(static_cast<int>(col_index(rank, idx)), v);
    }

    // Multilinear evaluation on arbitrary coordinate vectors.
    Vec<R> eval(const std::vector<Vec<R>>& args) const {
        if (static_cast<int>(args.size()) != arity)
            throw std::invalid_argument("tensor arity mismatch");
        const R& ring = vals.ring();
        Vec<R> out = zero_vec(ring, rank);
        std::vector<int> idx(static_cast<size_t>(arity), 0);
        for (;;) {
            auto coeff = ring.one();
            bool zero = false;
            for (int k = 0; k < arity; ++k) {
                const auto& c = args[static_cast<size_t>(k)][static_cast<size_t>(idx[static_cast<size_t>(k)])];
                if (ring.is_zero(c)) {
                    zero = true;
                    break;
                }
                coeff = ring.mul(coeff, c);
            }
            if (!zero) {
                long col = col_index(rank, idx);
                for (int i = 0; i < rank; ++i)
                    out[static_cast<size_t>(i)] =
                        ring.add(out[static_cast<size_t>(i)],
                                 ring.mul(coeff, vals.at(i, static_cast<int>(col))));
            }
            int k = arity - 1;
            while (k >= 0 && idx[static_cast<size_t>(k)] == rank - 1) idx[static_cast<size_t>(k--)] = 0;
            if (k < 0) break;
            ++idx[static_cast<size_t>(k)];
        }
        return out;
    }

    Tensor add(const Tensor& o) const {
        Tensor out(*this);
        out.vals = vals.add(o.vals);
        return out;
    }
    Tensor sub(const Tensor& o) const {
        Tensor out(*this);
        out.vals = vals.sub(o.vals);
        return out;
    }
    Tensor neg() const {
        Tensor out(*this);
        out.vals = vals.neg();
        return out;
    }
    bool is_zero() const { return vals.is_zero(); }
    bool operator==(const Tensor& o) const {
        return arity == o.arity && rank == o.rank && vals == o.vals;
    }
};

// An additive self-map viewed as an arity-1 tensor.
template <class R>
Tensor<R> tensor_from_matrix(const Matrix<R>& m) {
    Tensor<R> t(m.ring(), m.rows(), 1);
    t.vals = m;
    return t;
}

}  // namespace lnd
