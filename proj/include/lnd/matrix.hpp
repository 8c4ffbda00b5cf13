#pragma once
// Dense matrices and coordinate vectors over a base ring context.  Additive
// self-maps of a finite ring are matrices whose columns are the images of
// the basis elements; composition is matrix product.

#include <stdexcept>
#include <vector>

#include "lnd/base_ring.hpp"

namespace lnd {

template <class R>
using Vec = std::vector<typename R::Elem>;

template <class R>
Vec<R> zero_vec(const R& ring, int n) {
    return Vec<R>(static_cast<size_t>(n), ring.zero());
}

template <class R>
bool vec_is_zero(const R& ring, const Vec<R>& v) {
    for (const auto& x : v)
        if (!ring.is_zero(x)) return false;
    return true;
}

template <class R>
Vec<R> vec_add(const R& ring, const Vec<R>& a, const Vec<R>& b) {
    Vec<R> out(a);
    for (size_t i = 0; i < out.size(); ++i) out[i] = ring.add(out[i], b[i]);
    return out;
}

template <class R>
Vec<R> vec_sub(const R& ring, const Vec<R>& a, const Vec<R>& b) {
    Vec<R> out(a);
    for (size_t i = 0; i < out.size(); ++i) out[i] = ring.sub(out[i], b[i]);
    return out;
}

template <class R>
Vec<R> vec_scale(const R& ring, const typename R::Elem& c, const Vec<R>& a) {
    Vec<R> out(a);
    for (auto& x : out) x = ring.mul(c, x);
    return out;
}

template <class R>
class Matrix {
  public:
    using Elem = typename R::Elem;

    Matrix() : ring_(), rows_(0), cols_(0) {}
    Matrix(R ring, int rows, int cols)
        : ring_(ring), rows_(rows), cols_(cols),
          a_(static_cast<size_t>(rows) * static_cast<size_t>(cols), ring.zero()) {}

    static Matrix identity(R ring, int n) {
        Matrix m(ring, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = ring.one();
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const R& ring() const { return ring_; }

    Elem& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Elem& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    Vec<R> col(int j) const {
        Vec<R> v;
        v.reserve(rows_);
        for (int i = 0; i < rows_; ++i) v.push_back(at(i, j));
        return v;
    }
    void set_col(int j, const Vec<R>& v) {
        for (int i = 0; i < rows_; ++i) at(i, j) = v[static_cast<size_t>(i)];
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!ring_.is_zero(x)) return false;
        return true;
    }

    bool operator==(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) return false;
        for (size_t i = 0; i < a_.size(); ++i)
            if (!ring_.eq(a_[i], o.a_[i])) return false;
        return true;
    }

    Matrix add(const Matrix& o) const {
        Matrix out(*this);
        for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = ring_.add(out.a_[i], o.a_[i]);
        return out;
    }
    Matrix sub(const Matrix& o) const {
        Matrix out(*this);
        for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = ring_.sub(out.a_[i], o.a_[i]);
        return out;
    }
    Matrix neg() const {
        Matrix out(*this);
        for (auto& x : out.a_) x = ring_.neg(x);
        return out;
    }
    Matrix scale(const Elem& c) const {
        Matrix out(*this);
        for (auto& x : out.a_) x = ring_.mul(c, x);
        return out;
    }

    Matrix mul(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
        Matrix out(ring_, rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Elem& aik = at(i, k);
                if (ring_.is_zero(aik)) continue;
                for (int j = 0; j < o.cols_; ++j)
                    out.at(i, j) = ring_.add(out.at(i, j), ring_.mul(aik, o.at(k, j)));
            }
        return out;
    }

    Vec<R> mul_vec(const Vec<R>& v) const {
        Vec<R> out = zero_vec(ring_, rows_);
        for (int j = 0; j < cols_; ++j) {
            if (ring_.is_zero(v[static_cast<size_t>(j)])) continue;
            for (int i = 0; i < rows_; ++i)
                out[static_cast<size_t>(i)] =
                    ring_.add(out[static_cast<size_t>(i)], ring_.mul(at(i, j), v[static_cast<size_t>(j)]));
        }
        return out;
    }

    Matrix transpose() const {
        Matrix out(ring_, cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
        return out;
    }

  private:
    R ring_;
    int rows_, cols_;
    std::vector<Elem> a_;
};

// Matrix commutator a*b - b*a.
template <class R>
Matrix<R> commutator(const Matrix<R>& a, const Matrix<R>& b) {
    return a.mul(b).sub(b.mul(a));
}

}  // namespace lnd
