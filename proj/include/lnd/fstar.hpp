#pragma once
// The cochain complex attached to an action table.  Degree 0 is the
// derivations; degree 1 the maps from sequences to additive self-maps;
// degree n >= 2 has an operator part indexed by n-tuples of sequences and a
// multilinear part indexed by single sequences.  Differentials follow the
// alternating-sum shape with contractions through the structure constants
// on the operator side and through ring multiplication on the tensor side.
// Nothing here ever increases the total degree of an index, so the complex
// is computed exactly within the truncation bound.

#include <map>
#include <vector>

#include "lnd/s_algebra.hpp"

namespace lnd {

template <class R>
struct Cochain {
    int degree = 1;
    long bound = 0;
    int rank = 0;
    R base;

    Matrix<R> der;                              // degree 0 only; must satisfy Leibniz
    std::map<std::vector<ExpSeq>, Matrix<R>> op;  // degree >= 2: tuples of length `degree`
    std::map<ExpSeq, Tensor<R>> tensor;           // degree >= 1: arity `degree` tensors

    static Cochain zero(const R& base, int rank, int degree, long bound) {
        Cochain c;
        c.degree = degree;
        c.bound = bound;
        c.rank = rank;
        c.base = base;
        if (degree == 0) c.der = Matrix<R>(base, rank, rank);
        return c;
    }

    // Missing entries are zero; degree 1 serves its single family through
    // both accessors.
    Matrix<R> op_at(const std::vector<ExpSeq>& tuple) const {
        if (degree == 1) {
            auto it = tensor.find(tuple.at(0));
            return it == tensor.end() ? Matrix<R>(base, rank, rank) : it->second.vals;
        }
        auto it = op.find(tuple);
        return it == op.end() ? Matrix<R>(base, rank, rank) : it->second;
    }
    const Matrix<R>* op_find(const std::vector<ExpSeq>& tuple) const {
        if (degree == 1) {
            auto it = tensor.find(tuple.at(0));
            return it == tensor.end() ? nullptr : &it->second.vals;
        }
        auto it = op.find(tuple);
        return it == op.end() ? nullptr : &it->second;
    }
    Tensor<R> tensor_at(const ExpSeq& alpha) const {
        auto it = tensor.find(alpha);
        return it == tensor.end() ? Tensor<R>(base, rank, degree) : it->second;
    }
    const Tensor<R>* tensor_find(const ExpSeq& alpha) const {
        auto it = tensor.find(alpha);
        return it == tensor.end() ? nullptr : &it->second;
    }

    void set_matrix(const ExpSeq& alpha, const Matrix<R>& m) {
        tensor[alpha] = tensor_from_matrix(m);
    }

    void prune() {
        for (auto it = op.begin(); it != op.end();)
            it = it->second.is_zero() ? op.erase(it) : std::next(it);
        for (auto it = tensor.begin(); it != tensor.end();)
            it = it->second.is_zero() ? tensor.erase(it) : std::next(it);
    }

    bool is_zero() const {
        if (degree == 0) return der.is_zero();
        for (const auto& [k, v] : op)
            if (!v.is_zero()) return false;
        for (const auto& [k, v] : tensor)
            if (!v.is_zero()) return false;
        return true;
    }

    Cochain add(const Cochain& o) const { return combine(o, false); }
    Cochain sub(const Cochain& o) const { return combine(o, true); }
    Cochain neg() const {
        Cochain out = zero(base, rank, degree, bound);
        out.der = der.neg();
        for (const auto& [k, v] : op) out.op.emplace(k, v.neg());
        for (const auto& [k, v] : tensor) out.tensor.emplace(k, v.neg());
        return out;
    }

    bool equal(const Cochain& o) const {
        if (degree != o.degree) return false;
        return sub(o).is_zero();
    }

  private:
    Cochain combine(const Cochain& o, bool negate) const {
        if (degree != o.degree) throw MismatchError("cochain degree mismatch");
        Cochain out(*this);
        if (degree == 0) {
            out.der = negate ? der.sub(o.der) : der.add(o.der);
            return out;
        }
        for (const auto& [k, v] : o.op) {
            auto it = out.op.find(k);
            if (it == out.op.end())
                out.op.emplace(k, negate ? v.neg() : v);
            else
                it->second = negate ? it->second.sub(v) : it->second.add(v);
        }
        for (const auto& [k, v] : o.tensor) {
            auto it = out.tensor.find(k);
            if (it == out.tensor.end())
                out.tensor.emplace(k, negate ? v.neg() : v);
            else
                it->second = negate ? it->second.sub(v) : it->second.add(v);
        }
        out.prune();
        return out;
    }
};

// d0: a derivation goes to the commutator family alpha -> s_alpha phi - phi s_alpha.
template <class R>
Cochain<R> d0(const Matrix<R>& derivation, const ActionTable<R>& t) {
    if (!is_derivation(t.ring, derivation))
        throw std::invalid_argument("d0 requires a derivation");
    Cochain<R> out = Cochain<R>::zero(t.ring.base, t.ring.rank, 1, t.bound);
    for (const ExpSeq& alpha : enumerate_up_to(t.bound))
        out.set_matrix(alpha, commutator(t.at(alpha), derivation));
    out.prune();
    return out;
}

// d in degree n >= 1; for n = 1 both components read the same input family.
template <class R>
Cochain<R> dn(const Cochain<R>& f, const ActionTable<R>& t, const StructureTable& s) {
    const int n = f.degree;
    if (n < 1) throw std::invalid_argument("dn needs degree >= 1");
    if (f.bound > t.bound || t.bound > s.bound())
        throw MismatchError("bound mismatch between cochain, action and constants");
    const R& k = t.ring.base;
    const int r = t.ring.rank;
    Cochain<R> out = Cochain<R>::zero(k, r, n + 1, f.bound);

    // Operator part over (n+1)-tuples of total degree within the bound.
    for (const auto& x : enumerate_tuples(n + 1, f.bound)) {
        Matrix<R> acc(k, r, r);
        {
            const std::vector<ExpSeq> rest(x.begin() + 1, x.end());
            if (const auto* m = f.op_find(rest)) acc = t.at(x[0]).mul(*m);
        }
        for (int i = 1; i <= n; ++i) {
            const bool minus = (i % 2) == 1;
            for (const auto& [beta, c] :
                 s.constants(x[static_cast<size_t>(i - 1)], x[static_cast<size_t>(i)])) {
                std::vector<ExpSeq> merged;
                merged.reserve(static_cast<size_t>(n));
                merged.insert(merged.end(), x.begin(), x.begin() + (i - 1));
                merged.push_back(beta);
                merged.insert(merged.end(), x.begin() + (i + 1), x.end());
                if (const auto* m = f.op_find(merged)) {
                    const Matrix<R> term = m->scale(k.from_int(c));
                    acc = minus ? acc.sub(term) : acc.add(term);
                }
            }
        }
        {
            const std::vector<ExpSeq> head(x.begin(), x.end() - 1);
            if (const auto* m = f.op_find(head)) {
                const Matrix<R> term = m->mul(t.at(x[static_cast<size_t>(n)]));
                acc = (n + 1) % 2 ? acc.sub(term) : acc.add(term);
            }
        }
        if (!acc.is_zero()) out.op.emplace(x, std::move(acc));
    }

    // Multilinear part over single sequences, arity n+1.
    for (const ExpSeq& alpha : enumerate_up_to(f.bound)) {
        Tensor<R> acc(k, r, n + 1);
        bool nonzero = false;
        const auto splits = splittings(alpha);
        std::vector<int> idx(static_cast<size_t>(n + 1), 0);
        for (;;) {
            Vec<R> v = zero_vec(k, r);
            // Cartan-split leading term.
            for (const auto& [beta, gamma] : splits) {
                if (const auto* g = f.tensor_find(gamma)) {
                    const std::vector<int> rest(idx.begin() + 1, idx.end());
                    v = vec_add(k, v, t.ring.mul(t.at(beta).col(idx[0]), g->value_at(rest)));
                }
            }
            // Adjacent multiplications read f at alpha itself.
            if (const auto* fa = f.tensor_find(alpha)) {
                for (int i = 1; i <= n; ++i) {
                    std::vector<Vec<R>> args;
                    args.reserve(static_cast<size_t>(n));
                    for (int p = 0; p <= n; ++p) {
                        if (p == i - 1) {
                            args.push_back(
                                t.ring.mult[static_cast<size_t>(idx[static_cast<size_t>(p)])]
                                           [static_cast<size_t>(idx[static_cast<size_t>(p + 1)])]);
                            ++p;
                        } else {
                            args.push_back(t.ring.basis_vec(idx[static_cast<size_t>(p)]));
                        }
                    }
                    const Vec<R> term = fa->eval(args);
                    v = (i % 2) ? vec_sub(k, v, term) : vec_add(k, v, term);
                }
            }
            // Cartan-split trailing term.
            {
                Vec<R> tail = zero_vec(k, r);
                for (const auto& [beta, gamma] : splits) {
                    if (const auto* fb = f.tensor_find(beta)) {
                        const std::vector<int> head(idx.begin(), idx.end() - 1);
                        tail = vec_add(
                            k, tail,
                            t.ring.mul(fb->value_at(head), t.at(gamma).col(idx[static_cast<size_t>(n)])));
                    }
                }
                v = (n + 1) % 2 ? vec_sub(k, v, tail) : vec_add(k, v, tail);
            }
            if (!vec_is_zero(k, v)) {
                acc.set_value(idx, v);
                nonzero = true;
            }
            int p = n;
            while (p >= 0 && idx[static_cast<size_t>(p)] == r - 1) idx[static_cast<size_t>(p--)] = 0;
            if (p < 0) break;
            ++idx[static_cast<size_t>(p)];
        }
        if (nonzero) out.tensor.emplace(alpha, std::move(acc));
    }
    return out;
}

template <class R>
Cochain<R> differential(const Cochain<R>& f, const ActionTable<R>& t, const StructureTable& s) {
    return f.degree == 0 ? d0(f.der, t) : dn(f, t, s);
}

template <class R>
bool is_cocycle(const Cochain<R>& f, const ActionTable<R>& t, const StructureTable& s) {
    return differential(f, t, s).is_zero();
}

// ----------------------------------------------------------- flattening --

// Coordinates of a cochain group at fixed degree and bound: operator part
// first (tuple by tuple in canonical order, each matrix column-major), then
// the multilinear part (sequence by sequence, column-major tensors).
template <class R>
struct CochainLayout {
    int degree;
    long bound;
    int rank;
    std::vector<std::vector<ExpSeq>> tuples;  // populated for degree >= 2 only
    std::vector<ExpSeq> seqs;
    long op_block = 0, tensor_block = 0;

    CochainLayout(int degree_, long bound_, int rank_) : degree(degree_), bound(bound_), rank(rank_) {
        if (degree >= 2) {
            tuples = enumerate_tuples(degree, bound);
            op_block = static_cast<long>(rank) * rank;
        }
        if (degree >= 1) {
            seqs = enumerate_up_to(bound);
            tensor_block = static_cast<long>(rank) * pow_long(rank, degree);
        }
    }

    long dimension() const {
        return static_cast<long>(tuples.size()) * op_block +
               static_cast<long>(seqs.size()) * tensor_block;
    }

    Vec<R> flatten(const R& base, const Cochain<R>& c) const {
        Vec<R> out = zero_vec(base, static_cast<int>(dimension()));
        long off = 0;
        for (const auto& tup : tuples) {
            if (const auto* m = c.op_find(tup)) {
                const auto flat = flatten_matrix(*m);
                for (size_t i = 0; i < flat.size(); ++i) out[static_cast<size_t>(off) + i] = flat[i];
            }
            off += op_block;
        }
        for (const auto& alpha : seqs) {
            if (const auto* t = c.tensor_find(alpha)) {
                const auto flat = flatten_tensor(*t);
                for (size_t i = 0; i < flat.size(); ++i) out[static_cast<size_t>(off) + i] = flat[i];
            }
            off += tensor_block;
        }
        return out;
    }

    Cochain<R> unflatten(const R& base, const Vec<R>& v) const {
        Cochain<R> c = Cochain<R>::zero(base, rank, degree, bound);
        long off = 0;
        for (const auto& tup : tuples) {
            Matrix<R> m(base, rank, rank);
            for (int j = 0; j < rank; ++j)
                for (int i = 0; i < rank; ++i)
                    m.at(i, j) = v[static_cast<size_t>(off + j * rank + i)];
            if (!m.is_zero()) c.op.emplace(tup, std::move(m));
            off += op_block;
        }
        for (const auto& alpha : seqs) {
            Tensor<R> t(base, rank, degree);
            const int cols = t.vals.cols();
            for (int j = 0; j < cols; ++j)
                for (int i = 0; i < rank; ++i)
                    t.vals.at(i, j) = v[static_cast<size_t>(off + static_cast<long>(j) * rank + i)];
            if (!t.is_zero()) c.tensor.emplace(alpha, std::move(t));
            off += tensor_block;
        }
        return c;
    }
};

// Matrix of the degree-n differential in flat coordinates.  Columns are
// independent, so assembly parallelizes under LN_DEFORM_THREADS with a
// deterministic result.
template <class R>
Matrix<R> differential_matrix(int n, const ActionTable<R>& t, const StructureTable& s) {
    const R& k = t.ring.base;
    const CochainLayout<R> in(n, t.bound, t.ring.rank);
    const CochainLayout<R> outl(n + 1, t.bound, t.ring.rank);
    std::vector<Vec<R>> cols(static_cast<size_t>(in.dimension()));
    parallel_for(in.dimension(), [&](long c) {
        Vec<R> unit = zero_vec(k, static_cast<int>(in.dimension()));
        unit[static_cast<size_t>(c)] = k.one();
        const Cochain<R> img = dn(in.unflatten(k, unit), t, s);
        cols[static_cast<size_t>(c)] = outl.flatten(k, img);
    });
    Matrix<R> m(k, static_cast<int>(outl.dimension()), static_cast<int>(in.dimension()));
    for (long c = 0; c < in.dimension(); ++c) m.set_col(static_cast<int>(c), cols[static_cast<size_t>(c)]);
    return m;
}

// Image of d0 as column vectors over the derivation generators.
template <class R>
Matrix<R> d0_image_matrix(const ActionTable<R>& t) {
    const R& k = t.ring.base;
    const CochainLayout<R> outl(1, t.bound, t.ring.rank);
    const auto ders = derivation_basis(t.ring);
    Matrix<R> m(k, static_cast<int>(outl.dimension()), static_cast<int>(ders.size()));
    for (size_t j = 0; j < ders.size(); ++j)
        m.set_col(static_cast<int>(j), outl.flatten(k, d0(ders[j], t)));
    return m;
}

// Cohomology of the bound-limited complex in degree 1 or 2.
template <class R>
CohomologyResult<R> fstar_cohomology(const ActionTable<R>& t, const StructureTable& s, int n) {
    if (n != 1 && n != 2) throw std::invalid_argument("fstar cohomology supports n = 1 or 2");
    const Matrix<R> d_out = differential_matrix(n, t, s);
    const Matrix<R> d_in = n == 1 ? d0_image_matrix(t) : differential_matrix(1, t, s);
    return subquotient(d_out, d_in);
}

// Seeded random cochain with entries in [lo, hi]; degree 0 draws a random
// combination of the derivation generators so the result is honest.
template <class R>
Cochain<R> random_cochain(const ActionTable<R>& t, int degree, Rng& rng, long lo = -3,
                          long hi = 3) {
    const R& k = t.ring.base;
    const int r = t.ring.rank;
    Cochain<R> c = Cochain<R>::zero(k, r, degree, t.bound);
    if (degree == 0) {
        for (const auto& d : derivation_basis(t.ring))
            c.der = c.der.add(d.scale(k.from_long(rng.range(lo, hi))));
        return c;
    }
    if (degree >= 2) {
        for (const auto& tup : enumerate_tuples(degree, t.bound)) {
            Matrix<R> m(k, r, r);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j) m.at(i, j) = k.from_long(rng.range(lo, hi));
            c.op.emplace(tup, std::move(m));
        }
    }
    for (const ExpSeq& alpha : enumerate_up_to(t.bound)) {
        Tensor<R> tt(k, r, degree);
        for (int i = 0; i < tt.vals.rows(); ++i)
            for (int j = 0; j < tt.vals.cols(); ++j) tt.vals.at(i, j) = k.from_long(rng.range(lo, hi));
        c.tensor.emplace(alpha, std::move(tt));
    }
    c.prune();
    return c;
}

}  // namespace lnd
