#pragma once
// Action tables: a finite model of an algebra over the Landweber-Novikov
// algebra.  A table assigns an additive self-map to every exponential
// sequence within the bound; validation checks the product formula against a
// structure table and the Cartan formula on all basis pairs, plus the forced
// annihilation of the unit in positive degree.

#include <map>
#include <optional>
#include <utility>

#include "lnd/finite_ring.hpp"
#include "lnd/ln_structure.hpp"

namespace lnd {

template <class R>
struct ActionTable {
    FiniteRing<R> ring;
    long bound = 0;
    std::map<ExpSeq, Matrix<R>> action;  // one entry per sequence within the bound

    const Matrix<R>& at(const ExpSeq& alpha) const {
        auto it = action.find(alpha);
        if (it == action.end())
            throw MismatchError("action table has no entry at " + alpha.to_string());
        return it->second;
    }

    // Documents may omit zero maps; construction fills them in.
    void fill_missing_with_zero() {
        for (const ExpSeq& alpha : enumerate_up_to(bound))
            action.try_emplace(alpha, alpha.is_zero()
                                          ? Matrix<R>::identity(ring.base, ring.rank)
                                          : Matrix<R>(ring.base, ring.rank, ring.rank));
    }

    bool operator==(const ActionTable& o) const {
        return ring == o.ring && bound == o.bound && action == o.action;
    }
};

struct ActionViolation {
    enum class Kind { MissingIdentity, Unit, Product, Cartan, Bound } kind;
    ExpSeq alpha, beta;  // Cartan uses alpha plus the basis pair below
    int i = 0, j = 0;
    std::string to_string() const {
        switch (kind) {
            case Kind::MissingIdentity: return "action at the zero sequence is not the identity";
            case Kind::Unit: return "unit not annihilated at alpha=" + alpha.to_string();
            case Kind::Product:
                return "product formula fails at (" + alpha.to_string() + ", " + beta.to_string() + ")";
            case Kind::Cartan:
                return "Cartan formula fails at alpha=" + alpha.to_string() + " basis pair (" +
                       std::to_string(i) + "," + std::to_string(j) + ")";
            case Kind::Bound: return "entry beyond bound at alpha=" + alpha.to_string();
        }
        return "?";
    }
};

// Exhaustive validation; the first violation in canonical order is
// reported.  Requires table.bound <= constants.bound.
template <class R>
std::optional<ActionViolation> validate_action(const ActionTable<R>& t,
                                               const StructureTable& s) {
    if (s.bound() < t.bound)
        throw MismatchError("structure table bound " + std::to_string(s.bound()) +
                            " below action bound " + std::to_string(t.bound));
    const R& k = t.ring.base;
    const int r = t.ring.rank;

    for (const auto& [alpha, m] : t.action) {
        if (alpha.degree() > t.bound)
            return ActionViolation{ActionViolation::Kind::Bound, alpha, {}, 0, 0};
        if (m.rows() != r || m.cols() != r)
            throw MismatchError("action matrix rank mismatch at " + alpha.to_string());
    }
    auto zit = t.action.find(ExpSeq());
    if (zit == t.action.end() || !(zit->second == Matrix<R>::identity(k, r)))
        return ActionViolation{ActionViolation::Kind::MissingIdentity, {}, {}, 0, 0};

    const auto seqs = enumerate_up_to(t.bound);

    // Product formula, checked as a matrix identity per pair.
    struct PairResult { bool bad = false; };
    std::vector<std::pair<ExpSeq, ExpSeq>> pairs;
    for (const ExpSeq& a : seqs)
        for (const ExpSeq& b : seqs)
            if (a.degree() + b.degree() <= t.bound) pairs.emplace_back(a, b);
    std::vector<char> pair_bad(pairs.size(), 0);
    parallel_for(static_cast<long>(pairs.size()), [&](long idx) {
        const auto& [a, b] = pairs[static_cast<size_t>(idx)];
        Matrix<R> lhs = t.at(a).mul(t.at(b));
        Matrix<R> rhs(k, r, r);
        for (const auto& [gamma, c] : s.constants(a, b))
            rhs = rhs.add(t.at(gamma).scale(k.from_int(c)));
        if (!(lhs == rhs)) pair_bad[static_cast<size_t>(idx)] = 1;
    });
    for (size_t idx = 0; idx < pairs.size(); ++idx)
        if (pair_bad[idx])
            return ActionViolation{ActionViolation::Kind::Product, pairs[idx].first,
                                   pairs[idx].second, 0, 0};

    // Cartan formula on every basis pair.
    for (const ExpSeq& alpha : seqs) {
        const auto splits = splittings(alpha);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                const auto lhs = t.at(alpha).mul_vec(
                    t.ring.mult[static_cast<size_t>(i)][static_cast<size_t>(j)]);
                Vec<R> rhs = zero_vec(k, r);
                for (const auto& [beta, gamma] : splits)
                    rhs = vec_add(k, rhs,
                                  t.ring.mul(t.at(beta).col(i), t.at(gamma).col(j)));
                if (lhs != rhs)
                    return ActionViolation{ActionViolation::Kind::Cartan, alpha, {}, i, j};
            }
    }

    // Annihilation of the unit in positive degree (forced by the Cartan
    // formula by induction; checked separately to catch bad tables).
    for (const ExpSeq& alpha : seqs) {
        if (alpha.is_zero()) continue;
        if (!vec_is_zero(k, t.at(alpha).mul_vec(t.ring.unit)))
            return ActionViolation{ActionViolation::Kind::Unit, alpha, {}, 0, 0};
    }
    return std::nullopt;
}

// Zero action in positive degree; the smallest valid instance on any ring.
template <class R>
ActionTable<R> trivial_instance(const FiniteRing<R>& ring, long bound) {
    ActionTable<R> t;
    t.ring = ring;
    t.bound = bound;
    for (const ExpSeq& alpha : enumerate_up_to(bound))
        t.action.emplace(alpha, alpha.is_zero()
                                    ? Matrix<R>::identity(ring.base, ring.rank)
                                    : Matrix<R>(ring.base, ring.rank, ring.rank));
    return t;
}

// Restriction to a smaller bound (entries beyond it dropped).
template <class R>
ActionTable<R> restrict_bound(const ActionTable<R>& t, long bound) {
    ActionTable<R> out;
    out.ring = t.ring;
    out.bound = bound;
    for (const auto& [alpha, m] : t.action)
        if (alpha.degree() <= bound) out.action.emplace(alpha, m);
    return out;
}

// The canonical series instance: the ring is Z[x]/(x^(N+2)) graded by powers
// of x, and s_alpha reads off the b^alpha-coefficient of p(F(x)) for the
// universal series F(x) = x + b_1 x^2 + ... .  The action raises the power
// grading by degree(alpha), so every identity survives the truncation
// exactly; validating it against a structure table certifies the product
// and Cartan formulas simultaneously.
std::pair<FiniteRing<ZRing>, ActionTable<ZRing>> canonical_instance(long bound);

// Base change of ring and action along Z -> Q or Z -> Z/p.
template <class ROut>
FiniteRing<ROut> convert_ring(const FiniteRing<ZRing>& a, const ROut& base) {
    FiniteRing<ROut> out;
    out.base = base;
    out.rank = a.rank;
    out.basis_names = a.basis_names;
    for (const auto& u : a.unit) out.unit.push_back(base.from_int(u));
    out.mult.assign(static_cast<size_t>(a.rank), std::vector<Vec<ROut>>(static_cast<size_t>(a.rank)));
    for (int i = 0; i < a.rank; ++i)
        for (int j = 0; j < a.rank; ++j) {
            Vec<ROut> v;
            for (const auto& c : a.mult[static_cast<size_t>(i)][static_cast<size_t>(j)])
                v.push_back(base.from_int(c));
            out.mult[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
        }
    return out;
}

template <class ROut>
ActionTable<ROut> convert_action(const ActionTable<ZRing>& t, const ROut& base) {
    ActionTable<ROut> out;
    out.ring = convert_ring(t.ring, base);
    out.bound = t.bound;
    for (const auto& [alpha, m] : t.action) {
        Matrix<ROut> mm(base, m.rows(), m.cols());
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) mm.at(i, j) = base.from_int(m.at(i, j));
        out.action.emplace(alpha, mm);
    }
    return out;
}

}  // namespace lnd
