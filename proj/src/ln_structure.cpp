#include "lnd/ln_structure.hpp"

namespace lnd {

StructureTable StructureTable::build(long bound) {
    StructureTable t;
    t.bound_ = bound;

    // Composite expansion of the generic series with itself; composite[n] is
    // the coefficient of x^{n+1}.
    const PolySeries generic = generic_series(bound);
    const auto composite = compose_series(generic, generic, bound);

    // Expansion of b^gamma under composition: multiply the single-generator
    // expansions.  Homogeneity keeps every product within the bound.
    std::map<ExpSeq, TwoVarPolynomial> expansions;
    for (const ExpSeq& gamma : enumerate_up_to(bound)) {
        TwoVarPolynomial acc =
            TwoVarPolynomial::from_outer(TruncatedPolynomial::constant(Int(1)));
        for (const auto& [idx, mult] : gamma.terms())
            for (int k = 0; k < mult; ++k)
                acc = acc.mul(composite[static_cast<size_t>(idx)], -1);
        expansions.emplace(gamma, std::move(acc));
    }

    // n_gamma(alpha, beta) is the coefficient of b'^beta b''^alpha in the
    // expansion of b^gamma.  Invert the loop: walk each expansion once.
    for (const auto& [gamma, poly] : expansions)
        for (const auto& [mono, coeff] : poly.terms()) {
            const ExpSeq& alpha = mono.inner;
            const ExpSeq& beta = mono.outer;
            t.table_[{alpha, beta}][gamma] = coeff;
        }

    // Pairs whose product is zero still get an (empty) entry so lookups are
    // total within the bound.
    const auto seqs = enumerate_up_to(bound);
    for (const ExpSeq& a : seqs)
        for (const ExpSeq& b : seqs) {
            if (a.degree() + b.degree() > bound) continue;
            t.table_.try_emplace({a, b});
        }
    return t;
}

const SparseConstants& StructureTable::constants(const ExpSeq& alpha, const ExpSeq& beta) const {
    if (alpha.degree() + beta.degree() > bound_)
        throw BoundError("structure constants requested beyond bound " + std::to_string(bound_) +
                         " for " + alpha.to_string() + ", " + beta.to_string());
    auto it = table_.find({alpha, beta});
    return it == table_.end() ? empty_ : it->second;
}

std::vector<ExpSeq> StructureTable::support(const ExpSeq& alpha, const ExpSeq& beta) const {
    std::vector<ExpSeq> out;
    for (const auto& [gamma, c] : constants(alpha, beta))
        if (sgn(c) != 0) out.push_back(gamma);
    return out;
}

StructureTable structure_table_from_entries(
    long bound, std::map<std::pair<ExpSeq, ExpSeq>, SparseConstants> entries) {
    StructureTable t;
    t.bound_ = bound;
    t.table_ = std::move(entries);
    return t;
}

std::optional<AssocViolation> associativity_check(const StructureTable& table, long bound) {
    const auto seqs = enumerate_up_to(bound);
    for (const ExpSeq& a : seqs)
        for (const ExpSeq& b : seqs) {
            if (a.degree() + b.degree() > bound) continue;
            for (const ExpSeq& c : seqs) {
                if (a.degree() + b.degree() + c.degree() > bound) continue;
                // sum over delta in P(a,b) of n_delta * n(delta, c)
                SparseConstants left;
                for (const auto& [delta, nd] : table.constants(a, b))
                    for (const auto& [eps, ne] : table.constants(delta, c)) {
                        left[eps] += nd * ne;
                        if (sgn(left[eps]) == 0) left.erase(eps);
                    }
                SparseConstants right;
                for (const auto& [rho, nr] : table.constants(b, c))
                    for (const auto& [eps, ne] : table.constants(a, rho)) {
                        right[eps] += nr * ne;
                        if (sgn(right[eps]) == 0) right.erase(eps);
                    }
                if (left == right) continue;
                // Locate the first epsilon where they differ.
                for (const auto& [eps, v] : left) {
                    auto it = right.find(eps);
                    const Int rv = it == right.end() ? Int(0) : it->second;
                    if (v != rv) return AssocViolation{a, b, c, eps, v, rv};
                }
                for (const auto& [eps, v] : right)
                    if (left.find(eps) == left.end())
                        return AssocViolation{a, b, c, eps, Int(0), v};
            }
        }
    return std::nullopt;
}

}  // namespace lnd
