#pragma once
// Structure constants of the Landweber-Novikov product.  The composite of
// two generic series is expanded once up to the bound; the coefficient of a
// mixed monomial in the expansion of b^gamma is the constant attached to
// gamma in the product s_alpha s_beta.  The slot convention is the one under
// which the canonical series action satisfies the product formula; the
// action tests certify it.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "lnd/truncated_poly.hpp"
#include "lnd/util.hpp"

namespace lnd {

using SparseConstants = std::map<ExpSeq, Int>;

class StructureTable {
  public:
    // Computes every pair with degree(alpha) + degree(beta) <= bound.
    static StructureTable build(long bound);

    long bound() const { return bound_; }

    // The sparse map {gamma -> n_gamma} for s_alpha s_beta.  Throws
    // BoundError when degree(alpha) + degree(beta) exceeds the bound.
    const SparseConstants& constants(const ExpSeq& alpha, const ExpSeq& beta) const;

    // Support P(alpha, beta).
    std::vector<ExpSeq> support(const ExpSeq& alpha, const ExpSeq& beta) const;

    const std::map<std::pair<ExpSeq, ExpSeq>, SparseConstants>& entries() const { return table_; }
    // Mutable access, used by fault-injection tests.
    std::map<std::pair<ExpSeq, ExpSeq>, SparseConstants>& entries_mut() { return table_; }

    bool operator==(const StructureTable& o) const {
        return bound_ == o.bound_ && table_ == o.table_;
    }

  private:
    long bound_ = 0;
    std::map<std::pair<ExpSeq, ExpSeq>, SparseConstants> table_;
    SparseConstants empty_;
    friend StructureTable structure_table_from_entries(
        long, std::map<std::pair<ExpSeq, ExpSeq>, SparseConstants>);
};

// Rebuilds a table from raw entries (document loading).
StructureTable structure_table_from_entries(
    long bound, std::map<std::pair<ExpSeq, ExpSeq>, SparseConstants> entries);

struct AssocViolation {
    ExpSeq alpha, beta, gamma;  // the probed triple
    ExpSeq witness;             // the epsilon where the two expansions differ
    Int lhs, rhs;
};

// Exhaustive associativity check of (s_a s_b) s_c = s_a (s_b s_c) for all
// triples with total degree <= bound; reports the first violation in
// canonical order.
std::optional<AssocViolation> associativity_check(const StructureTable& table, long bound);

}  // namespace lnd
