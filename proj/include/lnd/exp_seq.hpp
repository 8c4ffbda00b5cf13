#pragma once
// Exponential sequences: finitely supported sequences of non-negative
// integers, stored sparsely as (index, multiplicity) pairs.  These index
// the Landweber-Novikov operations; the weighted degree sum(i * a_i) is the
// grading every truncation bound refers to.

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace lnd {

class ExpSeq {
  public:
    // (index >= 1, multiplicity >= 1), strictly increasing indices.
    using Term = std::pair<int, int>;

    ExpSeq() = default;
    explicit ExpSeq(std::vector<Term> terms);

    // Builds from a dense prefix [a1, a2, ...]; trailing zeros ignored.
    static ExpSeq from_dense(const std::vector<int>& dense);
    static ExpSeq single(int index, int multiplicity = 1);

    bool is_zero() const { return terms_.empty(); }
    long degree() const;
    int multiplicity(int index) const;
    const std::vector<Term>& terms() const { return terms_; }
    std::vector<int> dense() const;

    // Canonical order: by degree, then lexicographically on the sparse form.
    // This is the ordering behind every enumeration and matrix flattening.
    std::strong_ordering operator<=>(const ExpSeq& o) const;
    bool operator==(const ExpSeq& o) const { return terms_ == o.terms_; }

    // Textual form "[a1,a2,...]"; the zero sequence is "[]".
    std::string to_string() const;
    static ExpSeq parse(const std::string& text);

  private:
    std::vector<Term> terms_;
};

ExpSeq add(const ExpSeq& a, const ExpSeq& b);

// Componentwise difference; requires b <= a componentwise.
ExpSeq sub(const ExpSeq& a, const ExpSeq& b);

// All sequences of degree <= bound, in canonical order.  The number of
// sequences of exact degree d equals the number of integer partitions of d.
std::vector<ExpSeq> enumerate_up_to(long bound);

// All ordered pairs (beta, gamma) with beta + gamma = alpha, in a fixed
// odometer order; the count is prod(alpha_i + 1).
std::vector<std::pair<ExpSeq, ExpSeq>> splittings(const ExpSeq& alpha);

// Tuples (alpha_1, ..., alpha_len) with total degree <= bound, ordered by
// total degree then componentwise canonical order.
std::vector<std::vector<ExpSeq>> enumerate_tuples(int len, long bound);

}  // namespace lnd
