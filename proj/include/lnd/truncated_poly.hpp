#pragma once
// Sparse integer polynomials in the graded generators b_1, b_2, ... (the
// weight of b_i is i), truncated above a weight bound.  A monomial is an
// exponential sequence; the two-variable variant carries a primed and a
// double-primed alphabet and underlies the composition expansion.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lnd/exp_seq.hpp"
#include "lnd/num.hpp"

namespace lnd {

class TruncatedPolynomial {
  public:
    TruncatedPolynomial() = default;
    static TruncatedPolynomial constant(Int c);
    static TruncatedPolynomial monomial(const ExpSeq& m, Int c = Int(1));

    bool is_zero() const { return terms_.empty(); }
    const std::map<ExpSeq, Int>& terms() const { return terms_; }
    Int coeff(const ExpSeq& m) const;
    long max_weight() const;

    TruncatedPolynomial add(const TruncatedPolynomial& o) const;
    TruncatedPolynomial scale(const Int& c) const;
    // Product with all monomials of weight > bound dropped; bound < 0 keeps
    // everything.
    TruncatedPolynomial mul(const TruncatedPolynomial& o, long bound = -1) const;
    TruncatedPolynomial truncate(long bound) const;

    bool operator==(const TruncatedPolynomial& o) const { return terms_ == o.terms_; }
    std::string to_string() const;

  private:
    std::map<ExpSeq, Int> terms_;  // no zero coefficients stored
    void put(const ExpSeq& m, Int c);
};

// Monomial in two alphabets: outer (primed) and inner (double-primed).
struct PairMonomial {
    ExpSeq outer, inner;
    auto operator<=>(const PairMonomial&) const = default;
};

class TwoVarPolynomial {
  public:
    TwoVarPolynomial() = default;
    static TwoVarPolynomial from_outer(const TruncatedPolynomial& p);
    static TwoVarPolynomial from_inner(const TruncatedPolynomial& p);

    bool is_zero() const { return terms_.empty(); }
    const std::map<PairMonomial, Int>& terms() const { return terms_; }
    Int coeff(const ExpSeq& outer, const ExpSeq& inner) const;

    TwoVarPolynomial add(const TwoVarPolynomial& o) const;
    TwoVarPolynomial mul(const TwoVarPolynomial& o, long bound = -1) const;

    bool operator==(const TwoVarPolynomial& o) const { return terms_ == o.terms_; }
    std::string to_string() const;

  private:
    std::map<PairMonomial, Int> terms_;
    void put(const PairMonomial& m, Int c);
};

// A series x + c_1 x^2 + c_2 x^3 + ... is stored as coefficients[n] = c_n
// with c_0 = 1; coefficients[n] multiplies x^{n+1}.
using PolySeries = std::vector<TruncatedPolynomial>;

// The generic series x + b_1 x^2 + ... + b_N x^{N+1}.
PolySeries generic_series(long bound);

// Expansion of outer(inner(x)): element n of the result is the coefficient
// of x^{n+1} in the composite, outer coefficients landing in the primed
// alphabet and inner coefficients in the double-primed one.  Exact integer
// arithmetic throughout.
std::vector<TwoVarPolynomial> compose_series(const PolySeries& outer, const PolySeries& inner,
                                             long bound);

}  // namespace lnd
