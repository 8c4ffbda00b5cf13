#include "lnd/truncated_poly.hpp"

#include <stdexcept>

namespace lnd {

TruncatedPolynomial TruncatedPolynomial::constant(Int c) {
    TruncatedPolynomial p;
    p.put(ExpSeq(), std::move(c));
    return p;
}

TruncatedPolynomial TruncatedPolynomial::monomial(const ExpSeq& m, Int c) {
    TruncatedPolynomial p;
    p.put(m, std::move(c));
    return p;
}

void TruncatedPolynomial::put(const ExpSeq& m, Int c) {
    if (sgn(c) == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, std::move(c));
        return;
    }
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
}

Int TruncatedPolynomial::coeff(const ExpSeq& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Int(0) : it->second;
}

long TruncatedPolynomial::max_weight() const {
    long w = 0;
    for (const auto& [m, c] : terms_) w = std::max(w, m.degree());
    return w;
}

TruncatedPolynomial TruncatedPolynomial::add(const TruncatedPolynomial& o) const {
    TruncatedPolynomial out(*this);
    for (const auto& [m, c] : o.terms_) out.put(m, c);
    return out;
}

TruncatedPolynomial TruncatedPolynomial::scale(const Int& c) const {
    TruncatedPolynomial out;
    if (sgn(c) == 0) return out;
    for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
    return out;
}

TruncatedPolynomial TruncatedPolynomial::mul(const TruncatedPolynomial& o, long bound) const {
    TruncatedPolynomial out;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) {
            const ExpSeq m = lnd::add(m1, m2);
            if (bound >= 0 && m.degree() > bound) continue;
            out.put(m, c1 * c2);
        }
    return out;
}

TruncatedPolynomial TruncatedPolynomial::truncate(long bound) const {
    TruncatedPolynomial out;
    for (const auto& [m, c] : terms_)
        if (m.degree() <= bound) out.terms_.emplace(m, c);
    return out;
}

std::string TruncatedPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += to_decimal(c) + "*b^" + m.to_string();
    }
    return s;
}

TwoVarPolynomial TwoVarPolynomial::from_outer(const TruncatedPolynomial& p) {
    TwoVarPolynomial out;
    for (const auto& [m, c] : p.terms()) out.terms_.emplace(PairMonomial{m, ExpSeq()}, c);
    return out;
}

TwoVarPolynomial TwoVarPolynomial::from_inner(const TruncatedPolynomial& p) {
    TwoVarPolynomial out;
    for (const auto& [m, c] : p.terms()) out.terms_.emplace(PairMonomial{ExpSeq(), m}, c);
    return out;
}

void TwoVarPolynomial::put(const PairMonomial& m, Int c) {
    if (sgn(c) == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, std::move(c));
        return;
    }
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
}

Int TwoVarPolynomial::coeff(const ExpSeq& outer, const ExpSeq& inner) const {
    auto it = terms_.find(PairMonomial{outer, inner});
    return it == terms_.end() ? Int(0) : it->second;
}

TwoVarPolynomial TwoVarPolynomial::add(const TwoVarPolynomial& o) const {
    TwoVarPolynomial out(*this);
    for (const auto& [m, c] : o.terms_) out.put(m, c);
    return out;
}

TwoVarPolynomial TwoVarPolynomial::mul(const TwoVarPolynomial& o, long bound) const {
    TwoVarPolynomial out;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) {
            PairMonomial m{lnd::add(m1.outer, m2.outer), lnd::add(m1.inner, m2.inner)};
            if (bound >= 0 && m.outer.degree() + m.inner.degree() > bound) continue;
            out.put(m, c1 * c2);
        }
    return out;
}

std::string TwoVarPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += to_decimal(c) + "*b'^" + m.outer.to_string() + "*b\"^" + m.inner.to_string();
    }
    return s;
}

PolySeries generic_series(long bound) {
    PolySeries s;
    s.push_back(TruncatedPolynomial::constant(Int(1)));
    for (long i = 1; i <= bound; ++i)
        s.push_back(TruncatedPolynomial::monomial(ExpSeq::single(static_cast<int>(i))));
    return s;
}

std::vector<TwoVarPolynomial> compose_series(const PolySeries& outer, const PolySeries& inner,
                                             long bound) {
    if (outer.empty() || inner.empty())
        throw std::invalid_argument("compose_series: series must start at x");
    if (!(outer[0] == TruncatedPolynomial::constant(Int(1))) ||
        !(inner[0] == TruncatedPolynomial::constant(Int(1))))
        throw std::invalid_argument("compose_series: leading coefficient must be 1");

    // inner(x) as a vector over x-powers 1..bound+1 with inner-alphabet
    // coefficients; powers computed by truncated convolution.
    const long xmax = bound + 1;
    std::vector<TwoVarPolynomial> base(static_cast<size_t>(xmax + 1));
    for (long n = 0; n < static_cast<long>(inner.size()) && n + 1 <= xmax; ++n)
        base[static_cast<size_t>(n + 1)] = TwoVarPolynomial::from_inner(
            inner[static_cast<size_t>(n)].truncate(bound));

    std::vector<TwoVarPolynomial> result(static_cast<size_t>(bound + 1));
    std::vector<TwoVarPolynomial> power = base;  // inner^1
    for (long i = 0; i + 1 <= xmax; ++i) {
        // power holds inner^(i+1); add outer_i * power to the result.
        const TwoVarPolynomial oc = TwoVarPolynomial::from_outer(
            i < static_cast<long>(outer.size()) ? outer[static_cast<size_t>(i)].truncate(bound)
                                                : TruncatedPolynomial());
        if (!oc.is_zero()) {
            for (long n = 0; n <= bound; ++n) {
                const auto& p = power[static_cast<size_t>(n + 1)];
                if (p.is_zero()) continue;
                result[static_cast<size_t>(n)] =
                    result[static_cast<size_t>(n)].add(oc.mul(p, bound));
            }
        }
        // power <- power * base (x-truncated convolution)
        if (i + 2 <= xmax) {
            std::vector<TwoVarPolynomial> next(static_cast<size_t>(xmax + 1));
            for (long a = 1; a <= xmax; ++a) {
                if (power[static_cast<size_t>(a)].is_zero()) continue;
                for (long b = 1; a + b <= xmax; ++b) {
                    if (base[static_cast<size_t>(b)].is_zero()) continue;
                    next[static_cast<size_t>(a + b)] = next[static_cast<size_t>(a + b)].add(
                        power[static_cast<size_t>(a)].mul(base[static_cast<size_t>(b)], bound));
                }
            }
            power = std::move(next);
        }
    }
    return result;
}

}  // namespace lnd
