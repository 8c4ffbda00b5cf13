#include "lnd/s_algebra.hpp"

namespace lnd {

namespace {

// Powers of the universal series F(x) = x + b_1 x^2 + ... + b_N x^(N+1),
// truncated at x-degree cap and generator weight bound.  powers[k][j] is the
// b-polynomial coefficient of x^j in F(x)^k.
std::vector<std::vector<TruncatedPolynomial>> universal_powers(long bound, int cap) {
    std::vector<std::vector<TruncatedPolynomial>> powers;
    std::vector<TruncatedPolynomial> one(static_cast<size_t>(cap + 1));
    one[0] = TruncatedPolynomial::constant(Int(1));
    powers.push_back(one);

    std::vector<TruncatedPolynomial> f(static_cast<size_t>(cap + 1));
    if (cap >= 1) f[1] = TruncatedPolynomial::constant(Int(1));
    for (long i = 1; i <= bound && i + 1 <= cap; ++i)
        f[static_cast<size_t>(i + 1)] =
            TruncatedPolynomial::monomial(ExpSeq::single(static_cast<int>(i)));

    for (int k = 1; k <= cap; ++k) {
        const auto& prev = powers.back();
        std::vector<TruncatedPolynomial> next(static_cast<size_t>(cap + 1));
        for (int a = 0; a <= cap; ++a) {
            if (prev[static_cast<size_t>(a)].is_zero()) continue;
            for (int b = 0; a + b <= cap; ++b) {
                if (f[static_cast<size_t>(b)].is_zero()) continue;
                next[static_cast<size_t>(a + b)] = next[static_cast<size_t>(a + b)].add(
                    prev[static_cast<size_t>(a)].mul(f[static_cast<size_t>(b)], bound));
            }
        }
        powers.push_back(std::move(next));
    }
    return powers;
}

}  // namespace

std::pair<FiniteRing<ZRing>, ActionTable<ZRing>> canonical_instance(long bound) {
    if (bound < 1) throw std::invalid_argument("canonical_instance requires bound >= 1");
    const ZRing z;
    const int cap = static_cast<int>(bound) + 1;
    FiniteRing<ZRing> ring = truncated_power_ring(z, cap);

    const auto powers = universal_powers(bound, cap);

    ActionTable<ZRing> table;
    table.ring = ring;
    table.bound = bound;
    for (const ExpSeq& alpha : enumerate_up_to(bound)) {
        Matrix<ZRing> m(z, ring.rank, ring.rank);
        for (int k = 0; k <= cap; ++k)
            for (int j = 0; j <= cap; ++j)
                m.at(j, k) = powers[static_cast<size_t>(k)][static_cast<size_t>(j)].coeff(alpha);
        table.action.emplace(alpha, std::move(m));
    }
    return {std::move(ring), std::move(table)};
}

}  // namespace lnd
