#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lnd/ln_structure.hpp"

using lnd::ExpSeq;
using lnd::Int;
using lnd::StructureTable;
using lnd::TruncatedPolynomial;

namespace {

ExpSeq seq(std::initializer_list<int> dense) { return ExpSeq::from_dense(dense); }

}  // namespace

TEST_CASE("composite expansion matches the hand substitution") {
    const auto generic = lnd::generic_series(3);
    const auto comp = lnd::compose_series(generic, generic, 3);

    // x^2: b'_1 + b''_1
    lnd::TwoVarPolynomial expected1;
    expected1 = expected1.add(lnd::TwoVarPolynomial::from_outer(
        TruncatedPolynomial::monomial(seq({1}))));
    expected1 = expected1.add(lnd::TwoVarPolynomial::from_inner(
        TruncatedPolynomial::monomial(seq({1}))));
    CHECK(comp[1] == expected1);

    // x^3: b'_2 + 2 b'_1 b''_1 + b''_2
    CHECK(comp[2].coeff(seq({0, 1}), ExpSeq()) == 1);
    CHECK(comp[2].coeff(seq({1}), seq({1})) == 2);
    CHECK(comp[2].coeff(ExpSeq(), seq({0, 1})) == 1);
    CHECK(comp[2].terms().size() == 3);
}

TEST_CASE("composition with the identity series") {
    const auto generic = lnd::generic_series(4);
    lnd::PolySeries identity = {TruncatedPolynomial::constant(Int(1))};
    const auto comp = lnd::compose_series(generic, identity, 4);
    for (long n = 1; n <= 4; ++n) {
        // coefficient of x^{n+1} is exactly b'_n
        CHECK(comp[static_cast<size_t>(n)].coeff(ExpSeq::single(static_cast<int>(n)), ExpSeq()) == 1);
        CHECK(comp[static_cast<size_t>(n)].terms().size() == 1);
    }
}

TEST_CASE("structure constants: identity on either side") {
    const auto table = StructureTable::build(4);
    for (const auto& alpha : lnd::enumerate_up_to(4)) {
        const auto& left = table.constants(ExpSeq(), alpha);
        REQUIRE(left.size() == 1);
        CHECK(left.at(alpha) == 1);
        const auto& right = table.constants(alpha, ExpSeq());
        REQUIRE(right.size() == 1);
        CHECK(right.at(alpha) == 1);
    }
}

TEST_CASE("structure constants: the degree-two product") {
    const auto table = StructureTable::build(2);
    const auto& c = table.constants(seq({1}), seq({1}));
    REQUIRE(c.size() == 2);
    CHECK(c.at(seq({2})) == 2);
    CHECK(c.at(seq({0, 1})) == 2);
}

TEST_CASE("structure constants: a noncommuting pair at degree three") {
    // Verified independently through the series-substitution model: applying
    // the degree-2 operation then the degree-1 operation is 3 s_[0,0,1] + s_[1,1],
    // the other order 2 s_[0,0,1] + s_[1,1].
    const auto table = StructureTable::build(3);
    const auto& ab = table.constants(seq({1}), seq({0, 1}));
    CHECK(ab.at(seq({0, 0, 1})) == 3);
    CHECK(ab.at(seq({1, 1})) == 1);
    CHECK(ab.size() == 2);
    const auto& ba = table.constants(seq({0, 1}), seq({1}));
    CHECK(ba.at(seq({0, 0, 1})) == 2);
    CHECK(ba.at(seq({1, 1})) == 1);
    CHECK(ba.size() == 2);
}

TEST_CASE("degree additivity across the table") {
    const long bound = 6;
    const auto table = StructureTable::build(bound);
    for (const auto& [pair, gammas] : table.entries()) {
        const long d = pair.first.degree() + pair.second.degree();
        for (const auto& [gamma, c] : gammas) {
            if (sgn(c) == 0) continue;
            CHECK(gamma.degree() == d);
        }
    }
}

TEST_CASE("associativity holds exhaustively") {
    const auto table = StructureTable::build(4);
    CHECK_FALSE(lnd::associativity_check(table, 4).has_value());
    CHECK_FALSE(lnd::associativity_check(table, 0).has_value());
}

TEST_CASE("a perturbed table fails associativity with a located witness") {
    auto table = StructureTable::build(4);
    auto& entry = table.entries_mut()[{seq({1}), seq({1})}];
    entry[seq({2})] += 1;
    const auto bad = lnd::associativity_check(table, 4);
    REQUIRE(bad.has_value());
    CHECK(bad->lhs != bad->rhs);
}

TEST_CASE("bound is enforced") {
    const auto table = StructureTable::build(2);
    CHECK_THROWS_AS((void)table.constants(seq({2}), seq({1})), lnd::BoundError);
}
