#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "lnd/exp_seq.hpp"
#include "lnd/util.hpp"

using lnd::ExpSeq;

namespace {

// Independent partition counter (Euler's pentagonal recurrence), used as the
// oracle for enumeration counts.
long partition_count(long n) {
    static std::vector<long> memo = {1};
    while (static_cast<long>(memo.size()) <= n) {
        const long m = static_cast<long>(memo.size());
        long total = 0;
        for (long k = 1;; ++k) {
            const long g1 = k * (3 * k - 1) / 2;
            const long g2 = k * (3 * k + 1) / 2;
            if (g1 > m && g2 > m) break;
            const long sign = (k % 2 == 1) ? 1 : -1;
            if (g1 <= m) total += sign * memo[static_cast<size_t>(m - g1)];
            if (g2 <= m) total += sign * memo[static_cast<size_t>(m - g2)];
        }
        memo.push_back(total);
    }
    return memo[static_cast<size_t>(n)];
}

}  // namespace

TEST_CASE("degree fixtures") {
    CHECK(ExpSeq().degree() == 0);
    CHECK(ExpSeq::from_dense({1}).degree() == 1);
    CHECK(ExpSeq::from_dense({2, 1}).degree() == 4);
    CHECK(ExpSeq().is_zero());
    CHECK_FALSE(ExpSeq::from_dense({1}).is_zero());
}

TEST_CASE("componentwise addition") {
    const ExpSeq zero;
    const ExpSeq a = ExpSeq::from_dense({1});
    CHECK(add(a, zero) == a);
    CHECK(add(a, a) == ExpSeq::from_dense({2}));
    CHECK(add(ExpSeq::from_dense({1, 1}), ExpSeq::from_dense({0, 2})) ==
          ExpSeq::from_dense({1, 3}));
}

TEST_CASE("degree is additive") {
    lnd::Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> da(static_cast<size_t>(rng.range(0, 5)));
        std::vector<int> db(static_cast<size_t>(rng.range(0, 5)));
        for (auto& x : da) x = static_cast<int>(rng.range(0, 3));
        for (auto& x : db) x = static_cast<int>(rng.range(0, 3));
        const ExpSeq a = ExpSeq::from_dense(da), b = ExpSeq::from_dense(db);
        CHECK(add(a, b).degree() == a.degree() + b.degree());
    }
}

TEST_CASE("enumeration matches partition counts and has no duplicates") {
    const auto seqs = lnd::enumerate_up_to(10);
    std::set<ExpSeq> seen(seqs.begin(), seqs.end());
    CHECK(seen.size() == seqs.size());
    for (long d = 0; d <= 10; ++d) {
        long count = 0;
        for (const auto& s : seqs)
            if (s.degree() == d) ++count;
        CHECK(count == partition_count(d));
    }
    // Canonical order: nondecreasing degree, lexicographic sparse form inside.
    for (size_t i = 1; i < seqs.size(); ++i) CHECK(seqs[i - 1] < seqs[i]);
}

TEST_CASE("enumeration fixtures") {
    CHECK(lnd::enumerate_up_to(0) == std::vector<ExpSeq>{ExpSeq()});
    CHECK(lnd::enumerate_up_to(1) ==
          std::vector<ExpSeq>{ExpSeq(), ExpSeq::from_dense({1})});
    long at_four = 0;
    for (const auto& s : lnd::enumerate_up_to(4))
        if (s.degree() == 4) ++at_four;
    CHECK(at_four == 5);
}

TEST_CASE("splittings") {
    const auto zero_split = lnd::splittings(ExpSeq());
    REQUIRE(zero_split.size() == 1);
    CHECK(zero_split[0].first.is_zero());
    CHECK(zero_split[0].second.is_zero());

    const auto one_split = lnd::splittings(ExpSeq::from_dense({1}));
    REQUIRE(one_split.size() == 2);
    CHECK(one_split[0].first.is_zero());
    CHECK(one_split[0].second == ExpSeq::from_dense({1}));
    CHECK(one_split[1].first == ExpSeq::from_dense({1}));
    CHECK(one_split[1].second.is_zero());

    CHECK(lnd::splittings(ExpSeq::from_dense({2, 1})).size() == 6);
}

TEST_CASE("splittings pair count and sums") {
    for (const auto& alpha : lnd::enumerate_up_to(6)) {
        const auto splits = lnd::splittings(alpha);
        long expected = 1;
        for (const auto& [idx, mult] : alpha.terms()) expected *= mult + 1;
        CHECK(static_cast<long>(splits.size()) == expected);
        std::set<std::pair<ExpSeq, ExpSeq>> uniq;
        for (const auto& [beta, gamma] : splits) {
            CHECK(add(beta, gamma) == alpha);
            uniq.insert({beta, gamma});
        }
        CHECK(uniq.size() == splits.size());
    }
}

TEST_CASE("textual round trip") {
    CHECK(ExpSeq().to_string() == "[]");
    CHECK(ExpSeq::from_dense({2, 1}).to_string() == "[2,1]");
    CHECK(ExpSeq::parse("[]") == ExpSeq());
    CHECK(ExpSeq::parse("[2, 1]") == ExpSeq::from_dense({2, 1}));
    CHECK(ExpSeq::parse("[0,0,3,0]") == ExpSeq::from_dense({0, 0, 3}));
    CHECK_THROWS(ExpSeq::parse("2,1"));
    CHECK_THROWS(ExpSeq::parse("[-1]"));
}

TEST_CASE("tuple enumeration respects the bound") {
    const auto tuples = lnd::enumerate_tuples(2, 3);
    std::set<std::vector<ExpSeq>> seen(tuples.begin(), tuples.end());
    CHECK(seen.size() == tuples.size());
    long expected = 0;
    for (const auto& a : lnd::enumerate_up_to(3))
        for (const auto& b : lnd::enumerate_up_to(3))
            if (a.degree() + b.degree() <= 3) ++expected;
    CHECK(static_cast<long>(tuples.size()) == expected);
    for (const auto& t : tuples) {
        long total = 0;
        for (const auto& s : t) total += s.degree();
        CHECK(total <= 3);
    }
}
