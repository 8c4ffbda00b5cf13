#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lnd/linalg.hpp"
#include "lnd/util.hpp"

using lnd::Int;
using lnd::IntMatrix;
using lnd::IntVec;
using lnd::ZRing;

namespace {

// Independent determinant via fraction-free (Bareiss) elimination; used to
// certify unimodularity of the transforms.
Int bareiss_det(IntMatrix m) {
    const int n = m.rows();
    REQUIRE(m.cols() == n);
    Int prev(1), sign(1);
    for (int k = 0; k < n - 1; ++k) {
        if (sgn(m.at(k, k)) == 0) {
            int swap = -1;
            for (int i = k + 1; i < n; ++i)
                if (sgn(m.at(i, k)) != 0) {
                    swap = i;
                    break;
                }
            if (swap < 0) return Int(0);
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int v = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m.at(i, j) = v;
            }
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    IntMatrix m(ZRing{}, static_cast<int>(rows.size()),
                rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = Int(rows[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    return m;
}

void check_smith_invariants(const IntMatrix& m) {
    const auto s = lnd::smith_normal_form(m);
    // D = U * M * V re-multiplied exactly.
    CHECK(s.U.mul(m).mul(s.V) == s.D);
    // Tracked inverses really invert.
    CHECK(s.U.mul(s.Uinv) == IntMatrix::identity(ZRing{}, m.rows()));
    CHECK(s.V.mul(s.Vinv) == IntMatrix::identity(ZRing{}, m.cols()));
    // Unimodularity.
    CHECK(abs(bareiss_det(s.U)) == 1);
    CHECK(abs(bareiss_det(s.V)) == 1);
    // Diagonal, non-negative, divisibility chain.
    const auto diag = s.diagonal();
    for (int i = 0; i < s.D.rows(); ++i)
        for (int j = 0; j < s.D.cols(); ++j)
            if (i != j) CHECK(sgn(s.D.at(i, j)) == 0);
    for (size_t i = 0; i + 1 < diag.size(); ++i) {
        CHECK(sgn(diag[i]) >= 0);
        if (sgn(diag[i]) == 0) CHECK(sgn(diag[i + 1]) == 0);
        else CHECK(mpz_divisible_p(diag[i + 1].get_mpz_t(), diag[i].get_mpz_t()));
    }
}

}  // namespace

TEST_CASE("smith fixtures") {
    const auto id3 = IntMatrix::identity(ZRing{}, 3);
    const auto s1 = lnd::smith_normal_form(id3);
    CHECK(s1.D == id3);

    // diag(2,3) has invariant factors 1, 6.
    const auto s2 = lnd::smith_normal_form(from_rows({{2, 0}, {0, 3}}));
    CHECK(s2.D.at(0, 0) == 1);
    CHECK(s2.D.at(1, 1) == 6);

    const auto zero = IntMatrix(ZRing{}, 2, 3);
    const auto s3 = lnd::smith_normal_form(zero);
    CHECK(s3.D.is_zero());
    check_smith_invariants(zero);
}

TEST_CASE("smith invariants on seeded random matrices") {
    lnd::Rng rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const int rows = static_cast<int>(rng.range(1, 7));
        const int cols = static_cast<int>(rng.range(1, 7));
        IntMatrix m(ZRing{}, rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m.at(i, j) = Int(rng.range(-9, 9));
        check_smith_invariants(m);
    }
}

TEST_CASE("integer kernel is exact") {
    const auto m = from_rows({{2, 4, 6}, {1, 2, 3}});
    const auto k = lnd::kernel_basis_int(m);
    CHECK(k.cols() == 2);
    for (int j = 0; j < k.cols(); ++j) CHECK(lnd::vec_is_zero(ZRing{}, m.mul_vec(k.col(j))));
}

TEST_CASE("integral solve decides divisibility, not rational solvability") {
    // 2x = 1 has no integer solution.
    CHECK_FALSE(lnd::solve_int(from_rows({{2}}), {Int(1)}).has_value());
    const auto sol = lnd::solve_int(from_rows({{2}}), {Int(6)});
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == 3);

    const auto m = from_rows({{2, 3}, {0, 5}});
    const IntVec b = {Int(7), Int(5)};  // y = 1, then 2x = 4
    const auto x = lnd::solve_int(m, b);
    REQUIRE(x.has_value());
    CHECK(m.mul_vec(*x) == b);
    CHECK_FALSE(lnd::solve_int(m, {Int(7), Int(10)}).has_value());
}

TEST_CASE("field elimination over Q") {
    using lnd::QRing;
    using lnd::Rat;
    QRing q;
    lnd::Matrix<QRing> m(q, 2, 3);
    m.at(0, 0) = Rat(1); m.at(0, 1) = Rat(2); m.at(0, 2) = Rat(3);
    m.at(1, 0) = Rat(2); m.at(1, 1) = Rat(4); m.at(1, 2) = Rat(6);
    CHECK(lnd::rank_field(m) == 1);
    const auto k = lnd::kernel_basis_field(m);
    CHECK(k.cols() == 2);
    for (int j = 0; j < k.cols(); ++j) CHECK(lnd::vec_is_zero(q, m.mul_vec(k.col(j))));

    const auto sol = lnd::solve_field(m, {Rat(3), Rat(6)});
    REQUIRE(sol.has_value());
    CHECK(m.mul_vec(*sol) == lnd::Vec<QRing>{Rat(3), Rat(6)});
    CHECK_FALSE(lnd::solve_field(m, {Rat(3), Rat(7)}).has_value());
}

TEST_CASE("field elimination over Z/p") {
    using lnd::ZpRing;
    ZpRing f7(7);
    lnd::Matrix<ZpRing> m(f7, 2, 2);
    m.at(0, 0) = 2; m.at(0, 1) = 1;
    m.at(1, 0) = 1; m.at(1, 1) = 3;  // det = 5, a unit mod 7
    CHECK(lnd::rank_field(m) == 2);
    const auto sol = lnd::solve_field(m, {1L, 0L});
    REQUIRE(sol.has_value());
    CHECK(m.mul_vec(*sol) == lnd::Vec<ZpRing>{1L, 0L});
}

TEST_CASE("subquotient over Z reports rank and torsion") {
    // 0 -> Z^2 --(0)--> Z^2 / image of diag(2, 0): Z/2 + Z quotient.
    const auto d_out = IntMatrix(ZRing{}, 1, 2);  // zero map, kernel = Z^2
    const auto d_in = from_rows({{2, 0}, {0, 0}});
    const auto res = lnd::subquotient(d_out, d_in);
    CHECK(res.free_rank == 1);
    REQUIRE(res.torsion.size() == 1);
    CHECK(res.torsion[0] == 2);
}

TEST_CASE("reduction modulo an image lattice") {
    const auto b = from_rows({{2, 0}, {0, 3}});
    const IntVec v = {Int(5), Int(-4)};
    const auto r = lnd::reduce_mod_image(b, v);
    // Distinct representatives of the same coset reduce identically.
    const IntVec v2 = {Int(1), Int(2)};
    CHECK(lnd::reduce_mod_image(b, v2) == r);
    // The difference lies in the lattice.
    CHECK(lnd::solve_int(b, lnd::vec_sub(ZRing{}, v, r)).has_value());
}

TEST_CASE("solution freedom counts free coordinates") {
    CHECK(lnd::solution_freedom(from_rows({{2, 4, 6}, {1, 2, 3}})) == 2);
    using lnd::QRing;
    lnd::Matrix<QRing> m(QRing{}, 1, 3);
    m.at(0, 0) = lnd::Rat(1);
    CHECK(lnd::solution_freedom(m) == 2);
}
