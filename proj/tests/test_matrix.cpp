#include "oracles.hpp"

#include "macc/matrix.hpp"

#include <doctest.h>

#include <random>

using namespace macc;

namespace {

FieldMatrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng)
{
    FieldMatrix a(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            a(i, j) = static_cast<Symbol>(rng() & (f.order() - 1));
        }
    }
    return a;
}

FieldMatrix random_invertible(const Field& f, std::size_t n, std::mt19937_64& rng)
{
    for (;;) {
        FieldMatrix a = random_matrix(f, n, n, rng);
        if (n > 7 || oracle::det(f, a) != 0) {
            if (mat_rank(f, a) == n) {
                return a;
            }
        }
    }
}

} // namespace

TEST_CASE("mat_mul matches the triple loop")
{
    std::mt19937_64 rng(1);
    for (int m : {1, 3, 8, 16}) {
        const Field f(m);
        for (int trial = 0; trial < 20; ++trial) {
            const FieldMatrix a = random_matrix(f, 1 + rng() % 6, 1 + rng() % 6, rng);
            const FieldMatrix b = random_matrix(f, a.cols(), 1 + rng() % 6, rng);
            CHECK(mat_mul(f, a, b) == oracle::matmul(f, a, b));
        }
    }
    const Field f(3);
    const FieldMatrix a(2, 3, {1, 2, 3, 4, 5, 6});
    CHECK(mat_mul(f, a, FieldMatrix::identity(3)) == a);
    CHECK_THROWS_AS(mat_mul(f, a, a), std::invalid_argument);
}

TEST_CASE("vec_mul equals a one-row product")
{
    const Field f(4);
    std::mt19937_64 rng(2);
    const FieldMatrix g = random_matrix(f, 3, 5, rng);
    const std::vector<Symbol> v{7, 0, 12};
    const FieldMatrix row(1, 3, v);
    CHECK(vec_mul(f, v, g) == oracle::matmul(f, row, g).entries());
}

TEST_CASE("rank agrees with determinants")
{
    std::mt19937_64 rng(3);
    const Field f(2);
    for (int trial = 0; trial < 200; ++trial) {
        const FieldMatrix a = random_matrix(f, 3, 3, rng);
        CHECK((mat_rank(f, a) == 3) == (oracle::det(f, a) != 0));
    }
    CHECK(mat_rank(f, FieldMatrix(4, 4)) == 0);
    CHECK(mat_rank(f, FieldMatrix::identity(5)) == 5);
}

TEST_CASE("rank is invariant under row swaps and nonzero scaling")
{
    std::mt19937_64 rng(4);
    const Field f(5);
    for (int trial = 0; trial < 30; ++trial) {
        FieldMatrix a = random_matrix(f, 4, 6, rng);
        for (std::size_t j = 0; j < 6; ++j) {
            a(3, j) = Field::add(a(0, j), f.mul(5, a(1, j))); // force a dependency
        }
        const std::size_t rank = mat_rank(f, a);
        CHECK(rank <= 3);
        FieldMatrix b = a;
        for (std::size_t j = 0; j < 6; ++j) {
            std::swap(b(0, j), b(2, j));
            b(1, j) = f.mul(b(1, j), 9);
        }
        CHECK(mat_rank(f, b) == rank);
        CHECK(mat_rank(f, a.transpose()) == rank);
    }
}

TEST_CASE("solve recovers a planted solution")
{
    std::mt19937_64 rng(5);
    for (int m : {1, 4, 8, 16}) {
        const Field f(m);
        for (std::size_t n : {1U, 2U, 5U, 12U, 20U}) {
            const FieldMatrix a = random_invertible(f, n, rng);
            const FieldMatrix x = random_matrix(f, n, 1, rng);
            const FieldMatrix y = oracle::matmul(f, a, x);
            const SolveResult res = mat_solve(f, a, y.entries());
            REQUIRE(res.status == SolveStatus::Unique);
            CHECK(res.x == x.entries());
        }
    }
}

TEST_CASE("solve reports inconsistent and underdetermined systems")
{
    const Field f(3);
    const FieldMatrix zero(2, 2);
    const std::vector<Symbol> y{1, 0};
    CHECK(mat_solve(f, zero, y).status == SolveStatus::Inconsistent);
    const std::vector<Symbol> y0{0, 0};
    CHECK(mat_solve(f, zero, y0).status == SolveStatus::Underdetermined);
    const FieldMatrix eye = FieldMatrix::identity(3);
    const std::vector<Symbol> v{1, 2, 3};
    const SolveResult res = mat_solve(f, eye, v);
    CHECK(res.status == SolveStatus::Unique);
    CHECK(res.x == v);
    // x1 + x2 = 1 and x1 + x2 = 2 contradict each other
    const FieldMatrix two(2, 2, {1, 1, 1, 1});
    const std::vector<Symbol> y12{1, 2};
    CHECK(mat_solve(f, two, y12).status == SolveStatus::Inconsistent);
}

TEST_CASE("inverse times matrix is the identity")
{
    std::mt19937_64 rng(6);
    const Field f(8);
    for (std::size_t n : {1U, 3U, 7U, 15U}) {
        const FieldMatrix a = random_invertible(f, n, rng);
        CHECK(oracle::matmul(f, a, mat_inverse(f, a)) == FieldMatrix::identity(n));
    }
    CHECK_THROWS_AS(mat_inverse(f, FieldMatrix(2, 2, {1, 1, 1, 1})), std::domain_error);
}

TEST_CASE("RowReducer tracks determined unknowns")
{
    const Field f(4);
    RowReducer rr(f, 3, 2);
    const std::vector<Symbol> sum{1, 1, 0};
    const std::vector<Symbol> p1{5, 6};
    CHECK(rr.add_row(sum, p1));
    CHECK_FALSE(rr.determined(0));
    CHECK_FALSE(rr.determined(1));
    CHECK_FALSE(rr.determined(2));
    CHECK_THROWS_AS(rr.value(0), std::logic_error);

    const std::pair<std::size_t, Symbol> only1[] = {{1, 1}};
    const std::vector<Symbol> p2{3, 3};
    CHECK(rr.add_sparse_row(only1, p2));
    CHECK(rr.determined(0));
    CHECK(rr.determined(1));
    CHECK_FALSE(rr.determined(2));
    CHECK(std::vector<Symbol>(rr.value(0).begin(), rr.value(0).end()) == std::vector<Symbol>{6, 5});
    CHECK(std::vector<Symbol>(rr.value(1).begin(), rr.value(1).end()) == p2);

    // dependent and consistent
    CHECK_FALSE(rr.add_row(sum, p1));
    CHECK_FALSE(rr.inconsistent());
    // dependent and inconsistent
    const std::vector<Symbol> bad{0, 1};
    CHECK_FALSE(rr.add_row(sum, bad));
    CHECK(rr.inconsistent());
    CHECK(rr.rank() == 2);
}

TEST_CASE("RowReducer agrees with mat_solve on random systems")
{
    std::mt19937_64 rng(7);
    const Field f(6);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + rng() % 8;
        const FieldMatrix a = random_invertible(f, n, rng);
        const FieldMatrix x = random_matrix(f, n, 1, rng);
        const FieldMatrix y = oracle::matmul(f, a, x);
        RowReducer rr(f, n, 1);
        std::size_t determined_before = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const std::vector<Symbol> payload{y(i, 0)};
            rr.add_row(a.row(i), payload);
            std::size_t determined = 0;
            for (std::size_t j = 0; j < n; ++j) {
                determined += rr.determined(j) ? 1 : 0;
            }
            CHECK(determined >= determined_before);
            determined_before = determined;
        }
        REQUIRE(rr.rank() == n);
        for (std::size_t j = 0; j < n; ++j) {
            CHECK(rr.value(j)[0] == x(j, 0));
        }
    }
}
