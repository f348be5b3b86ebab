#include "oracles.hpp"

#include "macc/combinatorics.hpp"
#include "macc/rational.hpp"

#include <doctest.h>

#include <algorithm>

using namespace macc;

TEST_CASE("binomials match Pascal's triangle")
{
    for (int n = 0; n <= 60; ++n) {
        for (int k = 0; k <= n + 1; ++k) {
            REQUIRE(binom(n, k) == oracle::binom(n, k));
        }
    }
    CHECK(binom(4, 2) == 6);
    CHECK(binom(8, 3) == 56);
    CHECK(binom(2, 3) == 0);
    CHECK(binom_signed(3, -1) == 0);
    CHECK(binom_signed(-1, 2) == 0);
    CHECK(binom(100, 50) == BigInt("100891344545564193334812497256"));
    CHECK(factorial(5) == 120);
    CHECK(factorial_u64(0) == 1);
    CHECK_THROWS(binom_u64(100, 50));
}

TEST_CASE("k-subsets are listed in lexicographic order")
{
    const auto s = enumerate_ksubsets(4, 2);
    std::vector<std::string> names;
    for (const auto& x : s) {
        names.push_back(x.compact());
    }
    CHECK(names == std::vector<std::string>{"12", "13", "14", "23", "24", "34"});
    for (int C = 1; C <= 9; ++C) {
        for (int k = 0; k <= C; ++k) {
            const auto all = enumerate_ksubsets(C, k);
            REQUIRE(all.size() == oracle::binom(C, k));
            CHECK(std::is_sorted(all.begin(), all.end()));
            CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
            for (std::size_t i = 0; i < all.size(); ++i) {
                CHECK(all[i].size() == k);
                CHECK(subset_rank(all[i]) == i + 1);
                CHECK(subset_unrank(C, k, i + 1) == all[i]);
            }
        }
    }
}

TEST_CASE("rank and unrank worked values")
{
    CHECK(subset_rank(Subset(4, {1, 2})) == 1);
    CHECK(subset_rank(Subset(4, {3, 4})) == 6);
    CHECK(subset_unrank(5, 2, 5) == Subset(5, {2, 3}));
    CHECK(subset_unrank(4, 2, 6) == Subset(4, {3, 4}));
    CHECK_THROWS_AS(subset_unrank(4, 2, 0), std::out_of_range);
    CHECK_THROWS_AS(subset_unrank(4, 2, 7), std::out_of_range);
}

TEST_CASE("phi is the position inside the sorted set")
{
    const Subset t(5, {2, 4, 5});
    CHECK(phi(2, t) == 1);
    CHECK(phi(4, t) == 2);
    CHECK(phi(5, t) == 3);
    CHECK_THROWS_AS(phi(3, t), std::invalid_argument);
    CHECK(phi(3, Subset(4, {1, 3, 4})) == 2);
    for (const auto& s : enumerate_ksubsets(6, 3)) {
        const auto members = s.members();
        for (std::size_t i = 0; i < members.size(); ++i) {
            CHECK(phi(members[i], s) == static_cast<int>(i) + 1);
        }
    }
}

TEST_CASE("set operations")
{
    const Subset a(6, {1, 3, 5});
    const Subset b(6, {3, 4});
    CHECK(a.unite(b) == Subset(6, {1, 3, 4, 5}));
    CHECK(a.minus(b) == Subset(6, {1, 5}));
    CHECK(a.intersect(b) == Subset(6, {3}));
    CHECK_FALSE(a.disjoint(b));
    CHECK(Subset(6, {3}).subset_of(a));
    CHECK(a.contains(5));
    CHECK_FALSE(a.contains(2));
    CHECK(Subset(4, {1, 4}) < Subset(4, {2, 3}));
}

TEST_CASE("SubsetTable index lookup")
{
    const SubsetTable table(6, 3);
    CHECK(table.size() == 20);
    for (std::size_t i = 0; i < table.size(); ++i) {
        CHECK(table.index_of(table.at(i)) == i);
    }
    CHECK_THROWS_AS(table.index_of(Subset(6, {1, 2})), std::out_of_range);
}

TEST_CASE("rational arithmetic")
{
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(3, -6).denominator() == 2);
    CHECK((Rational(3, 4) * Rational(2, 3)).str() == "1/2");
    CHECK(Rational(6).str() == "6");
    CHECK(Rational(-7, 3).str() == "-7/3");
    CHECK(Rational(5, 2).ceil() == 3);
    CHECK(Rational(6, 2).ceil() == 3);
    CHECK(Rational(-5, 2).ceil() == -2);
    CHECK(Rational(1, 3).decimal(4) == "0.3333");
    CHECK(Rational(2, 3).decimal(2) == "0.67");
    CHECK(Rational::parse("6/5") == Rational(6, 5));
    CHECK(Rational::parse("-3") == Rational(-3));
    CHECK_THROWS(Rational::parse("x"));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(rmin(Rational(2), Rational(1, 2)) == Rational(1, 2));
    CHECK(positive_part(Rational(-1)) == 0);
}
