#include "oracles.hpp"

#include "macc/field.hpp"

#include <doctest.h>

#include <random>

using macc::Field;
using macc::Symbol;

TEST_CASE("multiplication matches carry-less product modulo the polynomial")
{
    for (int m = 1; m <= 8; ++m) {
        const Field f(m);
        for (std::uint32_t a = 0; a < f.order(); ++a) {
            for (std::uint32_t b = 0; b < f.order(); ++b) {
                REQUIRE(f.mul(static_cast<Symbol>(a), static_cast<Symbol>(b))
                        == oracle::poly_mul(a, b, f.polynomial(), m));
            }
        }
    }
    std::mt19937_64 rng(3);
    for (int m = 9; m <= 16; ++m) {
        const Field f(m);
        for (int i = 0; i < 20000; ++i) {
            const auto a = static_cast<Symbol>(rng() & (f.order() - 1));
            const auto b = static_cast<Symbol>(rng() & (f.order() - 1));
            REQUIRE(f.mul(a, b) == oracle::poly_mul(a, b, f.polynomial(), m));
        }
    }
}

TEST_CASE("committed polynomials are primitive")
{
    for (int m = 1; m <= 16; ++m) {
        const std::uint32_t p = macc::primitive_polynomial(m);
        CHECK((p >> m) == 1U);
        CHECK(oracle::order_of_x(p, m) == (1U << m) - 1);
    }
}

TEST_CASE("committed polynomial is the smallest primitive one")
{
    for (int m = 2; m <= 11; ++m) {
        const std::uint32_t chosen = macc::primitive_polynomial(m);
        for (std::uint32_t p = (1U << m) | 1U; p < chosen; p += 2) {
            CHECK(oracle::order_of_x(p, m) != (1U << m) - 1);
        }
    }
}

TEST_CASE("field axioms on random triples")
{
    std::mt19937_64 rng(5);
    for (int m = 1; m <= 16; ++m) {
        const Field f(m);
        const std::uint32_t mask = f.order() - 1;
        for (int i = 0; i < 3000; ++i) {
            const auto a = static_cast<Symbol>(rng() & mask);
            const auto b = static_cast<Symbol>(rng() & mask);
            const auto c = static_cast<Symbol>(rng() & mask);
            REQUIRE(f.mul(a, b) == f.mul(b, a));
            REQUIRE(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
            REQUIRE(f.mul(a, Field::add(b, c)) == Field::add(f.mul(a, b), f.mul(a, c)));
            REQUIRE(f.mul(a, 1) == a);
            REQUIRE(Field::add(a, a) == 0);
            if (a != 0) {
                REQUIRE(f.mul(a, f.inv(a)) == 1);
                REQUIRE(f.div(f.mul(a, b), a) == b);
            }
        }
    }
}

TEST_CASE("every nonzero element of GF(2^8) satisfies a^255 = 1")
{
    const Field f(8);
    for (std::uint32_t a = 1; a < 256; ++a) {
        CHECK(f.pow(static_cast<Symbol>(a), 255) == 1);
    }
    CHECK(f.pow(0, 0) == 1);
    CHECK(f.pow(0, 3) == 0);
}

TEST_CASE("inverse is exhaustive for small fields")
{
    for (int m = 1; m <= 12; ++m) {
        const Field f(m);
        for (std::uint32_t a = 1; a < f.order(); ++a) {
            REQUIRE(oracle::poly_mul(a, f.inv(static_cast<Symbol>(a)), f.polynomial(), m) == 1);
        }
    }
}

TEST_CASE("worked values")
{
    const Field f(3);
    CHECK(f.mul(2, 2) == 4);
    CHECK(f.mul(4, 2) == 3); // x^3 = x + 1
    CHECK(Field(8).mul(0x80, 2) == 0x1d);
}

TEST_CASE("axpy and scale agree with elementwise arithmetic")
{
    const Field f(10);
    std::mt19937_64 rng(9);
    std::vector<Symbol> x(37);
    std::vector<Symbol> y(37);
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = static_cast<Symbol>(rng() & 1023);
        y[i] = static_cast<Symbol>(rng() & 1023);
    }
    const Symbol c = 517;
    auto expect = y;
    for (std::size_t i = 0; i < x.size(); ++i) {
        expect[i] ^= static_cast<Symbol>(oracle::poly_mul(c, x[i], f.polynomial(), 10));
    }
    f.axpy(y.data(), x.data(), x.size(), c);
    CHECK(y == expect);
    auto z = x;
    f.scale(z.data(), z.size(), c);
    for (std::size_t i = 0; i < x.size(); ++i) {
        CHECK(z[i] == oracle::poly_mul(c, x[i], f.polynomial(), 10));
    }
}

TEST_CASE("invalid degrees and zero inverse throw")
{
    CHECK_THROWS_AS(macc::field_make(0), std::out_of_range);
    CHECK_THROWS_AS(macc::field_make(17), std::out_of_range);
    CHECK_THROWS_AS(Field(4).inv(0), std::domain_error);
    CHECK(&Field::of_degree(8) == &Field::of_degree(8));
    CHECK(macc::degree_for_length(1) == 1);
    CHECK(macc::degree_for_length(2) == 1);
    CHECK(macc::degree_for_length(3) == 2);
    CHECK(macc::degree_for_length(256) == 8);
    CHECK(macc::degree_for_length(257) == 9);
}
