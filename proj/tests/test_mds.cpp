#include "oracles.hpp"

#include "macc/combinatorics.hpp"
#include "macc/mds.hpp"

#include <doctest.h>

#include <random>

using namespace macc;

namespace {

FieldMatrix columns(const FieldMatrix& g, const std::vector<int>& cols1)
{
    std::vector<std::size_t> cols;
    for (int c : cols1) {
        cols.push_back(static_cast<std::size_t>(c - 1));
    }
    return g.select_columns(cols);
}

} // namespace

TEST_CASE("every k columns of an RS generator have a nonzero determinant")
{
    for (auto [k, n, m] : {std::tuple{2, 4, 3}, std::tuple{3, 7, 3}, std::tuple{4, 8, 3}, std::tuple{3, 16, 4}}) {
        const Field f(m);
        for (const MdsCode& code : {rs_generator(k, n, f), systematic_rs(k, n, f)}) {
            for (const auto& s : enumerate_ksubsets(n, k)) {
                REQUIRE(oracle::det(f, columns(code.generator, s.members())) != 0);
            }
            CHECK(check_mds_property(code));
        }
    }
}

TEST_CASE("RS generator is the Vandermonde matrix on points 0..n-1")
{
    const Field f(3);
    const MdsCode code = rs_generator(3, 5, f);
    for (std::size_t j = 0; j < 5; ++j) {
        CHECK(code.generator(0, j) == 1);
        CHECK(code.generator(1, j) == j);
        CHECK(code.generator(2, j) == oracle::poly_mul(static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(j),
                                                        f.polynomial(), 3));
    }
    CHECK_THROWS_AS(rs_generator(2, 9, f), std::invalid_argument);
    CHECK_THROWS_AS(rs_generator(0, 3, f), std::invalid_argument);
    CHECK_THROWS_AS(rs_generator(4, 3, f), std::invalid_argument);
}

TEST_CASE("systematic form spans the same code")
{
    const Field f(4);
    for (auto [k, n] : {std::pair{1, 3}, std::pair{2, 3}, std::pair{3, 10}, std::pair{5, 16}}) {
        const MdsCode plain = rs_generator(k, n, f);
        const MdsCode sys = systematize(plain);
        CHECK(sys.systematic);
        for (std::size_t i = 0; i < sys.k; ++i) {
            for (std::size_t j = 0; j < sys.k; ++j) {
                CHECK(sys.generator(i, j) == (i == j ? 1 : 0));
            }
        }
        // G_plain = G_plain[:, :k] * G_sys, checked with the reference product
        std::vector<std::size_t> first(sys.k);
        for (std::size_t i = 0; i < sys.k; ++i) {
            first[i] = i;
        }
        CHECK(oracle::matmul(f, plain.generator.select_columns(first), sys.generator) == plain.generator);
        CHECK(systematize(sys).generator == sys.generator);
        const FieldMatrix p = parity_block(sys);
        CHECK(p.rows() == sys.k);
        CHECK(p.cols() == sys.n - sys.k);
    }
}

TEST_CASE("systematic [4,2] code encodes to message then parities")
{
    const Field f(3);
    const MdsCode code = systematic_rs(2, 4, f);
    const std::vector<Symbol> msg{5, 3};
    const auto cw = encode(msg, code);
    REQUIRE(cw.size() == 4);
    CHECK(cw[0] == 5);
    CHECK(cw[1] == 3);
    const FieldMatrix p = parity_block(code);
    for (std::size_t j = 0; j < 2; ++j) {
        CHECK(cw[2 + j] == (oracle::poly_mul(5, p(0, j), f.polynomial(), 3) ^ oracle::poly_mul(3, p(1, j), f.polynomial(), 3)));
    }
    const std::vector<Symbol> zero{0, 0};
    CHECK(encode(zero, code) == std::vector<Symbol>(4, 0));
}

TEST_CASE("erasure decoding from every k-subset of positions")
{
    std::mt19937_64 rng(8);
    const Field f(4);
    for (const MdsCode& code : {rs_generator(3, 6, f), systematic_rs(3, 6, f), systematic_rs(4, 11, f)}) {
        std::vector<Symbol> msg(code.k);
        for (auto& s : msg) {
            s = static_cast<Symbol>(rng() & 15);
        }
        const auto cw = encode(msg, code);
        for (const auto& s : enumerate_ksubsets(static_cast<int>(code.n), static_cast<int>(code.k))) {
            std::vector<std::pair<std::size_t, Symbol>> known;
            for (int c : s.members()) {
                known.emplace_back(c - 1, cw[static_cast<std::size_t>(c - 1)]);
            }
            REQUIRE(erasure_decode(known, code) == msg);
        }
    }
}

TEST_CASE("erasure decoding errors")
{
    const Field f(3);
    const MdsCode code = systematic_rs(3, 6, f);
    const std::vector<Symbol> msg{1, 2, 3};
    const auto cw = encode(msg, code);
    const std::vector<std::pair<std::size_t, Symbol>> too_few{{0, cw[0]}, {4, cw[4]}};
    CHECK_THROWS_AS(erasure_decode(too_few, code), ErasureError);
    const std::vector<std::pair<std::size_t, Symbol>> repeated{{0, cw[0]}, {0, cw[0]}, {4, cw[4]}};
    CHECK_THROWS_AS(erasure_decode(repeated, code), ErasureError);
    const std::vector<std::pair<std::size_t, Symbol>> conflicting{
        {0, cw[0]}, {1, cw[1]}, {2, cw[2]}, {5, static_cast<Symbol>(cw[5] ^ 1)}};
    CHECK_THROWS_AS(erasure_decode(conflicting, code), ErasureError);
    const std::vector<std::pair<std::size_t, Symbol>> extra{{0, cw[0]}, {1, cw[1]}, {3, cw[3]}, {5, cw[5]}};
    CHECK(erasure_decode(extra, code) == msg);
}

TEST_CASE("block encoding and decoding act column by column")
{
    std::mt19937_64 rng(10);
    const Field f(5);
    const MdsCode code = systematic_rs(3, 7, f);
    std::vector<std::vector<Symbol>> blocks(3, std::vector<Symbol>(9));
    for (auto& b : blocks) {
        for (auto& s : b) {
            s = static_cast<Symbol>(rng() & 31);
        }
    }
    const auto coded = encode_blocks(blocks, code);
    REQUIRE(coded.size() == 7);
    for (std::size_t col = 0; col < 9; ++col) {
        const std::vector<Symbol> msg{blocks[0][col], blocks[1][col], blocks[2][col]};
        const auto cw = encode(msg, code);
        for (std::size_t j = 0; j < 7; ++j) {
            CHECK(coded[j][col] == cw[j]);
        }
    }
    std::vector<std::pair<std::size_t, std::span<const Symbol>>> known{
        {6, coded[6]}, {2, coded[2]}, {4, coded[4]}};
    CHECK(erasure_decode_blocks(known, code) == blocks);
}

TEST_CASE("columns_independent flags a repeated column")
{
    const Field f(2);
    MdsCode code = rs_generator(2, 4, f);
    const std::vector<std::size_t> ok{0, 3};
    CHECK(columns_independent(code, ok));
    for (std::size_t i = 0; i < 2; ++i) {
        code.generator(i, 3) = code.generator(i, 0);
    }
    CHECK_FALSE(columns_independent(code, ok));
    CHECK_FALSE(check_mds_property(code));
}
