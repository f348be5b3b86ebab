#include "oracles.hpp"

#include "macc/analysis.hpp"
#include "macc/delivery.hpp"
#include "macc/placement.hpp"

#include <doctest.h>

#include <set>

using namespace macc;

TEST_CASE("configuration geometry")
{
    const SchemeConfig s1 = make_config(Scheme::Scheme1, 4, 2, 2, 6);
    CHECK(s1.scheme == Scheme::Scheme1);
    CHECK(s1.subpacketization == 12);
    CHECK(s1.file_length == 12);
    CHECK(s1.pieces_per_subfile() == 2);
    CHECK(s1.users() == 6);

    const SchemeConfig big = make_config(Scheme::Scheme1, 4, 2, 2, 6, 100);
    CHECK(big.file_length == 108);
    CHECK(big.piece_length() == 9);

    const SchemeConfig corner = make_config(Scheme::Scheme1, 4, 2, 3, 6);
    CHECK(corner.scheme == Scheme::Corner);
    CHECK(corner.subpacketization == 2);

    const SchemeConfig mkr = make_config(Scheme::Mkr, 4, 2, 2, 6);
    CHECK(mkr.subpacketization == 6);
    CHECK(mkr.pieces_per_subfile() == 1);

    const SchemeConfig s2 = make_config(Scheme::Scheme2, 5, 3, std::nullopt, 10);
    CHECK(s2.subpacketization == 5);
    // [2N - binom(4,3), N] = [16, 10] fits GF(16)
    CHECK(s2.field_degree == 4);

    const SchemeConfig small_t = make_config(Scheme::Scheme1, 5, 3, 2, 10);
    CHECK(small_t.rtilde() == 2);
    CHECK(small_t.subpacketization == 2 * 10);
}

TEST_CASE("invalid regimes are rejected")
{
    CHECK_THROWS_AS(make_config(Scheme::Scheme1, 4, 2, 4, 6), ConfigError);
    CHECK_THROWS_AS(make_config(Scheme::Scheme1, 4, 2, 0, 6), ConfigError);
    CHECK_THROWS_AS(make_config(Scheme::Scheme1, 4, 2, std::nullopt, 6), ConfigError);
    CHECK_THROWS_AS(make_config(Scheme::Mkr, 4, 4, 1, 6), ConfigError);
    CHECK_THROWS_AS(make_config(Scheme::Mkr, 4, 2, 5, 6), ConfigError);
    CHECK_THROWS_AS(make_config(Scheme::Scheme2, 4, 2, std::nullopt, 3), ConfigError);
    CHECK_THROWS_AS(make_config(Scheme::Corner, 4, 2, 2, 6), ConfigError);
    CHECK_THROWS_AS(make_config(Scheme::Mkr, 1, 1, 1, 6), ConfigError);
    CHECK_THROWS_AS(make_config(Scheme::Mkr, 4, 2, 1, 0), ConfigError);
    CHECK_THROWS_AS(parse_scheme("s3"), ConfigError);
    CHECK(parse_scheme("corner") == Scheme::Corner);
}

TEST_CASE("libraries are reproducible from the seed")
{
    const SchemeConfig config = make_config(Scheme::Scheme1, 4, 2, 2, 6, 48);
    const Library a = random_library(config, 7);
    const Library b = random_library(config, 7);
    const Library c = random_library(config, 8);
    CHECK(a == b);
    CHECK_FALSE(a == c);
    CHECK(a.count() == 6);
    CHECK(a.file_length() == 48);
    for (const auto& f : a.files) {
        for (Symbol s : f) {
            CHECK(config.field().contains(s));
        }
    }
    CHECK(zero_library(config).files[0] == std::vector<Symbol>(48, 0));
}

TEST_CASE("demand validation")
{
    const SchemeConfig config = make_config(Scheme::Mkr, 4, 2, 2, 3);
    CHECK_NOTHROW(validate_demands(config, DemandVector{{1, 2, 3, 1, 2, 3}}));
    CHECK_THROWS_AS(validate_demands(config, DemandVector{{1, 2, 3}}), ConfigError);
    CHECK_THROWS_AS(validate_demands(config, DemandVector{{1, 2, 3, 4, 1, 1}}), ConfigError);
    CHECK_THROWS_AS(validate_demands(config, DemandVector{{0, 2, 3, 1, 1, 1}}), ConfigError);
    CHECK(DemandVector{{1, 2, 2, 1, 3, 3}}.distinct() == 3);
}

TEST_CASE("round plans partition the inner codeword indices")
{
    for (int C = 2; C <= 8; ++C) {
        for (int r = 1; r < C; ++r) {
            for (int t = 1; t <= C - r + 1; ++t) {
                const int R = std::min(r, t);
                const auto plans = scheme1_round_plan(C, r, t);
                REQUIRE(plans.size() == static_cast<std::size_t>(R));
                const std::uint64_t total = factorial_u64(R) * static_cast<std::uint64_t>(t);
                std::vector<int> hits(total + 1, 0);
                for (const auto& plan : plans) {
                    for (int pos = 1; pos <= t; ++pos) {
                        for (std::uint64_t l = 0; l < plan.span; ++l) {
                            const std::uint64_t idx = plan.first_index(pos) + l;
                            REQUIRE(idx >= 1);
                            REQUIRE(idx <= total);
                            ++hits[idx];
                        }
                    }
                }
                for (std::uint64_t i = 1; i <= total; ++i) {
                    CHECK_MESSAGE(hits[i] == 1, "C=" << C << " r=" << r << " t=" << t << " index " << i);
                }
            }
        }
    }
}

TEST_CASE("round plan for r~ = 3 consumes 2t, t and 3t indices")
{
    const int t = 3;
    const auto plans = scheme1_round_plan(6, 3, t);
    REQUIRE(plans.size() == 3);
    CHECK(plans[0].span * t == 2 * t);
    CHECK(plans[1].span * t == t);
    CHECK(plans[2].span * t == 3 * t);
    CHECK(plans[1].base == 6);  // t * 3!/3
    CHECK(plans[2].base == 9);  // t * 3!/2
    CHECK(plans[1].B == oracle::binom(5, 2));
    // D_1 = binom(2,2) binom(3,0) and D_2 adds binom(2,1) binom(3,1)
    CHECK(plans[1].D == 1);
    CHECK(plans[2].D == 1 + 2 * 3);
}

TEST_CASE("MKR placement of the four-cache example")
{
    const SchemeConfig config = make_config(Scheme::Mkr, 4, 2, 2, 6);
    const Library lib = random_library(config, 1);
    const CacheContents z = place(config, lib);
    REQUIRE(z.caches.size() == 4);
    std::set<std::string> cache1;
    for (const auto& b : z.caches[0]) {
        CHECK(b.label.kind == BlockKind::Subfile);
        cache1.insert(std::to_string(b.label.file) + ":" + subset_unrank(4, 2, b.label.subset + 1).compact());
    }
    std::set<std::string> expect;
    for (int n = 1; n <= 6; ++n) {
        for (const char* T : {"12", "13", "14"}) {
            expect.insert(std::to_string(n) + ":" + T);
        }
    }
    CHECK(cache1 == expect);
    CHECK(measured_memory(z, config.file_length) == 3);
    CHECK(labels_consistent(config, lib, z));
}

TEST_CASE("Scheme 1 placement of the four-cache example")
{
    const SchemeConfig config = make_config(Scheme::Scheme1, 4, 2, 2, 6);
    const Library lib = random_library(config, 2);
    const CacheContents z = place(config, lib);
    for (int c = 1; c <= 4; ++c) {
        const auto& cache = z.caches[static_cast<std::size_t>(c - 1)];
        CHECK(cache.size() == 5 * 6);
        int uncoded = 0;
        int parity = 0;
        for (const auto& b : cache) {
            if (b.label.kind == BlockKind::RoundZero) {
                // systematic inner code: round 0 blocks are plain mini-subfiles
                REQUIRE(b.label.terms.size() == 1);
                CHECK(b.label.terms[0].coeff == 1);
                CHECK(subset_unrank(4, 2, b.label.subset + 1).contains(c));
                CHECK(b.label.index == phi(c, subset_unrank(4, 2, b.label.subset + 1)));
                ++uncoded;
            } else {
                CHECK(b.label.kind == BlockKind::RoundParity);
                CHECK(b.label.round == 1);
                ++parity;
            }
        }
        CHECK(uncoded == 3 * 6);
        CHECK(parity == 2 * 6);
        CHECK(measured_memory(z, config.file_length, c) == Rational(5, 2));
    }
    CHECK(labels_consistent(config, lib, z));
}

TEST_CASE("occupancy equals the closed-form memory for every small configuration")
{
    for (int C = 2; C <= 6; ++C) {
        for (int r = 1; r < C; ++r) {
            for (int t = 1; t <= C - r + 1; ++t) {
                const SchemeConfig config = make_config(Scheme::Scheme1, C, r, t, 2);
                const Library lib = random_library(config, 3);
                const CacheContents z = place(config, lib);
                for (int c = 1; c <= C; ++c) {
                    REQUIRE(measured_memory(z, config.file_length, c) == scheme1_memory(C, r, t, 2));
                }
                REQUIRE(labels_consistent(config, lib, z));
            }
            for (int t = 1; t <= C; ++t) {
                const SchemeConfig config = make_config(Scheme::Mkr, C, r, t, 2);
                const CacheContents z = place(config, random_library(config, 4));
                REQUIRE(measured_memory(z, config.file_length) == Rational(2 * t, C));
            }
            const int kp = static_cast<int>(oracle::binom(C - 1, r));
            const SchemeConfig s2 = make_config(Scheme::Scheme2, C, r, std::nullopt, kp + 2);
            const Library lib = random_library(s2, 5);
            const CacheContents z = place(s2, lib);
            REQUIRE(measured_memory(z, s2.file_length) == Rational(2, C));
            REQUIRE(labels_consistent(s2, lib, z));
        }
    }
}

TEST_CASE("corner placement stores one coded column per cache")
{
    const SchemeConfig config = make_config(Scheme::Corner, 4, 2, std::nullopt, 6);
    const Library lib = random_library(config, 6);
    const CacheContents z = place(config, lib);
    for (const auto& cache : z.caches) {
        CHECK(cache.size() == 6);
    }
    CHECK(measured_memory(z, config.file_length) == 3);
    CHECK(labels_consistent(config, lib, z));
}

TEST_CASE("Scheme 2 placement sizes")
{
    const SchemeConfig a = make_config(Scheme::Scheme2, 4, 2, std::nullopt, 6);
    const CacheContents za = place(a, random_library(a, 7));
    CHECK(za.caches[0].size() == 3);
    CHECK(measured_memory(za, a.file_length) == Rational(3, 4));

    const SchemeConfig b = make_config(Scheme::Scheme2, 5, 3, std::nullopt, 10);
    const CacheContents zb = place(b, random_library(b, 7));
    CHECK(zb.caches[0].size() == 6);
    CHECK(measured_memory(zb, b.file_length) == Rational(6, 5));
}

TEST_CASE("every constructed code is MDS")
{
    for (int C = 2; C <= 6; ++C) {
        for (int r = 1; r < C; ++r) {
            for (int t = 1; t <= C - r + 1; ++t) {
                for (const auto& named : scheme_codes(make_config(Scheme::Scheme1, C, r, t, 2))) {
                    CHECK_MESSAGE(check_mds_property(named.code), named.name);
                }
            }
        }
    }
}

TEST_CASE("tampered labels are detected")
{
    const SchemeConfig config = make_config(Scheme::Scheme1, 4, 2, 2, 6);
    const Library lib = random_library(config, 8);
    CacheContents z = place(config, lib);
    z.caches[2][4].data[0] ^= 1;
    CHECK_FALSE(labels_consistent(config, lib, z));
}
