#include "macc/delivery.hpp"
#include "macc/io.hpp"
#include "macc/placement.hpp"
#include "macc/simulate.hpp"

#include <doctest.h>

#include <filesystem>
#include <random>

using namespace macc;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir()
    {
        static int counter = 0;
        path = fs::temp_directory_path() / ("macc_io_test_" + std::to_string(std::random_device{}()) + "_" + std::to_string(counter++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

} // namespace

TEST_CASE("configuration round trip")
{
    for (const SchemeConfig& c : {make_config(Scheme::Scheme1, 5, 3, 2, 10, 40), make_config(Scheme::Mkr, 4, 2, 1, 3),
                                  make_config(Scheme::Scheme2, 4, 2, std::nullopt, 6),
                                  make_config(Scheme::Corner, 4, 2, std::nullopt, 6)}) {
        CHECK(config_from_json(config_to_json(c)) == c);
    }
    json bad = config_to_json(make_config(Scheme::Mkr, 4, 2, 1, 3));
    bad["m"] = 9;
    CHECK_THROWS(config_from_json(bad));
}

TEST_CASE("symbols are stored little-endian")
{
    TempDir dir;
    const std::vector<Symbol> v{0x0102, 0xffff, 0};
    write_symbols(dir.path / "s.bin", v);
    CHECK(fs::file_size(dir.path / "s.bin") == 6);
    const std::string raw = read_text(dir.path / "s.bin");
    CHECK(static_cast<unsigned char>(raw[0]) == 0x02);
    CHECK(static_cast<unsigned char>(raw[1]) == 0x01);
    CHECK(read_symbols(dir.path / "s.bin") == v);
    CHECK_THROWS_AS(read_symbols(dir.path / "missing.bin"), IoError);
}

TEST_CASE("library, caches and broadcast round trip")
{
    TempDir dir;
    const SchemeConfig config = make_config(Scheme::Scheme1, 4, 2, 2, 6, 24);
    const Library lib = random_library(config, 21);
    const CacheContents caches = place(config, lib);
    std::mt19937_64 rng(22);
    const DemandVector d = random_demands(config, rng);
    const BroadcastBatch batch = deliver(config, lib, d);

    save_library(dir.path, config, lib);
    save_caches(dir.path, config, caches);
    save_broadcast(dir.path, config, batch, &d);

    SchemeConfig loaded_config;
    CHECK(load_library(dir.path, &loaded_config) == lib);
    CHECK(loaded_config == config);
    CHECK(load_caches(dir.path) == caches);
    DemandVector loaded_d;
    CHECK(load_broadcast(dir.path, &loaded_d) == batch);
    CHECK(loaded_d == d);
}

TEST_CASE("block labels round trip")
{
    BlockLabel label;
    label.kind = BlockKind::RoundParity;
    label.file = 3;
    label.cache = 2;
    label.round = 1;
    label.index = 4;
    label.column = 1;
    label.terms = {{5, 7}, {9, 1}};
    CHECK(label_from_json(label_to_json(label)) == label);
    CHECK(parse_block_kind(block_kind_name(BlockKind::XorPiece)) == BlockKind::XorPiece);
    CHECK(parse_message_kind(message_kind_name(MessageKind::WholeFile)) == MessageKind::WholeFile);
}

TEST_CASE("tradeoff table for (4,2,6)")
{
    const auto rows = tradeoff_table(4, 2, 6, 5);
    // five grid memories plus the corner at 5/2
    REQUIRE(rows.size() == 6);
    CHECK(rows[4].M == Rational(5, 2));
    CHECK(rows[4].achievable.R == Rational(1, 6));
    CHECK(rows.front().M == 0);
    CHECK(rows.back().M == 3);
    CHECK(rows.front().achievable.R == 6);
    CHECK(rows.back().bound.bound == 0);
    const std::string csv = tradeoff_csv(rows);
    CHECK(csv.rfind("M,R_achievable,R_bound,provenance,argmax_s,argmax_l\n", 0) == 0);
    CHECK(csv.find("\n3/4,3,3,") != std::string::npos);
    const std::string corners = corners_csv(4, 2, 6);
    CHECK(corners.find("s1,2,5/2,1/6") != std::string::npos);
}
