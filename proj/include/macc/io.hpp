#pragma once

#include "macc/analysis.hpp"
#include "macc/model.hpp"

#include <json.hpp>

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace macc {

/// File system or dump-format failure.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using json = nlohmann::ordered_json;

json config_to_json(const SchemeConfig& config);
/// Rebuilds the configuration through make_config and checks that the
/// stored field degree and file length agree.
SchemeConfig config_from_json(const json& j);

json label_to_json(const BlockLabel& label);
BlockLabel label_from_json(const json& j);

/// Raw little-endian uint16 symbols.
void write_symbols(const std::filesystem::path& path, const std::vector<Symbol>& symbols);
std::vector<Symbol> read_symbols(const std::filesystem::path& path);

void write_text(const std::filesystem::path& path, const std::string& text);
std::string read_text(const std::filesystem::path& path);

/// library.json ({C, r, t, N, m, f, seed, ...}) and library.bin.
void save_library(const std::filesystem::path& dir, const SchemeConfig& config, const Library& lib);
Library load_library(const std::filesystem::path& dir, SchemeConfig* config = nullptr);

/// caches.json (per-cache symbol counts and block labels) and cache_<c>.bin.
void save_caches(const std::filesystem::path& dir, const SchemeConfig& config, const CacheContents& caches);
CacheContents load_caches(const std::filesystem::path& dir);

/// broadcast.json (message labels with their summands, and the demand
/// vector when given) and broadcast.bin.
void save_broadcast(const std::filesystem::path& dir, const SchemeConfig& config, const BroadcastBatch& batch,
                    const DemandVector* demands = nullptr);
BroadcastBatch load_broadcast(const std::filesystem::path& dir, DemandVector* demands = nullptr);

/// One CSV row per memory value: M,R_achievable,R_bound,provenance,argmax_s,argmax_l.
struct TradeoffRow {
    Rational M;
    TradeoffPoint achievable;
    BoundResult bound;
};

std::vector<TradeoffRow> tradeoff_table(int C, int r, int N, int grid);
std::string tradeoff_csv(const std::vector<TradeoffRow>& rows, bool decimal = false);

/// scheme,t,M,R for every MKR and Scheme 1 corner point.
std::string corners_csv(int C, int r, int N, bool decimal = false);

} // namespace macc
