#include "macc/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace macc {

namespace fs = std::filesystem;

json config_to_json(const SchemeConfig& config)
{
    return json{{"scheme", scheme_name(config.scheme)},
                {"C", config.caches},
                {"r", config.access},
                {"t", config.t},
                {"N", config.files},
                {"m", config.field_degree},
                {"f", config.file_length},
                {"subpacketization", config.subpacketization}};
}

SchemeConfig config_from_json(const json& j)
{
    try {
        const Scheme scheme = parse_scheme(j.at("scheme").get<std::string>());
        std::optional<int> t;
        if (scheme != Scheme::Scheme2) {
            t = j.at("t").get<int>();
        }
        SchemeConfig config = make_config(scheme, j.at("C").get<int>(), j.at("r").get<int>(), t,
                                          j.at("N").get<int>(), j.at("f").get<std::size_t>());
        if (config.field_degree != j.at("m").get<int>() || config.file_length != j.at("f").get<std::size_t>()) {
            throw IoError("stored field degree or file length disagrees with the configuration");
        }
        return config;
    } catch (const json::exception& e) {
        throw IoError(std::string("malformed configuration header: ") + e.what());
    }
}

json label_to_json(const BlockLabel& label)
{
    json terms = json::array();
    for (const auto& t : label.terms) {
        terms.push_back({t.piece, t.coeff});
    }
    return json{{"kind", block_kind_name(label.kind)},
                {"file", label.file},
                {"subset", label.subset},
                {"cache", label.cache},
                {"round", label.round},
                {"index", label.index},
                {"column", label.column},
                {"terms", std::move(terms)}};
}

BlockLabel label_from_json(const json& j)
{
    try {
        BlockLabel label;
        label.kind = parse_block_kind(j.at("kind").get<std::string>());
        label.file = j.at("file").get<int>();
        label.subset = j.at("subset").get<std::uint32_t>();
        label.cache = j.at("cache").get<int>();
        label.round = j.at("round").get<int>();
        label.index = j.at("index").get<int>();
        label.column = j.at("column").get<int>();
        for (const auto& t : j.at("terms")) {
            label.terms.push_back({t.at(0).get<std::uint32_t>(), t.at(1).get<Symbol>()});
        }
        return label;
    } catch (const json::exception& e) {
        throw IoError(std::string("malformed block label: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw IoError(e.what());
    }
}

void write_symbols(const fs::path& path, const std::vector<Symbol>& symbols)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    std::vector<unsigned char> bytes;
    bytes.reserve(2 * symbols.size());
    for (Symbol s : symbols) {
        bytes.push_back(static_cast<unsigned char>(s & 0xff));
        bytes.push_back(static_cast<unsigned char>(s >> 8));
    }
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) {
        throw IoError("write failed: " + path.string());
    }
}

std::vector<Symbol> read_symbols(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    const std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (bytes.size() % 2 != 0) {
        throw IoError(path.string() + " has an odd number of bytes");
    }
    std::vector<Symbol> out(bytes.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = static_cast<Symbol>(bytes[2 * i] | (bytes[2 * i + 1] << 8));
    }
    return out;
}

void write_text(const fs::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    out << text;
    if (!out) {
        throw IoError("write failed: " + path.string());
    }
}

std::string read_text(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

namespace {

json parse_json_file(const fs::path& path)
{
    try {
        return json::parse(read_text(path));
    } catch (const json::exception& e) {
        throw IoError(path.string() + ": " + e.what());
    }
}

void ensure_dir(const fs::path& dir)
{
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw IoError("cannot create " + dir.string() + ": " + ec.message());
    }
}

std::vector<Symbol> concat(const std::vector<Block>& blocks)
{
    std::vector<Symbol> out;
    for (const auto& b : blocks) {
        out.insert(out.end(), b.data.begin(), b.data.end());
    }
    return out;
}

/// Splits `data` into consecutive blocks of `len` symbols for `labels`.
std::vector<Block> split(const json& labels, const std::vector<Symbol>& data, std::size_t len, std::size_t& offset)
{
    std::vector<Block> out;
    for (const auto& lj : labels) {
        if (offset + len > data.size()) {
            throw IoError("payload shorter than the manifest describes");
        }
        Block b;
        b.label = label_from_json(lj);
        b.data.assign(data.begin() + static_cast<std::ptrdiff_t>(offset),
                      data.begin() + static_cast<std::ptrdiff_t>(offset + len));
        offset += len;
        out.push_back(std::move(b));
    }
    return out;
}

} // namespace

void save_library(const fs::path& dir, const SchemeConfig& config, const Library& lib)
{
    ensure_dir(dir);
    json header = config_to_json(config);
    header["seed"] = lib.seed;
    write_text(dir / "library.json", header.dump(2) + "\n");
    std::vector<Symbol> all;
    for (const auto& f : lib.files) {
        all.insert(all.end(), f.begin(), f.end());
    }
    write_symbols(dir / "library.bin", all);
}

Library load_library(const fs::path& dir, SchemeConfig* config_out)
{
    const json header = parse_json_file(dir / "library.json");
    const SchemeConfig config = config_from_json(header);
    const auto all = read_symbols(dir / "library.bin");
    const std::size_t f = config.file_length;
    if (all.size() != f * static_cast<std::size_t>(config.files)) {
        throw IoError("library.bin holds " + std::to_string(all.size()) + " symbols, expected "
                      + std::to_string(f * static_cast<std::size_t>(config.files)));
    }
    Library lib;
    lib.field_degree = config.field_degree;
    lib.seed = header.value("seed", std::uint64_t{0});
    for (int n = 0; n < config.files; ++n) {
        const auto begin = all.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(n) * f);
        lib.files.emplace_back(begin, begin + static_cast<std::ptrdiff_t>(f));
    }
    if (config_out) {
        *config_out = config;
    }
    return lib;
}

void save_caches(const fs::path& dir, const SchemeConfig& config, const CacheContents& caches)
{
    ensure_dir(dir);
    json doc{{"config", config_to_json(config)}, {"caches", json::array()}};
    for (std::size_t c = 0; c < caches.caches.size(); ++c) {
        json labels = json::array();
        for (const auto& b : caches.caches[c]) {
            labels.push_back(label_to_json(b.label));
        }
        doc["caches"].push_back({{"cache", c + 1},
                                 {"symbols", caches.symbols_in(static_cast<int>(c + 1))},
                                 {"blocks", std::move(labels)}});
        write_symbols(dir / ("cache_" + std::to_string(c + 1) + ".bin"), concat(caches.caches[c]));
    }
    write_text(dir / "caches.json", doc.dump(1) + "\n");
}

CacheContents load_caches(const fs::path& dir)
{
    const json doc = parse_json_file(dir / "caches.json");
    const SchemeConfig config = config_from_json(doc.at("config"));
    CacheContents out;
    for (const auto& cj : doc.at("caches")) {
        const auto c = cj.at("cache").get<int>();
        const auto data = read_symbols(dir / ("cache_" + std::to_string(c) + ".bin"));
        std::size_t offset = 0;
        out.caches.push_back(split(cj.at("blocks"), data, config.piece_length(), offset));
        if (offset != data.size()) {
            throw IoError("cache_" + std::to_string(c) + ".bin has trailing symbols");
        }
    }
    return out;
}

void save_broadcast(const fs::path& dir, const SchemeConfig& config, const BroadcastBatch& batch,
                    const DemandVector* demands)
{
    ensure_dir(dir);
    json doc{{"config", config_to_json(config)}, {"total_symbols", batch.total_symbols()}};
    if (demands) {
        doc["demands"] = demands->demands;
    }
    doc["messages"] = json::array();
    std::vector<Symbol> all;
    for (const auto& m : batch.messages) {
        json comps = json::array();
        for (const auto& c : m.label.components) {
            comps.push_back({{"file", c.file}, {"subset", c.subset}});
        }
        json labels = json::array();
        for (const auto& b : m.blocks) {
            labels.push_back(label_to_json(b.label));
            all.insert(all.end(), b.data.begin(), b.data.end());
        }
        doc["messages"].push_back({{"kind", message_kind_name(m.label.kind)},
                                   {"subset", m.label.subset},
                                   {"cache", m.label.cache},
                                   {"file", m.label.file},
                                   {"components", std::move(comps)},
                                   {"blocks", std::move(labels)}});
    }
    write_text(dir / "broadcast.json", doc.dump(1) + "\n");
    write_symbols(dir / "broadcast.bin", all);
}

BroadcastBatch load_broadcast(const fs::path& dir, DemandVector* demands)
{
    const json doc = parse_json_file(dir / "broadcast.json");
    if (demands) {
        if (!doc.contains("demands")) {
            throw IoError("broadcast.json carries no demand vector");
        }
        demands->demands = doc["demands"].get<std::vector<int>>();
    }
    const SchemeConfig config = config_from_json(doc.at("config"));
    const auto data = read_symbols(dir / "broadcast.bin");
    BroadcastBatch batch;
    std::size_t offset = 0;
    try {
        for (const auto& mj : doc.at("messages")) {
            Message m;
            m.label.kind = parse_message_kind(mj.at("kind").get<std::string>());
            m.label.subset = mj.at("subset").get<std::uint32_t>();
            m.label.cache = mj.at("cache").get<int>();
            m.label.file = mj.at("file").get<int>();
            for (const auto& cj : mj.at("components")) {
                m.label.components.push_back({cj.at("file").get<int>(), cj.at("subset").get<std::uint32_t>()});
            }
            m.blocks = split(mj.at("blocks"), data, config.piece_length(), offset);
            batch.messages.push_back(std::move(m));
        }
    } catch (const json::exception& e) {
        throw IoError(std::string("malformed broadcast manifest: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw IoError(e.what());
    }
    if (offset != data.size()) {
        throw IoError("broadcast.bin has trailing symbols");
    }
    return batch;
}

std::vector<TradeoffRow> tradeoff_table(int C, int r, int N, int grid)
{
    const Envelope env = achievable_envelope(C, r, N);
    std::set<Rational> memories;
    for (const auto& M : memory_grid(r, N, grid)) {
        memories.insert(M);
    }
    for (const auto& p : env.corners()) {
        memories.insert(p.M);
    }
    for (const auto& p : scheme1_points(C, r, N)) {
        memories.insert(p.M);
    }
    std::vector<TradeoffRow> rows;
    for (const auto& M : memories) {
        rows.push_back({M, env.evaluate(M), lower_bound(C, r, N, M)});
    }
    return rows;
}

namespace {

std::string render(const Rational& v, bool decimal) { return decimal ? v.decimal(6) : v.str(); }

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char ch : s) {
        out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    }
    return out + "\"";
}

} // namespace

std::string tradeoff_csv(const std::vector<TradeoffRow>& rows, bool decimal)
{
    std::ostringstream out;
    out << "M,R_achievable,R_bound,provenance,argmax_s,argmax_l\n";
    for (const auto& row : rows) {
        out << render(row.M, decimal) << ',' << render(row.achievable.R, decimal) << ','
            << render(row.bound.bound, decimal) << ',' << csv_field(row.achievable.provenance) << ','
            << row.bound.s << ',' << row.bound.l << '\n';
    }
    return out.str();
}

std::string corners_csv(int C, int r, int N, bool decimal)
{
    std::ostringstream out;
    out << "scheme,t,M,R\n";
    for (int t = 1; t <= C; ++t) {
        const auto p = mkr_point(C, r, t, N);
        out << "mkr," << t << ',' << render(p.M, decimal) << ',' << render(p.R, decimal) << '\n';
    }
    for (int t = 1; t <= C - r + 1; ++t) {
        out << "s1," << t << ',' << render(scheme1_memory(C, r, t, N), decimal) << ','
            << render(scheme1_rate(C, r, t), decimal) << '\n';
    }
    for (const auto& p : scheme2_segment(C, r, N)) {
        out << "s2,," << render(p.M, decimal) << ',' << render(p.R, decimal) << '\n';
    }
    return out.str();
}

} // namespace macc
