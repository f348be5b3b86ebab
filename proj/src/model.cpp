#include "macc/model.hpp"

#include "macc/placement.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace macc {

std::string scheme_name(Scheme s)
{
    switch (s) {
    case Scheme::Mkr:
        return "mkr";
    case Scheme::Scheme1:
        return "s1";
    case Scheme::Corner:
        return "corner";
    case Scheme::Scheme2:
        return "s2";
    }
    return "?";
}

Scheme parse_scheme(const std::string& name)
{
    if (name == "mkr") {
        return Scheme::Mkr;
    }
    if (name == "s1" || name == "scheme1") {
        return Scheme::Scheme1;
    }
    if (name == "corner") {
        return Scheme::Corner;
    }
    if (name == "s2" || name == "scheme2") {
        return Scheme::Scheme2;
    }
    throw ConfigError("unknown scheme '" + name + "' (expected mkr, s1, corner or s2)");
}

std::size_t SchemeConfig::pieces_per_subfile() const
{
    return scheme == Scheme::Scheme1 ? factorial_u64(rtilde()) : 1;
}

std::vector<std::uint64_t> required_code_lengths(Scheme scheme, int caches, int access, int t, int files)
{
    std::vector<std::uint64_t> lengths;
    switch (scheme) {
    case Scheme::Mkr:
        break;
    case Scheme::Scheme1: {
        const int rt = std::min(access, t);
        lengths.push_back(factorial_u64(rt) * static_cast<std::uint64_t>(t));
        for (const auto& plan : scheme1_round_plan(caches, access, t)) {
            if (plan.round > 0) {
                lengths.push_back(plan.code_length());
            }
        }
        break;
    }
    case Scheme::Corner:
        lengths.push_back(static_cast<std::uint64_t>(caches));
        break;
    case Scheme::Scheme2:
        lengths.push_back(2 * static_cast<std::uint64_t>(files) - binom_u64(caches - 1, access));
        break;
    }
    return lengths;
}

SchemeConfig make_config(Scheme scheme, int caches, int access, std::optional<int> t, int files,
                         std::size_t f_hint)
{
    if (caches < 2 || caches > 24) {
        throw ConfigError("C must be in [2, 24], got " + std::to_string(caches));
    }
    if (access < 1 || access >= caches) {
        throw ConfigError("r must satisfy 1 <= r < C, got r=" + std::to_string(access));
    }
    if (files < 1) {
        throw ConfigError("N must be positive");
    }
    SchemeConfig cfg;
    cfg.scheme = scheme;
    cfg.caches = caches;
    cfg.access = access;
    cfg.files = files;

    const int corner_t = caches - access + 1;
    switch (scheme) {
    case Scheme::Mkr:
        if (!t || *t < 1 || *t > caches) {
            throw ConfigError("MKR needs t in [1, C]");
        }
        cfg.t = *t;
        cfg.subpacketization = binom_u64(caches, cfg.t);
        break;
    case Scheme::Scheme1:
        if (!t || *t < 1 || *t > corner_t) {
            throw ConfigError("Scheme 1 needs t in [1, C - r + 1]");
        }
        if (*t == corner_t) {
            return make_config(Scheme::Corner, caches, access, t, files, f_hint);
        }
        cfg.t = *t;
        cfg.subpacketization = factorial_u64(cfg.rtilde()) * binom_u64(caches, cfg.t);
        break;
    case Scheme::Corner:
        if (t && *t != corner_t) {
            throw ConfigError("the corner scheme requires t = C - r + 1 = " + std::to_string(corner_t));
        }
        cfg.t = corner_t;
        cfg.subpacketization = static_cast<std::size_t>(access);
        break;
    case Scheme::Scheme2:
        if (static_cast<std::uint64_t>(files) <= binom_u64(caches - 1, access)) {
            throw ConfigError("Scheme 2 requires N > binom(C-1, r) = "
                              + std::to_string(binom_u64(caches - 1, access)));
        }
        cfg.t = 0;
        cfg.subpacketization = static_cast<std::size_t>(caches);
        break;
    }

    std::uint64_t longest = 2;
    for (auto len : required_code_lengths(scheme, caches, access, cfg.t, files)) {
        longest = std::max(longest, len);
    }
    if (longest > (std::uint64_t{1} << Field::kMaxDegree)) {
        throw ConfigError("required MDS code length " + std::to_string(longest) + " exceeds GF(2^16)");
    }
    cfg.field_degree = degree_for_length(longest);

    const std::size_t hint = std::max<std::size_t>(f_hint, 1);
    cfg.file_length = (hint + cfg.subpacketization - 1) / cfg.subpacketization * cfg.subpacketization;
    return cfg;
}

Library random_library(const SchemeConfig& config, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    return random_library(config, rng, seed);
}

Library random_library(const SchemeConfig& config, std::mt19937_64& rng, std::uint64_t seed)
{
    Library lib;
    lib.field_degree = config.field_degree;
    lib.seed = seed;
    // Masking the raw engine output keeps the stream identical across
    // standard libraries, unlike std::uniform_int_distribution.
    const std::uint64_t mask = config.field().order() - 1;
    lib.files.resize(static_cast<std::size_t>(config.files));
    for (auto& file : lib.files) {
        file.resize(config.file_length);
        for (auto& s : file) {
            s = static_cast<Symbol>(rng() & mask);
        }
    }
    return lib;
}

Library zero_library(const SchemeConfig& config)
{
    Library lib;
    lib.field_degree = config.field_degree;
    lib.files.assign(static_cast<std::size_t>(config.files), std::vector<Symbol>(config.file_length, 0));
    return lib;
}

std::size_t DemandVector::distinct() const
{
    return std::set<int>(demands.begin(), demands.end()).size();
}

void validate_demands(const SchemeConfig& config, const DemandVector& d)
{
    if (d.demands.size() != config.users()) {
        throw ConfigError("demand vector has " + std::to_string(d.demands.size()) + " entries, expected "
                          + std::to_string(config.users()));
    }
    for (int n : d.demands) {
        if (n < 1 || n > config.files) {
            throw ConfigError("demanded file " + std::to_string(n) + " outside [1, N]");
        }
    }
}

namespace {

struct KindName {
    BlockKind kind;
    const char* name;
};

constexpr KindName kBlockKinds[] = {
    {BlockKind::Subfile, "subfile"},          {BlockKind::RoundZero, "round0"},
    {BlockKind::RoundParity, "round_parity"}, {BlockKind::CornerCoded, "corner_coded"},
    {BlockKind::Scheme2Parity, "s2_parity"},  {BlockKind::XorPiece, "xor_piece"},
    {BlockKind::SubfileSend, "subfile_send"},
};

} // namespace

std::string block_kind_name(BlockKind k)
{
    for (const auto& kn : kBlockKinds) {
        if (kn.kind == k) {
            return kn.name;
        }
    }
    return "?";
}

BlockKind parse_block_kind(const std::string& name)
{
    for (const auto& kn : kBlockKinds) {
        if (name == kn.name) {
            return kn.kind;
        }
    }
    throw std::invalid_argument("unknown block kind '" + name + "'");
}

std::string message_kind_name(MessageKind k)
{
    switch (k) {
    case MessageKind::Xor:
        return "xor";
    case MessageKind::Subfile:
        return "subfile";
    case MessageKind::WholeFile:
        return "whole_file";
    }
    return "?";
}

MessageKind parse_message_kind(const std::string& name)
{
    if (name == "xor") {
        return MessageKind::Xor;
    }
    if (name == "subfile") {
        return MessageKind::Subfile;
    }
    if (name == "whole_file") {
        return MessageKind::WholeFile;
    }
    throw std::invalid_argument("unknown message kind '" + name + "'");
}

std::size_t CacheContents::symbols_in(int cache) const
{
    std::size_t total = 0;
    for (const auto& b : caches.at(static_cast<std::size_t>(cache - 1))) {
        total += b.data.size();
    }
    return total;
}

std::size_t BroadcastBatch::total_symbols() const
{
    std::size_t total = 0;
    for (const auto& m : messages) {
        for (const auto& b : m.blocks) {
            total += b.data.size();
        }
    }
    return total;
}

std::vector<Symbol> piece_of(const SchemeConfig& config, const Library& lib, int file, std::size_t local)
{
    const std::size_t len = config.piece_length();
    const auto& f = lib.files.at(static_cast<std::size_t>(file - 1));
    const auto begin = f.begin() + static_cast<std::ptrdiff_t>(local * len);
    return {begin, begin + static_cast<std::ptrdiff_t>(len)};
}

std::vector<Symbol> expand_label(const SchemeConfig& config, const Library& lib, const BlockLabel& label)
{
    const Field& field = config.field();
    const std::size_t len = config.piece_length();
    std::vector<Symbol> out(len, 0);
    for (const auto& term : label.terms) {
        const std::size_t file = term.piece / config.subpacketization;
        const std::size_t local = term.piece % config.subpacketization;
        const Symbol* src = lib.files.at(file).data() + local * len;
        field.axpy(out.data(), src, len, term.coeff);
    }
    return out;
}

bool labels_consistent(const SchemeConfig& config, const Library& lib, const CacheContents& caches)
{
    for (const auto& cache : caches.caches) {
        for (const auto& block : cache) {
            if (expand_label(config, lib, block.label) != block.data) {
                return false;
            }
        }
    }
    return true;
}

bool labels_consistent(const SchemeConfig& config, const Library& lib, const BroadcastBatch& batch)
{
    for (const auto& msg : batch.messages) {
        for (const auto& block : msg.blocks) {
            if (expand_label(config, lib, block.label) != block.data) {
                return false;
            }
        }
    }
    return true;
}

} // namespace macc
