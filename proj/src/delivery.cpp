#include "macc/delivery.hpp"

#include <set>

namespace macc {

BroadcastBatch deliver_xor(const SchemeConfig& config, const Library& lib, const DemandVector& d)
{
    if (config.scheme != Scheme::Mkr && config.scheme != Scheme::Scheme1) {
        throw ConfigError("XOR delivery applies to MKR and Scheme 1 only");
    }
    validate_demands(config, d);
    BroadcastBatch batch;
    const int size = config.t + config.access;
    if (size > config.caches) {
        return batch;
    }
    const SubsetTable subsets(config.caches, config.t);
    const SubsetTable users(config.caches, config.access);
    const SubsetTable groups(config.caches, size);
    const std::size_t p = config.pieces_per_subfile();
    const std::size_t len = config.piece_length();

    for (std::size_t si = 0; si < groups.size(); ++si) {
        const Subset& S = groups.at(si);
        Message msg;
        msg.label.kind = MessageKind::Xor;
        msg.label.subset = static_cast<std::uint32_t>(si);
        const auto members = S.members();
        // r-subsets of S, enumerated through positions within S
        for (const auto& U : enumerate_ksubsets(size, config.access)) {
            std::vector<int> chosen;
            for (int pos : U.members()) {
                chosen.push_back(members[static_cast<std::size_t>(pos - 1)]);
            }
            const Subset user(config.caches, chosen);
            const int file = d.of(users.index_of(user));
            msg.label.components.push_back(
                {file, static_cast<std::uint32_t>(subsets.index_of(S.minus(user)))});
        }
        for (std::size_t j = 0; j < p; ++j) {
            Block b;
            b.label.kind = BlockKind::XorPiece;
            b.label.subset = static_cast<std::uint32_t>(si);
            b.label.index = static_cast<int>(j);
            b.data.assign(len, 0);
            for (const auto& comp : msg.label.components) {
                const std::size_t local = comp.subset * p + j;
                const auto& file = lib.files.at(static_cast<std::size_t>(comp.file - 1));
                const Symbol* src = file.data() + local * len;
                for (std::size_t k = 0; k < len; ++k) {
                    b.data[k] ^= src[k];
                }
                b.label.terms.push_back({piece_id(config, comp.file, local), 1});
            }
            msg.blocks.push_back(std::move(b));
        }
        batch.messages.push_back(std::move(msg));
    }
    return batch;
}

namespace {

Message send_subfile(const SchemeConfig& config, const Library& lib, int file, int cache)
{
    Message msg;
    msg.label.kind = MessageKind::Subfile;
    msg.label.file = file;
    msg.label.cache = cache;
    Block b;
    b.label.kind = BlockKind::SubfileSend;
    b.label.file = file;
    b.label.index = cache;
    b.label.terms = {{piece_id(config, file, static_cast<std::size_t>(cache - 1)), 1}};
    b.data = piece_of(config, lib, file, static_cast<std::size_t>(cache - 1));
    msg.blocks.push_back(std::move(b));
    return msg;
}

} // namespace

BroadcastBatch deliver_scheme2(const SchemeConfig& config, const Library& lib, const DemandVector& d)
{
    if (config.scheme != Scheme::Scheme2) {
        throw ConfigError("deliver_scheme2 called for scheme " + scheme_name(config.scheme));
    }
    validate_demands(config, d);
    const std::size_t kp = binom_u64(config.caches - 1, config.access);
    BroadcastBatch batch;
    const std::set<int> wanted(d.demands.begin(), d.demands.end());
    if (wanted.size() <= kp) {
        for (int n : wanted) {
            Message msg;
            msg.label.kind = MessageKind::WholeFile;
            msg.label.file = n;
            for (int i = 1; i <= config.caches; ++i) {
                auto part = send_subfile(config, lib, n, i);
                msg.blocks.push_back(std::move(part.blocks.front()));
            }
            batch.messages.push_back(std::move(msg));
        }
        return batch;
    }

    const SubsetTable users(config.caches, config.access);
    for (int i = 1; i <= config.caches; ++i) {
        std::set<int> files;
        for (std::size_t u = 0; u < users.size(); ++u) {
            if (!users.at(u).contains(i)) {
                files.insert(d.of(u));
            }
        }
        for (int n = 1; files.size() < kp && n <= config.files; ++n) {
            files.insert(n);
        }
        for (int n : files) {
            batch.messages.push_back(send_subfile(config, lib, n, i));
        }
    }
    return batch;
}

BroadcastBatch deliver(const SchemeConfig& config, const Library& lib, const DemandVector& d)
{
    switch (config.scheme) {
    case Scheme::Mkr:
    case Scheme::Scheme1:
        return deliver_xor(config, lib, d);
    case Scheme::Corner:
        validate_demands(config, d);
        return {};
    case Scheme::Scheme2:
        return deliver_scheme2(config, lib, d);
    }
    throw ConfigError("unknown scheme");
}

Rational measured_rate(const BroadcastBatch& batch, std::size_t file_length)
{
    return Rational(static_cast<std::int64_t>(batch.total_symbols()), static_cast<std::int64_t>(file_length));
}

Rational measured_memory(const CacheContents& caches, std::size_t file_length, int cache)
{
    return Rational(static_cast<std::int64_t>(caches.symbols_in(cache)), static_cast<std::int64_t>(file_length));
}

} // namespace macc
