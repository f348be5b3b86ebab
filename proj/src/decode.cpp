#include "macc/decode.hpp"

#include "macc/mds.hpp"
#include "macc/placement.hpp"

#include <map>
#include <optional>
#include <tuple>

namespace macc {

namespace {

struct Undecodable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what)
{
    if (!ok) {
        throw Undecodable(what);
    }
}

Subset user_subset(const SchemeConfig& config, std::size_t user)
{
    return subset_unrank(config.caches, config.access, user + 1);
}

/// Blocks held by the caches the user is attached to.
std::vector<const Block*> visible_blocks(const CacheContents& caches, const Subset& U)
{
    std::vector<const Block*> out;
    for (int c : U.members()) {
        for (const auto& b : caches.caches.at(static_cast<std::size_t>(c - 1))) {
            out.push_back(&b);
        }
    }
    return out;
}

/// Known mini-subfiles, indexed [file - 1][subset][j]; empty when unknown.
class PieceStore {
public:
    PieceStore(const SchemeConfig& config, std::size_t subsets)
        : p_(config.pieces_per_subfile()),
          data_(static_cast<std::size_t>(config.files), std::vector<std::vector<std::vector<Symbol>>>(subsets))
    {
    }

    bool known(int file, std::size_t ti) const { return !data_[idx(file)][ti].empty(); }

    const std::vector<Symbol>& piece(int file, std::size_t ti, std::size_t j) const
    {
        return data_[idx(file)][ti].at(j);
    }

    void set(int file, std::size_t ti, std::vector<std::vector<Symbol>> pieces)
    {
        data_[idx(file)][ti] = std::move(pieces);
    }

    void set_piece(int file, std::size_t ti, std::size_t j, std::vector<Symbol> piece)
    {
        auto& slot = data_[idx(file)][ti];
        if (slot.empty()) {
            slot.resize(p_);
        }
        slot[j] = std::move(piece);
    }

private:
    static std::size_t idx(int file) { return static_cast<std::size_t>(file - 1); }
    std::size_t p_;
    std::vector<std::vector<std::vector<std::vector<Symbol>>>> data_;
};

/// Recovers W_{d, T} for every T disjoint from U by removing the other
/// r-subsets' summands of the message for S = U u T. Returns the count.
std::uint64_t peel_xor(const SchemeConfig& config, const Subset& U, int demand, const BroadcastBatch& batch,
                       const SubsetTable& subsets, PieceStore& store)
{
    const int size = config.t + config.access;
    if (size > config.caches) {
        return 0;
    }
    const SubsetTable groups(config.caches, size);
    std::map<std::uint32_t, const Message*> by_subset;
    for (const auto& m : batch.messages) {
        if (m.label.kind == MessageKind::Xor) {
            by_subset[m.label.subset] = &m;
        }
    }
    const std::size_t p = config.pieces_per_subfile();
    const std::size_t len = config.piece_length();
    std::uint64_t peeled = 0;
    for (std::size_t ti = 0; ti < subsets.size(); ++ti) {
        const Subset& T = subsets.at(ti);
        if (!T.disjoint(U)) {
            continue;
        }
        const auto si = static_cast<std::uint32_t>(groups.index_of(T.unite(U)));
        const auto it = by_subset.find(si);
        require(it != by_subset.end(), "xor: no message for S = " + T.unite(U).compact());
        const Message& msg = *it->second;
        require(msg.blocks.size() == p, "xor: message " + T.unite(U).compact() + " has wrong block count");
        bool own_found = false;
        std::vector<std::vector<Symbol>> pieces;
        for (std::size_t j = 0; j < p; ++j) {
            std::vector<Symbol> acc = msg.blocks[j].data;
            require(acc.size() == len, "xor: block length mismatch");
            for (const auto& comp : msg.label.components) {
                if (comp.subset == ti) {
                    require(comp.file == demand, "xor: message carries another file for this user");
                    own_found = true;
                    continue;
                }
                require(store.known(comp.file, comp.subset),
                        "xor: interference W_{" + std::to_string(comp.file) + ","
                            + subsets.at(comp.subset).compact() + "} unknown");
                const auto& known = store.piece(comp.file, comp.subset, j);
                for (std::size_t k = 0; k < len; ++k) {
                    acc[k] ^= known[k];
                }
            }
            pieces.push_back(std::move(acc));
        }
        require(own_found, "xor: message " + T.unite(U).compact() + " lacks the user's summand");
        store.set(demand, ti, std::move(pieces));
        ++peeled;
    }
    return peeled;
}

std::vector<Symbol> assemble(const SchemeConfig& config, const PieceStore& store, int demand,
                             const SubsetTable& subsets)
{
    std::vector<Symbol> file;
    file.reserve(config.file_length);
    const std::size_t p = config.pieces_per_subfile();
    for (std::size_t ti = 0; ti < subsets.size(); ++ti) {
        require(store.known(demand, ti), "assemble: subfile " + subsets.at(ti).compact() + " missing");
        for (std::size_t j = 0; j < p; ++j) {
            const auto& piece = store.piece(demand, ti, j);
            file.insert(file.end(), piece.begin(), piece.end());
        }
    }
    return file;
}

template <typename Body>
DecodeOutcome run_decoder(Body body)
{
    DecodeOutcome out;
    try {
        out.file = body(out.stages);
        out.decoded = true;
    } catch (const Undecodable& e) {
        out.diagnostic = e.what();
    } catch (const ErasureError& e) {
        out.diagnostic = e.what();
    }
    if (!out.decoded) {
        out.file.clear();
    }
    return out;
}

using Stages = std::vector<std::pair<std::string, std::uint64_t>>;

std::vector<Symbol> decode_corner(const SchemeConfig& config, const Subset& U, int demand,
                                  const CacheContents& caches, Stages& stages)
{
    const MdsCode code = corner_code(config);
    std::vector<std::pair<std::size_t, std::span<const Symbol>>> known;
    for (const Block* b : visible_blocks(caches, U)) {
        if (b->label.kind == BlockKind::CornerCoded && b->label.file == demand) {
            known.emplace_back(static_cast<std::size_t>(b->label.cache - 1), b->data);
        }
    }
    stages.emplace_back("cached_columns", known.size());
    require(known.size() >= code.k, "corner: " + std::to_string(known.size()) + " coded subfiles, need "
                                        + std::to_string(code.k));
    auto pieces = erasure_decode_blocks(known, code);
    std::vector<Symbol> file;
    for (const auto& piece : pieces) {
        file.insert(file.end(), piece.begin(), piece.end());
    }
    return file;
}

} // namespace

DecodeOutcome decode_mkr_user(const SchemeConfig& config, std::size_t user, const DemandVector& d,
                              const CacheContents& caches, const BroadcastBatch& batch)
{
    return run_decoder([&](Stages& stages) {
        const Subset U = user_subset(config, user);
        const int demand = d.of(user);
        const SubsetTable subsets(config.caches, config.t);
        PieceStore store(config, subsets.size());
        std::uint64_t cached = 0;
        for (const Block* b : visible_blocks(caches, U)) {
            if (b->label.kind == BlockKind::Subfile && !store.known(b->label.file, b->label.subset)) {
                store.set(b->label.file, b->label.subset, {b->data});
                ++cached;
            }
        }
        stages.emplace_back("cached_subfiles", cached);
        stages.emplace_back("peeled_subfiles", peel_xor(config, U, demand, batch, subsets, store));
        return assemble(config, store, demand, subsets);
    });
}

DecodeOutcome decode_scheme1_user(const SchemeConfig& config, std::size_t user, const DemandVector& d,
                                  const CacheContents& caches, const BroadcastBatch& batch)
{
    if (config.scheme == Scheme::Corner) {
        return run_decoder([&](Stages& stages) {
            return decode_corner(config, user_subset(config, user), d.of(user), caches, stages);
        });
    }
    return run_decoder([&](Stages& stages) {
        const Subset U = user_subset(config, user);
        const int demand = d.of(user);
        const SubsetTable subsets(config.caches, config.t);
        const int R = config.rtilde();
        const std::size_t p = config.pieces_per_subfile();
        const MdsCode inner = scheme1_inner_code(config);
        const auto plans = scheme1_round_plan(config.caches, config.access, config.t);
        const auto blocks = visible_blocks(caches, U);

        std::vector<int> gamma(subsets.size());
        for (std::size_t ti = 0; ti < subsets.size(); ++ti) {
            gamma[ti] = subsets.at(ti).intersect(U).size();
        }

        // Coded mini-subfiles Y^l known so far, per (file, subset).
        struct Coded {
            std::vector<std::optional<std::vector<Symbol>>> y;
            std::size_t known = 0;
        };
        std::vector<std::vector<Coded>> coded(static_cast<std::size_t>(config.files),
                                              std::vector<Coded>(subsets.size()));
        for (auto& per_file : coded) {
            for (auto& c : per_file) {
                c.y.resize(inner.n);
            }
        }
        PieceStore store(config, subsets.size());

        auto learn = [&](int n, std::size_t ti, std::size_t l, std::vector<Symbol> data) {
            auto& c = coded[static_cast<std::size_t>(n - 1)][ti];
            if (!c.y[l - 1]) {
                c.y[l - 1] = std::move(data);
                ++c.known;
            }
        };
        auto finish = [&](int n, std::size_t ti) {
            auto& c = coded[static_cast<std::size_t>(n - 1)][ti];
            std::vector<std::pair<std::size_t, std::span<const Symbol>>> known;
            for (std::size_t l = 0; l < inner.n; ++l) {
                if (c.y[l]) {
                    known.emplace_back(l, *c.y[l]);
                }
            }
            auto pieces = erasure_decode_blocks(known, inner);
            auto all = encode_blocks(pieces, inner);
            for (std::size_t l = 0; l < inner.n; ++l) {
                if (!c.y[l]) {
                    c.y[l] = std::move(all[l]);
                }
            }
            c.known = inner.n;
            store.set(n, ti, std::move(pieces));
        };
        // After round beta every subfile with gamma <= R - beta holds
        // R! gamma / (R - beta) coded mini-subfiles; those with gamma = R - beta
        // reach R! and are decoded.
        auto checkpoint = [&](int beta) {
            std::uint64_t decoded = 0;
            for (int n = 1; n <= config.files; ++n) {
                for (std::size_t ti = 0; ti < subsets.size(); ++ti) {
                    const int g = gamma[ti];
                    if (g == 0 || store.known(n, ti)) {
                        continue;
                    }
                    const auto& c = coded[static_cast<std::size_t>(n - 1)][ti];
                    const std::size_t expected = p * static_cast<std::size_t>(g) / static_cast<std::size_t>(R - beta);
                    require(g <= R - beta, "round " + std::to_string(beta) + ": subfile "
                                               + subsets.at(ti).compact() + " should already be decoded");
                    require(c.known == expected, "round " + std::to_string(beta) + ": subfile "
                                                     + subsets.at(ti).compact() + " of file " + std::to_string(n)
                                                     + " holds " + std::to_string(c.known)
                                                     + " coded mini-subfiles, expected " + std::to_string(expected));
                    if (g == R - beta) {
                        finish(n, ti);
                        ++decoded;
                    }
                }
            }
            stages.emplace_back("round" + std::to_string(beta) + "_decoded", decoded);
        };

        for (const Block* b : blocks) {
            if (b->label.kind == BlockKind::RoundZero) {
                learn(b->label.file, b->label.subset, static_cast<std::size_t>(b->label.index), b->data);
            }
        }
        checkpoint(0);

        // (cache, round, index, file) -> parity blocks by column
        std::map<std::tuple<int, int, int, int>, std::vector<const Block*>> parities;
        for (const Block* b : blocks) {
            if (b->label.kind == BlockKind::RoundParity) {
                auto& v = parities[{b->label.cache, b->label.round, b->label.index, b->label.file}];
                if (v.size() <= static_cast<std::size_t>(b->label.column)) {
                    v.resize(static_cast<std::size_t>(b->label.column) + 1, nullptr);
                }
                v[static_cast<std::size_t>(b->label.column)] = b;
            }
        }

        for (std::size_t pi = 1; pi < plans.size(); ++pi) {
            const RoundPlan& plan = plans[pi];
            const MdsCode code = scheme1_round_code(config, plan);
            for (int c : U.members()) {
                std::vector<std::size_t> mine;
                for (std::size_t ti = 0; ti < subsets.size(); ++ti) {
                    if (subsets.at(ti).contains(c)) {
                        mine.push_back(ti);
                    }
                }
                for (std::uint64_t l = 1; l <= plan.span; ++l) {
                    for (int n = 1; n <= config.files; ++n) {
                        std::vector<std::pair<std::size_t, std::span<const Symbol>>> known;
                        for (std::size_t k = 0; k < mine.size(); ++k) {
                            if (store.known(n, mine[k])) {
                                const std::uint64_t idx = plan.first_index(phi(c, subsets.at(mine[k]))) + l - 1;
                                known.emplace_back(k, *coded[static_cast<std::size_t>(n - 1)][mine[k]].y[idx - 1]);
                            }
                        }
                        require(known.size() == plan.D,
                                "round " + std::to_string(plan.round) + ": cache " + std::to_string(c) + " sees "
                                    + std::to_string(known.size()) + " decoded subfiles, expected "
                                    + std::to_string(plan.D));
                        const auto it = parities.find({c, plan.round, static_cast<int>(l), n});
                        const std::size_t have = it == parities.end() ? 0 : it->second.size();
                        require(have == plan.parity_count() || plan.parity_count() == 0,
                                "round " + std::to_string(plan.round) + ": cache " + std::to_string(c)
                                    + " lacks parity blocks");
                        for (std::size_t col = 0; col < plan.parity_count(); ++col) {
                            const Block* pb = it->second[col];
                            require(pb != nullptr, "round " + std::to_string(plan.round) + ": parity column missing");
                            known.emplace_back(plan.B + col, pb->data);
                        }
                        const auto info = erasure_decode_blocks(known, code);
                        for (std::size_t k = 0; k < mine.size(); ++k) {
                            if (!store.known(n, mine[k])) {
                                const std::uint64_t idx = plan.first_index(phi(c, subsets.at(mine[k]))) + l - 1;
                                learn(n, mine[k], idx, info[k]);
                            }
                        }
                    }
                }
            }
            checkpoint(plan.round);
        }

        stages.emplace_back("peeled_subfiles", peel_xor(config, U, demand, batch, subsets, store));
        return assemble(config, store, demand, subsets);
    });
}

DecodeOutcome decode_scheme2_user(const SchemeConfig& config, std::size_t user, const DemandVector& d,
                                  const CacheContents& caches, const BroadcastBatch& batch)
{
    return run_decoder([&](Stages& stages) {
        const Subset U = user_subset(config, user);
        const int demand = d.of(user);
        const std::size_t len = config.piece_length();
        std::vector<std::vector<Symbol>> pieces(static_cast<std::size_t>(config.caches));

        for (const auto& m : batch.messages) {
            if (m.label.kind == MessageKind::WholeFile && m.label.file == demand) {
                require(m.blocks.size() == static_cast<std::size_t>(config.caches), "whole-file message malformed");
                std::vector<Symbol> file;
                for (const auto& b : m.blocks) {
                    file.insert(file.end(), b.data.begin(), b.data.end());
                }
                stages.emplace_back("broadcast_subfiles", m.blocks.size());
                return file;
            }
        }

        // cache index -> (file -> subfile) as sent
        std::map<int, std::map<int, const Block*>> sent;
        for (const auto& m : batch.messages) {
            if (m.label.kind == MessageKind::Subfile) {
                sent[m.label.cache][m.label.file] = &m.blocks.at(0);
            }
        }
        std::uint64_t read = 0;
        std::uint64_t solved = 0;
        const MdsCode code = scheme2_code(config);
        const auto blocks = visible_blocks(caches, U);
        for (int i = 1; i <= config.caches; ++i) {
            const auto& at_i = sent[i];
            if (!U.contains(i)) {
                const auto it = at_i.find(demand);
                require(it != at_i.end(), "broadcast: W_{" + std::to_string(demand) + "," + std::to_string(i)
                                              + "} not transmitted");
                pieces[static_cast<std::size_t>(i - 1)] = it->second->data;
                ++read;
                continue;
            }
            const auto it = at_i.find(demand);
            if (it != at_i.end()) {
                pieces[static_cast<std::size_t>(i - 1)] = it->second->data;
                ++read;
                continue;
            }
            std::vector<std::pair<std::size_t, std::span<const Symbol>>> known;
            for (const auto& [file, block] : at_i) {
                known.emplace_back(static_cast<std::size_t>(file - 1), block->data);
            }
            for (const Block* b : blocks) {
                if (b->label.kind == BlockKind::Scheme2Parity && b->label.cache == i) {
                    known.emplace_back(static_cast<std::size_t>(config.files + b->label.column), b->data);
                }
            }
            const auto info = erasure_decode_blocks(known, code);
            pieces[static_cast<std::size_t>(i - 1)] = info[static_cast<std::size_t>(demand - 1)];
            ++solved;
        }
        stages.emplace_back("broadcast_subfiles", read);
        stages.emplace_back("erasure_decoded_subfiles", solved);
        std::vector<Symbol> file;
        for (const auto& piece : pieces) {
            require(piece.size() == len, "scheme 2: subfile length mismatch");
            file.insert(file.end(), piece.begin(), piece.end());
        }
        return file;
    });
}

DecodeOutcome decode_user(const SchemeConfig& config, std::size_t user, const DemandVector& d,
                          const CacheContents& caches, const BroadcastBatch& batch)
{
    switch (config.scheme) {
    case Scheme::Mkr:
        return decode_mkr_user(config, user, d, caches, batch);
    case Scheme::Scheme1:
    case Scheme::Corner:
        return decode_scheme1_user(config, user, d, caches, batch);
    case Scheme::Scheme2:
        return decode_scheme2_user(config, user, d, caches, batch);
    }
    throw ConfigError("unknown scheme");
}

namespace {

void add_block(RowReducer& reducer, const Block& b)
{
    std::vector<std::pair<std::size_t, Symbol>> terms;
    terms.reserve(b.label.terms.size());
    for (const auto& term : b.label.terms) {
        terms.emplace_back(term.piece, term.coeff);
    }
    reducer.add_sparse_row(terms, b.data);
}

} // namespace

OracleSession::OracleSession(const SchemeConfig& config, const CacheContents& caches, std::size_t user)
    : config_(config),
      base_(config.field(), static_cast<std::size_t>(config.files) * config.subpacketization, config.piece_length())
{
    for (const Block* b : visible_blocks(caches, user_subset(config, user))) {
        add_block(base_, *b);
    }
}

DecodeOutcome OracleSession::decode(const BroadcastBatch& batch, int target_file) const
{
    DecodeOutcome out;
    RowReducer reducer = base_;
    for (const auto& m : batch.messages) {
        for (const auto& b : m.blocks) {
            add_block(reducer, b);
        }
    }
    out.stages.emplace_back("cache_rank", base_.rank());
    out.stages.emplace_back("total_rank", reducer.rank());
    if (reducer.inconsistent()) {
        out.diagnostic = "oracle: inconsistent equations";
        return out;
    }
    std::uint64_t determined = 0;
    for (std::size_t local = 0; local < config_.subpacketization; ++local) {
        const std::size_t id = piece_id(config_, target_file, local);
        if (!reducer.determined(id)) {
            out.stages.emplace_back("determined_pieces", determined);
            out.diagnostic = "oracle: piece " + std::to_string(local) + " of file " + std::to_string(target_file)
                             + " not determined";
            return out;
        }
        const auto v = reducer.value(id);
        out.file.insert(out.file.end(), v.begin(), v.end());
        ++determined;
    }
    out.stages.emplace_back("determined_pieces", determined);
    out.decoded = true;
    return out;
}

DecodeOutcome oracle_decode_user(const SchemeConfig& config, std::size_t user, const CacheContents& caches,
                                 const BroadcastBatch& batch, int target_file)
{
    return OracleSession(config, caches, user).decode(batch, target_file);
}

} // namespace macc
