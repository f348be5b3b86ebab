#pragma once

#include "macc/combinatorics.hpp"
#include "macc/field.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace macc {

/// Invalid (C, r, t, N) regime or malformed instance description.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Scheme {
    Mkr,     ///< uncoded placement, XOR delivery
    Scheme1, ///< MDS-coded multi-round placement, XOR delivery (t <= C - r)
    Corner,  ///< t = C - r + 1: [C, r] MDS placement, nothing to deliver
    Scheme2, ///< systematic-MDS parity placement, low-memory corner
};

std::string scheme_name(Scheme s);
/// Accepts "mkr", "s1", "corner", "s2"; throws ConfigError otherwise.
Scheme parse_scheme(const std::string& name);

/// One (C, r, t, N) instance together with its symbol geometry.
struct SchemeConfig {
    Scheme scheme = Scheme::Mkr;
    int caches = 0;       ///< C
    int access = 0;       ///< r, caches per user
    int t = 0;            ///< placement parameter; 0 when unused (Scheme 2)
    int files = 0;        ///< N
    int field_degree = 1; ///< m, field is GF(2^m)
    std::size_t subpacketization = 1;
    std::size_t file_length = 1; ///< f, symbols per file

    std::size_t piece_length() const { return file_length / subpacketization; }
    std::uint64_t users() const { return binom_u64(caches, access); }
    /// min(r, t); the factorial order of the Scheme 1 inner code.
    int rtilde() const { return std::min(access, t); }
    /// Mini-subfiles per subfile: rtilde! for Scheme 1, 1 for MKR.
    std::size_t pieces_per_subfile() const;
    const Field& field() const { return Field::of_degree(field_degree); }

    bool operator==(const SchemeConfig&) const = default;
};

/// Validates the regime, picks the field degree and rounds f up to a
/// multiple of the subpacketization. `t` is required for MKR and Scheme 1
/// and ignored for Scheme 2; Scheme 1 with t = C - r + 1 becomes Corner.
/// Throws ConfigError on an invalid regime.
SchemeConfig make_config(Scheme scheme, int caches, int access, std::optional<int> t, int files,
                         std::size_t f_hint = 1);

/// Lengths of every MDS code the scheme constructs.
std::vector<std::uint64_t> required_code_lengths(Scheme scheme, int caches, int access, int t, int files);

/// N independent files of f symbols each.
struct Library {
    int field_degree = 1;
    std::uint64_t seed = 0;
    std::vector<std::vector<Symbol>> files; ///< files[n - 1]

    int count() const { return static_cast<int>(files.size()); }
    std::size_t file_length() const { return files.empty() ? 0 : files.front().size(); }
    bool operator==(const Library&) const = default;
};

/// Deterministic pseudorandom library (mt19937_64 seeded with `seed`).
Library random_library(const SchemeConfig& config, std::uint64_t seed);
/// Draws the symbols from `rng`, so later draws (demands) continue the
/// same stream; `seed` is only recorded.
Library random_library(const SchemeConfig& config, std::mt19937_64& rng, std::uint64_t seed);
Library zero_library(const SchemeConfig& config);

/// One file id (1-based) per user, users in lexicographic order of their
/// cache subsets.
struct DemandVector {
    std::vector<int> demands;

    int of(std::size_t user_index) const { return demands.at(user_index); }
    std::size_t distinct() const;
    bool operator==(const DemandVector&) const = default;
};

/// Throws ConfigError if the length is not binom(C, r) or an entry is
/// outside [1, N].
void validate_demands(const SchemeConfig& config, const DemandVector& d);

/// Coefficient of one unknown piece inside a labeled linear combination.
/// Pieces are numbered (file - 1) * subpacketization + local index.
struct Term {
    std::uint32_t piece = 0;
    Symbol coeff = 0;
    bool operator==(const Term&) const = default;
};

enum class BlockKind : std::uint8_t {
    Subfile,       ///< MKR cache: W_{file, T} verbatim (subset = T)
    RoundZero,     ///< Scheme 1 cache: coded mini-subfile Y^{index}_{file, T}
    RoundParity,   ///< Scheme 1 cache: parity `column` of round `round`, repetition `index`, cache `cache`
    CornerCoded,   ///< Corner cache: coded subfile `cache` of `file`
    Scheme2Parity, ///< Scheme 2 cache: parity `column` over the `cache`-th subfiles
    XorPiece,      ///< XOR delivery: mini-subfile `index` of the message for S (subset = S)
    SubfileSend,   ///< Scheme 2 delivery: W_{file, index} sent uncoded
};

std::string block_kind_name(BlockKind k);
BlockKind parse_block_kind(const std::string& name);

/// What a stored or transmitted block is: descriptive coordinates for the
/// structured decoders plus the exact linear combination for the oracle.
/// `subset` is the 0-based lexicographic index of T (or S).
struct BlockLabel {
    BlockKind kind = BlockKind::Subfile;
    int file = 0;
    std::uint32_t subset = 0;
    int cache = 0;
    int round = 0;
    int index = 0;
    int column = 0;
    std::vector<Term> terms;

    bool operator==(const BlockLabel&) const = default;
};

struct Block {
    BlockLabel label;
    std::vector<Symbol> data; ///< piece_length symbols
    bool operator==(const Block&) const = default;
};

/// Z_1 .. Z_C; caches[c - 1] holds the blocks of cache c.
struct CacheContents {
    std::vector<std::vector<Block>> caches;

    std::size_t symbols_in(int cache) const;
    bool operator==(const CacheContents&) const = default;
};

enum class MessageKind : std::uint8_t {
    Xor,      ///< one message per (t + r)-subset S
    Subfile,  ///< Scheme 2: the `cache`-th subfile of `file`
    WholeFile ///< Scheme 2 with few distinct demands: `file` sent whole
};

std::string message_kind_name(MessageKind k);
MessageKind parse_message_kind(const std::string& name);

/// (file, subset index) of one XOR summand W_{d_U, S \ U}.
struct Component {
    int file = 0;
    std::uint32_t subset = 0;
    bool operator==(const Component&) const = default;
};

struct MessageLabel {
    MessageKind kind = MessageKind::Xor;
    std::uint32_t subset = 0; ///< S for Xor messages
    int cache = 0;
    int file = 0;
    std::vector<Component> components;
    bool operator==(const MessageLabel&) const = default;
};

struct Message {
    MessageLabel label;
    std::vector<Block> blocks;
    bool operator==(const Message&) const = default;
};

struct BroadcastBatch {
    std::vector<Message> messages;

    std::size_t total_symbols() const;
    bool operator==(const BroadcastBatch&) const = default;
};

/// Global unknown id of a piece.
inline std::uint32_t piece_id(const SchemeConfig& config, int file, std::size_t local)
{
    return static_cast<std::uint32_t>(static_cast<std::size_t>(file - 1) * config.subpacketization + local);
}

/// The `local`-th piece (piece_length symbols) of file `file`.
std::vector<Symbol> piece_of(const SchemeConfig& config, const Library& lib, int file, std::size_t local);

/// Evaluates a label's linear combination against the library.
std::vector<Symbol> expand_label(const SchemeConfig& config, const Library& lib, const BlockLabel& label);

/// True when every block's data equals the expansion of its label.
bool labels_consistent(const SchemeConfig& config, const Library& lib, const CacheContents& caches);
bool labels_consistent(const SchemeConfig& config, const Library& lib, const BroadcastBatch& batch);

} // namespace macc
