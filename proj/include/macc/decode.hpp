#pragma once

#include "macc/matrix.hpp"
#include "macc/model.hpp"

#include <string>
#include <utility>
#include <vector>

namespace macc {

/// Result of one user's decoding attempt. `stages` records how many
/// subfiles (or columns) each step recovered, in order.
struct DecodeOutcome {
    bool decoded = false;
    std::vector<Symbol> file;
    std::string diagnostic; ///< first failing stage when !decoded
    std::vector<std::pair<std::string, std::uint64_t>> stages;
};

// Structured decoders. `user` is the 0-based lexicographic index of the
// user's cache subset; the user reads only its r caches and the batch.

DecodeOutcome decode_mkr_user(const SchemeConfig& config, std::size_t user, const DemandVector& d,
                              const CacheContents& caches, const BroadcastBatch& batch);

/// Scheme 1 (staged round-by-round recovery, then XOR peeling) and the
/// t = C - r + 1 corner (erasure decoding of r cached columns).
DecodeOutcome decode_scheme1_user(const SchemeConfig& config, std::size_t user, const DemandVector& d,
                                  const CacheContents& caches, const BroadcastBatch& batch);

DecodeOutcome decode_scheme2_user(const SchemeConfig& config, std::size_t user, const DemandVector& d,
                                  const CacheContents& caches, const BroadcastBatch& batch);

/// Dispatches on config.scheme.
DecodeOutcome decode_user(const SchemeConfig& config, std::size_t user, const DemandVector& d,
                          const CacheContents& caches, const BroadcastBatch& batch);

/// Scheme-agnostic check: every block the user can read becomes one
/// equation over all N * subpacketization pieces; the target file is
/// decodable iff each of its pieces is uniquely determined.
///
/// The cache equations are reduced once at construction, so one session
/// serves any number of broadcast batches for the same user.
class OracleSession {
public:
    OracleSession(const SchemeConfig& config, const CacheContents& caches, std::size_t user);

    DecodeOutcome decode(const BroadcastBatch& batch, int target_file) const;

    std::size_t cache_rank() const { return base_.rank(); }

private:
    SchemeConfig config_;
    RowReducer base_;
};

DecodeOutcome oracle_decode_user(const SchemeConfig& config, std::size_t user, const CacheContents& caches,
                                 const BroadcastBatch& batch, int target_file);

} // namespace macc
