#pragma once

#include "macc/model.hpp"
#include "macc/rational.hpp"

namespace macc {

/// One message per (t + r)-subset S in lexicographic order: the XOR over
/// r-subsets U of S of W_{d_U, S \ U}, mini-subfile by mini-subfile.
/// Shared by MKR and Scheme 1. Throws ConfigError on a bad demand vector.
BroadcastBatch deliver_xor(const SchemeConfig& config, const Library& lib, const DemandVector& d);

/// Scheme 2 delivery. With at most binom(C-1, r) distinct demands the
/// demanded files are sent whole (ascending); otherwise, cache by cache,
/// the i-th subfiles of the files wanted by users not attached to cache i,
/// padded with the lowest-indexed remaining files up to binom(C-1, r).
BroadcastBatch deliver_scheme2(const SchemeConfig& config, const Library& lib, const DemandVector& d);

/// Dispatches on config.scheme; the corner scheme sends nothing.
BroadcastBatch deliver(const SchemeConfig& config, const Library& lib, const DemandVector& d);

/// Transmitted symbols divided by the file length.
Rational measured_rate(const BroadcastBatch& batch, std::size_t file_length);

/// Cache occupancy in file units (cache 1; every scheme is symmetric).
Rational measured_memory(const CacheContents& caches, std::size_t file_length, int cache = 1);

} // namespace macc
