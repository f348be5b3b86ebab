#pragma once

#include "macc/field.hpp"
#include "macc/matrix.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace macc {

/// Raised when erasure decoding cannot produce a message: too few or
/// repeated positions, or known symbols that no codeword matches.
class ErasureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An [n, k] MDS code given by its k x n generator matrix.
struct MdsCode {
    std::size_t k = 0;
    std::size_t n = 0;
    Field field{1};
    FieldMatrix generator;
    bool systematic = false;
};

/// Reed-Solomon generator: the k x n Vandermonde matrix whose column j
/// evaluates the monomials 1, x, ..., x^{k-1} at the field element j.
/// Throws std::invalid_argument unless 1 <= k <= n <= 2^m.
MdsCode rs_generator(std::size_t k, std::size_t n, const Field& field);

/// Row-reduces the generator to [I_k | P]; already-systematic codes come
/// back unchanged.
MdsCode systematize(const MdsCode& code);

/// Convenience: systematic RS code.
MdsCode systematic_rs(std::size_t k, std::size_t n, const Field& field);

/// The k x (n - k) parity block P of a systematic code.
FieldMatrix parity_block(const MdsCode& code);

/// message (length k) times generator.
std::vector<Symbol> encode(std::span<const Symbol> message, const MdsCode& code);

/// Recovers the message from (position, symbol) pairs. Requires at least
/// k distinct positions; extra positions are checked for consistency.
std::vector<Symbol> erasure_decode(std::span<const std::pair<std::size_t, Symbol>> known,
                                   const MdsCode& code);

/// Block form used by the schemes: every coded position holds a vector of
/// `width` symbols and the code acts on each symbol column independently.
/// `known` pairs a codeword position with its block; returns k blocks.
std::vector<std::vector<Symbol>> erasure_decode_blocks(
    std::span<const std::pair<std::size_t, std::span<const Symbol>>> known, const MdsCode& code);

/// Encodes k message blocks into n codeword blocks.
std::vector<std::vector<Symbol>> encode_blocks(std::span<const std::vector<Symbol>> message,
                                               const MdsCode& code);

/// True when the columns `cols` of the generator are linearly independent.
bool columns_independent(const MdsCode& code, std::span<const std::size_t> cols);

/// MDS check: every k-subset of columns when n <= exhaustive_max, otherwise
/// `samples` random k-subsets (mt19937_64 seeded with `seed`).
bool check_mds_property(const MdsCode& code, std::size_t exhaustive_max = 12, std::size_t samples = 200,
                        std::uint64_t seed = 1);

} // namespace macc
