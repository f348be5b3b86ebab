#include "macc/mds.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

namespace macc {

MdsCode rs_generator(std::size_t k, std::size_t n, const Field& field)
{
    if (k < 1 || k > n) {
        throw std::invalid_argument("rs_generator: need 1 <= k <= n, got k=" + std::to_string(k)
                                    + " n=" + std::to_string(n));
    }
    if (n > field.order()) {
        throw std::invalid_argument("rs_generator: length " + std::to_string(n) + " exceeds field size "
                                    + std::to_string(field.order()));
    }
    FieldMatrix g(k, n);
    for (std::size_t j = 0; j < n; ++j) {
        const auto point = static_cast<Symbol>(j);
        Symbol power = 1;
        for (std::size_t i = 0; i < k; ++i) {
            g(i, j) = power;
            power = field.mul(power, point);
        }
    }
    const bool systematic = k == n && g == FieldMatrix::identity(k);
    return MdsCode{k, n, field, std::move(g), systematic};
}

MdsCode systematize(const MdsCode& code)
{
    std::vector<std::size_t> head(code.k);
    for (std::size_t i = 0; i < code.k; ++i) {
        head[i] = i;
    }
    const FieldMatrix inv = mat_inverse(code.field, code.generator.select_columns(head));
    MdsCode out = code;
    out.generator = mat_mul(code.field, inv, code.generator);
    out.systematic = true;
    return out;
}

MdsCode systematic_rs(std::size_t k, std::size_t n, const Field& field)
{
    return systematize(rs_generator(k, n, field));
}

FieldMatrix parity_block(const MdsCode& code)
{
    if (!code.systematic) {
        throw std::invalid_argument("parity_block: code is not systematic");
    }
    std::vector<std::size_t> tail;
    for (std::size_t j = code.k; j < code.n; ++j) {
        tail.push_back(j);
    }
    return code.generator.select_columns(tail);
}

std::vector<Symbol> encode(std::span<const Symbol> message, const MdsCode& code)
{
    if (message.size() != code.k) {
        throw std::invalid_argument("encode: message length " + std::to_string(message.size())
                                    + " != k=" + std::to_string(code.k));
    }
    return vec_mul(code.field, message, code.generator);
}

std::vector<std::vector<Symbol>> encode_blocks(std::span<const std::vector<Symbol>> message,
                                               const MdsCode& code)
{
    if (message.size() != code.k) {
        throw std::invalid_argument("encode_blocks: expected " + std::to_string(code.k) + " blocks");
    }
    const std::size_t width = message.empty() ? 0 : message[0].size();
    std::vector<std::vector<Symbol>> out(code.n, std::vector<Symbol>(width, 0));
    for (std::size_t i = 0; i < code.k; ++i) {
        if (message[i].size() != width) {
            throw std::invalid_argument("encode_blocks: ragged message blocks");
        }
        for (std::size_t j = 0; j < code.n; ++j) {
            code.field.axpy(out[j].data(), message[i].data(), width, code.generator(i, j));
        }
    }
    return out;
}

std::vector<std::vector<Symbol>> erasure_decode_blocks(
    std::span<const std::pair<std::size_t, std::span<const Symbol>>> known, const MdsCode& code)
{
    if (known.size() < code.k) {
        throw ErasureError("erasure_decode: " + std::to_string(known.size()) + " known positions, need "
                           + std::to_string(code.k));
    }
    std::vector<bool> seen(code.n, false);
    for (const auto& [pos, block] : known) {
        if (pos >= code.n) {
            throw ErasureError("erasure_decode: position " + std::to_string(pos) + " outside code length");
        }
        if (seen[pos]) {
            throw ErasureError("erasure_decode: repeated position " + std::to_string(pos));
        }
        seen[pos] = true;
    }
    const std::size_t width = known[0].second.size();

    std::vector<std::size_t> cols(code.k);
    for (std::size_t i = 0; i < code.k; ++i) {
        cols[i] = known[i].first;
    }
    // message * G_S = y_S  =>  message = y_S * G_S^{-1}
    FieldMatrix inv;
    try {
        inv = mat_inverse(code.field, code.generator.select_columns(cols));
    } catch (const std::domain_error&) {
        throw ErasureError("erasure_decode: selected generator columns are dependent");
    }
    std::vector<std::vector<Symbol>> message(code.k, std::vector<Symbol>(width, 0));
    for (std::size_t j = 0; j < code.k; ++j) {
        if (known[j].second.size() != width) {
            throw ErasureError("erasure_decode: ragged blocks");
        }
        for (std::size_t i = 0; i < code.k; ++i) {
            code.field.axpy(message[i].data(), known[j].second.data(), width, inv(j, i));
        }
    }
    for (std::size_t j = code.k; j < known.size(); ++j) {
        std::vector<Symbol> check(width, 0);
        for (std::size_t i = 0; i < code.k; ++i) {
            code.field.axpy(check.data(), message[i].data(), width, code.generator(i, known[j].first));
        }
        if (!std::equal(check.begin(), check.end(), known[j].second.begin(), known[j].second.end())) {
            throw ErasureError("erasure_decode: inconsistent symbol at position "
                               + std::to_string(known[j].first));
        }
    }
    return message;
}

std::vector<Symbol> erasure_decode(std::span<const std::pair<std::size_t, Symbol>> known,
                                   const MdsCode& code)
{
    std::vector<std::pair<std::size_t, std::span<const Symbol>>> blocks;
    blocks.reserve(known.size());
    for (const auto& kv : known) {
        blocks.emplace_back(kv.first, std::span<const Symbol>(&kv.second, 1));
    }
    const auto decoded = erasure_decode_blocks(blocks, code);
    std::vector<Symbol> out(code.k);
    for (std::size_t i = 0; i < code.k; ++i) {
        out[i] = decoded[i][0];
    }
    return out;
}

bool columns_independent(const MdsCode& code, std::span<const std::size_t> cols)
{
    return mat_rank(code.field, code.generator.select_columns(cols)) == cols.size();
}

bool check_mds_property(const MdsCode& code, std::size_t exhaustive_max, std::size_t samples, std::uint64_t seed)
{
    std::vector<std::size_t> cols(code.k);
    if (code.n <= exhaustive_max) {
        std::iota(cols.begin(), cols.end(), 0);
        while (true) {
            if (!columns_independent(code, cols)) {
                return false;
            }
            // next k-combination of [0, n)
            std::size_t i = code.k;
            while (i > 0 && cols[i - 1] == code.n - code.k + i - 1) {
                --i;
            }
            if (i == 0) {
                return true;
            }
            ++cols[i - 1];
            for (std::size_t j = i; j < code.k; ++j) {
                cols[j] = cols[j - 1] + 1;
            }
        }
    }
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> all(code.n);
    std::iota(all.begin(), all.end(), 0);
    for (std::size_t s = 0; s < samples; ++s) {
        std::shuffle(all.begin(), all.end(), rng);
        std::copy_n(all.begin(), code.k, cols.begin());
        std::sort(cols.begin(), cols.end());
        if (!columns_independent(code, cols)) {
            return false;
        }
    }
    return true;
}

} // namespace macc
