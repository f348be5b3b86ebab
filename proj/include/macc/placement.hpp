#pragma once

#include "macc/mds.hpp"
#include "macc/model.hpp"

#include <string>
#include <vector>

namespace macc {

/// Index bookkeeping for one Scheme 1 round. Round 0 stores (r~-1)! coded
/// mini-subfiles per cache position; round b >= 1 stores parities of a
/// systematic [2B - D_b, B] code taken across the B subfiles a cache sees.
///
/// The coded mini-subfiles of subfile T used by cache c in this round are
/// Y^{first_index(phi_c(T)) .. first_index(phi_c(T)) + span - 1}.
struct RoundPlan {
    int round = 0;
    std::uint64_t span = 0;  ///< indices per cache position
    std::uint64_t base = 0;  ///< indices consumed by earlier rounds, over all positions
    std::uint64_t B = 0;     ///< binom(C-1, t-1), subfiles containing a given cache
    std::uint64_t D = 0;     ///< subfiles a user already knows when this round starts

    std::uint64_t first_index(int position) const
    {
        return base + static_cast<std::uint64_t>(position - 1) * span + 1;
    }
    std::uint64_t code_length() const { return 2 * B - D; }
    std::uint64_t parity_count() const { return B - D; }
};

/// Rounds 0 .. r~-1 for t in [1, C - r + 1]. Round b >= 1 starts at
/// base = t * r~!/(r~ - b + 1) and has span r~!/((r~ - b)(r~ - b + 1)).
/// Throws ConfigError outside that range of t.
std::vector<RoundPlan> scheme1_round_plan(int caches, int access, int t);

/// The [r~! t, r~!] systematic RS code applied inside every subfile.
MdsCode scheme1_inner_code(const SchemeConfig& config);
/// The systematic [2B - D_b, B] code of one round (b >= 1).
MdsCode scheme1_round_code(const SchemeConfig& config, const RoundPlan& plan);
/// The plain [C, r] RS code of the t = C - r + 1 corner.
MdsCode corner_code(const SchemeConfig& config);
/// The systematic [2N - binom(C-1, r), N] code of Scheme 2.
MdsCode scheme2_code(const SchemeConfig& config);

struct NamedCode {
    std::string name;
    MdsCode code;
};

/// Every MDS code the configured scheme builds.
std::vector<NamedCode> scheme_codes(const SchemeConfig& config);

/// Local piece number of mini-subfile j (0-based) of subfile T.
inline std::size_t scheme1_piece(const SchemeConfig& config, std::size_t subset_index, std::size_t j)
{
    return subset_index * config.pieces_per_subfile() + j;
}

CacheContents place_mkr(const SchemeConfig& config, const Library& lib);
CacheContents place_scheme1(const SchemeConfig& config, const Library& lib);
CacheContents place_corner(const SchemeConfig& config, const Library& lib);
CacheContents place_scheme2(const SchemeConfig& config, const Library& lib);

/// Dispatches on config.scheme.
CacheContents place(const SchemeConfig& config, const Library& lib);

} // namespace macc
