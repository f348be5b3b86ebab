#pragma once

#include "macc/rational.hpp"

#include <string>
#include <vector>

namespace macc {

/// An achievable (M, R) pair and where it came from: "MKR(t=2)",
/// "Scheme1(t=2)", "Scheme2-corner", "Scheme2-zero", "corner-t=C-r+1" or
/// "shared(a,b,lambda)" for a point between two corners.
struct TradeoffPoint {
    Rational M;
    Rational R;
    std::string provenance;

    bool operator==(const TradeoffPoint&) const = default;
};

struct BoundResult {
    Rational M;
    Rational bound; ///< clipped at 0
    Rational raw;   ///< value of the maximizing term before clipping
    int s = 0;
    std::int64_t l = 0;
};

/// (Nt/C, binom(C, t+r)/binom(C, t)).
TradeoffPoint mkr_point(int C, int r, int t, int N);

/// Closed-form Scheme 1 memory for t in [1, C - r + 1], both the t >= r and
/// t < r branches. Throws std::invalid_argument outside that range.
Rational scheme1_memory(int C, int r, int t, int N);

/// The same memory obtained by adding up what the rounds store:
/// N * [B (r~-1)! + sum_b span_b (B - D_b)] / (r~! binom(C, t)).
Rational scheme1_memory_roundsum(int C, int r, int t, int N);

/// binom(C, t+r)/binom(C, t); 0 at t = C - r + 1.
Rational scheme1_rate(int C, int r, int t);

/// Scheme 1 corner points, t = 1 .. C - r + 1.
std::vector<TradeoffPoint> scheme1_points(int C, int r, int N);

/// MKR corner points, t = 1 .. C.
std::vector<TradeoffPoint> mkr_points(int C, int r, int N);

/// (0, N) and, when N > binom(C-1, r), ((N - binom(C-1, r))/C, binom(C-1, r)).
std::vector<TradeoffPoint> scheme2_segment(int C, int r, int N);

/// Lower convex hull of the Scheme 1 and Scheme 2 points, ordered by M.
class Envelope {
public:
    explicit Envelope(std::vector<TradeoffPoint> corners);

    const std::vector<TradeoffPoint>& corners() const { return corners_; }

    /// Rate at memory M by interpolation; flat beyond the last corner.
    TradeoffPoint evaluate(const Rational& M) const;

private:
    std::vector<TradeoffPoint> corners_;
};

Envelope achievable_envelope(int C, int r, int N);

/// min(C - s, smallest i >= 0 with binom(s + i, r) >= ceil(N / l)).
int omega(int s, std::int64_t l, int C, int r, int N);

/// (1/l){N - omega/(s+omega)(N - l binom(s,r))^+ - (N - l binom(C,r))^+ - sM},
/// unclipped.
Rational bound_term(int C, int r, int N, const Rational& M, int s, std::int64_t l);

/// Maximum of bound_term over s in [r, C], l in [1, ceil(N/binom(s,r))],
/// clipped at 0. Ties keep the lexicographically smallest (s, l).
BoundResult lower_bound(int C, int r, int N, const Rational& M);

struct RegimeCheck {
    std::string regime; ///< "high" (1 - rM/N) or "low" (N - CM)
    Rational M;
    Rational achievable;
    Rational bound;
    Rational expected;
    bool ok = false;
};

struct RegimeReport {
    bool low_applies = false; ///< binom(C-1, r) < N <= binom(C, r)
    std::vector<RegimeCheck> checks;
    bool all_ok() const;
};

/// Compares envelope and bound on the high-memory interval
/// M/N in [(K-1)/(rK), 1/r] and, when it applies, on [0, (N - binom(C-1,r))/C].
/// Each interval is sampled at both endpoints and `interior` evenly
/// spaced interior points.
RegimeReport check_optimality_regimes(int C, int r, int N, int interior = 5);

struct IdentityCheck {
    std::string name;
    std::string params;
    bool ok = false;
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;
    std::size_t failures() const;
};

/// Corner memory identities, round-sum = closed form, the weighted and plain
/// Vandermonde identities for n1, n2, m <= 20, and the telescoping sum for
/// r <= 10. Failures are recorded, never thrown.
IdentityReport check_identities(int max_caches = 12);

/// `count` evenly spaced memories 0, N/r/(count-1), ..., N/r.
std::vector<Rational> memory_grid(int r, int N, int count);

} // namespace macc
