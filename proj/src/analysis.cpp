#include "macc/analysis.hpp"

#include "macc/placement.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace macc {

namespace {

Rational big(const BigInt& v) { return Rational(v); }

Rational ratio(const BigInt& num, const BigInt& den) { return Rational(num, den); }

void check_regime(int C, int r, int t)
{
    if (r < 1 || r >= C || t < 1 || t > C - r + 1) {
        throw std::invalid_argument("need 1 <= r < C and t in [1, C - r + 1]");
    }
}

} // namespace

TradeoffPoint mkr_point(int C, int r, int t, int N)
{
    if (t < 1 || t > C) {
        throw std::invalid_argument("MKR needs t in [1, C]");
    }
    return {Rational(N) * Rational(t) / Rational(C), ratio(binom(C, t + r), binom(C, t)),
            "MKR(t=" + std::to_string(t) + ")"};
}

Rational scheme1_memory(int C, int r, int t, int N)
{
    check_regime(C, r, t);
    Rational sum;
    if (t >= r) {
        for (int i = 1; i <= r - 1; ++i) {
            sum += Rational(r - i, r) * big(binom_signed(r, i - 1) * binom_signed(C - r, t - r + i - 1));
        }
    } else {
        for (int i = 1; i <= t - 1; ++i) {
            sum += Rational(t - i, r) * big(binom_signed(r, t - i + 1) * binom_signed(C - r, i - 1));
        }
    }
    return Rational(N) * (Rational(t, C) - sum / big(binom(C, t)));
}

Rational scheme1_memory_roundsum(int C, int r, int t, int N)
{
    check_regime(C, r, t);
    const int R = std::min(r, t);
    BigInt stored = 0;
    for (const auto& plan : scheme1_round_plan(C, r, t)) {
        const std::uint64_t per_position = plan.round == 0 ? plan.B : plan.parity_count();
        stored += BigInt(plan.span) * BigInt(per_position);
    }
    return Rational(N) * ratio(stored, factorial(R) * binom(C, t));
}

Rational scheme1_rate(int C, int r, int t)
{
    check_regime(C, r, t);
    return ratio(binom(C, t + r), binom(C, t));
}

std::vector<TradeoffPoint> scheme1_points(int C, int r, int N)
{
    std::vector<TradeoffPoint> out;
    for (int t = 1; t <= C - r + 1; ++t) {
        const std::string name = t == C - r + 1 ? "corner-t=C-r+1" : "Scheme1(t=" + std::to_string(t) + ")";
        out.push_back({scheme1_memory(C, r, t, N), scheme1_rate(C, r, t), name});
    }
    return out;
}

std::vector<TradeoffPoint> mkr_points(int C, int r, int N)
{
    std::vector<TradeoffPoint> out;
    for (int t = 1; t <= C; ++t) {
        out.push_back(mkr_point(C, r, t, N));
    }
    return out;
}

std::vector<TradeoffPoint> scheme2_segment(int C, int r, int N)
{
    std::vector<TradeoffPoint> out{{Rational(0), Rational(N), "Scheme2-zero"}};
    const BigInt kp = binom(C - 1, r);
    if (BigInt(N) > kp) {
        out.push_back({ratio(BigInt(N) - kp, C), big(kp), "Scheme2-corner"});
    }
    return out;
}

Envelope::Envelope(std::vector<TradeoffPoint> points)
{
    if (points.empty()) {
        throw std::invalid_argument("envelope of no points");
    }
    std::sort(points.begin(), points.end(), [](const TradeoffPoint& a, const TradeoffPoint& b) {
        return a.M != b.M ? a.M < b.M : a.R < b.R;
    });
    auto cross = [](const TradeoffPoint& o, const TradeoffPoint& a, const TradeoffPoint& b) {
        return (a.M - o.M) * (b.R - o.R) - (a.R - o.R) * (b.M - o.M);
    };
    for (const auto& p : points) {
        if (!corners_.empty() && corners_.back().M == p.M) {
            continue; // same memory, higher or equal rate
        }
        while (corners_.size() >= 2 && cross(corners_[corners_.size() - 2], corners_.back(), p) <= Rational(0)) {
            corners_.pop_back();
        }
        corners_.push_back(p);
    }
    // Past the cheapest corner the curve stays flat.
    const auto lowest = std::min_element(corners_.begin(), corners_.end(),
                                         [](const TradeoffPoint& a, const TradeoffPoint& b) { return a.R < b.R; });
    corners_.erase(lowest + 1, corners_.end());
}

TradeoffPoint Envelope::evaluate(const Rational& M) const
{
    if (M <= corners_.front().M) {
        return {M, corners_.front().R, corners_.front().provenance};
    }
    if (M >= corners_.back().M) {
        return {M, corners_.back().R, corners_.back().provenance};
    }
    for (std::size_t i = 0; i + 1 < corners_.size(); ++i) {
        const auto& a = corners_[i];
        const auto& b = corners_[i + 1];
        if (M == a.M) {
            return a;
        }
        if (M < b.M) {
            const Rational lambda = (b.M - M) / (b.M - a.M);
            return {M, lambda * a.R + (Rational(1) - lambda) * b.R,
                    "shared(" + a.provenance + "," + b.provenance + "," + lambda.str() + ")"};
        }
    }
    return corners_.back();
}

Envelope achievable_envelope(int C, int r, int N)
{
    auto points = scheme2_segment(C, r, N);
    for (auto& p : scheme1_points(C, r, N)) {
        points.push_back(std::move(p));
    }
    return Envelope(std::move(points));
}

int omega(int s, std::int64_t l, int C, int r, int N)
{
    const BigInt need = (BigInt(N) + l - 1) / l;
    for (int i = 0; i < C - s; ++i) {
        if (binom(s + i, r) >= need) {
            return i;
        }
    }
    return C - s;
}

Rational bound_term(int C, int r, int N, const Rational& M, int s, std::int64_t l)
{
    const int w = omega(s, l, C, r, N);
    const Rational n(N);
    const Rational L(l);
    Rational v = n;
    v -= Rational(w, s + w) * positive_part(n - L * big(binom(s, r)));
    v -= positive_part(n - L * big(binom(C, r)));
    v -= Rational(s) * M;
    return v / L;
}

BoundResult lower_bound(int C, int r, int N, const Rational& M)
{
    BoundResult best;
    best.M = M;
    bool first = true;
    for (int s = r; s <= C; ++s) {
        const BigInt cover = binom(s, r);
        const auto lmax = ((BigInt(N) + cover - 1) / cover).convert_to<std::int64_t>();
        for (std::int64_t l = 1; l <= lmax; ++l) {
            const Rational v = bound_term(C, r, N, M, s, l);
            if (first || v > best.raw) {
                best.raw = v;
                best.s = s;
                best.l = l;
                first = false;
            }
        }
    }
    best.bound = positive_part(best.raw);
    return best;
}

bool RegimeReport::all_ok() const
{
    return std::all_of(checks.begin(), checks.end(), [](const RegimeCheck& c) { return c.ok; });
}

RegimeReport check_optimality_regimes(int C, int r, int N, int interior)
{
    RegimeReport report;
    const Envelope env = achievable_envelope(C, r, N);
    const BigInt K = binom(C, r);
    const BigInt kp = binom(C - 1, r);

    auto sample = [&](const std::string& name, const Rational& lo, const Rational& hi, auto expected) {
        for (int i = 0; i <= interior + 1; ++i) {
            const Rational M = lo + (hi - lo) * Rational(i, interior + 1);
            RegimeCheck c{name, M, env.evaluate(M).R, lower_bound(C, r, N, M).bound, expected(M), false};
            c.ok = c.achievable == c.bound && c.bound == c.expected;
            report.checks.push_back(std::move(c));
        }
    };

    const Rational n(N);
    sample("high", n * ratio(K - 1, BigInt(r) * K), n / Rational(r),
           [&](const Rational& M) { return Rational(1) - Rational(r) * M / n; });
    report.low_applies = kp < BigInt(N) && BigInt(N) <= K;
    if (report.low_applies) {
        sample("low", Rational(0), ratio(BigInt(N) - kp, C),
               [&](const Rational& M) { return n - Rational(C) * M; });
    }
    return report;
}

std::size_t IdentityReport::failures() const
{
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const IdentityCheck& c) { return !c.ok; }));
}

IdentityReport check_identities(int max_caches)
{
    IdentityReport report;
    // One summary entry per family plus one entry per failing case.
    struct Family {
        std::string name;
        std::size_t cases = 0;
        std::vector<std::string> failed;
    };
    std::deque<Family> families; // stable references
    auto family = [&](const std::string& name) -> Family& {
        families.push_back({name, 0, {}});
        return families.back();
    };
    auto record = [](Family& f, bool ok, const std::string& params) {
        ++f.cases;
        if (!ok) {
            f.failed.push_back(params);
        }
    };

    {
        Family& corner = family("memory at t=C-r+1 equals N/r");
        for (int C = 2; C <= max_caches; ++C) {
            for (int r = 1; r < C; ++r) {
                record(corner, scheme1_memory(C, r, C - r + 1, 1) == Rational(1, r),
                       "C=" + std::to_string(C) + " r=" + std::to_string(r));
            }
        }
    }
    {
        Family& near = family("memory at t=C-r equals N(K-1)/(rK)");
        for (int C = 2; C <= max_caches; ++C) {
            for (int r = 1; r < C; ++r) {
                const BigInt K = binom(C, r);
                record(near, scheme1_memory(C, r, C - r, 1) == ratio(K - 1, BigInt(r) * K),
                       "C=" + std::to_string(C) + " r=" + std::to_string(r));
            }
        }
    }
    {
        Family& sum = family("round-sum memory equals closed form");
        for (int C = 2; C <= max_caches; ++C) {
            for (int r = 1; r < C; ++r) {
                for (int t = 1; t <= C - r + 1; ++t) {
                    record(sum, scheme1_memory_roundsum(C, r, t, 1) == scheme1_memory(C, r, t, 1),
                           "C=" + std::to_string(C) + " r=" + std::to_string(r) + " t=" + std::to_string(t));
                }
            }
        }
    }
    {
        Family& weighted_sum = family("sum k1 binom(n1,k1) binom(n2,k2) = m n1/(n1+n2) binom(n1+n2,m)");
        Family& vander = family("sum binom(n1,k1) binom(n2,k2) = binom(n1+n2,m)");
        for (int n1 = 1; n1 <= 20; ++n1) {
            for (int n2 = 1; n2 <= 20; ++n2) {
                for (int m = 1; m <= std::min(20, n1 + n2); ++m) {
                    BigInt weighted = 0;
                    BigInt plain = 0;
                    for (int k1 = 0; k1 <= m; ++k1) {
                        const BigInt term = binom(n1, k1) * binom(n2, m - k1);
                        weighted += BigInt(k1) * term;
                        plain += term;
                    }
                    const std::string params =
                        "n1=" + std::to_string(n1) + " n2=" + std::to_string(n2) + " m=" + std::to_string(m);
                    record(weighted_sum, big(weighted) == ratio(BigInt(m) * n1 * binom(n1 + n2, m), BigInt(n1 + n2)),
                           params);
                    record(vander, plain == binom(n1 + n2, m), params);
                }
            }
        }
    }
    {
        Family& tele = family("sum_{b=i}^{r-1} r!/((r-b)(r-b+1)) = r!(r-i)/(r-i+1)");
        for (int r = 2; r <= 10; ++r) {
            for (int i = 1; i <= r - 1; ++i) {
                Rational s;
                for (int b = i; b <= r - 1; ++b) {
                    s += ratio(factorial(r), BigInt((r - b) * (r - b + 1)));
                }
                const bool ok = s == ratio(factorial(r) * (r - i), BigInt(r - i + 1))
                                && (i != 1 || s == big(factorial(r - 1) * (r - 1)));
                record(tele, ok, "r=" + std::to_string(r) + " i=" + std::to_string(i));
            }
        }
    }

    for (const auto& f : families) {
        report.checks.push_back({f.name, std::to_string(f.cases) + " cases", f.failed.empty()});
        for (const auto& p : f.failed) {
            report.checks.push_back({f.name, p, false});
        }
    }
    return report;
}

std::vector<Rational> memory_grid(int r, int N, int count)
{
    std::vector<Rational> grid;
    const Rational top = Rational(N) / Rational(r);
    for (int i = 0; i < count; ++i) {
        grid.push_back(count == 1 ? Rational(0) : top * Rational(i, count - 1));
    }
    return grid;
}

} // namespace macc
