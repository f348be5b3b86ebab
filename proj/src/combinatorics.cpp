#include "macc/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

namespace macc {

BigInt binom(std::int64_t n, std::int64_t m)
{
    if (n < 0 || m < 0) {
        throw std::invalid_argument("binom: arguments must be non-negative");
    }
    return binom_signed(n, m);
}

BigInt binom_signed(std::int64_t n, std::int64_t m)
{
    if (m < 0 || n < 0 || n < m) {
        return 0;
    }
    if (m > n - m) {
        m = n - m;
    }
    BigInt acc = 1;
    for (std::int64_t i = 1; i <= m; ++i) {
        acc *= n - m + i;
        acc /= i;
    }
    return acc;
}

std::uint64_t binom_u64(std::int64_t n, std::int64_t m)
{
    const BigInt b = binom_signed(n, m);
    if (b > std::numeric_limits<std::uint64_t>::max()) {
        throw std::overflow_error("binom_u64: value does not fit in 64 bits");
    }
    return static_cast<std::uint64_t>(b);
}

BigInt factorial(std::int64_t n)
{
    if (n < 0) {
        throw std::invalid_argument("factorial of a negative number");
    }
    BigInt acc = 1;
    for (std::int64_t i = 2; i <= n; ++i) {
        acc *= i;
    }
    return acc;
}

std::uint64_t factorial_u64(std::int64_t n)
{
    const BigInt f = factorial(n);
    if (f > std::numeric_limits<std::uint64_t>::max()) {
        throw std::overflow_error("factorial_u64: value does not fit in 64 bits");
    }
    return static_cast<std::uint64_t>(f);
}

namespace {

void check_universe(int universe)
{
    if (universe < 0 || universe > 31) {
        throw std::out_of_range("subset universe must be in [0, 31]");
    }
}

} // namespace

Subset::Subset(int universe, std::initializer_list<int> members)
    : Subset(universe, std::vector<int>(members))
{
}

Subset::Subset(int universe, const std::vector<int>& members)
    : universe_(universe)
{
    check_universe(universe);
    for (int e : members) {
        if (e < 1 || e > universe) {
            throw std::out_of_range("subset member " + std::to_string(e) + " outside [1, "
                                    + std::to_string(universe) + "]");
        }
        const std::uint32_t bit = std::uint32_t{1} << (e - 1);
        if (mask_ & bit) {
            throw std::invalid_argument("duplicate subset member " + std::to_string(e));
        }
        mask_ |= bit;
    }
}

Subset Subset::from_mask(int universe, std::uint32_t mask)
{
    check_universe(universe);
    if (universe < 32 && (mask >> universe) != 0) {
        throw std::out_of_range("subset mask has bits outside the universe");
    }
    Subset s;
    s.universe_ = universe;
    s.mask_ = mask;
    return s;
}

int Subset::size() const { return std::popcount(mask_); }

bool Subset::contains(int element) const
{
    return element >= 1 && element <= universe_ && ((mask_ >> (element - 1)) & 1u);
}

std::vector<int> Subset::members() const
{
    std::vector<int> out;
    for (int e = 1; e <= universe_; ++e) {
        if (contains(e)) {
            out.push_back(e);
        }
    }
    return out;
}

Subset Subset::unite(const Subset& o) const { return from_mask(universe_, mask_ | o.mask_); }
Subset Subset::minus(const Subset& o) const { return from_mask(universe_, mask_ & ~o.mask_); }
Subset Subset::intersect(const Subset& o) const { return from_mask(universe_, mask_ & o.mask_); }

std::string Subset::compact() const
{
    std::string out;
    for (int e : members()) {
        out += std::to_string(e);
    }
    return out;
}

std::strong_ordering Subset::operator<=>(const Subset& o) const
{
    const auto a = members();
    const auto b = o.members();
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<Subset> enumerate_ksubsets(int universe, int k)
{
    check_universe(universe);
    if (k < 0 || k > universe) {
        throw std::invalid_argument("enumerate_ksubsets: need 0 <= k <= C");
    }
    std::vector<Subset> out;
    std::vector<int> cur(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        cur[static_cast<std::size_t>(i)] = i + 1;
    }
    while (true) {
        out.emplace_back(universe, cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == universe - k + i + 1) {
            --i;
        }
        if (i < 0) {
            break;
        }
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) {
            cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return out;
}

std::uint64_t subset_rank(const Subset& s)
{
    const auto m = s.members();
    const int n = s.universe();
    const int k = static_cast<int>(m.size());
    std::uint64_t rank = 1;
    int prev = 0;
    for (int i = 0; i < k; ++i) {
        // subsets that agree on the first i members and have a smaller (i+1)-th
        for (int j = prev + 1; j < m[static_cast<std::size_t>(i)]; ++j) {
            rank += binom_u64(n - j, k - i - 1);
        }
        prev = m[static_cast<std::size_t>(i)];
    }
    return rank;
}

Subset subset_unrank(int universe, int k, std::uint64_t rank)
{
    check_universe(universe);
    if (k < 0 || k > universe) {
        throw std::invalid_argument("subset_unrank: need 0 <= k <= C");
    }
    if (rank < 1 || rank > binom_u64(universe, k)) {
        throw std::out_of_range("subset_unrank: rank " + std::to_string(rank) + " out of range");
    }
    std::uint64_t remaining = rank - 1;
    std::vector<int> members;
    int next = 1;
    for (int i = 0; i < k; ++i) {
        while (true) {
            const std::uint64_t block = binom_u64(universe - next, k - i - 1);
            if (remaining < block) {
                break;
            }
            remaining -= block;
            ++next;
        }
        members.push_back(next);
        ++next;
    }
    return Subset(universe, members);
}

int phi(int c, const Subset& t)
{
    if (!t.contains(c)) {
        throw std::invalid_argument("phi: cache " + std::to_string(c) + " is not in {" + t.compact() + "}");
    }
    const std::uint32_t below = (std::uint32_t{1} << (c - 1)) - 1;
    return std::popcount(t.mask() & below) + 1;
}

SubsetTable::SubsetTable(int universe, int k)
    : universe_(universe), k_(k), subsets_(enumerate_ksubsets(universe, k))
{
    if (universe > 24) {
        throw std::out_of_range("SubsetTable supports C <= 24");
    }
    index_.assign(std::size_t{1} << universe, -1);
    for (std::size_t i = 0; i < subsets_.size(); ++i) {
        index_[subsets_[i].mask()] = static_cast<std::int32_t>(i);
    }
}

std::size_t SubsetTable::index_of(const Subset& s) const
{
    if (s.mask() >= index_.size() || index_[s.mask()] < 0) {
        throw std::out_of_range("SubsetTable::index_of: {" + s.compact() + "} is not a "
                                + std::to_string(k_) + "-subset of [" + std::to_string(universe_) + "]");
    }
    return static_cast<std::size_t>(index_[s.mask()]);
}

} // namespace macc
