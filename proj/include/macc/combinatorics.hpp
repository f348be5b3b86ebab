#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace macc {

using BigInt = boost::multiprecision::cpp_int;

/// n choose m, with binom(n, m) = 0 for n < m.
BigInt binom(std::int64_t n, std::int64_t m);

/// binom for arguments that may go negative inside summations: 0 whenever
/// m < 0 or n < m.
BigInt binom_signed(std::int64_t n, std::int64_t m);

/// Checked narrowing for binomials used as sizes or loop bounds.
std::uint64_t binom_u64(std::int64_t n, std::int64_t m);

BigInt factorial(std::int64_t n);
std::uint64_t factorial_u64(std::int64_t n);

/// A subset of the universe [1, C], stored as a bitmask (C <= 31).
class Subset {
public:
    Subset() = default;
    Subset(int universe, std::initializer_list<int> members);
    Subset(int universe, const std::vector<int>& members);

    static Subset from_mask(int universe, std::uint32_t mask);

    int universe() const { return universe_; }
    std::uint32_t mask() const { return mask_; }
    int size() const;
    bool contains(int element) const;
    std::vector<int> members() const;

    Subset unite(const Subset& o) const;
    Subset minus(const Subset& o) const;
    Subset intersect(const Subset& o) const;
    bool disjoint(const Subset& o) const { return (mask_ & o.mask_) == 0; }
    bool subset_of(const Subset& o) const { return (mask_ & ~o.mask_) == 0; }

    /// Members concatenated, e.g. "134".
    std::string compact() const;

    bool operator==(const Subset& o) const = default;

    /// Lexicographic order of the sorted member tuples.
    std::strong_ordering operator<=>(const Subset& o) const;

private:
    int universe_ = 0;
    std::uint32_t mask_ = 0;
};

/// All k-subsets of [C] in lexicographic order.
std::vector<Subset> enumerate_ksubsets(int universe, int k);

/// 1-based position of s among the |s|-subsets of [C] in lexicographic order.
std::uint64_t subset_rank(const Subset& s);

/// Inverse of subset_rank; throws std::out_of_range for rank outside
/// [1, binom(C, k)].
Subset subset_unrank(int universe, int k, std::uint64_t rank);

/// 1-based position of cache c inside the sorted set t; throws
/// std::invalid_argument when c is not a member.
int phi(int c, const Subset& t);

/// k-subsets of [C] with O(1) mask -> 0-based index lookup.
class SubsetTable {
public:
    SubsetTable() = default;
    SubsetTable(int universe, int k);

    int universe() const { return universe_; }
    int k() const { return k_; }
    std::size_t size() const { return subsets_.size(); }
    const Subset& at(std::size_t index) const { return subsets_.at(index); }
    const std::vector<Subset>& all() const { return subsets_; }

    /// 0-based index; throws std::out_of_range for a subset of the wrong size.
    std::size_t index_of(const Subset& s) const;

private:
    int universe_ = 0;
    int k_ = 0;
    std::vector<Subset> subsets_;
    std::vector<std::int32_t> index_; // by mask
};

} // namespace macc
