#pragma once

#include "macc/io.hpp"

#include <string>

namespace macc {

struct SuiteResult {
    std::string name;
    bool ok = false;
    json summary;
};

/// check_identities over C <= 12.
SuiteResult verify_identities();

/// Every RS code with n <= max_n (plain and systematic, over the smallest
/// field that fits and over GF(2^8)) has all k-column subsets invertible.
SuiteResult verify_mds(std::size_t max_n = 12);

/// Exhaustive demand space of (C, r, N) = (4, 2, 2) for MKR (t = 1..4),
/// Scheme 1 (t = 1, 2) and the t = 3 corner: structured decoder, oracle
/// and library must agree for every user.
SuiteResult verify_decode();

} // namespace macc
