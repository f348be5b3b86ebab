#pragma once

#include "macc/decode.hpp"
#include "macc/io.hpp"
#include "macc/model.hpp"
#include "macc/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace macc {

enum class DemandMode { Random, Exhaustive, Explicit };

DemandMode parse_demand_mode(const std::string& name);
std::string demand_mode_name(DemandMode mode);

struct SimulationOptions {
    Scheme scheme = Scheme::Scheme1;
    int caches = 4;
    int access = 2;
    std::optional<int> t;
    int files = 6;
    std::size_t f_hint = 1;
    DemandMode mode = DemandMode::Random;
    std::vector<int> demands;           ///< used when mode == Explicit
    std::uint64_t seed = 1;
    int random_vectors = 1;             ///< demand vectors drawn in Random mode
    std::uint64_t exhaustive_cap = 4096; ///< larger spaces fall back to one all-distinct vector
    bool oracle = true;
};

/// The all-distinct-as-possible vector d_U = (u mod N) + 1.
DemandVector distinct_demands(const SchemeConfig& config);

/// All N^K demand vectors in lexicographic order, or nullopt when there
/// are more than `cap`.
std::optional<std::vector<DemandVector>> all_demands(const SchemeConfig& config, std::uint64_t cap);

DemandVector random_demands(const SchemeConfig& config, std::mt19937_64& rng);

struct UserResult {
    std::size_t user = 0;
    std::string subset; ///< e.g. "12"
    int demand = 0;
    DecodeOutcome structured;
    std::optional<DecodeOutcome> oracle;
    bool matches = false; ///< structured (and oracle) output equals the library file
    std::size_t bytes_compared = 0;
};

struct DemandRun {
    DemandVector demands;
    Rational rate;
    Rational expected_rate;
    bool labels_ok = false;
    std::vector<UserResult> users;
    bool ok() const;
};

struct SimulationReport {
    SchemeConfig config;
    std::uint64_t seed = 0;
    DemandMode mode = DemandMode::Random;
    bool truncated = false;
    Rational memory;          ///< measured, cache 1
    Rational expected_memory;
    bool caches_ok = false;   ///< every cache holds exactly expected_memory and labels re-expand
    std::vector<DemandRun> runs;

    bool ok() const;
    json to_json() const;
};

/// Rate the scheme promises for `d` (depends on d only for Scheme 2).
Rational expected_rate(const SchemeConfig& config, const DemandVector& d);
/// Memory the scheme promises.
Rational expected_memory(const SchemeConfig& config);

/// Everything produced by one simulation; the last run's batch is kept for dumps.
struct Simulation {
    SimulationReport report;
    Library library;
    CacheContents caches;
    BroadcastBatch last_batch;
};

/// Place, deliver and decode every user for each demand vector. Throws
/// ConfigError on an invalid configuration or demand vector.
Simulation simulate(const SimulationOptions& options);

/// Runs placement once and decodes `vectors` for every user, comparing the
/// structured decoder and the oracle against the library. Used by the
/// test suites for bulk sweeps.
SimulationReport run_demands(const SchemeConfig& config, const Library& lib, const CacheContents& caches,
                             const std::vector<DemandVector>& vectors, bool oracle,
                             BroadcastBatch* last_batch = nullptr);

} // namespace macc
