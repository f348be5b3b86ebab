#include "macc/simulate.hpp"

#include "macc/analysis.hpp"
#include "macc/delivery.hpp"
#include "macc/placement.hpp"

#include <algorithm>

namespace macc {

DemandMode parse_demand_mode(const std::string& name)
{
    if (name == "random") {
        return DemandMode::Random;
    }
    if (name == "exhaustive") {
        return DemandMode::Exhaustive;
    }
    if (name == "explicit") {
        return DemandMode::Explicit;
    }
    throw ConfigError("unknown demand mode '" + name + "' (expected random, exhaustive or explicit)");
}

std::string demand_mode_name(DemandMode mode)
{
    switch (mode) {
    case DemandMode::Random:
        return "random";
    case DemandMode::Exhaustive:
        return "exhaustive";
    case DemandMode::Explicit:
        return "explicit";
    }
    return "?";
}

DemandVector distinct_demands(const SchemeConfig& config)
{
    DemandVector d;
    for (std::uint64_t u = 0; u < config.users(); ++u) {
        d.demands.push_back(static_cast<int>(u % static_cast<std::uint64_t>(config.files)) + 1);
    }
    return d;
}

std::optional<std::vector<DemandVector>> all_demands(const SchemeConfig& config, std::uint64_t cap)
{
    const std::uint64_t K = config.users();
    const auto N = static_cast<std::uint64_t>(config.files);
    std::uint64_t total = 1;
    for (std::uint64_t i = 0; i < K; ++i) {
        if (total > cap / N + 1) {
            return std::nullopt;
        }
        total *= N;
    }
    if (total > cap) {
        return std::nullopt;
    }
    std::vector<DemandVector> out;
    DemandVector d{std::vector<int>(K, 1)};
    for (std::uint64_t v = 0; v < total; ++v) {
        out.push_back(d);
        // odometer, last user fastest
        for (std::size_t i = K; i-- > 0;) {
            if (d.demands[i] < config.files) {
                ++d.demands[i];
                break;
            }
            d.demands[i] = 1;
        }
    }
    return out;
}

DemandVector random_demands(const SchemeConfig& config, std::mt19937_64& rng)
{
    DemandVector d;
    for (std::uint64_t u = 0; u < config.users(); ++u) {
        d.demands.push_back(static_cast<int>(rng() % static_cast<std::uint64_t>(config.files)) + 1);
    }
    return d;
}

Rational expected_rate(const SchemeConfig& config, const DemandVector& d)
{
    switch (config.scheme) {
    case Scheme::Mkr:
        return mkr_point(config.caches, config.access, config.t, config.files).R;
    case Scheme::Scheme1:
        return scheme1_rate(config.caches, config.access, config.t);
    case Scheme::Corner:
        return Rational(0);
    case Scheme::Scheme2: {
        const auto kp = static_cast<std::int64_t>(binom_u64(config.caches - 1, config.access));
        return Rational(std::min<std::int64_t>(static_cast<std::int64_t>(d.distinct()), kp));
    }
    }
    return Rational(0);
}

Rational expected_memory(const SchemeConfig& config)
{
    const int C = config.caches;
    const int r = config.access;
    const int N = config.files;
    switch (config.scheme) {
    case Scheme::Mkr:
        return mkr_point(C, r, config.t, N).M;
    case Scheme::Scheme1:
        return scheme1_memory(C, r, config.t, N);
    case Scheme::Corner:
        return Rational(N) / Rational(r);
    case Scheme::Scheme2:
        return Rational(N - static_cast<std::int64_t>(binom_u64(C - 1, r)), C);
    }
    return Rational(0);
}

bool DemandRun::ok() const
{
    return labels_ok && rate == expected_rate
           && std::all_of(users.begin(), users.end(), [](const UserResult& u) { return u.matches; });
}

bool SimulationReport::ok() const
{
    return caches_ok && !runs.empty()
           && std::all_of(runs.begin(), runs.end(), [](const DemandRun& r) { return r.ok(); });
}

namespace {

json outcome_json(const DecodeOutcome& o)
{
    json stages = json::object();
    for (const auto& [name, count] : o.stages) {
        stages[name] = count;
    }
    json j{{"decoded", o.decoded}, {"stage_counts", std::move(stages)}};
    if (!o.diagnostic.empty()) {
        j["diagnostic"] = o.diagnostic;
    }
    return j;
}

} // namespace

json SimulationReport::to_json() const
{
    json runs_json = json::array();
    std::size_t users_ok = 0;
    std::size_t users_total = 0;
    for (const auto& run : runs) {
        json users_json = json::array();
        for (const auto& u : run.users) {
            json entry{{"user", u.subset},
                       {"user_index", u.user},
                       {"scheme", scheme_name(config.scheme)},
                       {"demand", u.demand},
                       {"decoded", u.matches},
                       {"stage_counts", outcome_json(u.structured)["stage_counts"]},
                       {"bytes_compared", u.bytes_compared}};
            if (!u.structured.diagnostic.empty()) {
                entry["diagnostic"] = u.structured.diagnostic;
            }
            if (u.oracle) {
                entry["oracle"] = outcome_json(*u.oracle);
            }
            users_json.push_back(std::move(entry));
            users_ok += u.matches ? 1 : 0;
            ++users_total;
        }
        runs_json.push_back({{"demands", run.demands.demands},
                             {"rate", run.rate.str()},
                             {"expected_rate", run.expected_rate.str()},
                             {"labels_consistent", run.labels_ok},
                             {"ok", run.ok()},
                             {"users", std::move(users_json)}});
    }
    return json{{"config", config_to_json(config)},
                {"seed", seed},
                {"demand_mode", demand_mode_name(mode)},
                {"truncated", truncated},
                {"memory", memory.str()},
                {"expected_memory", expected_memory.str()},
                {"caches_consistent", caches_ok},
                {"demand_vectors", runs.size()},
                {"users_decoded", users_ok},
                {"users_checked", users_total},
                {"ok", ok()},
                {"runs", std::move(runs_json)}};
}

SimulationReport run_demands(const SchemeConfig& config, const Library& lib, const CacheContents& caches,
                             const std::vector<DemandVector>& vectors, bool oracle, BroadcastBatch* last_batch)
{
    SimulationReport report;
    report.config = config;
    report.seed = lib.seed;
    report.memory = measured_memory(caches, config.file_length);
    report.expected_memory = expected_memory(config);
    report.caches_ok = labels_consistent(config, lib, caches);
    for (int c = 1; c <= config.caches; ++c) {
        report.caches_ok = report.caches_ok && measured_memory(caches, config.file_length, c) == report.expected_memory;
    }

    std::vector<OracleSession> sessions;
    if (oracle) {
        for (std::uint64_t u = 0; u < config.users(); ++u) {
            sessions.emplace_back(config, caches, u);
        }
    }
    const SubsetTable users(config.caches, config.access);

    for (const auto& d : vectors) {
        validate_demands(config, d);
        BroadcastBatch batch = deliver(config, lib, d);
        DemandRun run;
        run.demands = d;
        run.rate = measured_rate(batch, config.file_length);
        run.expected_rate = expected_rate(config, d);
        run.labels_ok = labels_consistent(config, lib, batch);
        for (std::size_t u = 0; u < users.size(); ++u) {
            UserResult res;
            res.user = u;
            res.subset = users.at(u).compact();
            res.demand = d.of(u);
            const auto& want = lib.files.at(static_cast<std::size_t>(res.demand - 1));
            res.structured = decode_user(config, u, d, caches, batch);
            res.matches = res.structured.decoded && res.structured.file == want;
            res.bytes_compared = res.structured.decoded ? 2 * want.size() : 0;
            if (oracle) {
                res.oracle = sessions[u].decode(batch, res.demand);
                res.matches = res.matches && res.oracle->decoded && res.oracle->file == want;
                res.bytes_compared += res.oracle->decoded ? 2 * want.size() : 0;
            }
            run.users.push_back(std::move(res));
        }
        report.runs.push_back(std::move(run));
        if (last_batch) {
            *last_batch = std::move(batch);
        }
    }
    return report;
}

Simulation simulate(const SimulationOptions& options)
{
    const SchemeConfig config =
        make_config(options.scheme, options.caches, options.access, options.t, options.files, options.f_hint);
    std::mt19937_64 rng(options.seed);
    Simulation sim;
    sim.library = random_library(config, rng, options.seed);
    sim.caches = place(config, sim.library);

    std::vector<DemandVector> vectors;
    bool truncated = false;
    switch (options.mode) {
    case DemandMode::Explicit: {
        DemandVector d{options.demands};
        validate_demands(config, d);
        vectors.push_back(std::move(d));
        break;
    }
    case DemandMode::Exhaustive:
        if (auto all = all_demands(config, options.exhaustive_cap)) {
            vectors = std::move(*all);
        } else {
            vectors.push_back(distinct_demands(config));
            truncated = true;
        }
        break;
    case DemandMode::Random:
        if (options.random_vectors < 1) {
            throw ConfigError("need at least one random demand vector");
        }
        for (int i = 0; i < options.random_vectors; ++i) {
            vectors.push_back(random_demands(config, rng));
        }
        break;
    }

    sim.report = run_demands(config, sim.library, sim.caches, vectors, options.oracle, &sim.last_batch);
    sim.report.seed = options.seed;
    sim.report.mode = options.mode;
    sim.report.truncated = truncated;
    return sim;
}

} // namespace macc
