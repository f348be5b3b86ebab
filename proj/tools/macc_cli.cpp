// macc: simulate placement/delivery/decoding, tabulate trade-offs, run
// verification suites.
//
// Exit codes: 0 success, 2 invalid configuration, 3 verification failure,
// 4 I/O error.

#include "macc/analysis.hpp"
#include "macc/decode.hpp"
#include "macc/io.hpp"
#include "macc/simulate.hpp"
#include "macc/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>

namespace fs = std::filesystem;
using namespace macc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitVerify = 3;
constexpr int kExitIo = 4;

std::uint64_t default_seed()
{
    if (const char* env = std::getenv("MACC_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw ConfigError(std::string("MACC_SEED is not an unsigned integer: ") + env);
        }
    }
    return 1;
}

struct SimulateArgs {
    std::string scheme;
    int C = 0;
    int r = 0;
    int t = 0;
    int N = 0;
    std::size_t f_hint = 1;
    std::string demands = "random";
    std::vector<int> demand;
    std::uint64_t seed = 0;
    bool seed_given = false;
    int random_count = 1;
    std::uint64_t exhaustive_cap = 4096;
    bool no_oracle = false;
    bool no_dump = false;
    std::string out;
    std::string config;
};

struct TradeoffArgs {
    std::string preset;
    int C = 0;
    int r = 0;
    int N = 0;
    int grid = 50;
    bool decimal = false;
    std::string out;
};

/// Fills options the command line left unset from a JSON config file.
void apply_config_file(const std::string& path, CLI::App& cmd, SimulateArgs& a)
{
    const json j = [&] {
        try {
            return json::parse(read_text(path));
        } catch (const json::exception& e) {
            throw ConfigError(path + ": " + e.what());
        }
    }();
    auto take = [&](const char* key, const char* option, auto& field) {
        if (j.contains(key) && cmd.count(option) == 0) {
            try {
                field = j[key].get<std::remove_reference_t<decltype(field)>>();
            } catch (const json::exception& e) {
                throw ConfigError(path + ": key '" + key + "': " + e.what());
            }
        }
    };
    take("scheme", "--scheme", a.scheme);
    take("C", "-C", a.C);
    take("r", "-r", a.r);
    take("t", "-t", a.t);
    take("N", "-N", a.N);
    take("f_hint", "--f-hint", a.f_hint);
    take("demands", "--demands", a.demands);
    take("demand", "--demand", a.demand);
    take("seed", "--seed", a.seed);
    a.seed_given = a.seed_given || j.contains("seed");
    take("random_count", "--random-count", a.random_count);
    take("out", "--out", a.out);
}

int run_simulate(CLI::App& cmd, SimulateArgs a)
{
    a.seed_given = cmd.count("--seed") > 0;
    if (!a.config.empty()) {
        apply_config_file(a.config, cmd, a);
    }
    if (a.scheme.empty() || a.C == 0 || a.r == 0 || a.N == 0) {
        throw ConfigError("simulate needs --scheme, -C, -r and -N (or a --config file providing them)");
    }
    SimulationOptions o;
    o.scheme = parse_scheme(a.scheme);
    o.caches = a.C;
    o.access = a.r;
    if (a.t != 0) {
        o.t = a.t;
    }
    o.files = a.N;
    o.f_hint = a.f_hint;
    o.mode = parse_demand_mode(a.demands);
    o.demands = a.demand;
    o.seed = a.seed_given ? a.seed : default_seed();
    o.random_vectors = a.random_count;
    o.exhaustive_cap = a.exhaustive_cap;
    o.oracle = !a.no_oracle;

    const Simulation sim = simulate(o);
    const json report = sim.report.to_json();
    if (!a.out.empty()) {
        const fs::path dir(a.out);
        std::error_code ec;
        fs::create_directories(dir, ec);
        if (ec) {
            throw IoError("cannot create " + dir.string() + ": " + ec.message());
        }
        if (!a.no_dump) {
            save_library(dir, sim.report.config, sim.library);
            save_caches(dir, sim.report.config, sim.caches);
            save_broadcast(dir, sim.report.config, sim.last_batch, &sim.report.runs.back().demands);
        }
        write_text(dir / "report.json", report.dump(2) + "\n");
    } else {
        std::cout << report.dump(2) << "\n";
    }
    const auto& last = sim.report.runs.back();
    std::cerr << "scheme=" << scheme_name(sim.report.config.scheme) << " M=" << sim.report.memory
              << " (expected " << sim.report.expected_memory << ") R=" << last.rate << " (expected "
              << last.expected_rate << ") vectors=" << sim.report.runs.size()
              << (sim.report.truncated ? " truncated" : "") << " users_decoded=" << report["users_decoded"] << "/"
              << report["users_checked"] << " " << (sim.report.ok() ? "PASS" : "FAIL") << "\n";
    return sim.report.ok() ? kExitOk : kExitVerify;
}

int run_decode(const std::string& in)
{
    const fs::path dir(in);
    SchemeConfig config;
    const Library lib = load_library(dir, &config);
    const CacheContents caches = load_caches(dir);
    DemandVector d;
    const BroadcastBatch batch = load_broadcast(dir, &d);
    validate_demands(config, d);

    bool ok = labels_consistent(config, lib, caches) && labels_consistent(config, lib, batch);
    json users = json::array();
    for (std::uint64_t u = 0; u < config.users(); ++u) {
        const auto out = decode_user(config, u, d, caches, batch);
        const auto oracle = oracle_decode_user(config, u, caches, batch, d.of(u));
        const auto& want = lib.files.at(static_cast<std::size_t>(d.of(u) - 1));
        const bool match = out.decoded && out.file == want && oracle.decoded && oracle.file == want;
        ok = ok && match;
        json stages = json::object();
        for (const auto& [name, count] : out.stages) {
            stages[name] = count;
        }
        json entry{{"user", subset_unrank(config.caches, config.access, u + 1).compact()},
                   {"scheme", scheme_name(config.scheme)},
                   {"decoded", match},
                   {"stage_counts", stages},
                   {"bytes_compared", match ? 4 * want.size() : 0}};
        if (!out.diagnostic.empty()) {
            entry["diagnostic"] = out.diagnostic;
        }
        users.push_back(std::move(entry));
    }
    std::cout << json{{"config", config_to_json(config)}, {"ok", ok}, {"users", users}}.dump(2) << "\n";
    return ok ? kExitOk : kExitVerify;
}

int run_tradeoff(TradeoffArgs a)
{
    if (!a.preset.empty()) {
        if (a.preset == "fig3") {
            a.C = 8, a.r = 3, a.N = 56;
        } else if (a.preset == "fig4") {
            a.C = 5, a.r = 3, a.N = 10;
        } else if (a.preset == "fig5") {
            a.C = 4, a.r = 2, a.N = 6;
        } else {
            throw ConfigError("unknown preset '" + a.preset + "' (expected fig3, fig4 or fig5)");
        }
    }
    if (a.C < 2 || a.r < 1 || a.r >= a.C || a.N < 1) {
        throw ConfigError("tradeoff needs 1 <= r < C and N >= 1 (or --preset)");
    }
    if (a.grid < 2) {
        throw ConfigError("--grid must be at least 2");
    }
    const std::string csv = tradeoff_csv(tradeoff_table(a.C, a.r, a.N, a.grid), a.decimal);
    if (a.out.empty()) {
        std::cout << csv;
        return kExitOk;
    }
    const fs::path dir(a.out);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw IoError("cannot create " + dir.string() + ": " + ec.message());
    }
    write_text(dir / "tradeoff.csv", csv);
    write_text(dir / "corners.csv", corners_csv(a.C, a.r, a.N, a.decimal));
    return kExitOk;
}

int run_verify(const std::string& suite, const std::string& out)
{
    std::vector<SuiteResult> results;
    if (suite == "identities" || suite == "all") {
        results.push_back(verify_identities());
    }
    if (suite == "mds" || suite == "all") {
        results.push_back(verify_mds());
    }
    if (suite == "decode" || suite == "all") {
        results.push_back(verify_decode());
    }
    if (results.empty()) {
        throw ConfigError("unknown suite '" + suite + "' (expected identities, mds, decode or all)");
    }
    json summary = json::object();
    bool ok = true;
    for (auto& r : results) {
        ok = ok && r.ok;
        summary[r.name] = json{{"ok", r.ok}, {"details", std::move(r.summary)}};
    }
    summary["ok"] = ok;
    if (out.empty()) {
        std::cout << summary.dump(2) << "\n";
    } else {
        std::error_code ec;
        fs::create_directories(out, ec);
        write_text(fs::path(out) / "verify.json", summary.dump(2) + "\n");
        std::cout << "verify " << suite << ": " << (ok ? "PASS" : "FAIL") << "\n";
    }
    return ok ? kExitOk : kExitVerify;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Multi-access coded caching laboratory"};
    app.require_subcommand(1);

    SimulateArgs sim;
    auto* simulate_cmd = app.add_subcommand("simulate", "place, deliver and decode one instance");
    simulate_cmd->add_option("--scheme", sim.scheme, "mkr | s1 | corner | s2");
    simulate_cmd->add_option("-C", sim.C, "number of caches");
    simulate_cmd->add_option("-r", sim.r, "caches per user");
    simulate_cmd->add_option("-t", sim.t, "placement parameter (mkr, s1)");
    simulate_cmd->add_option("-N", sim.N, "number of files");
    simulate_cmd->add_option("--f-hint", sim.f_hint, "minimum file length in symbols");
    simulate_cmd->add_option("--demands", sim.demands, "random | exhaustive | explicit");
    simulate_cmd->add_option("--demand", sim.demand, "explicit demand vector, e.g. 1,2,3,4,5,6")->delimiter(',');
    simulate_cmd->add_option("--seed", sim.seed, "RNG seed (default: $MACC_SEED or 1)");
    simulate_cmd->add_option("--random-count", sim.random_count, "random demand vectors to draw");
    simulate_cmd->add_option("--exhaustive-cap", sim.exhaustive_cap, "largest demand space enumerated");
    simulate_cmd->add_flag("--no-oracle", sim.no_oracle, "skip the linear-algebra oracle");
    simulate_cmd->add_flag("--no-dump", sim.no_dump, "write report.json only");
    simulate_cmd->add_option("--out", sim.out, "output directory");
    simulate_cmd->add_option("--config", sim.config, "JSON file with the same keys");

    std::string decode_in;
    auto* decode_cmd = app.add_subcommand("decode", "decode every user from a simulate --out directory");
    decode_cmd->add_option("--in", decode_in, "directory with library, caches and broadcast dumps")->required();

    TradeoffArgs tr;
    auto* tradeoff_cmd = app.add_subcommand("tradeoff", "achievable envelope and lower bound as CSV");
    tradeoff_cmd->add_option("--preset", tr.preset, "fig3 (8,3,56) | fig4 (5,3,10) | fig5 (4,2,6)");
    tradeoff_cmd->add_option("-C", tr.C, "number of caches");
    tradeoff_cmd->add_option("-r", tr.r, "caches per user");
    tradeoff_cmd->add_option("-N", tr.N, "number of files");
    tradeoff_cmd->add_option("--grid", tr.grid, "evenly spaced memories on [0, N/r]");
    tradeoff_cmd->add_flag("--decimal", tr.decimal, "decimals instead of p/q");
    tradeoff_cmd->add_option("--out", tr.out, "output directory (tradeoff.csv, corners.csv)");

    std::string suite = "all";
    std::string verify_out;
    auto* verify_cmd = app.add_subcommand("verify", "run an invariant suite");
    verify_cmd->add_option("--suite", suite, "identities | mds | decode | all");
    verify_cmd->add_option("--out", verify_out, "directory for verify.json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (simulate_cmd->parsed()) {
            return run_simulate(*simulate_cmd, sim);
        }
        if (decode_cmd->parsed()) {
            return run_decode(decode_in);
        }
        if (tradeoff_cmd->parsed()) {
            return run_tradeoff(tr);
        }
        if (verify_cmd->parsed()) {
            return run_verify(suite, verify_out);
        }
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const IoError& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kExitIo;
    } catch (const fs::filesystem_error& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitConfig;
}
