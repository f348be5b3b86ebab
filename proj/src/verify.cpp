#include "macc/verify.hpp"

#include "macc/analysis.hpp"
#include "macc/mds.hpp"
#include "macc/placement.hpp"
#include "macc/simulate.hpp"

namespace macc {

SuiteResult verify_identities()
{
    const IdentityReport report = check_identities(12);
    json checks = json::array();
    for (const auto& c : report.checks) {
        checks.push_back({{"identity", c.name}, {"params", c.params}, {"ok", c.ok}});
    }
    return {"identities", report.failures() == 0, json{{"failures", report.failures()}, {"checks", checks}}};
}

SuiteResult verify_mds(std::size_t max_n)
{
    std::size_t codes = 0;
    json failures = json::array();
    for (std::size_t n = 1; n <= max_n; ++n) {
        for (int m : {degree_for_length(n), 8}) {
            const Field& field = Field::of_degree(m);
            for (std::size_t k = 1; k <= n; ++k) {
                const MdsCode plain = rs_generator(k, n, field);
                const MdsCode sys = systematize(plain);
                for (const MdsCode* code : {&plain, &sys}) {
                    ++codes;
                    if (!check_mds_property(*code, max_n)) {
                        failures.push_back({{"k", k}, {"n", n}, {"m", m}, {"systematic", code->systematic}});
                    }
                }
            }
        }
    }
    return {"mds", failures.empty(), json{{"codes_checked", codes}, {"failures", failures}}};
}

SuiteResult verify_decode()
{
    struct Case {
        Scheme scheme;
        int t;
    };
    const Case cases[] = {{Scheme::Mkr, 1},     {Scheme::Mkr, 2},     {Scheme::Mkr, 3}, {Scheme::Mkr, 4},
                          {Scheme::Scheme1, 1}, {Scheme::Scheme1, 2}, {Scheme::Corner, 3}};
    bool ok = true;
    json runs = json::array();
    for (const auto& c : cases) {
        const SchemeConfig config = make_config(c.scheme, 4, 2, c.t, 2, 1);
        const Library lib = random_library(config, 2024);
        const CacheContents caches = place(config, lib);
        const auto vectors = all_demands(config, 4096);
        const SimulationReport report = run_demands(config, lib, caches, *vectors, true);
        std::size_t users = 0;
        for (const auto& run : report.runs) {
            users += run.users.size();
        }
        ok = ok && report.ok();
        runs.push_back({{"scheme", scheme_name(config.scheme)},
                        {"t", config.t},
                        {"demand_vectors", report.runs.size()},
                        {"users_checked", users},
                        {"ok", report.ok()}});
    }
    return {"decode", ok, json{{"configurations", runs}}};
}

} // namespace macc
