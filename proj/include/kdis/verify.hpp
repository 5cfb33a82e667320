#ifndef KDIS_VERIFY_HPP
#define KDIS_VERIFY_HPP

#include <string>
#include <vector>

#include <json.hpp>

namespace kdis::verify {

struct Check {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct SuiteReport {
    std::string suite;
    std::vector<Check> checks;
    bool ok() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

struct Options {
    int jobs = 0;          // 0 = auto (hardware, capped at 8)
    int moon_n_max = 9;    // exhaustive search range for the kernel maxima
    int m_n_budget = 9;    // order budget for m(k,t) searches
    int trees_n_max = 10;
    int triangle_free_n_max = 9;
    int connected_n_max = 9;
    int recurrence_n_max = 7; // order cap of the recurrence sweep
    int prop31_samples = 500; // random graphs for the twin-component sweep
    long long f0_k_hi = 1000;
    long long f2_k_hi = 1000000;
};

std::vector<std::string> suite_names();

/// Run one verification suite ("all" concatenates every suite).  Reports are
/// deterministic: no timing, no machine state, identical across worker
/// counts.  Throws Error(InvalidArgument) for unknown names.
SuiteReport run_suite(const std::string& name, const Options& options = {});

nlohmann::ordered_json to_json(const SuiteReport& report);

} // namespace kdis::verify

#endif
