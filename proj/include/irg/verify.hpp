#pragma once

#include <string>
#include <vector>

#include <json.hpp>

// The verification suite: twelve numbered criteria pairing Monte Carlo
// ensembles against the analytic oracles, each with a pinned tolerance.
// Every criterion reports pass/fail plus its measured values; the suite
// never loosens a bound to force agreement.

namespace irg::verify {

enum class Level { fast, full };

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double runtime_s = 0.0;
    nlohmann::json details;
};

struct Report {
    std::string level;
    std::string version;
    unsigned threads = 1;
    std::vector<CriterionResult> criteria;
    bool all_pass = false;
    double total_runtime_s = 0.0;
};

// Runs the suite. `workdir` receives the data files written by the
// determinism criterion; it is created if missing. At the fast level the
// replica counts (and one ensemble size) shrink by the documented factors
// recorded in each criterion's details.
Report run(Level level, unsigned threads, const std::string& workdir,
           std::ostream* progress = nullptr);

nlohmann::json to_json(const Report& report);

// JSON Schema (subset: type / required / properties / items) validation,
// used to keep reports in sync with the shipped schema file.
bool matches_schema(const nlohmann::json& value, const nlohmann::json& schema,
                    std::string* first_error = nullptr);

// The schema the verify report conforms to, as shipped.
nlohmann::json report_schema();

}  // namespace irg::verify
