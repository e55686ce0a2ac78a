#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "forge/ainf.hpp"
#include "forge/smallhh.hpp"
#include "forge/twisted.hpp"

namespace forge {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

/// Pipeline configuration. Reports are byte-identical for identical configs;
/// wall-clock timings are therefore opt-in and land in the report only when
/// `with_timings` is set.
struct RunConfig {
    int n = 2;
    int max_arity = 7;  // default 2n+3
    int order_bound = 3;
    int t_window_lo = -2;
    int t_window_hi = 2;
    std::uint64_t seed = 17;
    int sample_count = 50;
    int aut_count = 25;
    int imax = 3;
    std::size_t size_limit = 2'000'000;
    bool with_timings = false;
    std::vector<std::string> aut_files;

    void validate() const;  // throws ConfigError
    SolverConfig solver() const { return SolverConfig{order_bound, t_window_lo, t_window_hi}; }
    Json echo() const;
    static RunConfig from_json(const Json& j, const RunConfig& base);
};

struct RunResult {
    Json report;
    bool all_ok = false;
    int exit_code = 2;
};

/// Full pipeline: cocycle construction, nontriviality certificates, minimal
/// extension with symbolic Stasheff verification, morphism obstructions on
/// bundled/user/random automorphisms, endomorphism invariants of the strict
/// and deformed structures.
RunResult cmd_demo(const RunConfig& cfg);

RunResult cmd_hh(const std::string& algebra_json_text, int imax, const RunConfig& cfg);
RunResult cmd_kunneth(const std::string& a_json, const std::string& b_json, int imax, const RunConfig& cfg);
RunResult cmd_laurent(int imax, const RunConfig& cfg);
RunResult cmd_obstruction(const std::string& aut_json_text, const RunConfig& cfg);
RunResult cmd_tw_check(const std::string& complex_json_text, bool deformed, const RunConfig& cfg);

AutSpec autspec_from_json(const Tower& tw, const std::string& text);
std::string autspec_to_json(const AutSpec& f);

}  // namespace forge
