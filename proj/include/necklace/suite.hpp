#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace necklace {

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string expected, actual;
    double seconds = 0;
};

// Scales of the shipped acceptance run. A config file may override the seed,
// the scales, and the quiver choices; the defaults are the release gate.
struct SuiteConfig {
    uint64_t seed = 20260808;

    std::string wild_quiver = "loops-2";            // the reference wild quiver
    std::string wild_multivertex = "kronecker-3";   // a wild quiver with several vertices

    int hilbert_degree = 8;
    int hilbert_matrix_degree = 5;
    int euler_degree = 6;
    int axioms_total_len_loops = 6;
    int axioms_total_len_line = 5;
    int calculus_degree = 3;
    int calculus_path_len = 4;
    int calculus_randoms = 100;
    int munc_randoms = 50;
    int moment_trials = 100;
    int poisson_total_len = 5;
    std::vector<long> poisson_dims{2, 3};
    int stab_degree = 3;
    long stab_samples = 500;
    long stab_max_dim = 4;
    int centrality_max_power = 2;
    int centrality_len = 5;
    int center_max_degree = 5;
    int descent_degree = 5;
};

SuiteConfig suite_config_from_json(const nlohmann::json& j);

// Runs every acceptance criterion at its configured scale; one result per
// criterion, in order.
std::vector<CheckResult> run_acceptance(const SuiteConfig& cfg);

nlohmann::json report_to_json(const std::string& command, const nlohmann::json& inputs,
                              uint64_t seed, const std::vector<CheckResult>& results,
                              double wall_seconds);

}  // namespace necklace
