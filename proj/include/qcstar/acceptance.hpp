#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace qcstar {

/// Parameters of the reproduction run. Defaults are the reference point;
/// every tolerance is fixed here.
struct AcceptanceConfig {
    double q = 0.5;
    Eigen::Index dim = 64;        // decay is measured between dim / 2 and dim
    std::uint64_t seed = 0;

    double residual_tolerance = 1e-10;
    double decay_factor = 1e3;
    double spectrum_tolerance = 1e-12;
    int k_max = 3;
    int l_max = 3;
    int n_max = 40;
    std::size_t recovery_trials = 100;
    double recovery_tolerance = 1e-8;
    double rank_threshold = 1e-10;
    std::size_t snf_samples = 1000;
    std::size_t element_samples = 200;
    double soundness_tolerance = 1e-9;
};

struct ClaimResult {
    int id;
    std::string title;
    bool passed;
    std::string detail;
    double seconds;
    double time_limit;
};

/// Runs the nine acceptance claims in order.
std::vector<ClaimResult> run_acceptance(const AcceptanceConfig& config);

/// One claim; ids 1..9.
ClaimResult run_claim(int id, const AcceptanceConfig& config);

}  // namespace qcstar
