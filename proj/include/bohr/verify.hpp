#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "bohr/functionals.hpp"
#include "bohr/radii.hpp"

namespace bohr {

// One Monte-Carlo campaign: sample (f, w, z) triples below the sharp radius of
// `functional` and record the largest certified upper bound seen.
struct VerificationConfig {
    FunctionalKind functional;
    int k = 1;
    int m0 = 1;
    long trials = 10000;
    std::uint64_t seed = 0;
    double margin = 1e-3;  // probe disk radius = sharp radius - margin
    int truncation = 64;
};

struct Violation {
    long trial_index;
    double value;  // total_upper of the violating triple
    std::string descriptor;
};

struct VerificationReport {
    long trials_run = 0;
    double max_value = 0.0;  // largest total_upper over all trials
    std::string argmax_descriptor;
    long argmax_index = -1;
    std::vector<Violation> violations;
    std::uint64_t seed = 0;
    double radius = 0.0;        // sharp radius of the configured functional
    double probe_radius = 0.0;  // radius - margin
};

// Deterministic given (cfg, threads): trial i draws from derive_seed(seed, i),
// so any contiguous partition of the index range reproduces the serial run.
// Every fifth trial probes the extremal family near a = 1; the rest sample
// random Schur functions, random Schwarz maps, and z uniform on the probe disk.
// Violations are judged on total_upper (partial sum + certified tail).
VerificationReport run_trials(const VerificationConfig& cfg, int threads = 1);

}  // namespace bohr
