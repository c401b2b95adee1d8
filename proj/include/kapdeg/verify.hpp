#pragma once

#include <string>

#include <json.hpp>

namespace kapdeg {

// One named suite of exhaustive checks, with a machine-readable trail.
struct SuiteResult {
    std::string name;
    bool pass = true;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
};

// Counting identities: tree enumeration totals, the recursion total, parking
// function totals, and the per-composition triple agreement.
SuiteResult verify_counts(int n_max, int jobs = 1);

// Roundtrips of tau/tau_inverse and pi_lazy/pi_lazy_inverse, the commuting
// square with the parking reduction, and image/injectivity of tau.
SuiteResult verify_bijections(int n_max);

// Hyperplane containment for every composition.
SuiteResult verify_hyperplane_suite(int n_max);

// Structural facts about tournaments (loser monotonicity, winner/loser
// disjointness, participation, first-round characterization, the counting
// recursion) plus the separation and branch-path properties used by the
// coordinate results.
SuiteResult verify_lemmas(int n_max);

struct VerifyReport {
    bool pass = true;
    nlohmann::ordered_json json;
};

// suite is one of: all, counts, bijection, hyperplanes, lemmas.
VerifyReport run_verification(int n_max, const std::string& suite, int jobs = 1);

}  // namespace kapdeg
