#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace crossnest {

struct SuiteResult {
    std::string name;
    bool passed = false;
    std::string detail;  // first failing check, empty when passed
    double seconds = 0.0;
};

// One suite per acceptance check; all comparisons exact unless a numeric
// tolerance is stated in the suite itself.
SuiteResult verify_golden_examples();   // worked bijection examples
SuiteResult verify_round_trips();       // psi/phi, psibar/phibar, oscillating
SuiteResult verify_stats_oracle();      // walk stats vs exhaustive search
SuiteResult verify_symmetric_tables();  // filtered joint symmetry + conjugation
SuiteResult verify_enhanced_tables();   // bar-variant joint symmetry
SuiteResult verify_walk_counts();       // Bell identities for walk numbers
SuiteResult verify_matching_counts();   // f_2 / f_3 via independent routes
SuiteResult verify_transfer_matrices(); // p polynomials, series vs DP, reflection
SuiteResult verify_spectral_rank();     // invertibility, corank, eigenvalue family
SuiteResult verify_paths();             // Motzkin criterion, recoveries, Dyck maps
SuiteResult verify_greene_analogue();   // ne_r vs union-of-nestings oracle

std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name);
// Runs every suite, printing one [PASS]/[FAIL] line per suite.
std::vector<SuiteResult> run_all_suites(std::ostream& out);

}  // namespace crossnest
