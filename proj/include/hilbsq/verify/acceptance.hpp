#pragma once

// The acceptance suite. Each entry point runs one numbered criterion and
// returns its checks; every bound and seed is fixed in the implementation.

#include "hilbsq/report.hpp"

#include <string>
#include <vector>

namespace hilbsq::verify {

struct CriterionOutcome {
    int number = 0;
    std::string name;
    std::vector<Check> checks;
    double seconds = 0.0;

    /// At least one check and no failures; discrepancies do not fail.
    bool passed() const;
};

CriterionOutcome pell_regression();                // 1
CriterionOutcome reduced_equation_certificates();  // 2
CriterionOutcome picard_structure();               // 3
CriterionOutcome automorphism_decisions();         // 4
CriterionOutcome kappa_generators();               // 5
CriterionOutcome family_rows();                    // 6
CriterionOutcome non_natural_involution();         // 7
CriterionOutcome property_suites();                // 8

/// Runs criterion 1..8, timing each.
CriterionOutcome run_criterion(int number);
std::vector<CriterionOutcome> run_acceptance();

/// "[n] PASS name (k checks, s)" style line.
std::string summary_line(const CriterionOutcome& outcome);

}  // namespace hilbsq::verify
