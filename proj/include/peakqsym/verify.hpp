#pragma once

#include "peakqsym/composition.hpp"

#include <string>
#include <utility>
#include <vector>

namespace peakqsym {

// Names of the exhaustive check families, in execution order.
//   triple-agreement  the three constructions of the quasisymmetric Schur
//                     Q-function agree in the monomial basis
//   unmark            marking fibers have size 2^{|Peak|+1} and their
//                     fundamental sum equals the peak-function expansion
//   bijection         reading insertion is a descent- and peak-preserving
//                     injection whose image matches the SPYCT x DIRT count
//   expansion         Q-functions expand positively into peak Young ones,
//                     verified in the monomial basis
//   dirts             generate_dirts agrees with brute-force enumeration
//   characterisation  single-term shapes are exactly those with one DIRT
const std::vector<std::string>& verify_check_names();

struct VerifyCheck {
    std::string theorem;  // check-family name
    std::string alpha;    // the composition the check ran on
    bool passed = false;
    std::string detail;   // empty when passed, first failure otherwise
};

struct VerifyReport {
    int max_degree = 0;
    std::vector<VerifyCheck> checks;
    // Wall-clock seconds per selected family, in execution order.
    std::vector<std::pair<std::string, double>> theorem_seconds;
    double elapsed_seconds = 0.0;

    bool all_passed() const;
};

// Run the family named by `which` ("all" runs every family) over all peak
// compositions of every degree 1..max_n. Throws std::invalid_argument on an
// unknown name or max_n < 1.
VerifyReport run_verification(int max_n, const std::string& which);

}  // namespace peakqsym
