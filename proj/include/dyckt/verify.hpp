#pragma once

#include "dyckt/permmod.hpp"

namespace dyckt {

struct VerifyOptions {
    int box_tilings = 4;   // box for the enumeration-backed tiling checks
    int box_bijections = 3;
    int box_q = 3;
    int module_cap = 8;    // f+g bound for the module theorems
    int recurrence_size = 12;   // |lambda| bound for the weight recurrence
    int choice_size = 16;       // |lambda| bound for factorization choices
};

// The full property suite; each check is one verdict line.
Report run_verification(const VerifyOptions& opts = {});

// Individual checks, exposed for the acceptance driver.
CheckResult check_nine_conditions(int boxsize);
CheckResult check_count_recurrences(int boxsize);
CheckResult check_matrix_inverse(int boxmax);
CheckResult check_sum_theorem(int boxsize);
CheckResult check_module_theorems(int cap);
CheckResult check_weight_recurrence(int size_rec, int size_choice);
CheckResult check_garnir_examples();
CheckResult check_chord_equivalence(int boxsize);
CheckResult check_bijection_cardinalities(int boxsize);
CheckResult check_q_inverse(int boxmax);

}  // namespace dyckt
