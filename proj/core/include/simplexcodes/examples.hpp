/**
 * Regeneration of the published reference codes from scratch: each entry
 * runs its construction (code family, Tverberg pipeline, or fixture load),
 * verifies the exact error-correction check at the stated order, and
 * compares amplitudes exactly against the recorded values. Used by the
 * `examples` CLI subcommand and by the acceptance suite.
 */

#ifndef SIMPLEXCODES_EXAMPLES_HPP
#define SIMPLEXCODES_EXAMPLES_HPP

#include <string>
#include <vector>

#include "simplexcodes/codes.hpp"

namespace simplexcodes {

enum class ExampleStatus { Pass, Fail, Skipped };

struct ExampleResult {
    std::string name;
    ExampleStatus status = ExampleStatus::Fail;
    std::string detail;
};

std::vector<std::string> example_names();

/// Runs one example by name, or every example when name is "all" or empty.
std::vector<ExampleResult> run_examples(const std::string& name = "all");

/// Exact amplitude-table equality (points, signs, squared amplitudes).
bool codes_amplitudes_equal(const SimplexCode& a, const SimplexCode& b);

/// The same code with its two modes relabeled; only defined for q = 2.
SimplexCode reverse_modes(const SimplexCode& code);

/// The eleven-point distance-2 code in S_{4,4}: 2 * S_{4,2} plus (1,1,1,1).
L1Code s44_l1_code();

}  // namespace simplexcodes

#endif
