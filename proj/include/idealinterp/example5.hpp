#pragma once

#include <string>
#include <vector>

#include "idealinterp/io.hpp"

namespace idealinterp {

/// The bundled Example 5 problem (identical to data/example5.json).
const char* example5_json();
Problem example5_problem();

struct ReproductionCheck {
    std::string name;
    bool match = false;
    /// First differing entry on mismatch, a short summary otherwise.
    std::string detail;
};

struct ReproductionReport {
    std::vector<ReproductionCheck> checks;
    bool all_match() const;
};

/// Runs the Example 5 pipeline on `problem` and diffs the hat Gram matrix,
/// its determinant, Pf and P_h f for h = 1/10, 1/100, 1/1000 against the
/// published values. Mathematical failures inside the pipeline become
/// mismatches rather than exceptions.
ReproductionReport reproduce_example5(const Problem& problem);
inline ReproductionReport reproduce_example5() { return reproduce_example5(example5_problem()); }

json to_json(const ReproductionReport& report);

}  // namespace idealinterp
