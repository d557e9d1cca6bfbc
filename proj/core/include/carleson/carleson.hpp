#pragma once

#include <string>
#include <vector>

#include "carleson/sfm.hpp"

namespace carleson {

struct TraceEntry {
    Rat lambda;        // the candidate constant at this iteration
    std::size_t size;  // size of the violating subcollection kept
};

struct CarlesonResult {
    Rat lambda;                         // the optimal Carleson constant
    std::vector<std::string> witness;   // nonempty subcollection attaining it
    int iterations = 0;
    std::vector<TraceEntry> trace;      // lambda values are nondecreasing
};

// Iteratively tightens the constant: take the ratio of the current
// subcollection, find the maximal minimizer of f at that constant inside
// it, and stop once the minimum is zero. Terminates after at most |F|
// iterations.
CarlesonResult carleson_constant(const Collection& c,
                                 Backend backend = Backend::mincut);

struct CheckResult {
    bool ok = false;
    std::vector<std::string> violating;  // empty when ok
    Rat ratio;                           // > lambda when violated
};

// Decision form: does the collection satisfy the lambda-Carleson condition?
CheckResult check_carleson(const Collection& c, const Rat& lambda,
                           Backend backend = Backend::mincut);

}  // namespace carleson
