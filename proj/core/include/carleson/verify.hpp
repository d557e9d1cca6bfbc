#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "carleson/instance.hpp"
#include "carleson/model.hpp"
#include "carleson/sfm.hpp"

namespace carleson {

// Brute-force oracles. These enumerate all subcollections and are the
// independent reference the flow-based routines are tested against.

struct BruteLambda {
    Rat lambda;
    std::vector<std::string> witness;
};

// Exact maximum of sum(weights) / mu(union) over nonempty subcollections.
// Ties go to the largest witness, then the lexicographically first index
// sequence. Refuses |F| > 20.
BruteLambda brute_lambda(const Collection& c);

// Exact minimum of f_lambda over subsets of the domain, by enumeration,
// together with the maximal minimizer (union of all minimizers, validated
// to be a minimizer itself). Refuses |domain| > 25.
MinimizationResult brute_min_f(const Collection& c, const Rat& lambda,
                               const std::vector<std::string>& domain);

// Deterministic instance generators.

enum class GenKind { dyadic, boxes, atoms };
enum class WeightMode { measure, random };

struct GeneratorSpec {
    GenKind kind = GenKind::boxes;
    int n = 4;
    int d = 1;
    std::uint64_t seed = 0;
    WeightMode weight_mode = WeightMode::measure;
};

// Pure function of the spec: the same spec yields the same instance on
// every run and platform.
Instance generate_instance(const GeneratorSpec& spec);
Collection generate(const GeneratorSpec& spec);

}  // namespace carleson
