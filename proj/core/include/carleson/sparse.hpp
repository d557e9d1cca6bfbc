#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "carleson/flow.hpp"
#include "carleson/model.hpp"

namespace carleson {

// Infeasibility witness: a subcollection whose weight sum exceeds lambda
// times the measure of its union.
struct Certificate {
    std::vector<std::string> subcollection;
    Rat weight_sum;
    Rat union_measure;
    Rat ratio;  // weight_sum / union_measure, > the rejected lambda
};

class InfeasibleLambda : public Error {
   public:
    InfeasibleLambda(const Rat& lambda, Certificate cert)
        : Error("collection violates the " + rat_str(lambda) +
                "-Carleson condition"),
          certificate(std::move(cert)) {}
    Certificate certificate;
};

// phi_Q as a step function over the atoms: coefficients in [0,1], indexed
// per set by atom id.
struct PhiWitness {
    Rat lambda;
    std::vector<std::map<std::string, Rat>> coeffs;  // per set index
};

// Measure allocation realizing the disjoint sets E_Q: per set, how much of
// each atom it takes.
struct Selection {
    Rat lambda;
    std::vector<std::vector<std::pair<std::string, Rat>>> amounts;  // per set
};

// Concrete E_Q for box-built instances: disjoint half-open boxes.
struct BoxRealization {
    Rat lambda;
    std::vector<std::vector<Box>> pieces;  // per set index
};

// Both constructions run a maximum flow on the network at the given
// constant (defaulting to the optimal one) and read the witness off the
// atom-to-set flow amounts. If the collection violates the lambda-Carleson
// condition, InfeasibleLambda is thrown with a certificate extracted from
// the minimum cut.
PhiWitness construct_phi(const Collection& c,
                         const std::optional<Rat>& lambda = std::nullopt);
Selection construct_selection(const Collection& c,
                              const std::optional<Rat>& lambda = std::nullopt);

// Turns a Selection into disjoint boxes by sweeping each atom's grid cells
// in lexicographic order and splitting along the first coordinate at exact
// rational abscissae. Requires a collection built from boxes.
BoxRealization realize_boxes(const Collection& c, const Selection& sel);

// Independent re-checks of every witness invariant; returns the violated
// invariants by name, empty when the witness is valid.
std::vector<std::string> verify_witness(const Collection& c,
                                        const PhiWitness& w);
std::vector<std::string> verify_witness(const Collection& c,
                                        const Selection& w);
std::vector<std::string> verify_witness(const Collection& c,
                                        const BoxRealization& w);

}  // namespace carleson
