#pragma once

#include <string>
#include <vector>

#include "carleson/model.hpp"

namespace carleson {

enum class Backend { mincut, brute };

struct MinimizationResult {
    Rat value;                           // min of f_lambda over the domain
    std::vector<std::string> minimizer;  // the maximal minimizer, input order
};

// f_lambda(A) = lambda * mu(union A) - sum of weights over A; f(empty) = 0.
Rat evaluate_f(const Collection& c, const Rat& lambda,
               const std::vector<std::string>& ids);
Rat evaluate_f_mask(const Collection& c, const Rat& lambda,
                    const std::vector<char>& mask);

// Minimizes f_lambda over subsets of the domain and returns the maximal
// minimizer (the union of all minimizers, which is itself a minimizer by
// submodularity). The mincut backend solves one exact max-flow on the
// restricted network; the brute backend enumerates all subsets and refuses
// domains larger than 25 sets.
MinimizationResult minimize_f(const Collection& c, const Rat& lambda,
                              const std::vector<std::string>& domain,
                              Backend backend = Backend::mincut);

}  // namespace carleson
