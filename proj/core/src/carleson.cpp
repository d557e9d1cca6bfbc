#include "carleson/carleson.hpp"

namespace carleson {

CarlesonResult carleson_constant(const Collection& c, Backend backend) {
    if (c.sets.empty()) throw Error("empty collection");

    CarlesonResult result;
    std::vector<std::string> current;
    current.reserve(c.sets.size());
    for (const auto& s : c.sets) current.push_back(s.id);

    for (;;) {
        Rat weight_sum = 0;
        for (const auto& id : current) weight_sum += c.weight(c.set_index(id));
        Rat lambda_j = weight_sum / c.union_measure(current);

        MinimizationResult min = minimize_f(c, lambda_j, current, backend);
        ++result.iterations;
        result.trace.push_back({lambda_j, min.minimizer.size()});
        if (min.value == 0) {
            // the maximal minimizer contains the current iterate, so it is
            // nonempty and attains the ratio exactly
            result.lambda = lambda_j;
            result.witness = std::move(min.minimizer);
            return result;
        }
        current = std::move(min.minimizer);
    }
}

CheckResult check_carleson(const Collection& c, const Rat& lambda,
                           Backend backend) {
    if (lambda <= 0) throw Error("lambda must be positive");
    if (c.sets.empty()) throw Error("empty collection");
    std::vector<std::string> all;
    all.reserve(c.sets.size());
    for (const auto& s : c.sets) all.push_back(s.id);

    MinimizationResult min = minimize_f(c, lambda, all, backend);
    CheckResult res;
    if (min.value == 0) {
        res.ok = true;
        return res;
    }
    res.ok = false;
    res.violating = min.minimizer;
    Rat weight_sum = 0;
    for (const auto& id : res.violating) weight_sum += c.weight(c.set_index(id));
    res.ratio = weight_sum / c.union_measure(res.violating);
    return res;
}

}  // namespace carleson
