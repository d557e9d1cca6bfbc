#include "carleson/sfm.hpp"

#include <algorithm>

#include "carleson/flow.hpp"
#include "carleson/verify.hpp"

namespace carleson {

Rat evaluate_f_mask(const Collection& c, const Rat& lambda,
                    const std::vector<char>& mask) {
    if (lambda <= 0) throw Error("lambda must be positive");
    Rat f = lambda * c.union_measure_mask(mask);
    for (std::size_t q = 0; q < c.sets.size(); ++q)
        if (mask[q]) f -= c.weight(static_cast<int>(q));
    return f;
}

Rat evaluate_f(const Collection& c, const Rat& lambda,
               const std::vector<std::string>& ids) {
    std::vector<char> mask(c.sets.size(), 0);
    for (const auto& id : ids) mask[c.set_index(id)] = 1;
    return evaluate_f_mask(c, lambda, mask);
}

namespace {

std::vector<char> domain_mask(const Collection& c,
                              const std::vector<std::string>& domain) {
    if (domain.empty()) throw Error("empty domain");
    std::vector<char> mask(c.sets.size(), 0);
    for (const auto& id : domain) mask[c.set_index(id)] = 1;
    return mask;
}

MinimizationResult minimize_mincut(const Collection& c, const Rat& lambda,
                                   const std::vector<char>& mask) {
    FlowNetwork net = build_network(c, lambda, &mask);
    Flow flow = max_flow(net);
    Cut cut = min_cut(net, flow);

    // Sets on the sink side of the minimal-source-side cut form the
    // maximal minimizer.
    std::vector<char> minimizer_mask(c.sets.size(), 0);
    std::vector<std::string> minimizer;
    for (int k = 0; k < net.num_set_nodes; ++k) {
        if (!cut.in_source_side[net.set_node(k)]) {
            minimizer_mask[net.set_of[k]] = 1;
            minimizer.push_back(c.sets[net.set_of[k]].id);
        }
    }
    Rat value = evaluate_f_mask(c, lambda, minimizer_mask);

    // Cross-check against the cut identity:
    // cut capacity = sum_domain weight/lambda + (min f)/lambda.
    if (cut.capacity.infinite) throw Error("internal: infinite minimum cut");
    Rat demand = 0;
    for (std::size_t q = 0; q < c.sets.size(); ++q)
        if (mask[q]) demand += c.weight(static_cast<int>(q)) / lambda;
    if (lambda * (cut.capacity.value - demand) != value)
        throw Error("internal: min-cut identity violated");
    return {value, std::move(minimizer)};
}

}  // namespace

MinimizationResult minimize_f(const Collection& c, const Rat& lambda,
                              const std::vector<std::string>& domain,
                              Backend backend) {
    if (lambda <= 0) throw Error("lambda must be positive");
    if (backend == Backend::brute) return brute_min_f(c, lambda, domain);
    return minimize_mincut(c, lambda, domain_mask(c, domain));
}

}  // namespace carleson
