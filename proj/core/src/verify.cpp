#include "carleson/verify.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>

namespace carleson {

namespace {

// Subset-sum (zeta) transform of the atom measures over domain positions:
// after the transform, g[m] = sum of measures of atoms whose restricted
// signature is contained in m. Lets every coverage value be read off in
// O(1): mu(union of mask) = g[full] - g[full & ~mask].
std::vector<Rat> coverage_table(const Collection& c,
                                const std::vector<int>& dom) {
    const int k = static_cast<int>(dom.size());
    std::vector<int> pos(c.sets.size(), -1);
    for (int i = 0; i < k; ++i) pos[dom[i]] = i;

    std::vector<Rat> g(std::size_t(1) << k, Rat(0));
    for (const auto& atom : c.atoms) {
        std::uint32_t amask = 0;
        for (int q : atom.signature)
            if (pos[q] >= 0) amask |= std::uint32_t(1) << pos[q];
        if (amask) g[amask] += atom.measure;
    }
    for (int b = 0; b < k; ++b)
        for (std::uint32_t m = 0; m < (std::uint32_t(1) << k); ++m)
            if (m >> b & 1) g[m] += g[m ^ (std::uint32_t(1) << b)];
    return g;
}

std::vector<int> sorted_domain(const Collection& c,
                               const std::vector<std::string>& domain) {
    std::set<int> idx;
    for (const auto& id : domain)
        if (!idx.insert(c.set_index(id)).second)
            throw Error("duplicate id in domain");
    return {idx.begin(), idx.end()};
}

std::vector<std::string> mask_ids(const Collection& c,
                                  const std::vector<int>& dom,
                                  std::uint32_t mask) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < dom.size(); ++i)
        if (mask >> i & 1) out.push_back(c.sets[dom[i]].id);
    return out;
}

}  // namespace

BruteLambda brute_lambda(const Collection& c) {
    if (c.sets.empty()) throw Error("empty collection");
    if (c.sets.size() > 20)
        throw Error("brute_lambda refuses more than 20 sets");
    std::vector<int> dom(c.sets.size());
    for (std::size_t i = 0; i < dom.size(); ++i) dom[i] = static_cast<int>(i);
    const int k = static_cast<int>(dom.size());
    std::vector<Rat> g = coverage_table(c, dom);
    const std::uint32_t full = (std::uint32_t(1) << k) - 1;

    std::vector<Rat> wsum(std::size_t(1) << k, Rat(0));
    for (std::uint32_t m = 1; m <= full; ++m) {
        std::uint32_t low = m & (~m + 1);
        int b = std::countr_zero(m);
        wsum[m] = wsum[m ^ low] + c.weight(dom[b]);
    }

    Rat best;
    std::uint32_t best_mask = 0;
    for (std::uint32_t m = 1; m <= full; ++m) {
        Rat covered = g[full] - g[full & ~m];
        Rat ratio = wsum[m] / covered;
        bool better = false;
        if (best_mask == 0 || ratio > best) {
            better = true;
        } else if (ratio == best) {
            int sz = std::popcount(m), bsz = std::popcount(best_mask);
            if (sz > bsz) {
                better = true;
            } else if (sz == bsz) {
                // lexicographically-first index sequence
                std::uint32_t diff = m ^ best_mask;
                if (diff && (m >> std::countr_zero(diff) & 1)) better = true;
            }
        }
        if (better) {
            best = ratio;
            best_mask = m;
        }
    }
    return {best, mask_ids(c, dom, best_mask)};
}

MinimizationResult brute_min_f(const Collection& c, const Rat& lambda,
                               const std::vector<std::string>& domain) {
    if (lambda <= 0) throw Error("lambda must be positive");
    if (domain.empty()) throw Error("empty domain");
    if (domain.size() > 25)
        throw Error("brute_min_f refuses more than 25 sets");
    std::vector<int> dom = sorted_domain(c, domain);
    const int k = static_cast<int>(dom.size());
    std::vector<Rat> g = coverage_table(c, dom);
    const std::uint32_t full = (std::uint32_t(1) << k) - 1;

    Rat best = 0;  // f(empty) = 0
    std::uint32_t union_of_minimizers = 0;
    std::vector<Rat> wsum(std::size_t(1) << k, Rat(0));
    for (std::uint32_t m = 1; m <= full; ++m) {
        std::uint32_t low = m & (~m + 1);
        int b = std::countr_zero(m);
        wsum[m] = wsum[m ^ low] + c.weight(dom[b]);
        Rat value = lambda * (g[full] - g[full & ~m]) - wsum[m];
        if (value < best) {
            best = value;
            union_of_minimizers = m;
        } else if (value == best) {
            union_of_minimizers |= m;
        }
    }
    // Submodularity makes the union of minimizers a minimizer; validate.
    if (union_of_minimizers) {
        Rat check = lambda * (g[full] - g[full & ~union_of_minimizers]) -
                    wsum[union_of_minimizers];
        if (check != best)
            throw Error("internal: union of minimizers is not a minimizer");
    }
    return {best, mask_ids(c, dom, union_of_minimizers)};
}

namespace {

struct Rng {
    std::mt19937_64 engine;
    explicit Rng(std::uint64_t seed) : engine(seed) {}
    std::uint64_t below(std::uint64_t m) { return engine() % m; }
};

}  // namespace

Instance generate_instance(const GeneratorSpec& spec) {
    if (spec.n < 1) throw Error("generator needs n >= 1");
    if (spec.d < 1) throw Error("generator needs d >= 1");
    Rng rng(spec.seed);
    Instance inst;

    auto random_weight = [&] {
        Rat w(1 + rng.below(16), 1 + rng.below(8));
        w.canonicalize();
        return w;
    };

    switch (spec.kind) {
        case GenKind::dyadic: {
            inst.kind = Instance::Kind::dyadic;
            for (int i = 0; i < spec.n; ++i) {
                DyadicCube cube;
                cube.level = -static_cast<long>(rng.below(4));
                long span = 1L << (-cube.level);
                for (int k = 0; k < spec.d; ++k)
                    cube.offset.push_back(static_cast<long>(rng.below(span)));
                inst.cubes.push_back(std::move(cube));
            }
            break;
        }
        case GenKind::boxes: {
            inst.kind = Instance::Kind::boxes;
            // endpoints on a half-integer grid that grows with n, so large
            // instances develop large partitions
            const std::uint64_t G = 2 * std::max(4, 2 * spec.n);
            for (int i = 0; i < spec.n; ++i) {
                Box b;
                for (int k = 0; k < spec.d; ++k) {
                    std::uint64_t a = rng.below(G);
                    std::uint64_t e = a + 1 + rng.below(G - a);
                    Rat lo(a, 2), hi(e, 2);
                    lo.canonicalize();
                    hi.canonicalize();
                    b.low.push_back(lo);
                    b.high.push_back(hi);
                }
                inst.boxes.push_back(std::move(b));
            }
            break;
        }
        case GenKind::atoms: {
            inst.kind = Instance::Kind::atoms;
            const int n = spec.n;
            std::set<std::uint32_t> sigs;
            int wanted = n + static_cast<int>(rng.below(std::uint64_t(n) + 1));
            const std::uint32_t full =
                n >= 32 ? ~std::uint32_t(0) : (std::uint32_t(1) << n) - 1;
            if (n > 30) throw Error("atoms generator supports n <= 30");
            for (int i = 0; i < wanted; ++i) {
                std::uint32_t m = static_cast<std::uint32_t>(rng.below(full + 1));
                if (m) sigs.insert(m);
            }
            std::uint32_t covered = 0;
            for (auto m : sigs) covered |= m;
            for (int q = 0; q < n; ++q)
                if (!(covered >> q & 1)) sigs.insert(std::uint32_t(1) << q);
            for (auto m : sigs) {
                Instance::AtomSpec a;
                for (int q = 0; q < n; ++q)
                    if (m >> q & 1) a.signature.push_back("Q" + std::to_string(q + 1));
                a.measure = Rat(1 + rng.below(16), 1 + rng.below(4));
                a.measure.canonicalize();
                inst.atoms.push_back(std::move(a));
            }
            for (int q = 0; q < n; ++q)
                inst.sets.push_back({"Q" + std::to_string(q + 1), std::nullopt, ""});
            break;
        }
    }

    if (spec.weight_mode == WeightMode::random) {
        if (inst.sets.empty())
            for (std::size_t i = 0; i < std::max(inst.cubes.size(), inst.boxes.size());
                 ++i)
                inst.sets.push_back({"Q" + std::to_string(i + 1), std::nullopt, ""});
        for (auto& s : inst.sets) s.weight = random_weight();
    }
    return inst;
}

Collection generate(const GeneratorSpec& spec) {
    return build(generate_instance(spec));
}

}  // namespace carleson
