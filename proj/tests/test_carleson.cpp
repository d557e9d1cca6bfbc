#include <algorithm>

#include "carleson/carleson.hpp"
#include "carleson/verify.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace carleson;

TEST_CASE("counting model has constant 2") {
    CarlesonResult r = carleson_constant(fix::counting());
    CHECK(r.lambda == Rat(2));
    CHECK(r.witness == std::vector<std::string>{"Q1", "Q2", "Q3"});
}

TEST_CASE("disjoint boxes have constant 1") {
    CarlesonResult r = carleson_constant(fix::disjoint());
    CHECK(r.lambda == Rat(1));
}

TEST_CASE("nested chain of three") {
    CarlesonResult r = carleson_constant(fix::chain(3));
    CHECK(r.lambda == Rat(7, 4));
    CHECK(r.witness.size() == 3);
}

TEST_CASE("duplicated interval walks through two iterations") {
    CarlesonResult r = carleson_constant(fix::dup_interval());
    CHECK(r.lambda == Rat(2));
    CHECK(r.witness == std::vector<std::string>{"A", "B"});
    CHECK(r.iterations == 2);
    REQUIRE(r.trace.size() == 2);
    CHECK(r.trace[0].lambda == Rat(3, 2));
    CHECK(r.trace[0].size == 2);
    CHECK(r.trace[1].lambda == Rat(2));
    CHECK(r.trace[1].size == 2);
}

TEST_CASE("empty collection is rejected") {
    Collection c;
    CHECK_THROWS_AS(carleson_constant(c), Error);
}

TEST_CASE("decision form") {
    Collection c = fix::counting();
    CHECK(check_carleson(c, Rat(2)).ok);
    CHECK(check_carleson(c, Rat(5)).ok);

    CheckResult bad = check_carleson(c, Rat(3, 2));
    CHECK(!bad.ok);
    CHECK(bad.violating == std::vector<std::string>{"Q1", "Q2", "Q3"});
    CHECK(bad.ratio == Rat(2));

    // the computed constant always passes its own check
    CHECK(check_carleson(c, carleson_constant(c).lambda).ok);
}

TEST_CASE("halving chains follow the geometric series") {
    for (int k = 1; k <= 6; ++k) {
        Collection c = fix::chain(k);
        Rat expected = Rat(2) - pow2(1 - k);
        CHECK(carleson_constant(c).lambda == expected);
        CHECK(brute_lambda(c).lambda == expected);
    }
}

TEST_CASE("structural invariants on generated instances") {
    for (std::uint64_t seed = 0; seed < 18; ++seed) {
        GeneratorSpec spec;
        spec.kind = static_cast<GenKind>(seed % 3);
        spec.d = spec.kind == GenKind::boxes ? 1 + static_cast<int>(seed % 3)
                                             : 1;
        spec.n = 3 + static_cast<int>(seed % 7);
        spec.seed = 3000 + seed;
        spec.weight_mode = seed % 2 ? WeightMode::random : WeightMode::measure;
        Collection c = generate(spec);

        CarlesonResult r = carleson_constant(c);

        // the witness attains the constant exactly
        Rat wsum = 0;
        for (const auto& id : r.witness) wsum += c.weight(c.set_index(id));
        CHECK(wsum == r.lambda * c.union_measure(r.witness));

        // iteration bound and nondecreasing trace
        CHECK(r.iterations <= static_cast<int>(c.sets.size()));
        CHECK(r.trace.size() == static_cast<std::size_t>(r.iterations));
        for (std::size_t j = 1; j < r.trace.size(); ++j)
            CHECK(r.trace[j].lambda >= r.trace[j - 1].lambda);

        // agreement with the enumeration oracle
        BruteLambda brute = brute_lambda(c);
        CHECK(r.lambda == brute.lambda);

        // lower bound by single sets
        for (std::size_t q = 0; q < c.sets.size(); ++q)
            CHECK(r.lambda >= c.weight(q) / c.mu[q]);

        // both backends agree end to end
        CHECK(carleson_constant(c, Backend::brute).lambda == r.lambda);
    }
}

TEST_CASE("scale invariance") {
    Collection c = fix::counting();
    CarlesonResult base = carleson_constant(c);
    const Rat factors[] = {Rat(3), Rat(1, 7), Rat(22, 5)};
    for (const Rat& t : factors) {
        Collection scaled = c;
        for (auto& a : scaled.atoms) a.measure *= t;
        for (auto& s : scaled.sets) s.weight *= t;
        for (auto& m : scaled.mu) m *= t;
        CarlesonResult r = carleson_constant(scaled);
        CHECK(r.lambda == base.lambda);
        CHECK(r.witness == base.witness);
    }
}

TEST_CASE("removing a set never raises the constant") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        GeneratorSpec spec;
        spec.kind = GenKind::boxes;
        spec.d = 2;
        spec.n = 6;
        spec.seed = 4000 + seed;
        Collection c = generate(spec);
        Rat full = carleson_constant(c).lambda;
        for (std::size_t drop = 0; drop < c.sets.size(); ++drop) {
            std::vector<Box> boxes;
            for (std::size_t q = 0; q < c.sets.size(); ++q)
                if (q != drop) boxes.push_back(c.set_boxes[q]);
            Collection smaller = build_from_boxes(boxes);
            CHECK(carleson_constant(smaller).lambda <= full);
        }
    }
}

TEST_CASE("disjoint collections attain the single-set bound") {
    Collection c = fix::disjoint();
    CarlesonResult r = carleson_constant(c);
    Rat best = 0;
    for (std::size_t q = 0; q < c.sets.size(); ++q)
        best = std::max(best, Rat(c.weight(q) / c.mu[q]));
    CHECK(r.lambda == best);
}
