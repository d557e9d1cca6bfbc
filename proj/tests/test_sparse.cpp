#include <algorithm>

#include "carleson/carleson.hpp"
#include "carleson/sparse.hpp"
#include "carleson/verify.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace carleson;

namespace {

Rat integral(const Collection& c, const PhiWitness& w, int q) {
    Rat sum = 0;
    for (const auto& [atom_id, coeff] : w.coeffs[q]) {
        for (const auto& a : c.atoms)
            if (a.id == atom_id) sum += coeff * a.measure;
    }
    return sum;
}

Rat amount_total(const Selection& sel, int q) {
    Rat sum = 0;
    for (const auto& [atom_id, amount] : sel.amounts[q]) sum += amount;
    return sum;
}

}  // namespace

TEST_CASE("phi on the counting model at its optimum") {
    Collection c = fix::counting();
    PhiWitness w = construct_phi(c);
    CHECK(w.lambda == Rat(2));
    REQUIRE(verify_witness(c, w).empty());

    // the max flow here is unique: 1/2 from each atom to its small set,
    // 1/2 from each atom to the doubled set
    int q1 = c.set_index("Q1"), q2 = c.set_index("Q2"), q3 = c.set_index("Q3");
    CHECK(integral(c, w, q1) == Rat(1, 2));
    CHECK(integral(c, w, q2) == Rat(1, 2));
    CHECK(integral(c, w, q3) == Rat(1));
    CHECK(w.coeffs[q1].size() == 1);
    CHECK(w.coeffs[q1].begin()->second == Rat(1, 2));
    CHECK(w.coeffs[q3].size() == 2);
    for (const auto& [atom, coeff] : w.coeffs[q3]) CHECK(coeff == Rat(1, 2));
}

TEST_CASE("phi for a single set at constant 1") {
    Collection c = build_from_atoms({{"Q", Rat(5, 3)}}, {{{"Q"}, Rat(5, 3)}});
    PhiWitness w = construct_phi(c, Rat(1));
    REQUIRE(verify_witness(c, w).empty());
    REQUIRE(w.coeffs[0].size() == 1);
    CHECK(w.coeffs[0].begin()->second == Rat(1));
    CHECK(integral(c, w, 0) == Rat(5, 3));
}

TEST_CASE("phi on the intervals at 4/3") {
    Collection c = fix::intervals();
    PhiWitness w = construct_phi(c, Rat(4, 3));
    REQUIRE(verify_witness(c, w).empty());
    CHECK(integral(c, w, 0) == Rat(3, 2));
    CHECK(integral(c, w, 1) == Rat(3, 2));
}

TEST_CASE("selection on the counting model") {
    Collection c = fix::counting();
    Selection sel = construct_selection(c);
    REQUIRE(verify_witness(c, sel).empty());
    int q3 = c.set_index("Q3");
    REQUIRE(sel.amounts[q3].size() == 2);
    CHECK(sel.amounts[q3][0].second == Rat(1, 2));
    CHECK(sel.amounts[q3][1].second == Rat(1, 2));

    // both atoms are exactly exhausted
    for (const auto& a : c.atoms) {
        Rat used = 0;
        for (const auto& per_set : sel.amounts)
            for (const auto& [atom_id, amount] : per_set)
                if (atom_id == a.id) used += amount;
        CHECK(used == a.measure);
    }
}

TEST_CASE("selection on disjoint boxes at constant 1") {
    Collection c = fix::disjoint();
    Selection sel = construct_selection(c, Rat(1));
    REQUIRE(verify_witness(c, sel).empty());
    for (std::size_t q = 0; q < c.sets.size(); ++q) {
        REQUIRE(sel.amounts[q].size() == 1);
        CHECK(sel.amounts[q][0].second == c.mu[q]);
    }
}

TEST_CASE("selection on the chain exhausts the union") {
    Collection c = fix::chain(3);
    Selection sel = construct_selection(c);  // constant 7/4
    REQUIRE(verify_witness(c, sel).empty());
    Rat total = 0;
    for (std::size_t q = 0; q < c.sets.size(); ++q)
        total += amount_total(sel, q);
    CHECK(total == Rat(1));  // = mu of the union, fully exhausted
}

TEST_CASE("phi and selection come from the same flow") {
    Collection c = fix::rectangles();
    PhiWitness w = construct_phi(c);
    Selection sel = construct_selection(c);
    CHECK(w.lambda == sel.lambda);
    for (std::size_t q = 0; q < c.sets.size(); ++q) {
        for (const auto& [atom_id, amount] : sel.amounts[q]) {
            const Atom* atom = nullptr;
            for (const auto& a : c.atoms)
                if (a.id == atom_id) atom = &a;
            REQUIRE(atom);
            CHECK(w.coeffs[q].at(atom_id) * atom->measure == amount);
        }
    }
}

TEST_CASE("infeasible constants produce certificates") {
    Collection c = fix::counting();
    try {
        construct_phi(c, Rat(3, 2));
        FAIL("expected infeasibility");
    } catch (const InfeasibleLambda& e) {
        const Certificate& cert = e.certificate;
        CHECK(cert.subcollection ==
              std::vector<std::string>{"Q1", "Q2", "Q3"});
        CHECK(cert.ratio == Rat(2));
        CHECK(cert.weight_sum > Rat(3, 2) * cert.union_measure);
        CHECK(cert.union_measure == c.union_measure(cert.subcollection));
    }
    CHECK_THROWS_AS(construct_selection(c, Rat(3, 2)), InfeasibleLambda);
}

TEST_CASE("interval realization matches the hand sweep") {
    Collection c = fix::intervals();
    Selection sel = construct_selection(c, Rat(4, 3));
    BoxRealization r = realize_boxes(c, sel);
    REQUIRE(verify_witness(c, r).empty());

    auto piece = [](const Box& b) {
        return std::pair<Rat, Rat>(b.low[0], b.high[0]);
    };
    // Q1 takes [0,1) and the left half of the overlap; Q2 takes the rest
    std::vector<std::pair<Rat, Rat>> q1, q2;
    for (const auto& b : r.pieces[0]) q1.push_back(piece(b));
    for (const auto& b : r.pieces[1]) q2.push_back(piece(b));
    CHECK(q1 == std::vector<std::pair<Rat, Rat>>{{Rat(0), Rat(1)},
                                                 {Rat(1), Rat(3, 2)}});
    CHECK(q2 == std::vector<std::pair<Rat, Rat>>{{Rat(3, 2), Rat(2)},
                                                 {Rat(2), Rat(3)}});
}

TEST_CASE("single box realizes as itself") {
    Collection c = build_from_boxes({{{Rat(0), Rat(0)}, {Rat(2), Rat(3)}}});
    BoxRealization r = realize_boxes(c, construct_selection(c, Rat(1)));
    REQUIRE(verify_witness(c, r).empty());
    Rat vol = 0;
    for (const auto& b : r.pieces[0]) vol += b.volume();
    CHECK(vol == Rat(6));
}

TEST_CASE("rectangle realization is disjoint with exact volumes") {
    Collection c = fix::rectangles();
    Rat lambda = carleson_constant(c).lambda;
    Selection sel = construct_selection(c, lambda);
    BoxRealization r = realize_boxes(c, sel);
    REQUIRE(verify_witness(c, r).empty());
    for (std::size_t q = 0; q < c.sets.size(); ++q) {
        Rat vol = 0;
        for (const auto& b : r.pieces[q]) vol += b.volume();
        CHECK(vol == c.weight(q) / lambda);
    }
}

TEST_CASE("realization needs box geometry") {
    Collection c = fix::counting();
    Selection sel = construct_selection(c);
    CHECK_THROWS_AS(realize_boxes(c, sel), Error);
}

TEST_CASE("verifier flags mutated phi witnesses") {
    Collection c = fix::counting();
    PhiWitness w = construct_phi(c);
    REQUIRE(verify_witness(c, w).empty());

    PhiWitness bumped = w;
    bumped.coeffs[0].begin()->second += Rat(1, 1000);
    CHECK(!verify_witness(c, bumped).empty());

    PhiWitness offside = w;
    // put mass for Q1 on the atom that does not contain it
    for (const auto& a : c.atoms)
        if (!offside.coeffs[c.set_index("Q1")].count(a.id))
            offside.coeffs[c.set_index("Q1")][a.id] = Rat(1, 10);
    CHECK(!verify_witness(c, offside).empty());
}

TEST_CASE("verifier flags infeasible selections") {
    Collection c = fix::counting();
    Selection sel = construct_selection(c);
    REQUIRE(verify_witness(c, sel).empty());

    Selection greedy = sel;
    // overfill the first atom past its measure
    greedy.amounts[c.set_index("Q3")][0].second += Rat(2);
    auto bad = verify_witness(c, greedy);
    CHECK(!bad.empty());
}

TEST_CASE("verifier flags overlapping realizations") {
    Collection c = fix::intervals();
    BoxRealization r = realize_boxes(c, construct_selection(c, Rat(4, 3)));
    REQUIRE(verify_witness(c, r).empty());
    // hand both sets the same overlap slab
    BoxRealization bad = r;
    bad.pieces[0] = {Box{{Rat(1)}, {Rat(3, 2)}}};
    bad.pieces[1] = {Box{{Rat(1)}, {Rat(3, 2)}}};
    CHECK(!verify_witness(c, bad).empty());
}

TEST_CASE("witness invariants across generated geometric instances") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        GeneratorSpec spec;
        spec.kind = GenKind::boxes;
        spec.d = 1 + static_cast<int>(seed % 3);
        spec.n = 4 + static_cast<int>(seed % 4);
        spec.seed = 5000 + seed;
        spec.weight_mode = seed % 2 ? WeightMode::random : WeightMode::measure;
        Collection c = generate(spec);
        PhiWitness w = construct_phi(c);
        Selection sel = construct_selection(c);
        CHECK(verify_witness(c, w).empty());
        CHECK(verify_witness(c, sel).empty());
        BoxRealization r = realize_boxes(c, sel);
        CHECK(verify_witness(c, r).empty());
    }
}
