#pragma once

// Hand-checked model collections shared across the test files. Keep these
// tiny: every expected value quoted in the tests was derived by hand or by
// independent enumeration over all subcollections.

#include "carleson/model.hpp"

namespace fix {

using carleson::Box;
using carleson::Collection;
using carleson::DyadicCube;
using carleson::Rat;

// Counting measure on two points {1},{2} with sets {1}, {2} and {1,2}.
// The doubled set gets weight 2; optimal constant 2, attained by the whole
// collection: (1+1+2)/2.
inline Collection counting() {
    return carleson::build_from_atoms(
        {{"Q1", Rat(1)}, {"Q2", Rat(1)}, {"Q3", Rat(2)}},
        {{{"Q1", "Q3"}, Rat(1)}, {{"Q2", "Q3"}, Rat(1)}});
}

// Two overlapping unit-weight intervals [0,2) and [1,3). Atoms are
// [0,1), [1,2), [2,3), each of measure 1; the optimal constant is 4/3.
inline Collection intervals() {
    return carleson::build_from_boxes(
        {{{Rat(0)}, {Rat(2)}}, {{Rat(1)}, {Rat(3)}}});
}

// Nested dyadic chain [0,1) ⊃ [0,1/2) ⊃ ... of k halving intervals,
// weights = measures. Optimal constant 2 - 2^(1-k), attained by the full
// chain (geometric series over the innermost interval).
inline Collection chain(int k) {
    std::vector<DyadicCube> cubes;
    for (int j = 0; j < k; ++j) cubes.push_back({-j, {0}});
    return carleson::build_from_dyadic(cubes);
}

// A duplicated interval plus a spectator: A = B = [0,1), C = [2,3).
// Starting ratio 3/2 over everything, then the duplicate pair alone gives
// the optimum 2 on the second pass.
inline Collection dup_interval() {
    return carleson::build_from_boxes(
        {{{Rat(0)}, {Rat(1)}}, {{Rat(0)}, {Rat(1)}}, {{Rat(2)}, {Rat(3)}}},
        {}, {"A", "B", "C"});
}

// Three pairwise-disjoint intervals; 1-sparse, so the constant is 1.
inline Collection disjoint() {
    return carleson::build_from_boxes({{{Rat(0)}, {Rat(1)}},
                                       {{Rat(2)}, {Rat(3)}},
                                       {{Rat(4)}, {Rat(11, 2)}}});
}

// Three nested-ish rectangles in the plane whose partition has exactly
// four cells: Q3 alone, Q1∩Q3 minus Q2, Q2∩Q3 minus Q1, and the triple
// overlap.
inline Collection rectangles() {
    auto box = [](const char* x0, const char* y0, const char* x1,
                  const char* y1) {
        return Box{{carleson::parse_rat(x0), carleson::parse_rat(y0)},
                   {carleson::parse_rat(x1), carleson::parse_rat(y1)}};
    };
    return carleson::build_from_boxes({box("0.85", "1", "4.35", "3.5"),
                                       box("0.35", "0.3", "3.35", "2.5"),
                                       box("0", "0", "4.7", "3.7")});
}

// n disjoint unit intervals [2i, 2i+1); handy for exercising size guards.
inline Collection many_disjoint(int n) {
    std::vector<Box> boxes;
    for (int i = 0; i < n; ++i)
        boxes.push_back({{Rat(2 * i)}, {Rat(2 * i + 1)}});
    return carleson::build_from_boxes(boxes);
}

}  // namespace fix
